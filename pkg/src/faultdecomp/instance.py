"""Replacement-path instances and path decompositions."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .graph import (
    Edge,
    Graph,
    GraphError,
    InvalidPathError,
    canon,
    check_path,
    fault_set,
    is_shortest,
    prefix_lengths,
    shortest_path,
)


@dataclass(frozen=True)
class ReplacementInstance:
    """A path ``pi`` from ``s`` to ``t`` that is shortest once ``faults`` fail."""

    g: Graph
    faults: frozenset
    s: int
    t: int
    pi: tuple
    pos: dict = field(init=False, repr=False, compare=False)
    prefix: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "faults", frozenset(canon(*e) for e in self.faults))
        object.__setattr__(self, "pi", tuple(self.pi))
        pi = self.pi
        if not pi or pi[0] != self.s or pi[-1] != self.t:
            raise GraphError("pi must run from s to t")
        if len(set(pi)) != len(pi):
            raise InvalidPathError("pi repeats a vertex")
        for e in self.faults:
            if not self.g.has_edge(*e):
                raise GraphError(f"fault {e} is not an edge of the graph")
        check_path(self.g, self.faults, pi)
        if not is_shortest(self.g, self.faults, pi):
            raise GraphError("pi is not a shortest path once the faults are removed")
        object.__setattr__(self, "pos", {v: i for i, v in enumerate(pi)})
        object.__setattr__(self, "prefix", tuple(prefix_lengths(self.g, pi)))

    @classmethod
    def build(cls, g: Graph, faults: Iterable[Sequence[int]], s: int, t: int) -> ReplacementInstance:
        """Compute ``pi`` as the canonical shortest path in ``g`` minus ``faults``."""
        F = fault_set(g, faults)
        return cls(g, F, s, t, shortest_path(g, F, s, t))

    @property
    def f(self) -> int:
        return len(self.faults)

    @property
    def length(self) -> int:
        """Number of edges on ``pi``."""
        return len(self.pi) - 1

    def sorted_faults(self) -> list[Edge]:
        return sorted(self.faults)

    def sub(self, i: int, j: int) -> tuple:
        """Vertices of ``pi`` between positions ``i`` and ``j`` inclusive."""
        return self.pi[i : j + 1]

    def sub_length(self, i: int, j: int) -> int:
        return self.prefix[j] - self.prefix[i]

    def index(self, v: int) -> int:
        try:
            return self.pos[v]
        except KeyError:
            raise GraphError(f"vertex {v} is not on pi") from None

    def is_valid(self) -> bool:
        return is_shortest(self.g, self.faults, self.pi)


@dataclass(frozen=True)
class Decomposition:
    """Boundaries ``x_0..x_q`` on ``pi`` with one fault set per subpath.

    With no separators the subpaths ``pi[x_i, x_{i+1}]`` tile ``pi``. In the
    weighted (interleaved) form ``separators[i]`` is the last edge of
    ``pi[x_i, x_{i+1}]``: subpath ``i`` stops one vertex short of ``x_{i+1}``
    for ``i < q - 1``, and may be a single vertex.
    """

    boundaries: tuple
    fault_sets: tuple
    separators: tuple = ()
    budget: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        object.__setattr__(
            self, "fault_sets", tuple(frozenset(canon(*e) for e in F) for F in self.fault_sets)
        )
        object.__setattr__(self, "separators", tuple(canon(*e) for e in self.separators))

    @property
    def q(self) -> int:
        return len(self.fault_sets)

    @property
    def interleaved(self) -> bool:
        return bool(self.separators)

    @property
    def max_fault(self) -> int:
        return max((len(F) for F in self.fault_sets), default=0)

    def spans(self, inst: ReplacementInstance) -> list[tuple[int, int]]:
        """Position ranges ``(i, j)`` on ``inst.pi`` covered by each subpath."""
        pos = [inst.index(x) for x in self.boundaries]
        out = []
        for i in range(len(pos) - 1):
            end = pos[i + 1]
            if self.interleaved and i < len(pos) - 2:
                end -= 1
            out.append((pos[i], end))
        return out

    def subpaths(self, inst: ReplacementInstance) -> list[tuple]:
        return [inst.sub(i, j) for i, j in self.spans(inst)]
