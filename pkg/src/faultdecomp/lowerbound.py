"""Generators for the semicircle lower-bound graphs and their glued chains.

A copy with exponent ``g`` has vertices labelled ``1..N`` with ``N = 2**(g+1) - 1``.
The outer curve ``1, 2, ..., N`` survives; the chords in ``E1`` and ``E2`` fail.
Copies are chained by identifying the last vertex of one with the first vertex of
the next. Graph ids are contiguous from 0; ``labels`` maps them back to
``(copy, label)``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph, canon
from .instance import ReplacementInstance
from .oracle import FaultOracle


class DegenerateError(ValueError):
    pass


def chords(g: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """``(E1, E2)`` in local labels for exponent ``g``."""
    if g < 3:
        raise DegenerateError(f"g={g} gives no fault edges (need g >= 3)")
    top = 2 ** (g + 1)
    e1 = [(2**k, top - 2 ** (k + 2)) for k in range(g - 2)]
    e2 = [(2 ** (k + 2), top - 2**k) for k in range(g - 2)]
    return e1, e2


@dataclass(frozen=True)
class LowerBoundInstance:
    instance: ReplacementInstance
    g_params: tuple[int, ...]
    half_arcs: tuple[tuple[int, int], ...]
    per_copy_faults: tuple[frozenset, ...]
    labels: tuple[tuple[int, int], ...]

    @property
    def copies(self) -> int:
        return len(self.g_params)

    @property
    def g_param(self) -> int:
        return self.g_params[0]

    def vertex(self, copy: int, label: int) -> int:
        """Graph id of ``label`` (1-based) in ``copy`` (0-based)."""
        offset = sum(2 ** (g + 1) - 2 for g in self.g_params[:copy])
        return offset + label - 1

    def per_copy_f(self) -> list[int]:
        return [len(F) for F in self.per_copy_faults]


def _glue(gs: Sequence[int], drop_last_e2: bool = False) -> LowerBoundInstance:
    if not gs:
        raise ValueError("need at least one copy")
    edges: list[tuple[int, int]] = []
    faults: list[frozenset] = []
    arcs: list[tuple[int, int]] = []
    labels: list[tuple[int, int]] = []
    offset = 0
    for c, g in enumerate(gs):
        e1, e2 = chords(g)
        if drop_last_e2:
            e2 = e2[:-1]
        N = 2 ** (g + 1) - 1

        def vid(label, offset=offset):
            return offset + label - 1

        start = 0 if c == 0 else 1
        labels.extend((c, lab) for lab in range(start + 1, N + 1))
        edges.extend((vid(i), vid(i + 1)) for i in range(1, N))
        chord_ids = [canon(vid(a), vid(b)) for a, b in e1 + e2]
        edges.extend(chord_ids)
        faults.append(frozenset(chord_ids))
        arcs.append((vid(1), vid(2**g)))
        arcs.append((vid(2**g), vid(N)))
        offset += N - 1
    n = offset + 1
    graph = Graph.from_edges(n, edges)
    F = frozenset().union(*faults)
    inst = ReplacementInstance(graph, F, 0, n - 1, tuple(range(n)))
    return LowerBoundInstance(inst, tuple(gs), tuple(arcs), tuple(faults), tuple(labels))


def gen_single(g: int) -> LowerBoundInstance:
    return _glue([g])


def gen_single_odd(g: int) -> LowerBoundInstance:
    """Single copy with the last chord of ``E2`` deleted, giving an odd fault count."""
    return _glue([g], drop_last_e2=True)


def gen_glued(g: int, copies: int) -> LowerBoundInstance:
    if copies < 1:
        raise ValueError("copies must be at least 1")
    return _glue([g] * copies)


def gen_glued_mixed(gs: Sequence[int]) -> LowerBoundInstance:
    """Chain copies of differing exponents (used when the fault count is not a multiple of k)."""
    return _glue(list(gs))


def half_arc_min_fault(lbi: LowerBoundInstance, arc_index: int, oracle: FaultOracle | None = None) -> int:
    a, b = lbi.half_arcs[arc_index]
    inst = lbi.instance
    return (oracle or FaultOracle(inst)).min_size(inst.index(a), inst.index(b))
