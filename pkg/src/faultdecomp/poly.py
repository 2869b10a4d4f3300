"""Polynomial-time decomposition via fault-set reduction.

The fault set of a candidate subpath starts as all of ``F`` and is shrunk by
Hall-violator exchanges until every fault in it can be matched to a distinct
base fault from both ends of the subpath. Base faults are decided from distance
tables alone, so no subset enumeration happens anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .graph import Edge, distances, is_shortest
from .instance import Decomposition, ReplacementInstance
from .matching import MatchingResult, max_matching

Side = Literal["L", "R"]


class DistanceTables:
    """Lazily filled distance rows in ``g`` and in ``g - F`` for one instance."""

    def __init__(self, inst: ReplacementInstance):
        self.inst = inst
        self._full: dict[int, list] = {}
        self._masked: dict[int, list] = {}

    def full(self, u: int) -> list:
        row = self._full.get(u)
        if row is None:
            row = self._full[u] = distances(self.inst.g, frozenset(), u)
        return row

    def masked(self, u: int) -> list:
        row = self._masked.get(u)
        if row is None:
            row = self._masked[u] = distances(self.inst.g, self.inst.faults, u)
        return row


def shortcut_through(tables: DistanceTables, start: int, end: int, e_b: Edge, e: Edge) -> float:
    """Length of the shortest walk ``start -> end`` whose first fault is ``e_b`` and that also uses ``e``.

    The leg before ``e_b`` avoids every fault; the legs after it are unrestricted.
    """
    g = tables.inst.g
    lead = tables.masked(start)
    w_e = g.weight(*e)
    u, v = e
    if e_b == e:
        return min(lead[u] + tables.full(v)[end], lead[v] + tables.full(u)[end]) + w_e
    ub, vb = e_b
    w_b = g.weight(*e_b)
    best = min(
        lead[ub] + tables.full(vb)[u] + tables.full(v)[end],
        lead[ub] + tables.full(vb)[v] + tables.full(u)[end],
        lead[vb] + tables.full(ub)[u] + tables.full(v)[end],
        lead[vb] + tables.full(ub)[v] + tables.full(u)[end],
    )
    return best + w_b + w_e


def _ends(inst: ReplacementInstance, i: int, j: int, side: Side) -> tuple[int, int]:
    a, b = inst.pi[i], inst.pi[j]
    return (a, b) if side == "L" else (b, a)


def base_fault_reach(
    inst: ReplacementInstance,
    a: int,
    b: int,
    e_b: Edge,
    e: Edge,
    side: Side,
    tables: DistanceTables | None = None,
) -> bool:
    """Whether ``e_b`` is a base fault of ``e`` for ``pi[a, b]`` seen from the ``side`` end."""
    tables = tables or DistanceTables(inst)
    i, j = inst.index(a), inst.index(b)
    start, end = _ends(inst, i, j, side)
    return shortcut_through(tables, start, end, e_b, e) < inst.sub_length(i, j)


@dataclass(frozen=True)
class GammaGraph:
    left: tuple
    right: tuple
    adj: dict
    side: str

    def edges(self) -> set[tuple[Edge, Edge]]:
        return {(e, eb) for e, nb in self.adj.items() for eb in nb}

    def neighborhood(self, subset) -> frozenset:
        out = set()
        for e in subset:
            out |= self.adj[e]
        return frozenset(out)


def _gamma_adj(inst: ReplacementInstance, i: int, j: int, side: Side, tables: DistanceTables) -> dict:
    start, end = _ends(inst, i, j, side)
    length = inst.sub_length(i, j)
    F = inst.sorted_faults()
    return {e: frozenset(eb for eb in F if shortcut_through(tables, start, end, eb, e) < length) for e in F}


def build_gamma(
    inst: ReplacementInstance,
    a: int,
    b: int,
    fault_subset,
    side: Side,
    tables: DistanceTables | None = None,
) -> GammaGraph:
    tables = tables or DistanceTables(inst)
    full = _gamma_adj(inst, inst.index(a), inst.index(b), side, tables)
    left = tuple(sorted(fault_subset))
    return GammaGraph(left, tuple(inst.sorted_faults()), {e: full[e] for e in left}, side)


@dataclass
class FaultReduceTrace:
    faults: frozenset
    sizes: list[int] = field(default_factory=list)
    sides: list[str] = field(default_factory=list)
    final_left: MatchingResult | None = None
    final_right: MatchingResult | None = None

    @property
    def iterations(self) -> int:
        return len(self.sides)


def fault_reduce_traced(
    inst: ReplacementInstance,
    i: int,
    j: int,
    tables: DistanceTables | None = None,
    check: bool = False,
) -> FaultReduceTrace:
    """FaultReduce on ``pi[i..j]`` (positions), recording every exchange.

    With ``check`` set, asserts after each exchange that the subpath is still
    shortest once the current set fails.
    """
    tables = tables or DistanceTables(inst)
    adj = {side: _gamma_adj(inst, i, j, side, tables) for side in ("L", "R")}
    current = frozenset(inst.faults)
    trace = FaultReduceTrace(current, [len(current)])
    sub = inst.sub(i, j) if check else None
    while True:
        results = {side: max_matching(sorted(current), adj[side]) for side in ("L", "R")}
        side = next((s for s in ("L", "R") if not results[s].saturating), None)
        if side is None:
            trace.faults = current
            trace.final_left, trace.final_right = results["L"], results["R"]
            return trace
        res = results[side]
        nxt = (current - res.violator) | res.neighborhood
        if len(nxt) >= len(current):
            raise AssertionError("Hall violator failed to shrink the fault set")
        current = nxt
        trace.sizes.append(len(current))
        trace.sides.append(side)
        if check and not is_shortest(inst.g, current, sub):
            raise AssertionError(f"exchange broke validity on positions {i}..{j}")


def fault_reduce(inst: ReplacementInstance, a: int, b: int, tables: DistanceTables | None = None) -> frozenset:
    """A valid fault set for ``pi[a, b]`` whose faults match distinct base faults on both sides."""
    return fault_reduce_traced(inst, inst.index(a), inst.index(b), tables).faults


class PolyDecomposer:
    """Boundary search over FaultReduce, caching every probed subpath.

    ``probes`` maps position pairs ``(i, j)`` to their :class:`FaultReduceTrace`;
    it is kept for inspection after a run.
    """

    def __init__(self, inst: ReplacementInstance, check: bool = False):
        self.inst = inst
        self.tables = DistanceTables(inst)
        self.check = check
        self.probes: dict[tuple[int, int], FaultReduceTrace] = {}

    def reduce(self, i: int, j: int) -> FaultReduceTrace:
        tr = self.probes.get((i, j))
        if tr is None:
            tr = self.probes[(i, j)] = fault_reduce_traced(self.inst, i, j, self.tables, self.check)
        return tr

    def _fits(self, i: int, j: int, budget: int) -> bool:
        return len(self.reduce(i, j).faults) <= budget

    def _crossing(self, cur: int, lo: int, budget: int, linear: bool) -> int:
        """Largest feasible end found from ``lo`` (assumed feasible) such that ``end + 1`` fails.

        Invariant: ``lo`` fits the budget, ``hi`` does not (``length + 1`` is a sentinel).
        """
        ell = self.inst.length
        if linear:
            while lo < ell and self._fits(cur, lo + 1, budget):
                lo += 1
            return lo
        hi = ell + 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self._fits(cur, mid, budget):
                lo = mid
            else:
                hi = mid
        return lo

    def decompose(self, k: int, linear_scan: bool = False) -> Decomposition:
        budget = _budget(self.inst, k)
        inst = self.inst
        cur = 0
        xs, fs = [inst.s], []
        while cur < inst.length:
            if not self._fits(cur, cur + 1, budget):
                raise ValueError(f"edge after position {cur} exceeds the budget; use the interleaved form")
            end = self._crossing(cur, cur + 1, budget, linear_scan)
            fs.append(self.reduce(cur, end).faults)
            xs.append(inst.pi[end])
            cur = end
        if not fs:
            fs.append(frozenset())
            xs.append(inst.t)
        return Decomposition(xs, fs, budget=budget)

    def decompose_weighted(self, k: int, linear_scan: bool = False) -> Decomposition:
        budget = _budget(self.inst, k)
        inst = self.inst
        cur = 0
        xs, fs, seps = [inst.s], [], []
        while True:
            end = self._crossing(cur, cur, budget, linear_scan)
            fs.append(self.reduce(cur, end).faults)
            if end == inst.length:
                xs.append(inst.t)
                break
            seps.append((inst.pi[end], inst.pi[end + 1]))
            cur = end + 1
            xs.append(inst.pi[cur])
        return Decomposition(xs, fs, seps, budget=budget)


def _budget(inst: ReplacementInstance, k: int) -> int:
    if not 1 <= k <= inst.f:
        raise ValueError(f"k must lie in [1, {inst.f}]")
    return inst.f // k


def compute_subpaths(inst: ReplacementInstance, k: int, linear_scan: bool = False) -> Decomposition:
    """Tile ``pi`` into subpaths with reduced fault sets of size at most ``f // k``."""
    return PolyDecomposer(inst).decompose(k, linear_scan)


def compute_subpaths_weighted(inst: ReplacementInstance, k: int, linear_scan: bool = False) -> Decomposition:
    """Interleaved variant: each maximal subpath is followed by one separator edge of ``pi``."""
    return PolyDecomposer(inst).decompose_weighted(k, linear_scan)
