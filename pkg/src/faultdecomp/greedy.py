"""Oracle-backed greedy decompositions and the additive baseline.

These run in time exponential in the number of faults: each step asks the
oracle for the farthest point reachable within the fault budget.
"""

from __future__ import annotations

from collections.abc import Sequence

from .graph import Edge, canon, distances
from .instance import Decomposition, ReplacementInstance
from .oracle import FaultOracle


def greedy_decompose(inst: ReplacementInstance, budget: int, oracle: FaultOracle | None = None) -> Decomposition:
    """Peel off the longest prefix whose minimum fault set fits in ``budget``, repeatedly."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    oracle = oracle or FaultOracle(inst)
    cur = 0
    xs, fs = [inst.s], []
    while cur < inst.length:
        nxt = oracle.best_reach(cur, budget)
        if nxt == cur:
            raise ValueError(f"edge after position {cur} exceeds the budget; use the interleaved form")
        fs.append(oracle.min_fault_set(cur, nxt))
        xs.append(inst.pi[nxt])
        cur = nxt
    if not fs:
        fs.append(frozenset())
        xs.append(inst.t)
    return Decomposition(xs, fs, budget=budget)


def greedy_decompose_weighted(inst: ReplacementInstance, budget: int, oracle: FaultOracle | None = None) -> Decomposition:
    """Interleaved greedy: maximal (possibly empty) subpath, then the next edge of ``pi``.

    Yields ``pi = p_0 + e_0 + p_1 + ... + e_{q-2} + p_{q-1}``.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    oracle = oracle or FaultOracle(inst)
    cur = 0
    xs, fs, seps = [inst.s], [], []
    while True:
        end = oracle.best_reach(cur, budget)
        fs.append(oracle.min_fault_set(cur, end))
        if end == inst.length:
            xs.append(inst.t)
            break
        seps.append(canon(inst.pi[end], inst.pi[end + 1]))
        cur = end + 1
        xs.append(inst.pi[cur])
    return Decomposition(xs, fs, seps, budget=budget)


def peel(inst: ReplacementInstance, removed: frozenset) -> list[int]:
    """Positions cutting ``pi`` into the fewest pieces that are shortest in ``g - removed``."""
    cuts = [0]
    cur = 0
    while cur < inst.length:
        dist = distances(inst.g, removed, inst.pi[cur])
        base = inst.prefix[cur]
        j = cur
        while j < inst.length and dist[inst.pi[j + 1]] == inst.prefix[j + 1] - base:
            j += 1
        if j == cur:
            raise ValueError(f"edge after position {cur} is not shortest in g minus the kept faults")
        cuts.append(j)
        cur = j
    return cuts


def baseline_decompose(inst: ReplacementInstance, k: int, order: Sequence[Edge] | None = None) -> Decomposition:
    """Additive tradeoff: keep the first ``f - k`` faults of ``order`` failed, peel greedily.

    Every piece carries the same fault set, and there are at most ``k + 1`` pieces.
    """
    f = inst.f
    if not 1 <= k <= max(f, 1):
        raise ValueError(f"k must lie in [1, {f}]")
    order = inst.sorted_faults() if order is None else [canon(*e) for e in order]
    if sorted(order) != inst.sorted_faults():
        raise ValueError("order must be a permutation of the fault set")
    kept = frozenset(order[: max(f - k, 0)])
    cuts = peel(inst, kept)
    if len(cuts) == 1:
        cuts.append(0)
    xs = [inst.pi[c] for c in cuts]
    return Decomposition(xs, [kept] * (len(xs) - 1), budget=len(kept))
