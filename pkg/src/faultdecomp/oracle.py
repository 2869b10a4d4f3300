"""Exhaustive ground truth: minimum fault sets, restorability, decomposition checks.

Everything here enumerates subsets of the fault set, so it is meant for desk-scale
inputs (a dozen faults or so).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import GraphError, InvalidPathError, canon, distances, is_shortest
from .instance import Decomposition, ReplacementInstance


class FaultOracle:
    """Memoized minimum-fault-set queries on one instance.

    For a start position ``i`` and a candidate fault set ``F'`` the *reach* is the
    largest ``j`` such that ``pi[i..j]`` is shortest in ``g - F'``. Subpaths of
    shortest paths are shortest, so ``pi[i..j]`` is valid for ``F'`` exactly when
    ``j <= reach``. Every query reduces to reaches, enumerated by cardinality then
    lexicographically over the sorted faults.
    """

    def __init__(self, inst: ReplacementInstance):
        self.inst = inst
        self.faults = inst.sorted_faults()
        self._reach: dict[tuple[int, tuple], int] = {}
        # _best[i][r]: max reach from i over fault sets of size exactly r
        self._best: dict[int, list[int]] = {}
        self.evaluations = 0

    def reach(self, i: int, subset: tuple) -> int:
        key = (i, subset)
        hit = self._reach.get(key)
        if hit is not None:
            return hit
        inst = self.inst
        self.evaluations += 1
        dist = distances(inst.g, frozenset(subset), inst.pi[i])
        base = inst.prefix[i]
        j = i
        while j < inst.length and dist[inst.pi[j + 1]] == inst.prefix[j + 1] - base:
            j += 1
        self._reach[key] = j
        return j

    def best_reach(self, i: int, r: int) -> int:
        """Farthest ``j`` such that ``pi[i..j]`` needs at most ``r`` faults."""
        r = min(r, len(self.faults))
        best = self._best.setdefault(i, [])
        while len(best) <= r:
            size = len(best)
            if best and max(best) == self.inst.length:
                best.append(self.inst.length)
                continue
            top = i
            for subset in combinations(self.faults, size):
                top = max(top, self.reach(i, subset))
                if top == self.inst.length:
                    break
            best.append(top)
        return max(best[: r + 1])

    def min_size(self, i: int, j: int) -> int:
        for r in range(len(self.faults) + 1):
            if self.best_reach(i, r) >= j:
                return r
        raise AssertionError("pi is shortest in g - F, so F itself always works")

    def min_fault_set(self, i: int, j: int) -> frozenset:
        """Smallest valid fault set for ``pi[i..j]``, lexicographically first among ties."""
        r = self.min_size(i, j)
        for subset in combinations(self.faults, r):
            if self.reach(i, subset) >= j:
                return frozenset(subset)
        raise AssertionError("unreachable")

    def cost_row(self, i: int) -> list[int]:
        """``row[j - i]`` is the minimum fault count for ``pi[i..j]``, for every ``j >= i``."""
        row = []
        r = 0
        for j in range(i, self.inst.length + 1):
            while self.best_reach(i, r) < j:
                r += 1
            row.append(r)
        return row


def _positions(inst: ReplacementInstance, a: int, b: int) -> tuple[int, int]:
    i, j = inst.index(a), inst.index(b)
    if i > j:
        raise GraphError(f"{a} comes after {b} on pi")
    return i, j


def min_fault_set(inst: ReplacementInstance, a: int, b: int, oracle: FaultOracle | None = None) -> frozenset:
    """Minimum-cardinality ``F' <= F`` keeping ``pi[a, b]`` shortest in ``g - F'``."""
    i, j = _positions(inst, a, b)
    return (oracle or FaultOracle(inst)).min_fault_set(i, j)


@dataclass
class RestorabilityVerdict:
    restorable: bool
    q: int
    r: int
    r_min: int
    witness: Decomposition | None = None

    def to_dict(self) -> dict:
        out = {"restorable": self.restorable, "q": self.q, "r": self.r, "r_min": self.r_min}
        if self.witness is not None:
            out["witness"] = {
                "boundaries": list(self.witness.boundaries),
                "fault_sets": [sorted(list(e) for e in F) for F in self.witness.fault_sets],
            }
        return out


def _minimax_table(inst: ReplacementInstance, oracle: FaultOracle, q: int):
    ell = inst.length
    cost = [oracle.cost_row(i) for i in range(ell + 1)]

    def c(i, j):
        return cost[i][j - i]

    best = [[c(0, j) for j in range(ell + 1)]]
    choice = [[0] * (ell + 1)]
    for _ in range(1, q):
        prev = best[-1]
        row, arg = [], []
        for j in range(ell + 1):
            val, at = min((max(prev[i], c(i, j)), -i) for i in range(j + 1))
            row.append(val)
            arg.append(-at)
        best.append(row)
        choice.append(arg)
    return best, choice


def restorability_frontier(inst: ReplacementInstance, max_q: int, oracle: FaultOracle | None = None) -> list[int]:
    """``out[q - 1]``: least ``r`` such that ``pi`` splits into ``q`` subpaths of ``r`` faults each."""
    best, _ = _minimax_table(inst, oracle or FaultOracle(inst), max_q)
    return [row[inst.length] for row in best]


def restorable_check(inst: ReplacementInstance, q: int, r: int, oracle: FaultOracle | None = None) -> RestorabilityVerdict:
    """Decide whether ``pi`` splits into ``q`` subpaths that each need at most ``r`` faults.

    Subpaths may be single vertices, so "at most ``q``" and "exactly ``q``" agree.
    """
    if q < 1 or r < 0:
        raise ValueError("need q >= 1 and r >= 0")
    oracle = oracle or FaultOracle(inst)
    best, choice = _minimax_table(inst, oracle, q)
    ell = inst.length
    r_min = best[q - 1][ell]
    if r_min > r:
        return RestorabilityVerdict(False, q, r, r_min)
    cuts = [ell]
    j = ell
    for c in range(q - 1, 0, -1):
        j = choice[c][j]
        cuts.append(j)
    cuts.append(0)
    cuts.reverse()
    witness = Decomposition(
        boundaries=[inst.pi[p] for p in cuts],
        fault_sets=[oracle.min_fault_set(cuts[x], cuts[x + 1]) for x in range(q)],
        budget=r,
    )
    return RestorabilityVerdict(True, q, r, r_min, witness)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifierReport:
    checks: list[Check] = field(default_factory=list)
    q: int = 0
    budget: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "q": self.q,
            "budget": self.budget,
            "checks": [{"name": c.name, "pass": c.passed, "detail": c.detail} for c in self.checks],
        }


def verify_decomposition(inst: ReplacementInstance, d: Decomposition, budget: int) -> VerifierReport:
    """Check ``d`` against ``inst`` from scratch, using plain shortest-path distances only."""
    report = VerifierReport(q=d.q, budget=budget)
    pi, pos = inst.pi, inst.pos
    xs = list(d.boundaries)

    problems = []
    if d.q < 1:
        problems.append("no subpaths")
    if len(xs) != d.q + 1:
        problems.append(f"{len(xs)} boundaries for {d.q} subpaths")
    off = [x for x in xs if x not in pos]
    if off:
        problems.append(f"boundaries {off} are not on pi")
    if xs and xs[0] != inst.s:
        problems.append(f"first boundary {xs[0]} is not s={inst.s}")
    if xs and xs[-1] != inst.t:
        problems.append(f"last boundary {xs[-1]} is not t={inst.t}")
    if not off:
        idx = [pos[x] for x in xs]
        if any(idx[k] > idx[k + 1] for k in range(len(idx) - 1)):
            problems.append("boundaries out of order")
        if d.interleaved and any(idx[k] >= idx[k + 1] for k in range(len(idx) - 2)):
            problems.append("interleaved subpath followed by no separator edge")
    report.add("boundaries", not problems, "; ".join(problems))
    if problems:
        report.add("separators", False, "skipped: bad boundaries")
        report.add("fault_budget", False, "skipped: bad boundaries")
        report.add("shortest", False, "skipped: bad boundaries")
        return report

    sep_problems = []
    if d.interleaved:
        if len(d.separators) != d.q - 1:
            sep_problems.append(f"{len(d.separators)} separators for {d.q} subpaths")
        else:
            for k, e in enumerate(d.separators):
                p = pos[xs[k + 1]]
                want = canon(pi[p - 1], pi[p])
                if e != want:
                    sep_problems.append(f"separator {k} is {e}, pi has {want}")
    report.add("separators", not sep_problems, "; ".join(sep_problems))

    budget_problems = []
    for k, F in enumerate(d.fault_sets):
        extra = F - inst.faults
        if extra:
            budget_problems.append(f"F_{k} has non-faults {sorted(extra)}")
        if len(F) > budget:
            budget_problems.append(f"|F_{k}| = {len(F)} > {budget}")
    report.add("fault_budget", not budget_problems, "; ".join(budget_problems))

    bad = []
    if not sep_problems:
        for k, sub in enumerate(d.subpaths(inst)):
            try:
                ok = is_shortest(inst.g, d.fault_sets[k], sub)
            except InvalidPathError as exc:
                ok = False
                bad.append(f"subpath {k} invalid: {exc}")
                continue
            if not ok:
                bad.append(f"subpath {k} not shortest")
    else:
        bad.append("skipped: bad separators")
    report.add("shortest", not bad, "; ".join(bad))
    return report
