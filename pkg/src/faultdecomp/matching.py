"""Maximum bipartite matching with a Hall-violator certificate."""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass


@dataclass(frozen=True)
class MatchingResult:
    matching: frozenset  # of (left, right) pairs
    saturating: bool
    violator: frozenset = frozenset()
    neighborhood: frozenset = frozenset()

    @property
    def size(self) -> int:
        return len(self.matching)


def max_matching(left: Iterable[Hashable], adj: Mapping[Hashable, Iterable[Hashable]]) -> MatchingResult:
    """Maximum matching saturating as much of ``left`` as possible.

    Augmenting paths are searched from each left vertex in the given order,
    neighbors in sorted order, so the result is deterministic. When some left
    vertex stays unmatched, the left vertices reachable from unmatched ones by
    alternating paths form a set ``A`` with ``|N(A)| < |A|`` (König).
    """
    left = list(left)
    nbrs = {u: sorted(adj.get(u, ())) for u in left}
    match_l: dict = {}
    match_r: dict = {}

    def augment(u, seen):
        for v in nbrs[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_r or augment(match_r[v], seen):
                match_l[u] = v
                match_r[v] = u
                return True
        return False

    for u in left:
        augment(u, set())

    pairs = frozenset(match_l.items())
    free = [u for u in left if u not in match_l]
    if not free:
        return MatchingResult(pairs, True)

    seen_l = set(free)
    seen_r = set()
    queue = deque(free)
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if v in seen_r:
                continue
            seen_r.add(v)
            w = match_r[v]  # every reached right vertex is matched, else the matching grows
            if w not in seen_l:
                seen_l.add(w)
                queue.append(w)
    return MatchingResult(pairs, False, frozenset(seen_l), frozenset(seen_r))


def matching_with_witness(gamma) -> MatchingResult:
    """Run :func:`max_matching` on a :class:`~faultdecomp.poly.GammaGraph`."""
    return max_matching(gamma.left, gamma.adj)
