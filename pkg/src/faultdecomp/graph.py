"""Undirected graphs with positive integer weights, masked shortest paths, path helpers."""

from __future__ import annotations

import heapq
import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

Edge = tuple[int, int]
FaultSet = frozenset  # frozenset[Edge]
Path = tuple  # tuple[int, ...]

UNREACHABLE = math.inf


class GraphError(ValueError):
    pass


class DisconnectedError(GraphError):
    pass


class InvalidPathError(GraphError):
    pass


def canon(u: int, v: int) -> Edge:
    """Orientation-free edge key, smaller endpoint first."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    ``edges`` holds ``(u, v, w)`` triples. Unweighted graphs carry ``w == 1``
    everywhere, which lets every algorithm run on one code path.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    weighted: bool = False
    _adj: tuple = field(init=False, repr=False, compare=False)
    _weight: dict = field(init=False, repr=False, compare=False)
    _unit: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        weight: dict[Edge, int] = {}
        norm = []
        for raw in self.edges:
            if len(raw) == 2:
                u, v = raw
                w = 1
            else:
                u, v, w = raw
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not isinstance(w, int) or isinstance(w, bool) or w <= 0:
                raise GraphError(f"edge ({u}, {v}) needs a positive integer weight, got {w!r}")
            if not self.weighted and w != 1:
                raise GraphError(f"unweighted graph has edge ({u}, {v}) with weight {w}")
            key = canon(u, v)
            if key in weight:
                raise GraphError(f"parallel edge {key}")
            weight[key] = w
            norm.append((key[0], key[1], w))
        for u, v, w in norm:
            adj[u].append((v, w))
            adj[v].append((u, w))
        for nbrs in adj:
            nbrs.sort()
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_weight", weight)
        object.__setattr__(self, "_unit", all(w == 1 for w in weight.values()))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], weighted: bool = False) -> Graph:
        return cls(n, tuple(tuple(e) for e in edges), weighted)

    def neighbors(self, u: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, weight)`` pairs sorted by neighbor id."""
        return self._adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self._weight

    def weight(self, u: int, v: int) -> int:
        try:
            return self._weight[canon(u, v)]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self._weight)

    def without(self, removed: Iterable[Edge]) -> Graph:
        """A new graph with the given edges deleted (vertex ids unchanged)."""
        drop = {canon(*e) for e in removed}
        return Graph(self.n, tuple(e for e in self.edges if (e[0], e[1]) not in drop), self.weighted)

    @property
    def is_unit(self) -> bool:
        return self._unit


def fault_set(g: Graph, edges: Iterable[Sequence[int]]) -> frozenset[Edge]:
    """Canonicalize ``edges`` into a fault set, rejecting edges absent from ``g``."""
    out = set()
    for e in edges:
        key = canon(e[0], e[1])
        if not g.has_edge(*key):
            raise GraphError(f"fault {key} is not an edge of the graph")
        out.add(key)
    return frozenset(out)


def distances(g: Graph, removed: Iterable[Edge] = (), source: int = 0) -> list[float]:
    """Single-source distances in ``g`` minus ``removed``; UNREACHABLE marks cut-off vertices."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} outside [0, {g.n})")
    removed = removed if isinstance(removed, (set, frozenset)) else {canon(*e) for e in removed}
    dist: list[float] = [UNREACHABLE] * g.n
    dist[source] = 0
    adj = g._adj
    if g.is_unit:
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for v, _ in adj[u]:
                if dist[v] == UNREACHABLE and not (removed and canon(u, v) in removed):
                    dist[v] = du
                    queue.append(v)
        return dist
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v] and not (removed and canon(u, v) in removed):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def all_pairs(g: Graph, removed: Iterable[Edge] = ()) -> list[list[float]]:
    removed = frozenset(canon(*e) for e in removed)
    return [distances(g, removed, u) for u in range(g.n)]


def shortest_path(g: Graph, removed: Iterable[Edge], s: int, t: int) -> Path:
    """A shortest ``s``-``t`` path avoiding ``removed``.

    Walks back from ``t`` always taking the smallest-id tight predecessor, so the
    result is a pure function of the inputs.
    """
    removed = frozenset(canon(*e) for e in removed)
    dist = distances(g, removed, s)
    if not 0 <= t < g.n:
        raise GraphError(f"target {t} outside [0, {g.n})")
    if dist[t] == UNREACHABLE:
        raise DisconnectedError(f"{s} and {t} are disconnected")
    path = [t]
    v = t
    while v != s:
        for u, w in g.neighbors(v):
            if dist[u] + w == dist[v] and canon(u, v) not in removed:
                v = u
                break
        path.append(v)
    return tuple(reversed(path))


def path_length(g: Graph, p: Sequence[int]) -> int:
    return sum(g.weight(p[i], p[i + 1]) for i in range(len(p) - 1))


def check_path(g: Graph, removed: Iterable[Edge], p: Sequence[int]) -> None:
    """Raise InvalidPathError unless ``p`` walks real edges of ``g`` outside ``removed``."""
    if len(p) == 0:
        raise InvalidPathError("empty path")
    removed = frozenset(canon(*e) for e in removed)
    for i in range(len(p) - 1):
        key = canon(p[i], p[i + 1])
        if not g.has_edge(*key):
            raise InvalidPathError(f"{key} is not an edge")
        if key in removed:
            raise InvalidPathError(f"{key} is removed")


def is_shortest(g: Graph, removed: Iterable[Edge], p: Sequence[int]) -> bool:
    """True iff ``p`` is a shortest path between its endpoints once ``removed`` is deleted."""
    removed = frozenset(canon(*e) for e in removed)
    check_path(g, removed, p)
    if len(p) == 1:
        return True
    return distances(g, removed, p[0])[p[-1]] == path_length(g, p)


def path_edges(p: Sequence[int]) -> list[Edge]:
    return [canon(p[i], p[i + 1]) for i in range(len(p) - 1)]


def prefix_lengths(g: Graph, p: Sequence[int]) -> list[int]:
    """``out[i]`` is the length of ``p[0..i]``."""
    out = [0]
    for i in range(len(p) - 1):
        out.append(out[-1] + g.weight(p[i], p[i + 1]))
    return out
