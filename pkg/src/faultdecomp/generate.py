"""Seeded random graphs and replacement-path instances."""

from __future__ import annotations

import random

from .graph import DisconnectedError, Graph, UNREACHABLE, canon, distances, shortest_path, path_edges
from .instance import ReplacementInstance

MAX_RETRIES = 200


def random_graph(rng: random.Random, n: int, p: float, weights: tuple[int, int] | None = None) -> Graph:
    """Connected graph: a random recursive tree plus each remaining pair with probability ``p``."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for idx in range(1, n):
        edges.add(canon(order[idx], order[rng.randrange(idx)]))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return _weigh(rng, n, sorted(edges), weights)


def grid_graph(rng: random.Random, rows: int, cols: int, weights: tuple[int, int] | None = None) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return _weigh(rng, rows * cols, edges, weights)


def _weigh(rng, n, edges, weights):
    if weights is None:
        return Graph.from_edges(n, edges)
    lo, hi = weights
    return Graph.from_edges(n, [(u, v, rng.randint(lo, hi)) for u, v in edges], weighted=True)


def far_pair(rng: random.Random, g: Graph) -> tuple[int, int]:
    """Random source and a random vertex at maximum finite distance from it."""
    s = rng.randrange(g.n)
    dist = distances(g, (), s)
    top = max(d for d in dist if d != UNREACHABLE)
    return s, rng.choice([v for v, d in enumerate(dist) if d == top])


def random_faults(rng: random.Random, g: Graph, s: int, t: int, count: int) -> frozenset:
    """``count`` uniform edges, resampled until ``s`` and ``t`` stay connected."""
    edges = sorted(g.edge_set())
    count = min(count, len(edges))
    for _ in range(MAX_RETRIES):
        F = frozenset(rng.sample(edges, count))
        if distances(g, F, s)[t] != UNREACHABLE:
            return F
    raise DisconnectedError(f"no {count}-edge fault set keeps {s} and {t} connected")


def path_faults(rng: random.Random, g: Graph, s: int, t: int, count: int) -> frozenset:
    """Fail edges of the current replacement path one at a time.

    Produces detours around many faults, which uniform sampling rarely does.
    Stops early when every edge of the current path is a bridge.
    """
    F: set = set()
    while len(F) < count:
        pi = shortest_path(g, F, s, t)
        options = path_edges(pi)
        rng.shuffle(options)
        for e in options:
            if distances(g, F | {e}, s)[t] != UNREACHABLE:
                F.add(e)
                break
        else:
            break
    return frozenset(F)


def random_instance(
    rng: random.Random,
    n: int,
    p: float,
    f: int,
    fault_model: str = "random",
    weights: tuple[int, int] | None = None,
) -> ReplacementInstance:
    """Random graph, far endpoint pair and ``f`` faults; redraws the graph if ``s``-``t`` cannot survive."""
    pick = path_faults if fault_model == "path" else random_faults
    for _ in range(MAX_RETRIES):
        g = random_graph(rng, n, p, weights)
        s, t = far_pair(rng, g)
        try:
            F = pick(rng, g, s, t, f)
        except DisconnectedError:
            continue
        return ReplacementInstance(g, F, s, t, shortest_path(g, F, s, t))
    raise DisconnectedError(f"could not draw a connected instance with n={n}, p={p}, f={f}")
