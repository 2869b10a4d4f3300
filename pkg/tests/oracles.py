"""Independent reference computations for the test-suite.

Nothing here calls into the code paths it is used to check.
"""

from __future__ import annotations

import heapq
import itertools

import networkx as nx


def to_nx(g, removed=()):
    removed = {tuple(sorted(e)) for e in removed}
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    for u, v, w in g.edges:
        if (u, v) not in removed:
            G.add_edge(u, v, weight=w)
    return G


def nx_dist(g, removed, a, b):
    try:
        return nx.shortest_path_length(to_nx(g, removed), a, b, weight="weight")
    except nx.NetworkXNoPath:
        return None


def walk_len(g, p):
    return sum(g.weight(p[i], p[i + 1]) for i in range(len(p) - 1))


def brute_min_fault_size(inst, i, j):
    """Smallest subset of F under which pi[i..j] is shortest, by networkx + enumeration."""
    sub = inst.pi[i : j + 1]
    if len(sub) == 1:
        return 0
    length = walk_len(inst.g, sub)
    F = sorted(inst.faults)
    for r in range(len(F) + 1):
        for subset in itertools.combinations(F, r):
            if nx_dist(inst.g, subset, sub[0], sub[-1]) == length:
                return r
    raise AssertionError("F itself must work")


def phased_walk_length(g, faults, start, end, e_b, e):
    """Shortest walk start -> end whose first fault is e_b and which traverses e.

    Dijkstra over (vertex, phase): phase 0 = no fault yet, 1 = e_b crossed,
    2 = e_b crossed and e traversed.
    """
    faults = {tuple(sorted(x)) for x in faults}
    e_b, e = tuple(sorted(e_b)), tuple(sorted(e))
    best = {(start, 0): 0}
    heap = [(0, start, 0)]
    while heap:
        d, x, ph = heapq.heappop(heap)
        if d > best.get((x, ph), float("inf")):
            continue
        if (x, ph) == (end, 2):
            return d
        for y, w in g.neighbors(x):
            key = (min(x, y), max(x, y))
            if ph == 0:
                if key not in faults:
                    nph = 0
                elif key == e_b:
                    nph = 2 if e_b == e else 1
                else:
                    continue
            elif ph == 1:
                nph = 2 if key == e else 1
            else:
                nph = 2
            nd = d + w
            if nd < best.get((y, nph), float("inf")):
                best[(y, nph)] = nd
                heapq.heappush(heap, (nd, y, nph))
    return float("inf")


def simple_base_pairs(g, faults, start, end, bound):
    """(base, generating) pairs witnessed by simple start -> end paths shorter than ``bound``."""
    faults = {tuple(sorted(x)) for x in faults}
    out = set()
    G = to_nx(g)
    for p in nx.all_simple_paths(G, start, end):
        if walk_len(g, p) >= bound:
            continue
        es = [(min(p[k], p[k + 1]), max(p[k], p[k + 1])) for k in range(len(p) - 1)]
        fs = [x for x in es if x in faults]
        if fs:
            for gen in fs:
                out.add((fs[0], gen))
    return out


def flow_matching_size(left, right, adj):
    G = nx.DiGraph()
    G.add_node("src")
    G.add_node("snk")
    for u in left:
        G.add_edge("src", ("L", u), capacity=1)
        for v in adj.get(u, ()):
            G.add_edge(("L", u), ("R", v), capacity=1)
    for v in right:
        G.add_edge(("R", v), "snk", capacity=1)
    return nx.maximum_flow_value(G, "src", "snk")
