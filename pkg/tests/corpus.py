"""Seeded instance corpora shared by the property and acceptance tests."""

from __future__ import annotations

import random
from functools import lru_cache

from faultdecomp.generate import random_instance
from faultdecomp.graph import Graph
from faultdecomp.instance import ReplacementInstance
from faultdecomp.lowerbound import gen_glued, gen_glued_mixed, gen_single, gen_single_odd


@lru_cache(maxsize=None)
def unweighted(count: int = 200, seed: int = 2024) -> tuple[ReplacementInstance, ...]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        model = "random" if i % 3 == 0 else "path"
        out.append(random_instance(rng, rng.randint(8, 40), rng.choice([0.05, 0.1, 0.15]), rng.randint(1, 8), model))
    return tuple(out)


@lru_cache(maxsize=None)
def weighted(count: int = 100, seed: int = 7) -> tuple[ReplacementInstance, ...]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        model = "random" if i % 3 == 0 else "path"
        out.append(
            random_instance(rng, rng.randint(6, 30), rng.choice([0.08, 0.15, 0.25]), rng.randint(1, 6), model, (1, 10))
        )
    return tuple(out)


@lru_cache(maxsize=None)
def tiny(count: int = 80, seed: int = 11) -> tuple[ReplacementInstance, ...]:
    """n <= 12, |F| <= 4; half unit-weight, half weighted."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        weights = (1, 6) if i % 2 else None
        model = "random" if i % 4 == 0 else "path"
        out.append(random_instance(rng, rng.randint(5, 12), rng.choice([0.2, 0.35]), rng.randint(1, 4), model, weights))
    return tuple(out)


@lru_cache(maxsize=None)
def lower_bound() -> tuple:
    return (
        gen_single(3),
        gen_single(4),
        gen_single(5),
        gen_single_odd(3),
        gen_single_odd(4),
        gen_glued(3, 2),
        gen_glued(4, 2),
        gen_glued_mixed([4, 3]),
    )


def exchange_gadget() -> ReplacementInstance:
    """Two-sided fan: every shortcut leaves ``a`` via e1/e2, crosses e, enters ``b`` via e3/e4.

    ``{e}`` alone is a valid fault set, but ``{e1, e2}`` matches distinct base
    faults on both sides, so fault reduction stops there.
    """
    a, b = 0, 8
    c1, c2, m, n, d3, d4 = 9, 10, 11, 12, 13, 14
    edges = [(i, i + 1) for i in range(8)]
    edges += [(a, c1), (a, c2), (c1, m), (c2, m), (m, n), (n, d3), (n, d4), (d3, b), (d4, b)]
    g = Graph.from_edges(15, edges)
    F = [(a, c1), (a, c2), (m, n), (d3, b), (d4, b)]
    return ReplacementInstance.build(g, F, a, b)


def ks(f: int) -> list[int]:
    return [k for k in (1, 2, 4) if k <= f]
