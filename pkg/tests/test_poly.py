import pytest

from faultdecomp.graph import Graph, is_shortest
from faultdecomp.instance import ReplacementInstance
from faultdecomp.lowerbound import gen_glued, gen_single
from faultdecomp.matching import matching_with_witness
from faultdecomp.oracle import FaultOracle, min_fault_set, verify_decomposition
from faultdecomp.poly import (
    DistanceTables,
    PolyDecomposer,
    base_fault_reach,
    build_gamma,
    compute_subpaths,
    compute_subpaths_weighted,
    fault_reduce,
    fault_reduce_traced,
)

import corpus
from oracles import phased_walk_length, simple_base_pairs


def chord_square():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    return ReplacementInstance(g, {(0, 3)}, 0, 3, (0, 1, 2, 3))


def test_base_fault_chord():
    inst = chord_square()
    e = (0, 3)
    assert base_fault_reach(inst, 0, 3, e, e, "L")
    assert base_fault_reach(inst, 0, 3, e, e, "R")
    assert not base_fault_reach(inst, 0, 1, e, e, "L")
    assert not base_fault_reach(inst, 0, 1, e, e, "R")


def test_half_arc_left_base_faults():
    lb = gen_single(4)
    inst = lb.instance
    a, b = lb.half_arcs[0]
    tables = DistanceTables(inst)
    e1 = [e for e in inst.faults if lb.labels[e[0]][1] in (1, 2)]
    assert len(e1) == 2
    for e in e1:
        assert base_fault_reach(inst, a, b, e, e, "L", tables)
    # the formula agrees with simple-path enumeration plus walk search on every pair
    i, j = inst.index(a), inst.index(b)
    simple = simple_base_pairs(inst.g, inst.faults, a, b, inst.sub_length(i, j))
    for eb in inst.faults:
        for e in inst.faults:
            got = base_fault_reach(inst, a, b, eb, e, "L", tables)
            walk = phased_walk_length(inst.g, inst.faults, a, b, eb, e) < inst.sub_length(i, j)
            assert got == walk
            if (eb, e) in simple:
                assert got


def test_gamma_empty_left():
    inst = gen_single(4).instance
    gamma = build_gamma(inst, inst.s, inst.t, frozenset(), "L")
    assert gamma.left == () and len(gamma.right) == inst.f
    assert matching_with_witness(gamma).saturating


def test_gamma_no_shortcut_no_edges():
    inst = gen_single(4).instance
    gamma = build_gamma(inst, inst.pi[0], inst.pi[3], inst.faults, "R")
    assert gamma.edges() == set()


def test_exchange_gadget_reduction_is_not_minimum():
    inst = corpus.exchange_gadget()
    assert inst.pi == tuple(range(9))
    assert min_fault_set(inst, 0, 8) == {(11, 12)}
    F = fault_reduce(inst, 0, 8)
    assert F == {(0, 9), (0, 10)}
    for side in ("L", "R"):
        assert matching_with_witness(build_gamma(inst, 0, 8, F, side)).saturating
    assert is_shortest(inst.g, F, inst.pi)


def test_fault_reduce_on_shortest_subpath_is_empty():
    inst = gen_single(4).instance
    oracle = FaultOracle(inst)
    spans = [(i, j) for i in range(inst.length) for j in range(i + 1, inst.length + 1) if oracle.min_size(i, j) == 0]
    assert spans
    for i, j in spans:
        assert fault_reduce(inst, inst.pi[i], inst.pi[j]) == frozenset()


def test_fault_reduce_contract_on_corpus():
    for inst in corpus.unweighted()[:80] + corpus.weighted()[:40]:
        tables = DistanceTables(inst)
        step = max(1, inst.length // 5)
        for i in range(0, inst.length + 1, step):
            for j in range(i, inst.length + 1, step):
                tr = fault_reduce_traced(inst, i, j, tables, check=True)
                assert tr.faults <= inst.faults
                assert is_shortest(inst.g, tr.faults, inst.sub(i, j))
                assert all(x > y for x, y in zip(tr.sizes, tr.sizes[1:]))
                assert tr.iterations <= inst.f
                assert tr.final_left.saturating and tr.final_right.saturating


def test_compute_subpaths_k1_single_piece():
    for inst in corpus.unweighted()[:30]:
        d = compute_subpaths(inst, 1)
        assert d.q == 1
        assert verify_decomposition(inst, d, inst.f).passed


def test_compute_subpaths_glued():
    inst = gen_glued(4, 2).instance
    d = compute_subpaths(inst, 2)
    assert verify_decomposition(inst, d, 4).passed
    assert d.q == 2
    d4 = compute_subpaths(inst, 4)
    assert verify_decomposition(inst, d4, 2).passed
    # below the lower-bound budget no split into four pieces exists
    assert 5 <= d4.q <= 33


def test_linear_and_binary_both_valid():
    for inst in corpus.unweighted()[:60]:
        for k in corpus.ks(inst.f):
            for linear in (False, True):
                d = compute_subpaths(inst, k, linear_scan=linear)
                assert verify_decomposition(inst, d, inst.f // k).passed
                assert d.q <= 8 * k + 1


def test_weighted_unit_weights_match_unweighted_verifier():
    for inst in corpus.unweighted()[:30]:
        for k in corpus.ks(inst.f):
            d = compute_subpaths_weighted(inst, k)
            assert verify_decomposition(inst, d, inst.f // k).passed


def test_weighted_heavy_edge_separator():
    g = Graph.from_edges(
        6,
        [(0, 1, 1), (1, 2, 10), (2, 3, 1), (1, 4, 1), (4, 2, 1), (1, 5, 2), (5, 2, 2)],
        weighted=True,
    )
    inst = ReplacementInstance.build(g, [(1, 4), (1, 5)], 0, 3)
    d = compute_subpaths_weighted(inst, 2)
    assert (1, 2) in d.separators
    assert verify_decomposition(inst, d, 1).passed


def test_k_out_of_range():
    inst = gen_single(3).instance
    with pytest.raises(ValueError):
        compute_subpaths(inst, 0)
    with pytest.raises(ValueError):
        compute_subpaths(inst, inst.f + 1)


def _fs_pair_load(inst, dec, d, budget, interleaved):
    """Sum of min(|F'_i|, budget + 1) over post-light and pre-light augmented subpaths."""
    spans = d.spans(inst)
    aug = []
    for i, j in spans[:-1]:
        tr = dec.probes[(i, j + 1)]
        assert len(tr.faults) > budget
        aug.append((inst.sub_length(i, j + 1), len(tr.faults)))
    post = sum(min(s, budget + 1) for x, (ln, s) in enumerate(aug[:-1]) if ln <= aug[x + 1][0])
    pre = sum(min(s, budget + 1) for x, (ln, s) in enumerate(aug) if x > 0 and ln <= aug[x - 1][0])
    return post, pre


def test_fs_pair_global_bound():
    for inst in corpus.unweighted() + tuple(lb.instance for lb in corpus.lower_bound()):
        for k in corpus.ks(inst.f):
            dec = PolyDecomposer(inst)
            d = dec.decompose(k)
            post, pre = _fs_pair_load(inst, dec, d, inst.f // k, False)
            assert post <= 4 * inst.f and pre <= 4 * inst.f
    for inst in corpus.weighted():
        for k in corpus.ks(inst.f):
            dec = PolyDecomposer(inst)
            d = dec.decompose_weighted(k)
            post, pre = _fs_pair_load(inst, dec, d, inst.f // k, True)
            assert post <= 4 * inst.f and pre <= 4 * inst.f


def test_oracle_and_poly_agree_on_validity_not_boundaries():
    inst = corpus.exchange_gadget()
    oracle = FaultOracle(inst)
    g = oracle.min_size(0, inst.length)
    p = len(fault_reduce(inst, inst.s, inst.t))
    assert g == 1 and p == 2
