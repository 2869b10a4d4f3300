import random

from hypothesis import given, settings, strategies as st

from faultdecomp.matching import max_matching

from oracles import flow_matching_size


def _check(left, right, adj, res):
    used_l = [u for u, _ in res.matching]
    used_r = [v for _, v in res.matching]
    assert len(set(used_l)) == len(used_l) and len(set(used_r)) == len(used_r)
    assert all(v in adj.get(u, ()) for u, v in res.matching)
    assert res.saturating == (res.size == len(left))
    if not res.saturating:
        A = res.violator
        N = set().union(*(set(adj.get(u, ())) for u in A)) if A else set()
        assert A <= set(left)
        assert len(N) < len(A)
        assert N == set(res.neighborhood)


def test_complete_bipartite():
    left = ["a", "b", "c"]
    adj = {u: {1, 2, 3} for u in left}
    res = max_matching(left, adj)
    assert res.saturating and res.size == 3


def test_pigeonhole_violator():
    res = max_matching(["a", "b"], {"a": {"r"}, "b": {"r"}})
    assert res.size == 1 and not res.saturating
    assert res.violator == {"a", "b"} and res.neighborhood == {"r"}


def test_empty_left_is_saturated():
    assert max_matching([], {}).saturating


def test_isolated_left_vertex_is_a_violator():
    res = max_matching(["a", "b"], {"a": {1}})
    assert res.violator == {"b"} and res.neighborhood == set()


def test_random_against_flow():
    rng = random.Random(99)
    for _ in range(300):
        nl, nr = rng.randint(0, 8), rng.randint(0, 8)
        p = rng.random()
        adj = {u: {v for v in range(nr) if rng.random() < p} for u in range(nl)}
        res = max_matching(range(nl), adj)
        assert res.size == flow_matching_size(range(nl), range(nr), adj)
        _check(list(range(nl)), list(range(nr)), adj, res)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7), st.data())
def test_matching_property(nl, nr, data):
    adj = {u: data.draw(st.sets(st.integers(0, nr - 1), max_size=nr)) if nr else set() for u in range(nl)}
    res = max_matching(range(nl), adj)
    assert res.size == flow_matching_size(range(nl), range(nr), adj)
    _check(list(range(nl)), list(range(nr)), adj, res)
