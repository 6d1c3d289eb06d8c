import pytest
from hypothesis import given, strategies as st

from cmtate.groups import (CosetSpace, GroupError, HypothesisError, block_partition, build_group,
                           double_coset_commute, preset_names)


@pytest.mark.parametrize("name", preset_names())
def test_preset_axioms(name):
    G = build_group(name)
    n = G.order
    # brute-force associativity and identity, independent of the constructor's own checks
    for a in range(n):
        assert G.mul(0, a) == a == G.mul(a, 0)
        assert G.mul(a, G.inv(a)) == 0
        for b in range(n):
            for c in range(n):
                assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(G.iota, G.iota) == 0 and G.iota != 0
    assert all(G.mul(G.iota, a) == G.mul(a, G.iota) for a in range(n))


@pytest.mark.parametrize("name", preset_names())
def test_cosets_partition(name):
    G = build_group(name)
    for H in G.all_subgroups():
        X = CosetSpace(H)
        seen = sorted(x for c in X.cosets for x in c)
        assert seen == list(range(G.order))
        assert len(X) * len(H) == G.order
        for g in G.elements:
            perm = [X.act(g, i) for i in range(len(X))]
            assert sorted(perm) == list(range(len(X)))


def test_all_subgroups_counts():
    assert len(build_group("C6").all_subgroups()) == 4
    assert len(build_group("S3xC2").all_subgroups()) == 16
    assert len(build_group("Q8").all_subgroups()) == 6


def test_bad_tables():
    with pytest.raises(GroupError):
        build_group({"table": [[0, 1], [1, 1]], "iota": 1})
    with pytest.raises(GroupError):
        build_group({"table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "iota": 1})   # iota of order 3
    with pytest.raises(GroupError):
        build_group("C7x")


def test_custom_table():
    G = build_group({"table": [[0, 1], [1, 0]], "iota": "b", "labels": ["e", "b"]})
    assert G.order == 2 and G.label(G.iota) == "b"


def test_resolve_subgroup():
    G = build_group("C6")
    assert G.resolve_subgroup("HQ").members == (0, 2, 4)
    assert G.resolve_subgroup("iota").members == (0, 3)
    assert G.resolve_subgroup("1").members == (0,)
    assert G.resolve_subgroup("t2").members == (0, 2, 4)
    with pytest.raises(GroupError):
        G.resolve_subgroup("zz")


def test_double_coset_and_blocks():
    G = build_group("S3xC2")
    HE = G.generated(["(12)"])
    ok, _ = double_coset_commute(HE, HE)
    assert ok
    ok, _ = double_coset_commute(HE, G.generated(["(13)"]))
    assert not ok
    HQ = G.resolve_subgroup("HQ")
    sig = [c for c in CosetSpace(HE).cosets if c[0] in HQ]
    with pytest.raises(HypothesisError):
        block_partition(sig, G.generated(["(13)"]))
    bp = block_partition(sig, HE)
    assert bp.m == 3 and bp.n == 3


@given(st.integers(1, 6).map(lambda k: 2 * k), st.data())
def test_cyclic_orbits(n, data):
    G = build_group({"table": [[(a + b) % n for b in range(n)] for a in range(n)], "iota": n // 2})
    d = data.draw(st.sampled_from([x for x in range(1, n + 1) if n % x == 0]))
    D = G.generated([(n // d) % n])
    X = CosetSpace(D)
    orbs = X.orbits(G.iota_subgroup())
    assert sum(len(o) for o in orbs) == len(X)
    assert X.has_iota_fixed_points() == (G.iota in D)
