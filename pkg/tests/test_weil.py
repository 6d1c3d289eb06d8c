from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from cmtate.groups import CosetSpace, build_group, preset_names
from cmtate.weil import (GermError, WeilGerm, class_of, dieudonne_degree_check, enumerate_simple_classes,
                         germ_invariants, germ_vector, weil_lattice)

SMALL = [n for n in preset_names() if build_group(n).order <= 12]


@st.composite
def group_and_D(draw):
    G = build_group(draw(st.sampled_from(SMALL)))
    return G, draw(st.sampled_from(G.all_subgroups()))


@settings(max_examples=60, deadline=None)
@given(group_and_D(), st.data())
def test_weil_lattice_membership(gd, data):
    G, D = gd
    P, cert = weil_lattice(G, D)
    assert cert.ok
    X, n0 = CosetSpace(D), len(D)
    m = data.draw(st.integers(-3, 3))
    f = [None] * len(X)
    for o in X.iota_orbits():
        if len(o) == 2:
            a = data.draw(st.integers(-5, 5))
            f[o[0]], f[o[1]] = a, m * n0 - a
        else:
            assume((m * n0) % 2 == 0)
            f[o[0]] = m * n0 // 2
    v = tuple(f) + (m,)
    assert v in P.generators
    bumped = list(v)
    bumped[0] += 1
    assert tuple(bumped) not in P.generators
    assert P.rank() == len(X) + 1 - len(X.iota_orbits())


@settings(max_examples=40, deadline=None)
@given(group_and_D())
def test_classes_partition_germs(gd):
    G, D = gd
    classes = enumerate_simple_classes(G, D)
    seen = [g.f for c in classes for g in c.members]
    assert len(seen) == len(set(seen))
    P, _ = weil_lattice(G, D)
    for c in classes:
        rep = c.representative
        assert len(c.members) * len(rep.stabilizer()) == G.order
        assert class_of(c.members[-1]).members == c.members
        assert germ_vector(rep) in P.generators
        inv = germ_invariants(c)
        assert inv.reduced_degree_ok
        assert sum(p.local_degree for p in inv.primes) == inv.deg_center
        assert sum(inv.slope_multiplicities.values()) == 2 * inv.dim
        # slopes are symmetric under s -> 1 - s
        sm = inv.slope_multiplicities
        assert all(sm.get(1 - s, 0) == k for s, k in sm.items())


def test_elliptic_curves():
    G = build_group("C2")
    ordinary = enumerate_simple_classes(G, G.resolve_subgroup("1"))
    assert len(ordinary) == 1
    inv = germ_invariants(ordinary[0])
    assert (inv.deg_center, inv.dim, inv.e) == (2, 1, 1)
    assert not inv.supersingular
    ss = enumerate_simple_classes(G, G.resolve_subgroup("G"))
    inv = germ_invariants(ss[0])
    assert (inv.deg_center, inv.dim, inv.e) == (1, 1, 2)
    assert inv.supersingular and inv.invs() == (Fraction(1, 2),)


def test_slopes_one_third():
    # a Weil number with slopes 1/3, 2/3 over a quadratic field where p splits: dimension 3
    G = build_group("C6")
    X = CosetSpace(G.resolve_subgroup("HQ"))
    inv = germ_invariants(WeilGerm(X, (1, 2)))
    assert inv.deg_center == 2 and inv.e == 3 and inv.dim == 3
    assert inv.slope_multiplicities == {Fraction(1, 3): 3, Fraction(2, 3): 3}


def test_germ_errors():
    G = build_group("C6")
    X = CosetSpace(G.resolve_subgroup("HQ"))
    with pytest.raises(GermError):
        WeilGerm(X, (1, 1))
    with pytest.raises(GermError):
        germ_invariants(WeilGerm(X, (-1, 4)))


def test_dieudonne_profile():
    h = Fraction(1, 2)
    assert dieudonne_degree_check(([(0, 1), (h, 1), (1, 1)], 3))
    assert not dieudonne_degree_check(([(0, 1), (h, 2), (1, 1)], 4))
