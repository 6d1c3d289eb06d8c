from math import comb, factorial

import pytest
from hypothesis import assume, given, settings, strategies as st

from cmtate.cm import lefschetz_lattice, mt_kernel_and_exotic, rho_phi_map, serre_lattice
from cmtate.hodge import (HodgeGeometry, Monomial, SeedError, SymbolicClass, basis, character,
                          exotic_census, exotic_census_dp, hard_lefschetz_injective, lefschetz_power,
                          nondegeneracy_induction, total_dimension, twisted_basis)

from conftest import cm_factor_sets


@pytest.mark.parametrize("g", range(1, 5))
def test_basis_sizes(g):
    assert [len(basis(r, g)) for r in range(2 * g + 1)] == [comb(2 * g, r) for r in range(2 * g + 1)]
    assert total_dimension(g) == 4 ** g
    assert basis(2 * g + 1, g) == []


@pytest.mark.parametrize("g", range(1, 5))
def test_lefschetz_products(g):
    L1 = lefschetz_power(1, g)
    acc = SymbolicClass.unit()
    for k in range(g + 1):
        assert acc == lefschetz_power(k, g)
        acc = acc * L1
    assert len(acc) == 0          # L^{g+1} = 0
    for a in range(g + 1):
        for b in range(g + 1 - a):
            lhs = lefschetz_power(a, g) * lefschetz_power(b, g)
            assert lhs == lefschetz_power(a + b, g)
            assert set(lhs.terms.values()) == {factorial(a + b)}


@pytest.mark.parametrize("g", range(1, 5))
def test_hard_lefschetz(g):
    assert all(hard_lefschetz_injective(r, g) for r in range(g + 1))


def test_monomial_types():
    m = Monomial((0, 2), (1,), 1)
    assert m.hodge_type() == (1, 0) and m.weight() == 1
    assert m.conj() == Monomial((1,), (0, 2), 1)
    assert m.untwisted().twist == 0


def geometry(factors):
    L, amb = lefschetz_lattice(factors)
    rho = rho_phi_map(L, amb, serre_lattice(factors[0].group))
    mt = mt_kernel_and_exotic(L, rho)
    return L, amb, HodgeGeometry.from_factors(amb), mt


@settings(max_examples=40, deadline=None)
@given(cm_factor_sets())
def test_census_routes_and_types(data):
    _, factors = data
    L, amb, geom, mt = geometry(factors)
    assume(geom.g <= 6)
    assert exotic_census(geom, L, mt.kernel) == exotic_census_dp(geom, L, mt.kernel)
    for r in range(geom.g + 1):
        for m in twisted_basis(r, geom.g):
            v = character(m, geom, L)
            if v in mt.kernel:
                # Mumford-Tate invariant classes are of type (0, 0)
                assert m.hodge_type() == (0, 0)
            if m.I == m.J:
                assert L.is_zero(v)


def test_nondegeneracy_induction():
    closure, ok = nondegeneracy_induction([], 3)
    assert ok and all(m.I == m.J for m in closure)
    seed = [Monomial((0,), (1,)), Monomial((1,), (0,))]
    closure, ok = nondegeneracy_induction(seed, 2)
    assert Monomial((0,), (1,)) in closure
    with pytest.raises(SeedError):
        nondegeneracy_induction([Monomial((0,), (1,))], 2)
