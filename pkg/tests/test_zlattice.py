import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from cmtate.zlattice import (CharacterLattice, EquivariantMap, Sublattice, determinant, hnf,
                             hnf_with_transform, invariant_factors, left_kernel, matmul,
                             rational_left_nullspace, smith_with_transforms, vecmat, xgcd)

matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == abs(sympy.gcd(a, b)) and a * x + b * y == g


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_against_sympy(M):
    c = len(M[0])
    mine = sorted(invariant_factors(M, c))
    d = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
    ref = sorted(abs(d[i, i]) for i in range(min(d.shape)) if d[i, i] != 0)
    assert mine == ref


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_hnf_transform(M):
    c = len(M[0])
    H, U, piv = hnf_with_transform(M, c)
    assert matmul(U, M) == H
    assert abs(determinant(U)) == 1
    assert determinant(U) == sympy.Matrix(U).det()
    nz = [r for r in H if any(r)]
    assert len(nz) == sympy.Matrix(M).rank()


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_smith_transforms(M):
    c = len(M[0])
    U, D, V, Vi = smith_with_transforms(M, c)
    assert matmul(matmul(U, M), V) == D
    assert matmul(V, Vi) == [[int(i == j) for j in range(c)] for i in range(c)]


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_left_kernel_against_sympy(M):
    c = len(M[0])
    K = left_kernel(M, c)
    for k in K:
        assert not any(vecmat(k, M, c))
    assert len(K) == len(sympy.Matrix(M).T.nullspace())
    # saturated: the kernel lattice equals its saturation
    if K:
        L = Sublattice(len(M), K)
        assert L.is_saturated()


@settings(max_examples=60, deadline=None)
@given(matrices, matrices)
def test_sublattice_ops(A, B):
    dim = 5
    A = [r[:dim] + [0] * (dim - len(r[:dim])) for r in A]
    B = [r[:dim] + [0] * (dim - len(r[:dim])) for r in B]
    La, Lb = Sublattice(dim, A), Sublattice(dim, B)
    S, I = La + Lb, La & Lb
    assert La <= S and Lb <= S
    assert I <= La and I <= Lb
    assert La.rank + Lb.rank == S.rank + I.rank
    assert La <= La.saturation() and La.saturation().is_saturated()
    for v in La.basis:
        assert v in La and La.coordinates(v) is not None


def test_rational_nullspace():
    ns = rational_left_nullspace([[1, 2], [2, 4], [0, 1]], 2)
    assert len(ns) == 1


def quotient_example():
    # Z^2 / <(2, 0)> with swap action: Z/2 x Z
    L = CharacterLattice("T", ("a", "b"), Sublattice.full(2), Sublattice(2, [[2, 0], [0, 2]]),
                         ((0, 1), (1, 0)), (1, 0), (1, 1), ())
    return L


def test_character_lattice_torsion():
    L = quotient_example()
    L.validate()
    assert L.invariant_factors() == [2, 2]
    assert L.rank() == 0
    assert L.is_zero((2, 0)) and not L.is_zero((1, 0))
    assert L.format((3, -1)) == "[3*a - b]"
    assert L.format((0, 0)) == "[0]"
    assert L.format((-1, 2)) == "[-a + 2*b]"


def test_equivariant_map():
    Z2 = CharacterLattice("Z2", ("a", "b"), Sublattice.full(2), Sublattice(2), ((0, 1), (1, 0)), (1, 0))
    Z1 = CharacterLattice("Z", ("s",), Sublattice.full(1), Sublattice(1), ((0,), (0,)), (0,))
    f = EquivariantMap("sum", Z2, Z1, ((1,), (1,)))
    f.check()
    assert f.kernel() == Sublattice(2, [[1, -1]])
    assert f.is_surjective() and not f.is_injective()
    g = EquivariantMap("twice", Z2, Z1, ((2,), (2,)))
    assert g.cokernel() == (0, [2])
    with pytest.raises(Exception):
        EquivariantMap("bad", Z2, Z1, ((1,), (0,))).check()
