from types import SimpleNamespace

import pytest
import sympy
from hypothesis import assume, given, settings

from cmtate.cm import CMFactor
from cmtate.groups import CosetSpace, build_group
from cmtate.reduction import (IncompatibleField, IsogenyCollision, ReductionContext, ReductionError,
                              fundamental_diagram, germ_system, lifting_search, reduce_factor)
from cmtate.verdicts import Analysis
from cmtate.weil import WeilGerm, class_of

from conftest import reduction_setups


def analysis(G, factors, D):
    sc = SimpleNamespace(group=G, factors=tuple(factors), D=D, germs=(), facts={})
    return Analysis(sc)


@settings(max_examples=80, deadline=None)
@given(reduction_setups())
def test_reduced_germs_have_weight_one(setup):
    G, factors, D = setup
    ctx = ReductionContext(D)
    for f in factors:
        try:
            g = reduce_factor(f, ctx)
        except ReductionError:
            continue
        X = ctx.X
        assert all(g.f[w] + g.f[X.iota(w)] == len(D) for w in range(len(X)))
        assert g.is_effective()


@settings(max_examples=60, deadline=None)
@given(reduction_setups())
def test_pkernel_two_routes_and_inclusions(setup):
    G, factors, D = setup
    an = analysis(G, factors, D)
    try:
        pk = an.pker
    except ReductionError:
        assume(False)
    assert pk.routes_agree and pk.saturated
    # rank against sympy: kernel of the germ map on L0
    M = sympy.Matrix([list(r) for r in an.pmap.matrix])
    assert pk.rank == an.L0.rank() - M.rank()
    assert an.mt.kernel <= an.KP
    assert an.K1 <= an.KP
    assert an.diagram_commutes()
    assert an.restriction.is_surjective()


@settings(max_examples=40, deadline=None)
@given(reduction_setups())
def test_lifting_finds_original(setup):
    G, factors, D = setup
    ctx = ReductionContext(D)
    f = factors[0]
    try:
        g = reduce_factor(f, ctx)
    except ReductionError:
        assume(False)
    found = lifting_search(class_of(g), f.space, ctx)
    assert found is not None
    lift, target = found
    assert reduce_factor(lift, ctx) == target
    assert target in class_of(g)


def test_fundamental_diagram_all_D():
    for name in ("C2", "C4", "C6", "C2xC2", "S3xC2", "C2xC4"):
        G = build_group(name)
        for D in G.all_subgroups():
            assert fundamental_diagram(ReductionContext(D)).ok, (name, D.members)


def test_isogeny_collision():
    G = build_group("C6")
    ctx = ReductionContext(G.resolve_subgroup("iota"))
    X = ctx.X
    with pytest.raises(IsogenyCollision):
        germ_system(["A", "B"], [WeilGerm(X, (1, 1, 1)), WeilGerm(X, (1, 1, 1))], ctx)


def test_incompatible_field():
    G = build_group("C6")
    ctx = ReductionContext(G.resolve_subgroup("1"))
    g = WeilGerm(ctx.X, (1, 1, 1, 0, 0, 0))
    E = CosetSpace(G.resolve_subgroup("HQ"))
    with pytest.raises(IncompatibleField):
        lifting_search(class_of(g), E, ctx)


def test_ordinary_elliptic_reduction():
    G = build_group("C2")
    ctx = ReductionContext(G.resolve_subgroup("1"))
    f = CMFactor("E", CosetSpace(G.resolve_subgroup("1")), (1, 0))
    assert reduce_factor(f, ctx).f == (1, 0)
    ss = ReductionContext(G.resolve_subgroup("G"))
    assert reduce_factor(f, ss).is_supersingular()
