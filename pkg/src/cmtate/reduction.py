"""Reduction of CM abelian varieties at the level of character lattices.

Fix the prime w0 of K with decomposition group D; primes of K over p are then
X = G/D with w0 the coset of the identity.  For a CM-type (E, Phi) with E = K^H
the germ of the reduction has

    f(gD) = n0 |Phi cap O| / |O|,   O = the D-orbit of g^-1 H in G/H,

and its conjugate by sigma = gH is the translate g.f.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .cm import kernel_generators, lefschetz_from_points, serre_lattice
from .groups import CosetSpace, HypothesisError
from .weil import WeilGerm, germ_vector, second_map_rows, sequence_certificate, weil_lattice
from .zlattice import EquivariantMap, Sublattice, primitive_integer, rational_left_nullspace, vecmat


class ReductionError(ValueError):
    pass


class IsogenyCollision(ReductionError):
    pass


class IncompatibleField(ReductionError):
    pass


@dataclass(frozen=True, eq=False)
class ReductionContext:
    D: object
    X: CosetSpace = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "X", CosetSpace(self.D))

    @property
    def group(self):
        return self.D.group

    @property
    def n0(self):
        return len(self.D)

    @property
    def degenerate(self):
        return self.group.iota in self.D


def reduce_factor(factor, ctx):
    G = ctx.group
    X = ctx.X
    sp = factor.space
    orbit_of = {}
    for o in sp.orbits(ctx.D):
        for i in o:
            orbit_of[i] = o
    f = []
    for w in range(len(X)):
        g = X.cosets[w][0]
        o = orbit_of[sp.index_of[G.inv(g)]]
        num = ctx.n0 * sum(factor.phi[i] for i in o)
        if num % len(o):
            raise ReductionError(f"{factor.name}: non-integral f at {X.labels[w]}; enlarge K")
        f.append(num // len(o))
    return WeilGerm(X, tuple(f), 1)


def reduce_cm(factors, ctx):
    return [reduce_factor(f, ctx) for f in factors]


def fibres(factor, ctx):
    """Sigma_E(v) for the primes v of E: D-orbits on G/H."""
    return factor.space.orbits(ctx.D)


def pushforward(f, ctx):
    """f -> (fbar, wt f) with fbar(w) = sum of f over the coset w."""
    G = ctx.group
    X = ctx.X
    fbar = [0] * len(X)
    for t in G.elements:
        fbar[X.index_of[t]] += f[t]
    return tuple(fbar) + (f[0] + f[G.iota],)


def pushforward_map(SK, P, ctx):
    G = ctx.group
    rows = []
    for t in G.elements:
        v = [0] * (len(ctx.X) + 1)
        v[ctx.X.index_of[t]] = 1
        if t in (0, G.iota):
            v[-1] = 1
        rows.append(tuple(v))
    m = EquivariantMap("pushforward", SK, P, tuple(rows))
    m.check()
    return m


# fundamental diagram

@dataclass(frozen=True)
class FundamentalDiagram:
    degenerate: bool
    reason: str
    certificates: dict
    top_rows: tuple = ()
    bottom_rows: tuple = ()

    @property
    def ok(self):
        return all(self.certificates.values())


def fundamental_diagram(ctx, SK=None):
    G = ctx.group
    X = ctx.X
    n0 = ctx.n0
    P, wcert = weil_lattice(G, ctx.D)
    if ctx.degenerate:
        return FundamentalDiagram(True, "iota in D: no p-adic prime of F splits in K; the S^K side "
                                  f"collapses and W^K has rank {wcert.rank}",
                                  {"bottom_first_injective": wcert.first_injective,
                                   "bottom_composite_zero": wcert.composite_zero,
                                   "bottom_middle_exact": wcert.middle_exact,
                                   "bottom_rank": wcert.rank_ok})
    SK = SK or serre_lattice(G)
    n = G.order
    SF = CosetSpace(G.iota_subgroup())
    # top row: X*(S^K) -> Z^G x Z -> Z^{Sigma_F}
    top1 = [tuple(b) + (b[0] + b[G.iota],) for b in SK.generators.basis]
    p1 = []
    for t in G.elements:
        row = [0] * len(SF)
        row[SF.index_of[t]] = 1
        p1.append(row)
    p1.append([-1] * len(SF))
    t_inj, t_c0, t_mid, t_surj, _, _ = sequence_certificate(top1, p1, len(SF), n + 1)
    # bottom row: W^K -> Z^X x Z -> Z^Y
    p2, Y = second_map_rows(X, n0)
    # verticals
    a = pushforward_map(SK, P, ctx)
    b = []
    for t in G.elements:
        v = [0] * (len(X) + 1)
        v[X.index_of[t]] = 1
        b.append(v)
    b.append([0] * len(X) + [1])
    ypos = {}
    for k, o in enumerate(Y):
        for w in o:
            ypos[w] = k
    c = []
    for cos in SF.cosets:
        v = [0] * len(Y)
        v[ypos[X.index_of[cos[0]]]] = 1
        c.append(v)
    left_ok = all(vecmat(r, b, len(X) + 1) == a.apply(bb)
                  for r, bb in zip(top1, SK.generators.basis))
    right_ok = True
    for k in range(n + 1):
        e = [0] * (n + 1)
        e[k] = 1
        lhs = vecmat(vecmat(e, p1, len(SF)), c, len(Y))
        rhs = vecmat(vecmat(e, b, len(X) + 1), p2, len(Y))
        if lhs != rhs:
            right_ok = False
    a_image_in_W = all(a.apply(x) in P.generators for x in SK.generators.basis)
    certs = {
        "top_first_injective": t_inj, "top_composite_zero": t_c0, "top_middle_exact": t_mid,
        "top_second_surjective": t_surj,
        "bottom_first_injective": wcert.first_injective, "bottom_composite_zero": wcert.composite_zero,
        "bottom_middle_exact": wcert.middle_exact, "bottom_second_surjective": wcert.second_surjective,
        "bottom_rank": wcert.rank_ok,
        "left_square_commutes": left_ok and a_image_in_W, "right_square_commutes": right_ok,
    }
    return FundamentalDiagram(False, "", certs, (tuple(map(tuple, top1)), tuple(map(tuple, p1))),
                              (tuple(map(tuple, P.generators.basis)), tuple(map(tuple, p2))))


# L(A0) and the germ map

def germ_label(name, germ):
    return f"{name}({','.join(str(x) for x in germ.f)})"


@dataclass(frozen=True, eq=False)
class GermSystem:
    """The conjugate germs Pi of A0 and X*(L(A0)) = Z^Pi / {g = iota g, sum g = 0}."""
    ctx: ReductionContext
    names: tuple
    germs: tuple            # base germ of each factor
    points: tuple           # all distinct conjugate germs, grouped by factor
    owner: tuple            # factor position of each point
    lattice: CharacterLattice

    def index(self, germ):
        return self.points.index(germ)

    def slope_matrix(self):
        return [list(p.slopes()) for p in self.points]


def germ_system(names, germs, ctx):
    G = ctx.group
    points, owner = [], []
    for k, (name, g0) in enumerate(zip(names, germs)):
        for g in G.elements:
            h = g0.act(g)
            if h in points:
                j = points.index(h)
                if owner[j] != k:
                    raise IsogenyCollision(f"{names[owner[j]]} and {name} reduce to conjugate germs {h.f}")
                continue
            points.append(h)
            owner.append(k)
    labels = []
    for p, k in zip(points, owner):
        labels.append(germ_label(names[k], p))
    action = tuple(tuple(points.index(p.act(g)) for p in points) for g in G.elements)
    L0 = lefschetz_from_points("X*(L(A0))", labels, action, action[G.iota])
    return GermSystem(ctx, tuple(names), tuple(germs), tuple(points), tuple(owner), L0)


def restriction_map(L, amb, system):
    """[sigma] -> [sigma pi] for sigma in Sigma_E of each factor."""
    rows = []
    for k, f in enumerate(amb.factors):
        g0 = system.germs[k]
        for c in f.space.cosets:
            v = [0] * len(system.points)
            v[system.index(g0.act(c[0]))] = 1
            rows.append(tuple(v))
    m = EquivariantMap("restriction", L, system.lattice, tuple(rows))
    m.check()
    return m


def p_map(system, P):
    rows = tuple(germ_vector(p) for p in system.points)
    m = EquivariantMap("germ map", system.lattice, P, rows)
    m.check()
    return m


@dataclass(frozen=True)
class PKernel:
    kernel: Sublattice
    exotic_tate_exists: bool
    rank: int
    generators: tuple
    saturated: bool
    routes_agree: bool


def slope_sum_vanishes(system, g):
    S = system.slope_matrix()
    for w in range(len(system.ctx.X)):
        if sum(g[k] * S[k][w] for k in range(len(g))):
            return False
    return True


def slope_sum_kernel(system):
    """Rational nullspace of the slope matrix, saturated."""
    S = system.slope_matrix()
    ns = rational_left_nullspace(S, len(system.ctx.X))
    dim = len(system.points)
    return Sublattice(dim, [primitive_integer(v) for v in ns]).saturation()


def p_kernel(system, P):
    L0 = system.lattice
    pm = p_map(system, P)
    K = pm.kernel()
    K2 = slope_sum_kernel(system)
    agree = K == K2 and all(slope_sum_vanishes(system, b) for b in K.basis)
    sat = K.is_saturated()
    r = L0.subgroup_rank(K)
    return PKernel(K, r > 0, r, kernel_generators(L0, K), sat, agree)


# lifting

def all_cm_types(space):
    pairs = [o for o in space.iota_orbits()]
    if any(len(o) != 2 for o in pairs):
        return
    for pick in product((0, 1), repeat=len(pairs)):
        phi = [0] * len(space)
        for o, c in zip(pairs, pick):
            phi[o[c]] = 1
        yield tuple(phi)


def lifting_search(cls, E_space, ctx):
    """A CM-type on E whose reduction lies in the class, or None.

    Raises IncompatibleField when no member of the class has its centre inside E.
    """
    from .cm import CMFactor
    members = list(cls.members)
    H = set(E_space.subgroup.members)
    ok_members = [m for m in members if H <= set(m.stabilizer().members)]
    if not ok_members:
        raise IncompatibleField("the centre Q[pi] of no member is contained in E")
    for target in ok_members:
        for phi in all_cm_types(E_space):
            fac = CMFactor("lift", E_space, phi)
            try:
                red = reduce_factor(fac, ctx)
            except ReductionError:
                continue
            if red == target:
                return fac, target
    return None


__all__ = [
    "ReductionContext", "ReductionError", "IsogenyCollision", "IncompatibleField", "reduce_cm",
    "reduce_factor", "pushforward", "pushforward_map", "fundamental_diagram", "FundamentalDiagram",
    "germ_system", "GermSystem", "restriction_map", "p_map", "p_kernel", "PKernel",
    "lifting_search", "all_cm_types", "fibres", "slope_sum_vanishes", "HypothesisError",
]
