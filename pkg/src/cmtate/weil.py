"""Characteristic p: Weil germs as slope data on X = G/D.

A germ is an integer function f on X with f(w) + f(iota w) = m n0, n0 = |D|;
its slope function is s = f / n0.  Primes of a subfield with Galois group S
are the S-orbits on X.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .groups import CosetSpace
from .zlattice import CharacterLattice, Sublattice, invariant_factors, left_kernel, vecmat


class GermError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class WeilGerm:
    space: CosetSpace
    f: tuple
    weight: int = 1

    def __post_init__(self):
        X = self.space
        if len(self.f) != len(X):
            raise GermError(f"germ has {len(self.f)} values for {len(X)} primes")
        t = self.weight * self.n0
        for w in range(len(X)):
            if self.f[w] + self.f[X.iota(w)] != t:
                raise GermError(f"f(w) + f(iota w) != {t} at {X.labels[w]}")

    @property
    def n0(self):
        return len(self.space.subgroup)

    @property
    def group(self):
        return self.space.group

    def slopes(self):
        return tuple(Fraction(x, self.n0) for x in self.f)

    def __eq__(self, other):
        return isinstance(other, WeilGerm) and self.space.same_as(other.space) and self.f == other.f

    def __hash__(self):
        return hash((self.space.subgroup.members, self.f))

    def __repr__(self):
        return f"WeilGerm{self.f}"

    def __add__(self, other):
        return WeilGerm(self.space, tuple(a + b for a, b in zip(self.f, other.f)), self.weight + other.weight)

    def act(self, g):
        """(g f)(w) = f(g^-1 w)."""
        X = self.space
        G = X.group
        gi = G.inv(g)
        return WeilGerm(X, tuple(self.f[X.act(gi, w)] for w in range(len(X))), self.weight)

    def conj(self):
        return self.act(self.group.iota)

    def stabilizer(self):
        G = self.group
        return G.subgroup([g for g in G.elements if self.act(g).f == self.f], "Stab")

    def orbit(self):
        seen = []
        for g in self.group.elements:
            h = self.act(g)
            if h not in seen:
                seen.append(h)
        return seen

    def is_effective(self):
        return all(x >= 0 for x in self.f)

    def is_supersingular(self):
        return all(2 * x == self.weight * self.n0 for x in self.f)


@dataclass(frozen=True)
class ExactnessCertificate:
    first_injective: bool
    composite_zero: bool
    middle_exact: bool
    second_surjective: bool
    rank_ok: bool
    rank: int
    expected_rank: int
    cokernel_torsion: tuple
    degenerate: bool

    @property
    def ok(self):
        if self.degenerate:
            return self.first_injective and self.composite_zero and self.middle_exact and self.rank_ok
        return all((self.first_injective, self.composite_zero, self.middle_exact,
                    self.second_surjective, self.rank_ok))


def second_map_rows(X, n0):
    """Matrix of (f, m) -> (v -> f(w_v) + f(iota w_v) - n0 m) on Z^X x Z."""
    orbits = X.iota_orbits()
    rows = []
    for w in range(len(X)):
        row = [0] * len(orbits)
        for k, o in enumerate(orbits):
            rep = o[0]
            if w == rep:
                row[k] += 1
            if w == X.iota(rep):
                row[k] += 1
        rows.append(row)
    rows.append([-n0] * len(orbits))
    return rows, orbits


def sequence_certificate(sub_basis, rows, ncols, dim):
    """Check 0 -> L -> Z^dim -> Z^ncols for L spanned by sub_basis."""
    L = Sublattice(dim, sub_basis)
    first_inj = L.rank == len(sub_basis)
    comp0 = all(not any(vecmat(b, rows, ncols)) for b in L.basis)
    ker = Sublattice(dim, left_kernel(rows, ncols))
    middle = ker == L
    inv = invariant_factors(rows, ncols)
    surj = len(inv) == ncols and all(x == 1 for x in inv)
    tors = tuple(x for x in inv if x > 1)
    return first_inj, comp0, middle, surj, tors, ker


def direct_basis(X, n0):
    """Explicit generators of {(f, m) : f + iota f = m n0}: pair differences and one weight element."""
    dim = len(X) + 1
    out = []
    fixed = [o[0] for o in X.iota_orbits() if len(o) == 1]
    m0 = 2 if fixed and n0 % 2 else 1
    base = [0] * dim
    base[-1] = m0
    for o in X.iota_orbits():
        if len(o) == 2:
            v = [0] * dim
            v[o[0]], v[o[1]] = 1, -1
            out.append(v)
            base[o[0]] = m0 * n0
        else:
            base[o[0]] = m0 * n0 // 2
    out.append(base)
    return out


def weil_lattice(G, D):
    """X*(P^K) = W^K inside Z^X x Z, with an exactness certificate."""
    X = CosetSpace(D)
    n0 = len(D)
    rows, orbits = second_map_rows(X, n0)
    dim = len(X) + 1
    basis = direct_basis(X, n0)
    first_inj, comp0, middle, surj, tors, ker = sequence_certificate(basis, rows, len(orbits), dim)
    degenerate = G.iota in D
    expected = len(X) + 1 - len(orbits)
    rank = len(basis)
    cert = ExactnessCertificate(first_inj, comp0, middle, surj, rank == expected, rank, expected,
                                tors, degenerate)
    action = tuple(tuple(list(X.table[g]) + [len(X)]) for g in G.elements)
    labels = tuple(f"w:{lab}" for lab in X.labels) + ("m",)
    weight = tuple([0] * len(X) + [1])
    lat = CharacterLattice("X*(P^K)", labels, Sublattice(dim, basis), Sublattice(dim), action,
                           action[G.iota], weight, ())
    lat.validate()
    return lat, cert


def germ_vector(germ):
    """(f, m) as an element of the ambient of weil_lattice."""
    return tuple(germ.f) + (germ.weight,)


@dataclass(frozen=True)
class SimpleAVClass:
    members: tuple

    @property
    def representative(self):
        return self.members[0]

    def __contains__(self, g):
        return g in self.members


def enumerate_simple_classes(G, D):
    """Effective weight-one germs on G/D grouped into G-orbits, sorted."""
    X = CosetSpace(D)
    n0 = len(D)
    choices = []
    orbits = X.iota_orbits()
    for o in orbits:
        if len(o) == 2:
            choices.append([(a, n0 - a) for a in range(n0 + 1)])
        elif n0 % 2 == 0:
            choices.append([(n0 // 2,)])
        else:
            return []
    found = set()
    for pick in product(*choices):
        f = [0] * len(X)
        for o, vals in zip(orbits, pick):
            for w, v in zip(o, vals):
                f[w] = v
        found.add(tuple(f))
    classes, done = [], set()
    for f in sorted(found):
        if f in done:
            continue
        orb = sorted({h.f for h in WeilGerm(X, f).orbit()})
        done.update(orb)
        classes.append(SimpleAVClass(tuple(WeilGerm(X, h) for h in orb)))
    return classes


def class_of(germ):
    return SimpleAVClass(tuple(WeilGerm(germ.space, h) for h in sorted({x.f for x in germ.orbit()})))


@dataclass(frozen=True)
class PrimeData:
    points: tuple           # S-orbit on X
    slope: Fraction
    local_degree: int
    inv: Fraction


@dataclass(frozen=True)
class GermInvariants:
    deg_center: int
    primes: tuple
    e: int
    dim: int
    slope_multiplicities: dict
    reduced_degree_ok: bool
    supersingular: bool

    def invs(self):
        return tuple(p.inv for p in self.primes)


def germ_invariants(cls):
    """Center degree, local invariants, e, dimension and slope multiplicities.

    Primes of Q[pi] above p are the orbits of S = Stab(f) on X; the local degree
    at the prime through w = gD is n0 / |S cap gDg^-1|.
    """
    germ = cls.representative if isinstance(cls, SimpleAVClass) else cls
    if not germ.is_effective() or germ.weight != 1:
        raise GermError("germ_invariants needs an effective weight-one germ")
    X = germ.space
    G = X.group
    n0 = germ.n0
    S = germ.stabilizer()
    deg = G.order // len(S)
    primes = []
    for orb in X.orbits(S):
        w = orb[0]
        g = X.cosets[w][0]
        Dw = X.subgroup.conjugate(g)
        ld = n0 // len(S.intersect(Dw))
        slope = Fraction(germ.f[w], n0)
        inv = (slope * ld) % 1
        primes.append(PrimeData(orb, slope, ld, inv))
    e = 1
    for p in primes:
        e = lcm(e, p.inv.denominator)
    if (e * deg) % 2:
        raise GermError("e [Q[pi]:Q] is odd; germ data inconsistent")
    dim = e * deg // 2
    mult = Counter()
    for p in primes:
        mult[p.slope] += Fraction(2 * dim * p.local_degree, deg)
    mult = {k: int(v) for k, v in sorted(mult.items())}
    ok = sum(p.local_degree for p in primes) == deg and sum(mult.values()) == 2 * dim \
        and e * deg == 2 * dim
    return GermInvariants(deg, tuple(primes), e, dim, mult, ok, germ.is_supersingular())


def dieudonne_degree_check(data):
    """Flag slope-1/2 primes of local degree 1 when the slopes are 0, 1/2, 1 and 1/2 has multiplicity 2.

    data is a SimpleAVClass, a WeilGerm, or a raw profile: a list of
    (slope, local_degree) pairs plus the dimension, as (profile, dim).
    """
    if isinstance(data, tuple) and len(data) == 2 and isinstance(data[1], int):
        profile, dim = data
        deg = sum(ld for _, ld in profile)
    else:
        inv = germ_invariants(data)
        profile = [(p.slope, p.local_degree) for p in inv.primes]
        dim, deg = inv.dim, inv.deg_center
    half = Fraction(1, 2)
    half_mult = sum(Fraction(2 * dim * ld, deg) for s, ld in profile if s == half)
    out = []
    if not {Fraction(0), Fraction(1)} <= {Fraction(s) for s, _ in profile}:
        return out
    for k, (s, ld) in enumerate(profile):
        if s == half and ld == 1 and half_mult == 2:
            out.append(f"prime {k}: slope 1/2 with local degree 1 but the slope-1/2 part has rank 2 "
                       "(an indivisible rank-2 isocrystal needs local degree 2)")
    return out
