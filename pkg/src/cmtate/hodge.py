"""Symbolic cohomology of a CM abelian variety and its power products.

H^1 has basis omega_s for s in Phi and omega_{iota s}; a monomial omega_{I,J}
is indexed by two subsets of positions 0..g-1, I for Phi-forms and J for the
iota-forms, so omega_{M, M} is the Lefschetz monomial omega_M omega_{iota M}.
Only even-degree manipulations are exposed, so no signs ever appear.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .zlattice import rational_left_nullspace


@dataclass(frozen=True, order=True)
class Monomial:
    I: tuple
    J: tuple
    twist: int = 0

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(sorted(self.I)))
        object.__setattr__(self, "J", tuple(sorted(self.J)))

    @property
    def degree(self):
        return len(self.I) + len(self.J)

    def hodge_type(self):
        return len(self.I) - self.twist, len(self.J) - self.twist

    def weight(self):
        return self.degree - 2 * self.twist

    def conj(self):
        return Monomial(self.J, self.I, self.twist)

    def untwisted(self):
        return Monomial(self.I, self.J)


class SymbolicClass:
    """Finite rational combination of monomials."""

    def __init__(self, terms=None):
        self.terms = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[m] = self.terms.get(m, 0) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def unit(cls):
        return cls({Monomial((), ()): 1})

    def __eq__(self, other):
        return isinstance(other, SymbolicClass) and self.terms == other.terms

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return SymbolicClass(t)

    def scale(self, a):
        return SymbolicClass({m: c * a for m, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                p = multiply(m1, m2)
                if p is not None:
                    out[p] = out.get(p, 0) + c1 * c2
        return SymbolicClass(out)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"SymbolicClass({dict(sorted(self.terms.items()))})"


def multiply(a, b):
    if set(a.I) & set(b.I) or set(a.J) & set(b.J):
        return None
    return Monomial(a.I + b.I, a.J + b.J, a.twist + b.twist)


def basis(r, g):
    """All omega_{I,J} with |I| + |J| = r, in lexicographic order of the 2g one-forms."""
    if not 0 <= r <= 2 * g:
        return []
    out = []
    for S in combinations(range(2 * g), r):
        out.append(Monomial(tuple(x for x in S if x < g), tuple(x - g for x in S if x >= g)))
    return out


def lefschetz_power(k, g):
    """L^k = k! sum over |M| = k of omega_{M, M}."""
    if not 0 <= k <= g:
        raise ValueError("need 0 <= k <= g")
    return SymbolicClass({Monomial(M, M): factorial(k) for M in combinations(range(g), k)})


def l_multiply(k, mono, g):
    used = set(mono.I) | set(mono.J)
    free = [p for p in range(g) if p not in used]
    return SymbolicClass({Monomial(mono.I + M, mono.J + M, mono.twist): factorial(k)
                          for M in combinations(free, k)})


@dataclass(frozen=True)
class HodgeGeometry:
    """For each position p: ambient indices (in X*(L)) of sigma_p and iota sigma_p."""
    positions: tuple

    @property
    def g(self):
        return len(self.positions)

    @classmethod
    def from_factors(cls, amb, copies=None):
        pos = []
        for k, f in enumerate(amb.factors):
            n = 1 if copies is None else copies[k]
            for _ in range(n):
                for i in f.members():
                    pos.append((amb.index(k, i), amb.index(k, f.space.iota(i))))
        return cls(tuple(pos))

    def raw_character(self, mono, dim):
        v = [0] * dim
        for p in mono.I:
            v[self.positions[p][0]] += 1
        for p in mono.J:
            v[self.positions[p][1]] += 1
        return v


def character(mono, geom, L):
    v = geom.raw_character(mono, L.dim)
    return tuple(a + mono.twist * t for a, t in zip(v, L.tate))


def character_and_type(mono, geom, L):
    return character(mono, geom, L), mono.hodge_type(), mono.weight()


def twisted_basis(r, g):
    return [Monomial(m.I, m.J, r) for m in basis(2 * r, g)]


def eigenspace_dimension(chi, r, geom, L):
    """Number of monomials of H^{2r}(r) whose character is chi in X*(L)."""
    return sum(1 for m in twisted_basis(r, geom.g) if L.equal(character(m, geom, L), chi))


def exotic_census(geom, L, K):
    """{r: Counter(canonical class)} of weight-0 monomial characters in K \\ 0 (exhaustive)."""
    out = {}
    for r in range(geom.g + 1):
        c = Counter()
        for m in twisted_basis(r, geom.g):
            v = character(m, geom, L)
            if not L.is_zero(v) and v in K:
                c[L.canonical(v)] += 1
        out[r] = c
    return out


def exotic_census_dp(geom, L, K):
    """Same census by dynamic programming over positions (independent route)."""
    states = Counter({(0, tuple([0] * L.dim)): 1})
    for a, b in geom.positions:
        nxt = Counter()
        for (deg, v), n in states.items():
            for da, db in ((0, 0), (1, 0), (0, 1), (1, 1)):
                w = list(v)
                w[a] += da
                w[b] += db
                nxt[(deg + da + db, tuple(w))] += n
        states = nxt
    out = {r: Counter() for r in range(geom.g + 1)}
    for (deg, v), n in states.items():
        if deg % 2:
            continue
        r = deg // 2
        x = tuple(p + r * t for p, t in zip(v, L.tate))
        if not L.is_zero(x) and x in K:
            out[r][L.canonical(x)] += n
    return out


def tate_census_dp(geom, L, restrict, L0, K0):
    """Census of monomials whose character, pushed to X*(L(A0)), lies in K0 but is nonzero."""
    states = Counter({(0, tuple([0] * L.dim)): 1})
    for a, b in geom.positions:
        nxt = Counter()
        for (deg, v), n in states.items():
            for da, db in ((0, 0), (1, 0), (0, 1), (1, 1)):
                w = list(v)
                w[a] += da
                w[b] += db
                nxt[(deg + da + db, tuple(w))] += n
        states = nxt
    out = {r: Counter() for r in range(geom.g + 1)}
    for (deg, v), n in states.items():
        if deg % 2:
            continue
        r = deg // 2
        x = tuple(restrict(tuple(p + r * t for p, t in zip(v, L.tate))))
        if not L0.is_zero(x) and x in K0:
            out[r][L0.canonical(x)] += n
    return out


def matrix_rank(rows, ncols):
    if not rows:
        return 0
    return len(rows) - len(rational_left_nullspace(rows, ncols))


def hard_lefschetz_injective(r, g):
    """Is L^{g-r} injective on degree-r monomials (r <= g)?"""
    src = basis(r, g)
    tgt = basis(2 * g - r, g)
    idx = {m: k for k, m in enumerate(tgt)}
    rows = []
    for m in src:
        row = [0] * len(tgt)
        for t, c in l_multiply(g - r, m, g).terms.items():
            row[idx[t]] += c
        rows.append(row)
    return matrix_rank(rows, len(tgt)) == len(src)


class SeedError(ValueError):
    pass


def nondegeneracy_induction(seed, g):
    """Close a set of algebraic monomials under the rules and test the cup pairing.

    Rules: Lefschetz monomials omega_{M,M} are algebraic; omega_{I,J} algebraic
    implies omega_{I-M, J-M} for M = I cap J, its conjugate omega_{J,I}, and its
    products with omega_{N,N} (N disjoint from I and J).
    """
    seed = {m.untwisted() for m in seed}
    if any(m.conj() not in seed for m in seed):
        raise SeedError("seed is not stable under iota")
    closure = set(seed)
    for k in range(g + 1):
        for M in combinations(range(g), k):
            closure.add(Monomial(M, M))
    changed = True
    while changed:
        changed = False
        for m in list(closure):
            M = tuple(sorted(set(m.I) & set(m.J)))
            new = [Monomial(tuple(x for x in m.I if x not in M), tuple(x for x in m.J if x not in M)),
                   m.conj()]
            used = set(m.I) | set(m.J)
            free = [p for p in range(g) if p not in used]
            for k in range(1, len(free) + 1):
                for N in combinations(free, k):
                    new.append(Monomial(m.I + N, m.J + N))
            for x in new:
                if x not in closure:
                    closure.add(x)
                    changed = True
    full = tuple(range(g))
    ok = True
    by_deg = {}
    for m in closure:
        by_deg.setdefault(m.degree, []).append(m)
    for r, rows_m in by_deg.items():
        cols = sorted(by_deg.get(2 * g - r, []))
        rows_m = sorted(rows_m)
        mat = []
        for m in rows_m:
            row = []
            for c in cols:
                p = multiply(m, c)
                row.append(1 if p is not None and p.I == full and p.J == full else 0)
            mat.append(row)
        if matrix_rank(mat, len(cols)) != len(rows_m):
            ok = False
    return frozenset(closure), ok


def total_dimension(g):
    return sum(comb(2 * g, r) for r in range(2 * g + 1))
