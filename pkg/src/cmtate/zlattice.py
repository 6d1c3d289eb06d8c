"""Exact integer linear algebra and character lattices with a group action.

Vectors are tuples of Python ints; matrices are lists of rows and act on row
vectors from the right (x -> x M).  Hermite and Smith forms are computed with
unimodular transforms so every answer can be re-checked by multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd


class LatticeError(ValueError):
    pass


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x a + y b = g."""
    if a and b % a == 0:
        # plain elimination; keeps the pivot in place
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row) if a) for j in range(cols)] for row in A]


def vecmat(v, M, ncols=None):
    if ncols is None:
        ncols = len(M[0]) if M else 0
    out = [0] * ncols
    for k, a in enumerate(v):
        if a:
            row = M[k]
            for j in range(ncols):
                if row[j]:
                    out[j] += a * row[j]
    return tuple(out)


def determinant(M):
    """Fraction-free Bareiss determinant."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


# Hermite normal form

def hnf_with_transform(rows, ncols):
    """Row Hermite form: returns (H, U, pivots) with U * M = H.

    Pivots are positive, entries above a pivot lie in [0, pivot), zero rows sit
    at the bottom of H.
    """
    M = [list(r) for r in rows]
    m = len(M)
    U = identity(m)
    r = 0
    pivots = []

    def combine(i, k, a, b, c, d):
        # (row_i, row_k) <- (a row_i + b row_k, c row_i + d row_k)
        Ri, Rk, Ui, Uk = M[i], M[k], U[i], U[k]
        M[i] = [a * x + b * y for x, y in zip(Ri, Rk)]
        M[k] = [c * x + d * y for x, y in zip(Ri, Rk)]
        U[i] = [a * x + b * y for x, y in zip(Ui, Uk)]
        U[k] = [c * x + d * y for x, y in zip(Ui, Uk)]

    for col in range(ncols):
        if r == m:
            break
        for i in range(r + 1, m):
            b = M[i][col]
            if b == 0:
                continue
            a = M[r][col]
            g, x, y = xgcd(a, b)
            combine(r, i, x, y, -b // g, a // g)
        p = M[r][col]
        if p == 0:
            continue
        if p < 0:
            M[r] = [-v for v in M[r]]
            U[r] = [-v for v in U[r]]
            p = -p
        for i in range(r):
            q = M[i][col] // p
            if q:
                M[i] = [x - q * y for x, y in zip(M[i], M[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        pivots.append(col)
        r += 1
    return M, U, pivots


def hnf(rows, ncols):
    H, _, piv = hnf_with_transform(rows, ncols)
    return [tuple(h) for h in H[: len(piv)]]


def left_kernel(rows, ncols):
    """Basis (in Hermite form) of {x : x M = 0} for the given rows of M."""
    m = len(rows)
    if m == 0:
        return []
    _, U, piv = hnf_with_transform(rows, ncols)
    return hnf(U[len(piv):], m)


# Smith normal form

def smith_with_transforms(rows, ncols):
    """Return (U, D, V, Vinv) with U M V = D diagonal, d_1 | d_2 | ..., all >= 0."""
    A = [list(r) for r in rows]
    m, n = len(A), ncols
    U, V, Vi = identity(m), identity(n), identity(n)

    def row_combine(i, k, a, b, c, d):
        Ri, Rk = A[i], A[k]
        A[i] = [a * x + b * y for x, y in zip(Ri, Rk)]
        A[k] = [c * x + d * y for x, y in zip(Ri, Rk)]
        Ui, Uk = U[i], U[k]
        U[i] = [a * x + b * y for x, y in zip(Ui, Uk)]
        U[k] = [c * x + d * y for x, y in zip(Ui, Uk)]

    def col_combine(t, j, x, y, g, a, b):
        # new col t = x col_t + y col_j ; new col j = -(b/g) col_t + (a/g) col_j
        bg, ag = b // g, a // g
        for R in A:
            ct, cj = R[t], R[j]
            R[t], R[j] = x * ct + y * cj, -bg * ct + ag * cj
        for R in V:
            ct, cj = R[t], R[j]
            R[t], R[j] = x * ct + y * cj, -bg * ct + ag * cj
        rt, rj = Vi[t], Vi[j]
        Vi[t] = [ag * p + bg * q for p, q in zip(rt, rj)]
        Vi[j] = [-y * p + x * q for p, q in zip(rt, rj)]

    def swap_cols(a, b):
        for R in A:
            R[a], R[b] = R[b], R[a]
        for R in V:
            R[a], R[b] = R[b], R[a]
        Vi[a], Vi[b] = Vi[b], Vi[a]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i0, j0 = best
        if i0 != t:
            A[t], A[i0] = A[i0], A[t]
            U[t], U[i0] = U[i0], U[t]
        if j0 != t:
            swap_cols(t, j0)
        while True:
            for i in range(t + 1, m):
                b = A[i][t]
                if b:
                    a = A[t][t]
                    g, x, y = xgcd(a, b)
                    row_combine(t, i, x, y, -b // g, a // g)
            for j in range(t + 1, n):
                b = A[t][j]
                if b:
                    a = A[t][t]
                    g, x, y = xgcd(a, b)
                    col_combine(t, j, x, y, g, a, b)
            if any(A[i][t] for i in range(t + 1, m)):
                continue
            p = A[t][t]
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_combine(t, bad, 1, 1, 0, 1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            U[t] = [-v for v in U[t]]
    return U, A, V, Vi


def invariant_factors(rows, ncols):
    """Nonzero diagonal of the Smith form, ascending (all of it is divisibility ordered)."""
    if not rows:
        return []
    _, D, _, _ = smith_with_transforms(rows, ncols)
    return [D[i][i] for i in range(min(len(D), ncols)) if D[i][i]]


# sublattices of Z^n

class Sublattice:
    """A subgroup of Z^dim stored by its Hermite basis."""

    __slots__ = ("dim", "basis", "_pivots")

    def __init__(self, dim, generators=()):
        self.dim = dim
        gens = [tuple(int(x) for x in g) for g in generators]
        for g in gens:
            if len(g) != dim:
                raise LatticeError(f"vector of length {len(g)} in Z^{dim}")
        H = hnf(gens, dim) if gens else []
        self.basis = tuple(H)
        self._pivots = tuple(next(j for j, x in enumerate(h) if x) for h in H)

    @classmethod
    def full(cls, dim):
        return cls(dim, identity(dim))

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @property
    def rank(self):
        return len(self.basis)

    def __repr__(self):
        return f"Sublattice({self.dim}, {list(self.basis)})"

    def __eq__(self, other):
        return isinstance(other, Sublattice) and self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def reduce(self, v):
        """Canonical representative of v modulo this lattice."""
        v = list(v)
        for h, p in zip(self.basis, self._pivots):
            q = v[p] // h[p]
            if q:
                v = [a - q * b for a, b in zip(v, h)]
        return tuple(v)

    def coordinates(self, v):
        """c with v = c * basis, or None if v is not in the lattice."""
        v = list(v)
        c = []
        for h, p in zip(self.basis, self._pivots):
            if v[p] % h[p]:
                return None
            q = v[p] // h[p]
            c.append(q)
            if q:
                v = [a - q * b for a, b in zip(v, h)]
        return tuple(c) if not any(v) else None

    def __contains__(self, v):
        return self.coordinates(v) is not None

    def __le__(self, other):
        return all(b in other for b in self.basis)

    def __add__(self, other):
        return Sublattice(self.dim, self.basis + other.basis)

    def __and__(self, other):
        if not self.basis or not other.basis:
            return Sublattice(self.dim)
        stacked = list(self.basis) + list(other.basis)
        k = len(self.basis)
        ker = left_kernel(stacked, self.dim)
        return Sublattice(self.dim, [vecmat(c[:k], self.basis, self.dim) for c in ker])

    def saturation(self):
        """(L tensor Q) intersected with Z^dim."""
        if not self.basis:
            return Sublattice(self.dim)
        _, _, _, Vi = smith_with_transforms(self.basis, self.dim)
        return Sublattice(self.dim, Vi[: self.rank])

    def is_saturated(self):
        return self.saturation() == self

    def index_in(self, other):
        """[other : self] if finite, else None.  Requires self <= other."""
        if not self <= other:
            raise LatticeError("not a sublattice")
        if self.rank != other.rank:
            return None
        coords = [other.coordinates(b) for b in self.basis]
        return abs(determinant(coords)) if coords else 1


def rational_left_nullspace(rows, ncols):
    """Basis of {x in Q^m : x M = 0} by Gauss-Jordan elimination over Fraction."""
    m = len(rows)
    # solve M^T x = 0
    T = [[Fraction(rows[i][j]) for i in range(m)] for j in range(ncols)]
    piv_cols = []
    r = 0
    for c in range(m):
        k = next((i for i in range(r, len(T)) if T[i][c] != 0), None)
        if k is None:
            continue
        T[r], T[k] = T[k], T[r]
        p = T[r][c]
        T[r] = [x / p for x in T[r]]
        for i in range(len(T)):
            if i != r and T[i][c] != 0:
                f = T[i][c]
                T[i] = [a - f * b for a, b in zip(T[i], T[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(m) if c not in piv_cols]
    out = []
    for fcol in free:
        x = [Fraction(0)] * m
        x[fcol] = Fraction(1)
        for row, pc in zip(T, piv_cols):
            x[pc] = -row[fcol]
        out.append(x)
    return out


def primitive_integer(v):
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    w = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in w:
        g = gcd(g, x)
    return tuple(x // g for x in w) if g else tuple(w)


# character lattices

@dataclass(frozen=True, eq=False)
class CharacterLattice:
    """generators / relations inside Z^labels, with a permutation action.

    A sub-type lattice has zero relations, a quotient-type lattice has full
    generators.  Subgroups of the lattice are stored as Sublattices K with
    relations <= K <= generators.
    """
    name: str
    labels: tuple
    generators: Sublattice
    relations: Sublattice
    action: tuple = ()         # action[g][s] = index of g.s
    iota: tuple = ()           # permutation of the ambient basis
    weight: tuple = ()         # functional on the ambient
    tate: tuple = ()           # ambient representative of t

    @property
    def dim(self):
        return len(self.labels)

    @property
    def kind(self):
        if self.relations.rank == 0:
            return "SUB"
        if self.generators.rank == self.dim and self.generators == Sublattice.full(self.dim):
            return "QUOT"
        return "SUBQUOT"

    def rank(self):
        return self.generators.rank - self.relations.rank

    def validate(self):
        if not self.relations <= self.generators:
            raise LatticeError(f"{self.name}: relations not inside generators")
        for perm in self.action:
            for L in (self.generators, self.relations):
                for b in L.basis:
                    if self.permute(perm, b) not in L:
                        raise LatticeError(f"{self.name}: lattice not stable under the action")
        return True

    @staticmethod
    def permute(perm, v):
        out = [0] * len(v)
        for s, a in enumerate(v):
            if a:
                out[perm[s]] += a
        return tuple(out)

    def act(self, g, v):
        return self.permute(self.action[g], v)

    def apply_iota(self, v):
        return self.permute(self.iota, v)

    def wt(self, v):
        return sum(a * b for a, b in zip(self.weight, v))

    # elements and subgroups

    def contains(self, v):
        return tuple(v) in self.generators

    def is_zero(self, v):
        return tuple(v) in self.relations

    def equal(self, v, w):
        return self.is_zero(tuple(a - b for a, b in zip(v, w)))

    def canonical(self, v):
        return self.relations.reduce(v)

    def unit(self, s):
        v = [0] * self.dim
        v[s] = 1
        return tuple(v)

    def vector(self, coeffs):
        """Ambient vector from {label: coefficient}."""
        v = [0] * self.dim
        for lab, c in coeffs.items():
            v[self.labels.index(lab)] += c
        return tuple(v)

    def span(self, vectors):
        return Sublattice(self.dim, list(vectors) + list(self.relations.basis))

    def zero_subgroup(self):
        return self.relations

    def whole(self):
        return self.generators

    def saturate(self, K):
        return K.saturation() & self.generators

    def subgroup_rank(self, K):
        return K.rank - self.relations.rank

    def is_stable(self, K):
        return all(self.act(g, b) in K for g in range(len(self.action)) for b in K.basis)

    @cached_property
    def _smith_data(self):
        B = self.generators.basis
        k = len(B)
        R = [self.generators.coordinates(r) for r in self.relations.basis]
        if R:
            _, D, V, Vi = smith_with_transforms(R, k)
            d = [D[i][i] for i in range(min(len(D), k)) if D[i][i]]
        else:
            V, Vi, d = identity(k), identity(k), []
        newbasis = [vecmat(row, B, self.dim) for row in Vi]
        return V, d, newbasis

    def invariant_factors(self):
        """Torsion orders (entries > 1) of generators / relations."""
        return [x for x in self._smith_data[1] if x > 1]

    def is_torsion_free(self):
        return not self.invariant_factors()

    def free_basis(self):
        """Ambient representatives of a basis of the free part."""
        V, d, nb = self._smith_data
        return [nb[i] for i in range(len(d), len(nb))]

    def coordinates(self, v):
        """(free coordinates, torsion residues) of v in the Smith-adapted basis."""
        c = self.generators.coordinates(v)
        if c is None:
            raise LatticeError(f"{self.name}: vector not in lattice")
        V, d, nb = self._smith_data
        y = vecmat(c, V, len(nb))
        tors = tuple(y[i] % d[i] for i in range(len(d)) if d[i] > 1)
        return tuple(y[len(d):]), tors

    def format(self, v, names=None):
        """Bracket notation [3*a - b] over the ambient labels."""
        names = names or self.labels
        terms = []
        for lab, c in zip(names, v):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = lab if mag == 1 else f"{mag}*{lab}"
            terms.append((sign, body))
        if not terms:
            return "[0]"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return f"[{s}]"


@dataclass(frozen=True, eq=False)
class EquivariantMap:
    """x -> x M from source ambient to target ambient."""
    name: str
    source: CharacterLattice
    target: CharacterLattice
    matrix: tuple

    def apply(self, v):
        return vecmat(v, self.matrix, self.target.dim)

    def check(self):
        """Well-defined on the subquotient and G-equivariant; raises on failure."""
        s, t = self.source, self.target
        for b in s.generators.basis:
            if self.apply(b) not in t.generators:
                raise LatticeError(f"{self.name}: image leaves the target lattice")
        for b in s.relations.basis:
            if not t.is_zero(self.apply(b)):
                raise LatticeError(f"{self.name}: relations not sent to zero")
        for g in range(len(s.action)):
            for b in s.generators.basis:
                if not t.equal(self.apply(s.act(g, b)), t.act(g, self.apply(b))):
                    raise LatticeError(f"{self.name}: not equivariant")
        return True

    def kernel(self):
        s, t = self.source, self.target
        B = s.generators.basis
        if not B:
            return s.relations
        imgs = [self.apply(b) for b in B]
        stacked = imgs + list(t.relations.basis)
        ker = left_kernel(stacked, t.dim)
        k = len(B)
        return Sublattice(s.dim, [vecmat(c[:k], B, s.dim) for c in ker] + list(s.relations.basis))

    def image(self):
        return self.target.span(self.apply(b) for b in self.source.generators.basis)

    def image_of(self, K):
        return self.target.span(self.apply(b) for b in K.basis)

    def preimage_of(self, K):
        """{x in source : f(x) in K} for a subgroup K of the target."""
        s = self.source
        B = s.generators.basis
        stacked = [self.apply(b) for b in B] + list(K.basis)
        ker = left_kernel(stacked, self.target.dim)
        k = len(B)
        return Sublattice(s.dim, [vecmat(c[:k], B, s.dim) for c in ker] + list(s.relations.basis))

    def cokernel(self):
        """(free rank, torsion factors) of target / image."""
        t = self.target
        img = self.image()
        coords = [t.generators.coordinates(b) for b in img.basis]
        k = t.generators.rank
        inv = invariant_factors(coords, k) if coords else []
        return k - len(inv), [x for x in inv if x > 1]

    def is_surjective(self):
        free, tors = self.cokernel()
        return free == 0 and not tors

    def is_injective(self):
        return self.kernel() == self.source.relations


def compose(name, f, g):
    """g after f."""
    M = [g.apply(row) for row in f.matrix]
    return EquivariantMap(name, f.source, g.target, tuple(M))


@dataclass(frozen=True)
class KernelImageCokernel:
    kernel: Sublattice
    image: Sublattice
    cokernel_free_rank: int
    cokernel_torsion: tuple


def kernel_image_cokernel(f):
    free, tors = f.cokernel()
    return KernelImageCokernel(f.kernel(), f.image(), free, tuple(tors))
