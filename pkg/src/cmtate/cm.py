"""Characteristic zero: CM-types, the Serre lattice and the Lefschetz lattice.

A function f on G (or on a coset space) is acted on by (r f)(x) = f(r^-1 x),
which on indicator vectors is just e_x -> e_{r x}.
"""
from __future__ import annotations

from dataclasses import dataclass

from .groups import CosetSpace, HypothesisError
from .zlattice import (CharacterLattice, EquivariantMap, LatticeError, Sublattice,
                       left_kernel, vecmat)


class CMTypeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CMFactor:
    """A CM-type (E, Phi) with E = K^H, given as a 0/1 function on G/H."""
    name: str
    space: CosetSpace
    phi: tuple
    multiplicity: int = 1

    def __post_init__(self):
        if len(self.phi) != len(self.space):
            raise CMTypeError(f"{self.name}: phi has {len(self.phi)} entries for {len(self.space)} embeddings")
        if self.space.has_iota_fixed_points():
            raise CMTypeError(f"{self.name}: iota fixes an embedding (E is not CM)")
        for i, v in enumerate(self.phi):
            if v + self.phi[self.space.iota(i)] != 1:
                raise CMTypeError(f"{self.name}: phi(s) + phi(iota s) != 1 at {self.space.labels[i]}")

    @classmethod
    def from_labels(cls, name, space, members, multiplicity=1):
        chosen = {space.coset_of(m) for m in members}
        if len(chosen) != len(members):
            raise CMTypeError(f"{name}: repeated embedding in phi")
        return cls(name, space, tuple(int(i in chosen) for i in range(len(space))), multiplicity)

    @property
    def group(self):
        return self.space.group

    @property
    def degree(self):
        return len(self.space)

    def members(self):
        return [i for i, v in enumerate(self.phi) if v]

    def key(self):
        return (self.space.subgroup.members, self.phi)

    def translate(self, g):
        """The CM-type g Phi (same E)."""
        sp = self.space
        new = [0] * len(sp)
        for i, v in enumerate(self.phi):
            if v:
                new[sp.act(g, i)] = 1
        return CMFactor(self.name, sp, tuple(new), self.multiplicity)


def phi_is_valid(space, phi):
    if len(phi) != len(space):
        return False
    return all(phi[i] + phi[space.iota(i)] == 1 for i in range(len(space)))


def cm_type_tools(space, phi):
    """(valid, reflex subgroup, primitive) for a 0/1 function phi on G/H."""
    G = space.group
    if not phi_is_valid(space, phi):
        return False, None, False
    members = {i for i, v in enumerate(phi) if v}
    stab = [g for g in G.elements if {space.act(g, i) for i in members} == members]
    reflex = G.subgroup(stab, "reflex")
    H = set(space.subgroup.members)
    primitive = True
    for S in G.all_subgroups():
        Sm = set(S.members)
        if not H < Sm or G.iota in Sm:
            continue
        # phi constant on each fibre of G/H -> G/S
        fibres = {}
        for i, c in enumerate(space.cosets):
            big = min(G.mul(c[0], s) for s in Sm)
            fibres.setdefault(big, set()).add(phi[i])
        if all(len(v) == 1 for v in fibres.values()):
            primitive = False
            break
    return True, reflex, primitive


def psi(factor, i):
    """psi_sigma(tau) = phi(tau^-1 sigma) as a vector on G."""
    G = factor.group
    sp = factor.space
    return tuple(factor.phi[sp.act(G.inv(t), i)] for t in G.elements)


def serre_lattice(G):
    """X*(S^K) = {f in Z^G : f + iota f constant}."""
    n = G.order
    gens = []
    first = [0] * n
    for t in G.elements:
        it = G.mul(G.iota, t)
        if t < it:
            v = [0] * n
            v[t], v[it] = 1, -1
            gens.append(v)
            first[t] = 1
    gens.append(first)
    weight = [0] * n
    weight[0] = weight[G.iota] = 1
    action = tuple(tuple(G.mul(g, t) for t in G.elements) for g in G.elements)
    return CharacterLattice("X*(S^K)", tuple(G.labels), Sublattice(n, gens), Sublattice(n),
                            action, action[G.iota], tuple(weight), ())


def in_serre(G, f):
    c = f[0] + f[G.iota]
    return all(f[t] + f[G.mul(G.iota, t)] == c for t in G.elements)


def pair_sum_relations(dim, orbits):
    """{g = iota g, sum g = 0} for the iota-orbits of an ambient basis."""
    sizes = [[len(o)] for o in orbits]
    ker = left_kernel(sizes, 1)
    rels = []
    for c in ker:
        v = [0] * dim
        for coef, o in zip(c, orbits):
            for s in o:
                v[s] += coef
        rels.append(v)
    return Sublattice(dim, rels)


def lefschetz_from_points(name, labels, action, iota):
    """Z^S / {g = iota g, sum g = 0}, with weight = sum and t = [-s - iota s]."""
    dim = len(labels)
    orbits, seen = [], set()
    for s in range(dim):
        if s not in seen:
            o = tuple(sorted({s, iota[s]}))
            seen.update(o)
            orbits.append(o)
    rel = pair_sum_relations(dim, orbits)
    o = orbits[0]
    tate = [0] * dim
    for s in o:
        tate[s] -= 2 // len(o)
    return CharacterLattice(name, tuple(labels), Sublattice.full(dim), rel, tuple(action),
                            tuple(iota), tuple([1] * dim), tuple(tate))


@dataclass(frozen=True, eq=False)
class Ambient:
    """Disjoint union of the embedding sets of several factors."""
    factors: tuple
    offsets: tuple

    @classmethod
    def of(cls, factors):
        offs, k = [], 0
        for f in factors:
            offs.append(k)
            k += len(f.space)
        return cls(tuple(factors), tuple(offs))

    @property
    def dim(self):
        return sum(len(f.space) for f in self.factors)

    def index(self, factor_pos, i):
        return self.offsets[factor_pos] + i

    def locate(self, s):
        for k in range(len(self.factors) - 1, -1, -1):
            if s >= self.offsets[k]:
                return k, s - self.offsets[k]
        raise IndexError(s)

    def labels(self):
        return tuple(f"{f.name}:{lab}" for f in self.factors for lab in f.space.labels)


def dedup_factors(factors):
    seen = {}
    for f in factors:
        k = (f.group, f.key())
        if k in seen:
            raise CMTypeError(f"factors {seen[k]} and {f.name} are identical; merge them with a multiplicity")
        seen[k] = f.name
    return list(factors)


def lefschetz_lattice(factors, name="X*(L(A))"):
    factors = dedup_factors(factors)
    G = factors[0].group
    amb = Ambient.of(factors)
    action = []
    for g in G.elements:
        perm = []
        for k, f in enumerate(factors):
            perm.extend(amb.index(k, f.space.act(g, i)) for i in range(len(f.space)))
        action.append(tuple(perm))
    return lefschetz_from_points(name, amb.labels(), action, action[G.iota]), amb


def rho_phi_map(L, amb, SK):
    """[sigma] -> psi_sigma : X*(L(A)) -> X*(S^K)."""
    G = amb.factors[0].group
    rows = []
    for f in amb.factors:
        for i in range(len(f.space)):
            rows.append(psi(f, i))
    for r in rows:
        if not in_serre(G, r):
            raise HypothesisError("K too small: a psi character fails f + iota f constant")
    m = EquivariantMap("rho_Phi", L, SK, tuple(rows))
    m.check()
    return m


@dataclass(frozen=True)
class MTKernel:
    kernel: Sublattice
    exotic_hodge_exists: bool
    rank: int
    generators: tuple       # canonical ambient representatives of the free part


def kernel_generators(L, K):
    """Canonical representatives of a basis of K / relations (torsion-free case)."""
    sub = CharacterLattice("K", L.labels, K, L.relations)
    return tuple(L.canonical(v) for v in sub.free_basis())


def mt_kernel_and_exotic(L, rho):
    K = rho.kernel()
    r = L.subgroup_rank(K)
    return MTKernel(K, r > 0, r, kernel_generators(L, K))


def mt_trivial_direct(amb, g):
    """Direct test: sum_{s in Phi} g(tau s) = 0 for all tau, factor by factor."""
    G = amb.factors[0].group
    for t in G.elements:
        total = 0
        for k, f in enumerate(amb.factors):
            for i in f.members():
                total += g[amb.index(k, f.space.act(t, i))]
        if total:
            return False
    return True


@dataclass(frozen=True)
class A1Report:
    ok: bool
    rank: int
    messages: tuple


def a1_correspondence_check(L):
    """Rebuild X*(L) from (X*(T0), parity) and compare with the direct quotient.

    T0 has characters Z^S / {g = iota g}; parity(x) = sum(x) mod 2.  The
    rebuilt lattice is {(x, n) : parity(x) = n mod 2} and the comparison map is
    [g] -> ([g]_0, sum g).
    """
    dim = L.dim
    msgs = []
    fixed = [s for s in range(dim) if L.iota[s] == s]
    if fixed:
        return A1Report(False, L.rank(), ("iota has fixed points: parity functional not defined",))
    rel0 = []
    for s in range(dim):
        if s < L.iota[s]:
            v = [0] * (dim + 1)
            v[s] = v[L.iota[s]] = 1
            rel0.append(v)
    rel0 = Sublattice(dim + 1, rel0)
    # parity must be iota-stable on X*(T0)
    parity = [1] * dim
    if any(parity[L.iota[s]] != parity[s] for s in range(dim)):
        return A1Report(False, L.rank(), ("parity functional not iota-stable",))
    gens = []
    for s in range(dim):
        v = [0] * (dim + 1)
        v[s], v[dim] = 1, 1
        gens.append(v)
    two = [0] * (dim + 1)
    two[dim] = 2
    gens.append(two)
    gens_l = Sublattice(dim + 1, gens) + rel0
    action = tuple(tuple(list(p) + [dim]) for p in L.action)
    T = CharacterLattice("X*(T) rebuilt", tuple(L.labels) + ("n",), gens_l, rel0, action,
                         tuple(list(L.iota) + [dim]), tuple([0] * dim + [1]), ())
    T.validate()
    rows = []
    for s in range(dim):
        v = [0] * (dim + 1)
        v[s], v[dim] = 1, 1
        rows.append(tuple(v))
    f = EquivariantMap("A1", L, T, tuple(rows))
    ok = True
    try:
        f.check()
    except LatticeError as e:
        ok = False
        msgs.append(str(e))
    if f.kernel() != L.relations:
        ok = False
        msgs.append("comparison map not injective")
    if not f.is_surjective():
        ok = False
        msgs.append("comparison map not surjective")
    for s in range(dim):
        e = L.unit(s)
        if T.wt(f.apply(e)) != L.wt(e):
            ok = False
            msgs.append("weight mismatch")
            break
    tt = [0] * (dim + 1)
    tt[dim] = -2
    if not T.equal(f.apply(L.tate), tt):
        ok = False
        msgs.append("t does not correspond to (0, -2)")
    if L.wt(L.tate) != -2:
        ok = False
        msgs.append("t o w != -2")
    if T.rank() != L.rank():
        ok = False
        msgs.append("rank mismatch")
    return A1Report(ok, T.rank(), tuple(msgs))

