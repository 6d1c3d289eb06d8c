"""Finite Galois groups with a central complex conjugation.

Elements are dense indices 0..n-1 into a multiplication table.  Cosets of a
subgroup H are *left* cosets gH, listed in order of their smallest member, so
the coset containing the identity always comes first.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class GroupError(ValueError):
    """Raised when group data violates an axiom."""


class HypothesisError(ValueError):
    """A structural hypothesis needed by a construction does not hold."""


@dataclass(frozen=True, eq=False)
class FiniteGaloisGroup:
    table: tuple
    iota: int
    labels: tuple
    name: str = ""
    named: dict = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise GroupError("empty table")
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise GroupError("labels must be distinct, one per element")
        for row in self.table:
            if sorted(row) != list(range(n)):
                raise GroupError("table rows must be permutations (latin square)")
        for c in range(n):
            if sorted(self.table[r][c] for r in range(n)) != list(range(n)):
                raise GroupError("table columns must be permutations (latin square)")
        ids = [e for e in range(n) if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n))]
        if not ids:
            raise GroupError("no identity element")
        if ids[0] != 0:
            raise GroupError("identity must be element 0")
        t = self.table
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise GroupError(f"associativity fails at ({a},{b},{c})")
        i = self.iota
        if not 0 <= i < n or i == 0 or t[i][i] != 0:
            raise GroupError("iota must be an element of order 2")
        if any(t[i][x] != t[x][i] for x in range(n)):
            raise GroupError("iota must be central")
        inv = [0] * n
        for a in range(n):
            inv[a] = t[a].index(0)
        object.__setattr__(self, "_inv", tuple(inv))
        object.__setattr__(self, "_index", {lab: k for k, lab in enumerate(self.labels)})

    @property
    def order(self):
        return len(self.table)

    @property
    def identity(self):
        return 0

    @property
    def elements(self):
        return range(len(self.table))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def element(self, label):
        if isinstance(label, int):
            return label
        try:
            return self._index[label.strip()]
        except KeyError:
            raise GroupError(f"unknown element label {label!r} in {self.name or 'group'}") from None

    def label(self, a):
        return self.labels[a]

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in self.elements)

    # subgroups

    def subgroup(self, members, name=""):
        ms = sorted({self.element(m) for m in members})
        s = set(ms)
        if 0 not in s:
            raise GroupError("subgroup must contain the identity")
        for a in ms:
            for b in ms:
                if self.mul(a, self.inv(b)) not in s:
                    raise GroupError(f"{[self.label(m) for m in ms]} is not closed")
        return Subgroup(self, tuple(ms), name)

    def generated(self, gens, name=""):
        s = {0}
        frontier = [self.element(g) for g in gens]
        gl = list(frontier)
        while frontier:
            nxt = []
            for a in frontier:
                if a in s:
                    continue
                s.add(a)
                for g in gl:
                    for c in (self.mul(a, g), self.mul(g, a)):
                        if c not in s:
                            nxt.append(c)
            frontier = nxt
        return Subgroup(self, tuple(sorted(s)), name)

    def trivial(self):
        return Subgroup(self, (0,), "1")

    def whole(self):
        return Subgroup(self, tuple(self.elements), "G")

    def iota_subgroup(self):
        return Subgroup(self, (0, self.iota), "iota")

    def resolve_subgroup(self, text):
        """Parse '1', 'G', 'iota', a preset name, or comma separated generators."""
        text = text.strip()
        if text == "1":
            return self.trivial()
        if text == "G":
            return self.whole()
        if text == "iota":
            return self.iota_subgroup()
        if text in self.named:
            return self.generated(self.named[text], text)
        gens = [g for g in text.replace(",", " ").split() if g]
        return self.generated(gens, text)

    def all_subgroups(self):
        """Every subgroup, ordered by (order, members)."""
        found = {self.generated([g]).members for g in self.elements}
        frontier = set(found)
        while frontier:
            new = set()
            for a in frontier:
                for b in list(found):
                    j = self.generated(list(a) + list(b)).members
                    if j not in found:
                        new.add(j)
            found |= new
            frontier = new
        return [Subgroup(self, m) for m in sorted(found, key=lambda m: (len(m), m))]


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGaloisGroup
    members: tuple
    name: str = field(default="", compare=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, a):
        return a in self.members

    def __iter__(self):
        return iter(self.members)

    def issubset(self, other):
        return set(self.members) <= set(other.members)

    def conjugate(self, g):
        G = self.group
        return Subgroup(G, tuple(sorted(G.mul(G.mul(g, h), G.inv(g)) for h in self.members)))

    def intersect(self, other):
        return Subgroup(self.group, tuple(sorted(set(self.members) & set(other.members))))

    def labels(self):
        return [self.group.label(m) for m in self.members]


class CosetSpace:
    """Left cosets G/H with the left-multiplication action of G."""

    def __init__(self, H):
        G = H.group
        self.group = G
        self.subgroup = H
        seen = {}
        cosets = []
        for g in G.elements:
            if g in seen:
                continue
            c = tuple(sorted(G.mul(g, h) for h in H.members))
            for x in c:
                seen[x] = len(cosets)
            cosets.append(c)
        self.cosets = tuple(cosets)
        self.index_of = seen
        self.table = tuple(tuple(seen[G.mul(g, c[0])] for c in cosets) for g in G.elements)
        self.iota_map = self.table[G.iota]

    def __len__(self):
        return len(self.cosets)

    @property
    def labels(self):
        return tuple(self.group.label(c[0]) for c in self.cosets)

    def coset_of(self, g):
        return self.index_of[self.group.element(g)]

    def act(self, g, i):
        return self.table[g][i]

    def iota(self, i):
        return self.iota_map[i]

    def has_iota_fixed_points(self):
        return any(self.iota_map[i] == i for i in range(len(self)))

    def orbits(self, S):
        """Orbits of the subgroup S, each sorted, listed by smallest member."""
        out, seen = [], set()
        for i in range(len(self)):
            if i in seen:
                continue
            orb = sorted({self.table[s][i] for s in S.members})
            seen.update(orb)
            out.append(tuple(orb))
        return out

    def iota_orbits(self):
        out, seen = [], set()
        for i in range(len(self)):
            if i not in seen:
                o = tuple(sorted({i, self.iota_map[i]}))
                seen.update(o)
                out.append(o)
        return out

    def same_as(self, other):
        return self.group is other.group and self.subgroup.members == other.subgroup.members


def double_coset_commute(H, D):
    """Return (True, HD) if HD = DH (then HD is a subgroup), else (False, None)."""
    G = H.group
    hd = {G.mul(h, d) for h in H.members for d in D.members}
    dh = {G.mul(d, h) for h in H.members for d in D.members}
    if hd != dh:
        return False, None
    return True, G.subgroup(sorted(hd))


@dataclass(frozen=True)
class BlockPartition:
    """Blocks X_j = Sigma_i w0 of X = G/D coming from the cosets sigma_i of H inside H_Q."""
    space: CosetSpace
    blocks: tuple            # tuple of sorted tuples of X indices
    iota_blocks: tuple
    jmap: tuple              # i -> j
    n: int

    @property
    def m(self):
        return len(self.blocks)


def block_partition(sigmas, D):
    """Group the cosets sigma_i (sets of elements, sigma_0 the subgroup H) into blocks.

    Needs H D = D H; raises HypothesisError otherwise.
    """
    G = D.group
    H = G.subgroup(sigmas[0])
    ok, _ = double_coset_commute(H, D)
    if not ok:
        raise HypothesisError("Sigma_0 D != D Sigma_0: block decomposition unavailable")
    X = CosetSpace(D)
    blocks, jmap = [], []
    for s in sigmas:
        b = tuple(sorted({X.index_of[x] for x in s}))
        if b not in blocks:
            blocks.append(b)
        jmap.append(blocks.index(b))
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise HypothesisError("blocks of unequal size")
    counts = [jmap.count(j) for j in range(len(blocks))]
    if len(set(counts)) != 1:
        raise HypothesisError("blocks do not split the sigma_i evenly")
    ib = tuple(tuple(sorted(X.iota(x) for x in b)) for b in blocks)
    return BlockPartition(X, tuple(blocks), ib, tuple(jmap), len(sigmas))


# presets

def _cyclic(n, gen="t"):
    labels = ["e"] + [gen if k == 1 else f"{gen}{k}" for k in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return table, labels


def _perm_group(perms, labels):
    idx = {p: k for k, p in enumerate(perms)}
    table = [[idx[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]
    return table, labels


def _s3():
    # composition (p*q)(x) = p(q(x)), points 0,1,2 printed as 1,2,3
    def cyc(*c):
        p = list(range(3))
        for a, b in zip(c, c[1:] + c[:1]):
            p[a - 1] = b - 1
        return tuple(p)
    perms = [tuple(range(3)), cyc(1, 2), cyc(1, 3), cyc(2, 3), cyc(1, 2, 3), cyc(1, 3, 2)]
    return _perm_group(perms, ["e", "(12)", "(13)", "(23)", "(123)", "(132)"])


def _product(first, second):
    """Direct product; element (a, b) has index a*|second| + b."""
    (t1, l1), (t2, l2) = first, second
    n2 = len(t2)
    table, labels = [], []
    for a in range(len(t1)):
        for b in range(n2):
            table.append([t1[a][c] * n2 + t2[b][d] for c in range(len(t1)) for d in range(n2)])
            lab = (l1[a] if a else "") + (l2[b] if b else "")
            labels.append(lab or "e")
    return table, labels


def _q8():
    # quaternion units as (sign, unit) with unit in 1,i,j,k
    mult = {("1", u): (1, u) for u in "1ijk"}
    mult.update({(u, "1"): (1, u) for u in "1ijk"})
    mult.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    labels = ["e", "z", "i", "zi", "j", "zj", "k", "zk"]
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = mult[(u1, u2)]
            row.append(elems.index((s * s1 * s2, u)))
        table.append(row)
    return table, labels


def _dihedral4():
    perms = []
    rot = (1, 2, 3, 0)
    refl = (0, 3, 2, 1)
    cur = tuple(range(4))
    rs = []
    for _ in range(4):
        rs.append(cur)
        cur = tuple(rot[cur[x]] for x in range(4))
    perms = rs + [tuple(r[refl[x]] for x in range(4)) for r in rs]
    return _perm_group(perms, ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"])


_C2 = (lambda: _cyclic(2, "c"))


PRESETS = {
    "C2": (lambda: _cyclic(2), "t", {}),
    "C4": (lambda: _cyclic(4), "t2", {}),
    "C6": (lambda: _cyclic(6), "t3", {"HQ": ["t2"]}),
    "C8": (lambda: _cyclic(8), "t4", {"HQ": ["t2"]}),
    "C10": (lambda: _cyclic(10), "t5", {"HQ": ["t2"]}),
    "C12": (lambda: _cyclic(12), "t6", {"HQ": ["t4"]}),
    "C2xC2": (lambda: _product(_C2(), _cyclic(2, "s")), "c", {"HQ": ["s"]}),
    "C2xC4": (lambda: _product(_C2(), _cyclic(4)), "c", {"HQ": ["t"], "K3": ["ct2"]}),
    "C2xC6": (lambda: _product(_C2(), _cyclic(6)), "c", {"HQ": ["t"]}),
    "C2xC2xC2": (lambda: _product(_C2(), _product(_cyclic(2, "s"), _cyclic(2, "u"))), "c", {}),
    "S3xC2": (lambda: _product(_C2(), _s3()), "c",
              {"HQ": ["(12)", "(123)"], "HE": ["(12)"], "AO": ["(12)"]}),
    "Q8": (_q8, "z", {}),
    "D4": (_dihedral4, "r2", {}),
}


def preset_names():
    return list(PRESETS)


def build_group(spec):
    """Build a group from a preset name or a mapping with table/iota[/labels]."""
    if isinstance(spec, str):
        key = {k.lower(): k for k in PRESETS}.get(spec.strip().lower())
        if key is None:
            raise GroupError(f"unknown group preset {spec!r}; known: {', '.join(PRESETS)}")
        make, iota, named = PRESETS[key]
        table, labels = make()
        tt = tuple(tuple(r) for r in table)
        return FiniteGaloisGroup(tt, labels.index(iota), tuple(labels), key, dict(named))
    table = tuple(tuple(int(x) for x in r) for r in spec["table"])
    labels = tuple(spec.get("labels") or [str(k) if k else "e" for k in range(len(table))])
    iota = spec["iota"]
    if isinstance(iota, str):
        if iota not in labels:
            raise GroupError(f"iota label {iota!r} not among labels")
        iota = labels.index(iota)
    return FiniteGaloisGroup(table, int(iota), labels, spec.get("name", "custom"), dict(spec.get("named", {})))


__all__ = [
    "GroupError", "HypothesisError", "FiniteGaloisGroup", "Subgroup", "CosetSpace",
    "BlockPartition", "block_partition", "double_coset_commute", "build_group",
    "preset_names", "PRESETS",
]
