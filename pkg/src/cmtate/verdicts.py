"""Verdicts: the Tate/Hodge statements checked on a scenario.

Every status is backed by a named certificate (an exact lattice computation)
or by a declared fact, and both are listed in the verdict.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .cm import lefschetz_lattice, mt_kernel_and_exotic, rho_phi_map, serre_lattice
from .groups import HypothesisError, double_coset_commute, block_partition
from .hodge import HodgeGeometry, exotic_census_dp, tate_census_dp
from .reduction import (ReductionContext, fundamental_diagram, germ_system, p_kernel, p_map,
                        pushforward_map, reduce_cm, restriction_map)
from .scenario import find_roles
from .weil import class_of, germ_invariants, germ_vector, weil_lattice
from .zlattice import compose

STATUSES = ("holds", "fails", "conditional", "inconclusive", "not-applicable")
STATUS_CODE = {s: k for k, s in enumerate(STATUSES)}


class VerdictError(ValueError):
    pass


@dataclass
class Verdict:
    check: str
    status: str
    trace: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)
    conditions: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)      # key -> tuple of ints
    parts: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status}")

    @property
    def code(self):
        return STATUS_CODE[self.status]


def not_applicable(check, reason):
    return Verdict(check, "not-applicable", [f"not applicable: {reason}"])


class Analysis:
    """Lazily computed lattices and maps of one scenario."""

    def __init__(self, sc):
        self.sc = sc
        self.G = sc.group

    @cached_property
    def SK(self):
        return serre_lattice(self.G)

    @cached_property
    def _lattice(self):
        return lefschetz_lattice(self.sc.factors)

    @property
    def L(self):
        return self._lattice[0]

    @property
    def amb(self):
        return self._lattice[1]

    @cached_property
    def rho(self):
        return rho_phi_map(self.L, self.amb, self.SK)

    @cached_property
    def mt(self):
        return mt_kernel_and_exotic(self.L, self.rho)

    @cached_property
    def ctx(self):
        if self.sc.D is None:
            raise VerdictError("scenario has no [reduction] D")
        return ReductionContext(self.sc.D)

    @cached_property
    def weil(self):
        return weil_lattice(self.G, self.sc.D)

    @property
    def P(self):
        return self.weil[0]

    @cached_property
    def system(self):
        if self.sc.factors:
            germs = reduce_cm(self.amb.factors, self.ctx)
            names = [f"{f.name}0" for f in self.amb.factors]
        else:
            names = [n for n, _ in self.sc.germs]
            germs = [g for _, g in self.sc.germs]
        return germ_system(names, germs, self.ctx)

    @property
    def L0(self):
        return self.system.lattice

    @cached_property
    def restriction(self):
        return restriction_map(self.L, self.amb, self.system)

    @cached_property
    def pmap(self):
        return p_map(self.system, self.P)

    @cached_property
    def pker(self):
        return p_kernel(self.system, self.P)

    @cached_property
    def composite(self):
        return compose("L(A) -> P^K", self.restriction, self.pmap)

    @cached_property
    def K1(self):
        return self.restriction.kernel()

    @cached_property
    def KP(self):
        return self.composite.kernel()

    @cached_property
    def pushforward(self):
        return pushforward_map(self.SK, self.P, self.ctx)

    @cached_property
    def diagram(self):
        return fundamental_diagram(self.ctx, self.SK)

    def diagram_commutes(self):
        """pushforward o rho_Phi = germ map o restriction on every basis vector of X*(L(A))."""
        for s in range(self.L.dim):
            e = self.L.unit(s)
            if self.pushforward.apply(self.rho.apply(e)) != self.pmap.apply(self.restriction.apply(e)):
                return False
        return True


def _hodge_premise(sc, an):
    """(satisfied, condition text) for 'all Hodge classes on powers of A are algebraic'."""
    if an.mt.rank == 0:
        return True, None
    if sc.facts.get("schoen_exotic_algebraic"):
        return True, "schoen_exotic_algebraic declared true (exotic Hodge classes algebraic)"
    return False, "Hodge conjecture for powers of A not established (schoen_exotic_algebraic not declared)"


def check_corollary_1_2(sc, an=None):
    name = "corollary_1_2"
    if not sc.factors:
        return not_applicable(name, "needs characteristic-zero CM data")
    if sc.D is None:
        return not_applicable(name, "needs a decomposition group D")
    an = an or Analysis(sc)
    K1, K2, KP = an.K1, an.mt.kernel, an.KP
    S = K1 + K2
    equal = KP == S
    certs = {"K1_inside_KP": K1 <= KP, "K2_inside_KP": K2 <= KP, "KP_equals_K1_plus_K2": equal,
             "diagram_commutes": an.diagram_commutes()}
    L = an.L
    trace = [f"K1 = ker(X*(L(A)) -> X*(L(A0))) has rank {L.subgroup_rank(K1)}",
             f"K2 = ker(X*(L(A)) -> X*(S^K)) has rank {an.mt.rank}",
             f"KP = ker(X*(L(A)) -> X*(P^K)) has rank {L.subgroup_rank(KP)}",
             f"KP {'=' if equal else '!='} K1 + K2 (exact subgroup comparison)"]
    wit = {"k1_rank": (L.subgroup_rank(K1),), "k2_rank": (an.mt.rank,),
           "kp_rank": (L.subgroup_rank(KP),), "equal": (int(equal),)}
    conds = []
    if not all(certs.values()):
        status = "fails"
    else:
        ok, cond = _hodge_premise(sc, an)
        if cond:
            conds.append(cond)
        if ok:
            status = "holds"
            trace.append("P(A0) = L(A0) cap MT(A)")
        else:
            status = "conditional"
    return Verdict(name, status, trace, certs, conds, wit)


_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?([^\s+*-][^\s+*]*)\s*")


def parse_character(text, L):
    """'2*A:e - B:t2 + ...' as an ambient vector of L."""
    v = [0] * L.dim
    text = text.strip()
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise VerdictError(f"cannot parse character {text!r}")
        sign, coeff, lab = m.groups()
        if not sign and not first:
            raise VerdictError(f"missing sign before {lab!r} in {text!r}")
        if lab not in L.labels:
            raise VerdictError(f"unknown label {lab!r}; known: {', '.join(L.labels)}")
        c = int(coeff or 1) * (-1 if sign == "-" else 1)
        v[L.labels.index(lab)] += c
        pos = m.end()
        first = False
    return tuple(v)


def check_theorem_1_1(sc, algebraic=None, an=None):
    """Decide P(A0) = intersection of the kernels of the declared algebraic characters."""
    name = "theorem_1_1"
    algebraic = sc.algebraic if algebraic is None else algebraic
    if not sc.factors:
        return not_applicable(name, "needs characteristic-zero CM data")
    if sc.D is None:
        return not_applicable(name, "needs a decomposition group D")
    an = an or Analysis(sc)
    L, L0 = an.L, an.L0
    conds = []
    premise = True
    if algebraic == "mt":
        Xi = an.mt.kernel
        src = "characters trivial on MT(A) (Hodge classes)"
        premise, cond = _hodge_premise(sc, an)
        if cond:
            conds.append(cond)
    elif algebraic == "none" or algebraic == ():
        Xi = L.relations
        src = "no declared characters (Lefschetz classes only)"
    else:
        vecs = [parse_character(t, L) if isinstance(t, str) else tuple(t) for t in algebraic]
        for v in vecs:
            if not L.contains(v):
                raise VerdictError(f"{L.format(v)} is not a character of L(A)")
        Xi = L.span(vecs)
        if not L.is_stable(Xi):
            raise VerdictError("declared algebraic characters are not stable under the Galois action")
        src = f"{len(vecs)} declared characters"
        conds.append("declared characters assumed algebraic")
    R = an.restriction.image_of(Xi)
    Pk = an.pker.kernel
    if not R <= Pk:
        raise VerdictError("a declared algebraic character is nontrivial on P(A0); declaration inconsistent")
    equal = R == Pk
    trace = [f"algebraic set: {src}",
             f"restrictions span rank {L0.subgroup_rank(R)}; P-kernel has rank {an.pker.rank}",
             f"P(A0) {'=' if equal else '!='} intersection of their kernels"]
    certs = {"restrictions_inside_pkernel": True, "equality": equal}
    wit = {"span_rank": (L0.subgroup_rank(R),), "pkernel_rank": (an.pker.rank,), "equal": (int(equal),)}
    if not equal:
        trace.append("hypothesis not established (not refuted)")
        status = "inconclusive"
    elif premise:
        status = "holds"
        trace.append("Tate conjecture holds for all powers of A0")
    else:
        status = "conditional"
    return Verdict(name, status, trace, certs, conds, wit)


@dataclass
class Theorem15Data:
    roles: object
    partition: object
    names_L: list
    names_L0: list
    chi: tuple
    chi0: tuple
    f_table: list
    census0: dict
    censusp: dict


def _sub_names(labels, mapping):
    return [mapping.get(k, lab) for k, lab in enumerate(labels)]


def check_theorem_1_5(sc, an=None):
    name = "theorem_1_5"
    roles, reason = find_roles(sc)
    if roles is None:
        return not_applicable(name, reason)
    n = roles.n
    if n <= 2:
        return not_applicable(name, f"n = [E:Q]/2 = {n}; needs n > 2")
    Q, E = roles.Q, roles.E
    if Q.phi[0] != 1:
        return not_applicable(name, "Phi_Q must contain the embedding fixed by H_Q (normalize rho0)")
    G = sc.group
    expect = [0] * E.degree
    for c in range(E.degree):
        in_hq = E.space.cosets[c][0] in roles.HQ
        expect[c] = int((c == 0) if in_hq else (E.space.iota(c) != 0))
    if tuple(expect) != E.phi:
        return not_applicable(name, "Phi_E is not {sigma0, iota sigma1, ..., iota sigma_(n-1)} for sigma0 = H_E")
    if sc.D is None:
        return not_applicable(name, "needs a decomposition group D")
    D = sc.D
    if not D.issubset(roles.HQ):
        return not_applicable(name, "p does not split in Q (D is not inside H_Q)")
    comm, _ = double_coset_commute(roles.HE, D)
    if not comm:
        return not_applicable(name, "Sigma_0 D != D Sigma_0 (double_coset_commute fails)")
    sig_sets = [E.space.cosets[c] for c in roles.sigmas]
    try:
        bp = block_partition(sig_sets, D)
    except HypothesisError as e:
        return not_applicable(name, str(e))
    an = an or Analysis(sc)
    L, amb, L0, sysm = an.L, an.amb, an.L0, an.system
    kE = amb.factors.index(E)
    kQ = amb.factors.index(Q)
    X = an.ctx.X
    n0 = len(D)
    m = bp.m
    certs = {"double_coset_commute": comm}
    # names
    nL = {}
    for i, c in enumerate(roles.sigmas):
        nL[amb.index(kE, c)] = f"sigma{i}"
        nL[amb.index(kE, E.space.iota(c))] = f"iota.sigma{i}"
    nL[amb.index(kQ, 0)] = "rho0"
    nL[amb.index(kQ, 1)] = "iota.rho0"
    names_L = _sub_names(L.labels, nL)
    piE = sysm.germs[kE]
    nL0, pj = {}, {}
    consistent = True
    for i, c in enumerate(roles.sigmas):
        j = bp.jmap[i]
        p = sysm.index(piE.act(E.space.cosets[c][0]))
        if j in pj and pj[j] != p:
            consistent = False
        pj[j] = p
        nL0[p] = f"pi{j}"
        nL0[sysm.index(sysm.points[p].conj())] = f"iota.pi{j}"
    rq = sysm.germs[kQ]
    nL0[sysm.index(rq)] = "rho0"
    nL0[sysm.index(rq.conj())] = "iota.rho0"
    certs["germs_constant_on_blocks"] = consistent and len(set(pj.values())) == m
    certs["germ_count"] = len(sysm.points) == 2 * m + 2 and len(nL0) == len(sysm.points)
    names_L0 = _sub_names(L0.labels, nL0)
    # partition counts
    HQD = {G.mul(a, b) for a in roles.HQ.members for b in D.members}
    s0D = {G.mul(a, b) for a in roles.HE.members for b in D.members}
    certs["count_X"] = len(X) == G.order // n0
    certs["count_blocks"] = all(len(b) == len(s0D) // n0 for b in bp.blocks)
    certs["sets_per_block"] = all(bp.jmap.count(j) == n // m for j in range(m))
    certs["blocks_cover_HQ"] = sorted(x for b in bp.blocks for x in b) == sorted({X.index_of[g] for g in HQD})
    # f_j table
    inter = len(set(roles.HE.members) & set(D.members))
    table = []
    ok_f = True
    for j in range(m):
        f = [0] * len(X)
        for jj in range(m):
            for w in bp.blocks[jj]:
                f[w] = inter if jj == j else 0
            for w in bp.iota_blocks[jj]:
                f[w] = n0 - inter if jj == j else n0
        table.append(tuple(f))
        if j in pj and sysm.points[pj[j]].f != tuple(f):
            ok_f = False
    certs["f_table_matches_reduction"] = ok_f
    # chi and chi0
    chi = [0] * L.dim
    for c in roles.sigmas:
        chi[amb.index(kE, c)] += 1
    chi[amb.index(kQ, 0)] += (n - 2) - (n - 1)
    chi[amb.index(kQ, 1)] -= n - 1
    chi = tuple(chi)
    chi0 = [0] * L0.dim
    for j in range(m):
        chi0[pj[j]] += n // m
    chi0[sysm.index(rq)] += (n - 2) - (n - 1)
    chi0[sysm.index(rq.conj())] -= n - 1
    chi0 = tuple(chi0)
    certs["mt_kernel_is_chi"] = an.mt.rank == 1 and an.mt.kernel == L.span([chi])
    certs["pkernel_is_chi0"] = an.pker.rank == 1 and an.pker.kernel == L0.span([chi0])
    r = an.restriction.apply(chi)
    certs["chi_maps_to_pm_chi0"] = L0.equal(r, chi0) or L0.is_zero(tuple(a + b for a, b in zip(r, chi0)))
    certs["relation_in_weil_lattice"] = not any(an.pmap.apply(chi0))
    certs["diagram_commutes"] = an.diagram_commutes()
    certs["fundamental_diagram"] = an.diagram.ok
    # Hodge and Tate censuses on A x B^(n-2)
    copies = [1 if f is E else n - 2 for f in amb.factors]
    geom = HodgeGeometry.from_factors(amb, copies)
    c0 = exotic_census_dp(geom, L, an.mt.kernel)
    cp = tate_census_dp(geom, L, an.restriction.apply, L0, an.pker.kernel)
    neg = lambda v: tuple(-a for a in v)
    want0 = {L.canonical(chi): 1, L.canonical(neg(chi)): 1}
    wantp = {L0.canonical(chi0): 1, L0.canonical(neg(chi0)): 1}
    certs["hodge_census"] = all((dict(c0[k]) == want0) if k == n - 1 else not c0[k] for k in c0)
    certs["tate_census"] = all((dict(cp[k]) == wantp) if k == n - 1 else not cp[k] for k in cp)
    data = Theorem15Data(roles, bp, names_L, names_L0, chi, chi0, table, c0, cp)
    trace = [f"n = {n}, m = {m}, n0 = {n0}, |X| = {len(X)}",
             f"chi = {L.format(chi, names_L)}",
             f"chi0 = {L0.format(chi0, names_L0)}",
             f"sigma -> block j: {', '.join(f'sigma{i}->X{j}' for i, j in enumerate(bp.jmap))}"]
    for j in range(m):
        blk = ", ".join(X.labels[w] for w in bp.blocks[j])
        trace.append(f"X{j} = {{{blk}}}; f{j} = ({', '.join(map(str, table[j]))})")
    trace += [f"exotic Hodge characters at r = {n - 1}: {_census_text(c0, L, names_L)}",
             f"exotic Tate characters at r = {n - 1}: {_census_text(cp, L0, names_L0)}"]
    failed = [k for k, v in certs.items() if not v]
    wit = {"n": (n,), "m": (m,), "n0": (n0,), "jmap": bp.jmap, "chi": chi, "chi0": chi0,
           "hodge_multiplicity": tuple(sorted(c0[n - 1].values())),
           "tate_multiplicity": tuple(sorted(cp[n - 1].values()))}
    for j, b in enumerate(bp.blocks):
        wit[f"block.{j}"] = b
        wit[f"f.{j}"] = table[j]
    conds = []
    if failed:
        trace.append("failed certificates: " + ", ".join(failed))
        v = Verdict(name, "fails", trace, certs, conds, wit, {"a": "fails", "b": "inconclusive"})
    else:
        parts = {"a": "holds"}
        if sc.facts.get("schoen_exotic_algebraic"):
            parts["b"] = "holds"
            conds.append("schoen_exotic_algebraic declared true: W(A,B) algebraic, hence W(A0,B0) algebraic")
        else:
            parts["b"] = "inconclusive"
            conds.append("part (b) needs schoen_exotic_algebraic")
        trace.append("part (a): exotic Tate classes on A0 x B0^(n-2) are the nonzero elements of W(A0,B0)")
        v = Verdict(name, "conditional", trace, certs, conds, wit, parts)
    v.data = data
    return v


def _census_text(census, L, names):
    items = []
    for r in sorted(census):
        for c, k in sorted(census[r].items()):
            items.append(f"r={r} {L.format(c, names)} x{k}")
    return "; ".join(items) or "none"


FLAGS_1_7 = (("q_root_of_unity", "a"), ("determinant_one", "b"), ("p_splits_in_Q", "d"))


def check_theorem_1_7(sc, an=None):
    name = "theorem_1_7"
    roles, reason = find_roles(sc)
    if roles is None:
        return not_applicable(name, reason)
    deg = roles.E.degree
    if deg != 6:
        return Verdict(name, "fails", [f"hypothesis (c) fails: [E:Q] = {deg} != 6"],
                       {"degree_is_6": False}, [], {"degree": (deg,)}, {"c": "fails"})
    if sc.D is None or not sc.D.issubset(roles.HQ):
        return not_applicable(name, "p does not split in Q (D is not inside H_Q)")
    conds, missing = [], []
    for flag, part in FLAGS_1_7:
        val = sc.facts.get(flag)
        if val is False:
            return not_applicable(name, f"hypothesis ({part}) declared false ({flag})")
        if val is None:
            missing.append(flag)
            conds.append(f"hypothesis ({part}) not declared: {flag}")
        else:
            conds.append(f"hypothesis ({part}) declared: {flag}")
    derived = sc.with_facts(schoen_exotic_algebraic=True) if not missing else sc
    v15 = check_theorem_1_5(derived, an)
    trace = [f"[E:Q] = {deg}", f"theorem 1.5: {v15.status}"] + ["  " + t for t in v15.trace]
    certs = {"degree_is_6": True, **{f"t15.{k}": b for k, b in v15.certificates.items()}}
    wit = {"degree": (deg,), "missing_flags": (len(missing),)}
    if v15.status in ("fails", "not-applicable"):
        return Verdict(name, v15.status, trace, certs, conds, wit)
    if missing:
        trace.append("Schoen's theorem not invoked: hypotheses missing")
        return Verdict(name, "conditional", trace, certs, conds, wit,
                       {"hodge": "conditional", "tate": "conditional"})
    conds.append("schoen_exotic_algebraic derived from (a), (b), (c)")
    trace.append("Hodge and Tate conjectures hold for all A^s x B^t and A0^s x B0^t")
    return Verdict(name, "holds", trace, certs, conds, wit, {"hodge": "holds", "tate": "holds"})


def _is_iota_stable(prime, X):
    return sorted(X.iota(w) for w in prime.points) == sorted(prime.points)


def family_of(system):
    """'elliptic', 'k3', 'almost-ordinary' or None, from the primes of Q[pi] of every factor.

    k3: one prime of local degree 1 with slope 0, its conjugate with slope 1, all others 1/2.
    almost-ordinary: dim > 1, one iota-stable prime of local degree 2 with slope 1/2,
    all other slopes 0 or 1.
    """
    invs = [germ_invariants(class_of(g)) for g in system.germs]
    if all(i.dim == 1 for i in invs):
        return "elliptic"
    half = Fraction(1, 2)

    def k3(inv):
        s0 = [p for p in inv.primes if p.slope == 0]
        s1 = [p for p in inv.primes if p.slope == 1]
        return (len(s0) == 1 and len(s1) == 1 and s0[0].local_degree == 1
                and all(p.slope == half for p in inv.primes if p not in s0 + s1))

    def ao(inv, X):
        hs = [p for p in inv.primes if p.slope == half]
        return (inv.dim > 1 and len(hs) == 1 and hs[0].local_degree == 2 and _is_iota_stable(hs[0], X)
                and all(p.slope in (0, 1) for p in inv.primes if p is not hs[0]))

    if all(k3(i) for i in invs):
        return "k3"
    if all(ao(i, g.space) for i, g in zip(invs, system.germs)):
        return "almost-ordinary"
    return None


def classify_examples_a7(sc, an=None):
    name = "examples_a7"
    if sc.D is None:
        return not_applicable(name, "needs a decomposition group D")
    an = an or Analysis(sc)
    fam = family_of(an.system)
    if fam is None:
        return not_applicable(name, "germ data matches no family (elliptic, K3-type, almost ordinary)")
    pk = an.pker
    certs = {"routes_agree": pk.routes_agree, "saturated": pk.saturated, "pkernel_zero": pk.rank == 0}
    trace = [f"family: {fam}", f"P-kernel rank {pk.rank} (lattice and slope-sum routes "
             f"{'agree' if pk.routes_agree else 'DISAGREE'})"]
    if all(certs.values()):
        trace.append("P(A0)=L(A0); no exotic Tate classes")
        status = "holds"
    else:
        for v in pk.generators:
            trace.append(f"character trivial on P(A0), nontrivial on L(A0): {an.L0.format(v)}")
        status = "fails"
    fam_code = {"elliptic": 1, "k3": 2, "almost-ordinary": 3}[fam]
    return Verdict(name, status, trace, certs, [], {"family": (fam_code,), "pkernel_rank": (pk.rank,)})


def recover_milne99(sc, an=None):
    name = "milne99"
    roles, reason = find_roles(sc)
    if roles is None:
        return not_applicable(name, reason)
    if len(roles.HE) != 1:
        return not_applicable(name, "E is not all of K (H_E nontrivial)")
    if sc.D is None:
        return not_applicable(name, "needs a decomposition group D")
    an = an or Analysis(sc)
    L = an.L
    K1, K2 = an.K1, an.mt.kernel
    imgK1 = an.rho.image_of(K1)
    certs = {
        "rho_surjective": an.rho.is_surjective(),
        "germ_map_surjective": an.pmap.is_surjective(),
        "pushforward_surjective": an.pushforward.is_surjective(),
        "rho_injective_on_K1": (K1 & K2) == L.relations,
        "image_K1_is_pushforward_kernel": imgK1 == an.pushforward.kernel(),
    }
    trace = ["0 -> rho(K1) -> X*(S^K) -> X*(P^K) -> 0 exact" if all(certs.values())
             else "four-term sequence not exact: " + ", ".join(k for k, v in certs.items() if not v)]
    status = "holds" if all(certs.values()) else "fails"
    return Verdict(name, status, trace, certs, [], {"k1_rank": (L.subgroup_rank(K1),)})


def s_prime_predicate(G, D_lambda):
    """(iota in D_lambda, density 1/|G|)."""
    return G.iota in D_lambda, Fraction(1, G.order)


def check_s_prime(sc, an=None):
    name = "s_prime"
    D = sc.s_prime_decomposition or sc.D
    if D is None:
        return not_applicable(name, "needs a decomposition group")
    member, dens = s_prime_predicate(sc.group, D)
    trace = [f"iota {'in' if member else 'not in'} D_lambda; density of such primes 1/{dens.denominator}"]
    wit = {"member": (int(member),), "density": (dens.numerator, dens.denominator)}
    return Verdict(name, "holds" if member else "not-applicable", trace, {"computed": True}, [], wit)


CHECKERS = {
    "corollary_1_2": check_corollary_1_2,
    "theorem_1_1": check_theorem_1_1,
    "theorem_1_5": check_theorem_1_5,
    "theorem_1_7": check_theorem_1_7,
    "examples_a7": classify_examples_a7,
    "milne99": recover_milne99,
    "s_prime": check_s_prime,
}


def run_checks(sc, an=None):
    an = an or Analysis(sc)
    return [CHECKERS[c](sc, an=an) for c in sc.checks]
