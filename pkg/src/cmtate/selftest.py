"""Invariant suite behind `cmtate selftest`."""
from __future__ import annotations

import random
import time

from .groups import build_group, preset_names
from .hodge import HodgeGeometry, exotic_census, exotic_census_dp, lefschetz_power
from .reduction import ReductionContext, ReductionError, fundamental_diagram
from .report import emit_machine, parse_machine, scenario_report
from .scenario import fixture_names, load_fixture
from .verdicts import Analysis, check_corollary_1_2, check_theorem_1_1
from .weil import weil_lattice
from .zlattice import determinant, hnf_with_transform, matmul, smith_with_transforms
from math import factorial


def _presets_diagram():
    for name in preset_names():
        G = build_group(name)
        for D in G.all_subgroups():
            _, cert = weil_lattice(G, D)
            if not cert.ok:
                return False
            if not fundamental_diagram(ReductionContext(D)).ok:
                return False
    return True


def _normal_forms():
    rng = random.Random(7)
    for _ in range(60):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        H, U, _ = hnf_with_transform(M, c)
        if matmul(U, M) != H or abs(determinant(U)) != 1:
            return False
        Uu, Dd, V, Vi = smith_with_transforms(M, c)
        if matmul(matmul(Uu, M), V) != Dd or matmul(V, Vi) != [[int(i == j) for j in range(c)] for i in range(c)]:
            return False
        d = [Dd[i][i] for i in range(min(r, c))]
        nz = [x for x in d if x]
        if any(x < 0 for x in d) or any(nz[i + 1] % nz[i] for i in range(len(nz) - 1)):
            return False
    return True


def _fixture_invariants():
    for name in fixture_names():
        sc = load_fixture(name)
        an = Analysis(sc)
        try:
            pk = an.pker
        except ReductionError:
            continue
        if not (pk.routes_agree and pk.saturated):
            return False
        if sc.factors:
            if not (an.mt.kernel <= an.KP and an.K1 <= an.KP and an.diagram_commutes()):
                return False
    return True


def _verdict_agreement():
    pairs = {"holds": "holds", "conditional": "conditional", "fails": "inconclusive",
             "not-applicable": "not-applicable"}
    for name in fixture_names():
        sc = load_fixture(name)
        an = Analysis(sc)
        try:
            a, b = check_corollary_1_2(sc, an), check_theorem_1_1(sc, "mt", an)
        except ReductionError:
            continue
        if pairs[a.status] != b.status:
            return False
    return True


def _reports():
    for name in fixture_names():
        sc = load_fixture(name)
        t1 = scenario_report(sc)[0]
        t2 = scenario_report(load_fixture(name))[0]
        if t1 != t2:
            return False
        recs = parse_machine(t1)
        if emit_machine(recs) not in t1 or parse_machine(emit_machine(recs)) != recs:
            return False
    return True


def _hodge():
    for g in range(1, 5):
        Lp = lefschetz_power
        for i in range(g + 1):
            if set(Lp(i, g).terms.values()) != {factorial(i)}:
                return False
    an = Analysis(load_fixture("g6_split"))
    geom = HodgeGeometry.from_factors(an.amb)
    return exotic_census(geom, an.L, an.mt.kernel) == exotic_census_dp(geom, an.L, an.mt.kernel)


CHECKS = [
    ("Hermite/Smith forms with transforms", _normal_forms),
    ("fundamental diagram and W^K exactness on every preset and D", _presets_diagram),
    ("P-kernel routes agree, K1 + K2 inside KP, diagram (**) commutes", _fixture_invariants),
    ("corollary 1.2 and theorem 1.1 agree", _verdict_agreement),
    ("reports deterministic, machine section round-trips", _reports),
    ("Lefschetz powers and Hodge census routes", _hodge),
]


def run_selftest(out):
    ok = True
    for name, fn in CHECKS:
        t = time.perf_counter()
        res = fn()
        ok &= res
        out.write(f"{'ok  ' if res else 'FAIL'} {name} ({time.perf_counter() - t:.2f}s)\n")
    out.write("selftest passed\n" if ok else "selftest FAILED\n")
    return ok
