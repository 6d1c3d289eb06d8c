"""Scenario reports: human text followed by a line-oriented machine section.

Machine section (format frozen in docs/REPORT_FORMAT.md):

    [machine]
    key = i1 i2 ...
    [end]

keys match [a-z0-9_.]+, values are space separated integers (possibly none).
"""
from __future__ import annotations

import re

from .reduction import ReductionError
from .verdicts import STATUS_CODE, Analysis, VerdictError, run_checks
from .weil import enumerate_simple_classes, germ_invariants

KEY = re.compile(r"^[a-z0-9_.]+$")
LINE = re.compile(r"^([a-z0-9_.]+) =((?: -?\d+)*)$")


class ReportFormatError(ValueError):
    pass


def sanitize(key):
    return re.sub(r"[^a-z0-9_.]", "_", key.lower())


def emit_machine(records):
    out = ["[machine]"]
    for key, vals in records:
        if not KEY.match(key):
            raise ReportFormatError(f"bad key {key!r}")
        out.append(f"{key} =" + "".join(f" {int(v)}" for v in vals))
    out.append("[end]")
    return "\n".join(out) + "\n"


def machine_section(text):
    """The exact [machine] ... [end] block of a report."""
    lines = text.splitlines(keepends=True)
    try:
        a = next(i for i, ln in enumerate(lines) if ln.rstrip("\n") == "[machine]")
        b = next(i for i in range(a, len(lines)) if lines[i].rstrip("\n") == "[end]")
    except StopIteration:
        raise ReportFormatError("no [machine] section") from None
    return "".join(lines[a:b + 1])


def parse_machine(text):
    """List of (key, tuple of ints) from a report or a bare machine section."""
    block = machine_section(text)
    recs = []
    for ln in block.splitlines()[1:-1]:
        m = LINE.match(ln)
        if not m:
            raise ReportFormatError(f"bad machine line {ln!r}")
        recs.append((m.group(1), tuple(int(x) for x in m.group(2).split())))
    return recs


def _members(H):
    return "{" + ", ".join(H.labels()) + "}"


class ReportBuilder:
    def __init__(self):
        self.lines = []
        self.records = []

    def text(self, s=""):
        self.lines.append(s)

    def rec(self, key, vals):
        self.records.append((sanitize(key), tuple(vals)))

    def render(self):
        return "\n".join(self.lines) + "\n" + emit_machine(self.records)


def scenario_report(sc, verdicts=None, an=None):
    """(text, verdicts, errors) for a scenario."""
    an = an or Analysis(sc)
    errors = []
    if verdicts is None:
        verdicts = []
        for c in sc.checks:
            from .verdicts import CHECKERS
            try:
                verdicts.append(CHECKERS[c](sc, an=an))
            except (ReductionError, VerdictError, ValueError) as e:
                errors.append((c, f"{type(e).__name__}: {e}"))
    G = sc.group
    rb = ReportBuilder()
    rb.text("cmtate report")
    rb.text(f"scenario: {sc.name}")
    rb.text(f"group: {G.name or 'custom'}, order {G.order}, iota = {G.label(G.iota)}")
    rb.rec("group.order", [G.order])
    rb.rec("group.iota", [G.iota])
    if sc.D is not None:
        X = an.ctx.X
        rb.text(f"reduction: D = {_members(sc.D)}, n0 = {len(sc.D)}, X = G/D = ({', '.join(X.labels)})")
        rb.rec("reduction.d", sc.D.members)
        rb.rec("reduction.n0", [len(sc.D)])
    for f in sc.factors:
        phi = ", ".join(f.space.labels[i] for i in f.members())
        rb.text(f"factor {f.name}: H_E = {_members(f.space.subgroup)}, [E:Q] = {f.degree}, "
                f"Phi = {{{phi}}}, multiplicity {f.multiplicity}")
        rb.rec(f"factor.{f.name}.space", f.space.subgroup.members)
        rb.rec(f"factor.{f.name}.phi", f.phi)
    for name, g in sc.germs:
        rb.text(f"germ {name}: f = ({', '.join(map(str, g.f))})")
    if sc.facts:
        rb.text("declared facts: " + ", ".join(f"{k}={str(v).lower()}" for k, v in sorted(sc.facts.items())))
    rb.text()
    _lattice_summary(sc, an, rb, errors)
    for v in verdicts:
        rb.text()
        rb.text(f"check {v.check}: {v.status}")
        for t in v.trace:
            rb.text(f"  {t}")
        for k in sorted(v.parts):
            rb.text(f"  part {k}: {v.parts[k]}")
        if v.conditions:
            rb.text("  conditions:")
            for c in v.conditions:
                rb.text(f"    - {c}")
        failed = [k for k, b in v.certificates.items() if not b]
        rb.text(f"  certificates: {len(v.certificates) - len(failed)}/{len(v.certificates)} pass"
                + (f" (failed: {', '.join(failed)})" if failed else ""))
        base = f"verdict.{v.check}"
        rb.rec(base, [STATUS_CODE[v.status]])
        rb.rec(f"{base}.conditions", [len(v.conditions)])
        for k in sorted(v.certificates):
            rb.rec(f"{base}.cert.{k}", [int(bool(v.certificates[k]))])
        for k in sorted(v.witnesses):
            rb.rec(f"{base}.{k}", v.witnesses[k])
    for c, msg in errors:
        rb.text()
        rb.text(f"check {c}: error")
        rb.text(f"  {msg}")
        rb.rec(f"error.{c}", [1])
    return rb.render(), verdicts, errors


def _lattice_summary(sc, an, rb, errors):
    if sc.factors:
        L = an.L
        rb.text(f"X*(S^K): rank {an.SK.rank()}")
        rb.text(f"X*(L(A)): rank {L.rank()} over ({', '.join(L.labels)})")
        rb.rec("lattice.sk.rank", [an.SK.rank()])
        rb.rec("lattice.l.rank", [L.rank()])
        for k, row in enumerate(L.relations.basis):
            rb.rec(f"lattice.l.relation.{k}", row)
        mt = an.mt
        rb.text(f"MT kernel: rank {mt.rank}" + "".join(f"; {L.format(v)}" for v in mt.generators))
        rb.rec("mt.rank", [mt.rank])
        for k, v in enumerate(mt.generators):
            rb.rec(f"mt.gen.{k}", v)
    if sc.D is None:
        return
    try:
        sysm = an.system
    except ReductionError as e:
        rb.text(f"reduction unavailable: {type(e).__name__}: {e}")
        rb.rec("reduction.available", [0])
        return
    rb.rec("reduction.available", [1])
    for name, g in zip(sysm.names, sysm.germs):
        sl = ", ".join(str(s) for s in g.slopes())
        rb.text(f"germ {name}: f = ({', '.join(map(str, g.f))}), slopes ({sl})")
        rb.rec(f"germ.{name}.f", g.f)
    L0, P = an.L0, an.P
    rb.text(f"X*(L(A0)): rank {L0.rank()} over ({', '.join(L0.labels)})")
    rb.text(f"X*(P^K) = W^K: rank {P.rank()}")
    rb.rec("lattice.l0.rank", [L0.rank()])
    for k, row in enumerate(L0.relations.basis):
        rb.rec(f"lattice.l0.relation.{k}", row)
    rb.rec("lattice.p.rank", [P.rank()])
    for k, row in enumerate(P.generators.basis):
        rb.rec(f"lattice.p.basis.{k}", row)
    pk = an.pker
    rb.text(f"P kernel: rank {pk.rank}" + "".join(f"; {L0.format(v)}" for v in pk.generators)
            + f" (slope-sum route {'agrees' if pk.routes_agree else 'DISAGREES'})")
    rb.rec("pker.rank", [pk.rank])
    rb.rec("pker.routes_agree", [int(pk.routes_agree)])
    for k, v in enumerate(pk.generators):
        rb.rec(f"pker.gen.{k}", v)


def atlas_report(G, D):
    """Isogeny classes of simple abelian varieties over F with germs on G/D."""
    from .groups import CosetSpace
    X = CosetSpace(D)
    rb = ReportBuilder()
    rb.text(f"atlas {G.name or 'custom'}: D = {_members(D)}, n0 = {len(D)}, X = G/D = ({', '.join(X.labels)})")
    classes = enumerate_simple_classes(G, D)
    rb.text(f"{len(classes)} isogeny classes")
    rb.text(f"{'class':>5}  {'germ':<16} {'deg':>3} {'e':>2} {'dim':>3}  slopes (multiplicity)  invariants")
    rb.rec("atlas.order", [G.order])
    rb.rec("atlas.d", D.members)
    rb.rec("atlas.classes", [len(classes)])
    for k, cls in enumerate(classes):
        inv = germ_invariants(cls)
        f = "(" + ",".join(map(str, cls.representative.f)) + ")"
        sl = " ".join(f"{s}:{m}" for s, m in inv.slope_multiplicities.items())
        iv = " ".join(str(p.inv) for p in inv.primes)
        rb.text(f"{k:>5}  {f:<16} {inv.deg_center:>3} {inv.e:>2} {inv.dim:>3}  {sl:<21}  {iv}")
        rb.rec(f"atlas.class.{k}.f", cls.representative.f)
        rb.rec(f"atlas.class.{k}.deg", [inv.deg_center])
        rb.rec(f"atlas.class.{k}.e", [inv.e])
        rb.rec(f"atlas.class.{k}.dim", [inv.dim])
    return rb.render()


__all__ = ["scenario_report", "atlas_report", "emit_machine", "parse_machine", "machine_section",
           "ReportFormatError", "run_checks"]
