"""Scenario files: a group, CM factors or germs, a decomposition group, facts.

Grammar (one item per line; '#' starts a comment line):

    file    := { blank | comment | header | entry }
    header  := '[' section ']'
    section := 'scenario' | 'group' | 'reduction' | 'facts' | 'checks'
             | 'subgroup.' ident | 'factor.' ident | 'germ.' ident
    entry   := key '=' value

Keys by section:

    scenario      name
    group         preset | table, iota, labels      (table rows separated by '/')
    subgroup.X    members | generators              (element labels, comma separated)
    factor.X      space, phi, multiplicity          (space = subgroup reference H with E = K^H)
    germ.X        f                                 (integers over G/D in coset order)
    reduction     D                                 (subgroup reference)
    facts         p_splits_in_Q, q_root_of_unity, determinant_one,
                  schoen_exotic_algebraic (true/false), degree_E (integer)
    checks        run (check names), algebraic (mt | none | characters separated by ';'),
                  s_prime_decomposition (subgroup reference)

A subgroup reference is a [subgroup.X] name, '1', 'G', 'iota', a preset name,
or a comma separated list of generators.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from pathlib import Path

from .cm import CMFactor, CMTypeError, dedup_factors
from .groups import CosetSpace, GroupError, build_group
from .weil import GermError, WeilGerm


CHECKS = ("corollary_1_2", "theorem_1_1", "theorem_1_5", "theorem_1_7", "examples_a7",
          "milne99", "s_prime")
BOOL_FACTS = ("p_splits_in_Q", "q_root_of_unity", "determinant_one", "schoen_exotic_algebraic")
INT_FACTS = ("degree_E",)

SECTION_KEYS = {
    "scenario": {"name"},
    "group": {"preset", "table", "iota", "labels"},
    "subgroup": {"members", "generators"},
    "factor": {"space", "phi", "multiplicity"},
    "germ": {"f"},
    "reduction": {"D"},
    "facts": set(BOOL_FACTS) | set(INT_FACTS),
    "checks": {"run", "algebraic", "s_prime_decomposition"},
}


class ScenarioParseError(ValueError):
    def __init__(self, lineno, msg):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class ScenarioValidationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Roles:
    """E-factor and Q-factor of the A x B structure, with the sigma_i."""
    E: CMFactor
    Q: CMFactor
    n: int
    sigmas: tuple           # coset indices in G/H_E lying in H_Q, base first

    @property
    def HE(self):
        return self.E.space.subgroup

    @property
    def HQ(self):
        return self.Q.space.subgroup


@dataclass(frozen=True, eq=False)
class Scenario:
    name: str
    group: object
    subgroups: dict
    factors: tuple = ()
    germs: tuple = ()                  # (name, WeilGerm)
    D: object = None
    facts: dict = field(default_factory=dict)
    checks: tuple = CHECKS
    algebraic: object = "mt"
    s_prime_decomposition: object = None

    @property
    def char_zero(self):
        return bool(self.factors)

    def with_facts(self, **kw):
        facts = dict(self.facts)
        for k, v in kw.items():
            if v is None:
                facts.pop(k, None)
            else:
                facts[k] = v
        sc = replace(self, facts=facts)
        validate(sc)
        return sc

    def without_fact(self, key):
        return self.with_facts(**{key: None})

    def restrict(self, names):
        names = list(names)
        sc = replace(self, factors=tuple(f for f in self.factors if f.name in names),
                     germs=tuple(g for g in self.germs if g[0] in names),
                     facts={k: v for k, v in self.facts.items()
                            if k not in ("p_splits_in_Q", "degree_E")},
                     name=f"{self.name}[{','.join(names)}]")
        validate(sc)
        return sc

    def with_D(self, D):
        sc = replace(self, D=D)
        validate(sc)
        return sc


def find_roles(sc):
    """(Roles, None) for the A x B shape, else (None, reason)."""
    if not sc.factors:
        return None, "no characteristic-zero factors"
    if len(sc.factors) != 2:
        return None, "needs exactly two CM factors (A and B)"
    qs = [f for f in sc.factors if len(f.space) == 2]
    es = [f for f in sc.factors if len(f.space) > 2]
    if len(qs) != 1 or len(es) != 1:
        return None, "needs one imaginary quadratic factor and one factor of degree > 2"
    Q, E = qs[0], es[0]
    HQ, HE = Q.space.subgroup, E.space.subgroup
    if not HE.issubset(HQ):
        return None, "E does not contain Q"
    sigmas = tuple(i for i, c in enumerate(E.space.cosets) if c[0] in HQ)
    return Roles(E, Q, len(sigmas), sigmas), None


def validate(sc):
    G = sc.group
    if sc.factors and sc.germs:
        raise ScenarioValidationError("mixing [factor.*] and [germ.*] sections is not supported")
    if not sc.factors and not sc.germs:
        raise ScenarioValidationError("scenario has no factors and no germs")
    if sc.germs and sc.D is None:
        raise ScenarioValidationError("germs need a [reduction] D")
    try:
        dedup_factors(sc.factors)
    except CMTypeError as e:
        raise ScenarioValidationError(str(e)) from None
    for f in sc.factors:
        if f.group is not G:
            raise ScenarioValidationError(f"factor {f.name} lives on another group")
    for c in sc.checks:
        if c not in CHECKS:
            raise ScenarioValidationError(f"unknown check {c!r}; known: {', '.join(CHECKS)}")
    roles, _ = find_roles(sc)
    if "p_splits_in_Q" in sc.facts:
        if roles is None or sc.D is None:
            raise ScenarioValidationError("p_splits_in_Q declared but the scenario has no Q factor and D")
        actual = sc.D.issubset(roles.HQ)
        if actual != sc.facts["p_splits_in_Q"]:
            raise ScenarioValidationError(
                f"declared p_splits_in_Q={str(sc.facts['p_splits_in_Q']).lower()} but D "
                f"{'is' if actual else 'is not'} contained in H_Q")
    if "degree_E" in sc.facts:
        if roles is None:
            raise ScenarioValidationError("degree_E declared but the scenario has no E factor")
        if roles.E.degree != sc.facts["degree_E"]:
            raise ScenarioValidationError(f"declared degree_E={sc.facts['degree_E']} but [E:Q] = {roles.E.degree}")
    return sc


# parsing

_SECTION = re.compile(r"^\[([A-Za-z_]+)(?:\.([A-Za-z0-9_]+))?\]$")
_ENTRY = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$")


def _split_list(value):
    return [x.strip() for x in re.split(r"[,\s]+", value.strip()) if x.strip()]


def parse_text(text, default_name="scenario"):
    sections = {}
    order = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _SECTION.match(line)
        if m:
            kind, ident = m.group(1), m.group(2)
            if kind not in SECTION_KEYS:
                raise ScenarioParseError(lineno, f"unknown section [{line[1:-1]}]")
            if (kind in ("subgroup", "factor", "germ")) != (ident is not None):
                raise ScenarioParseError(lineno, f"section [{line[1:-1]}] malformed")
            current = (kind, ident)
            if current in sections:
                raise ScenarioParseError(lineno, f"duplicate section [{line[1:-1]}]")
            sections[current] = {}
            order.append(current)
            continue
        m = _ENTRY.match(line)
        if not m:
            raise ScenarioParseError(lineno, f"cannot parse {line!r}")
        if current is None:
            raise ScenarioParseError(lineno, "entry outside any section")
        key, value = m.group(1), m.group(2).strip()
        if key not in SECTION_KEYS[current[0]]:
            raise ScenarioParseError(lineno, f"unknown key {key!r} in [{current[0]}]")
        if key in sections[current]:
            raise ScenarioParseError(lineno, f"duplicate key {key!r}")
        sections[current][key] = (value, lineno)
    return build_scenario(sections, order, default_name)


def _bool(value, lineno):
    v = value.lower()
    if v in ("true", "yes", "1"):
        return True
    if v in ("false", "no", "0"):
        return False
    raise ScenarioParseError(lineno, f"expected true/false, got {value!r}")


def build_scenario(sections, order, default_name):
    g = sections.get(("group", None))
    if g is None:
        raise ScenarioValidationError("missing [group] section")
    try:
        if "preset" in g:
            if set(g) - {"preset"}:
                raise ScenarioParseError(g["preset"][1], "preset excludes table/iota/labels")
            G = build_group(g["preset"][0])
        else:
            if "table" not in g or "iota" not in g:
                raise ScenarioValidationError("[group] needs preset or table + iota")
            rows = [[int(x) for x in r.split()] for r in g["table"][0].split("/")]
            spec = {"table": rows, "iota": g["iota"][0].strip()}
            if "labels" in g:
                spec["labels"] = _split_list(g["labels"][0])
            else:
                spec["iota"] = int(spec["iota"])
            G = build_group(spec)
    except GroupError as e:
        raise ScenarioValidationError(f"group: {e}") from None
    subgroups = {}

    def resolve(ref, lineno):
        ref = ref.strip()
        if ref in subgroups:
            return subgroups[ref]
        try:
            return G.resolve_subgroup(ref)
        except GroupError as e:
            raise ScenarioParseError(lineno, str(e)) from None

    for kind, ident in order:
        if kind != "subgroup":
            continue
        s = sections[(kind, ident)]
        try:
            if "members" in s and "generators" in s:
                raise ScenarioParseError(s["members"][1], "give members or generators, not both")
            if "members" in s:
                subgroups[ident] = G.subgroup(_split_list(s["members"][0]), ident)
            elif "generators" in s:
                subgroups[ident] = G.generated(_split_list(s["generators"][0]), ident)
            else:
                raise ScenarioValidationError(f"[subgroup.{ident}] is empty")
        except GroupError as e:
            line = next(iter(s.values()))[1]
            raise ScenarioParseError(line, f"subgroup {ident}: {e}") from None
    D = None
    red = sections.get(("reduction", None), {})
    if "D" in red:
        D = resolve(*red["D"])
    factors = []
    for kind, ident in order:
        if kind != "factor":
            continue
        s = sections[(kind, ident)]
        if "space" not in s or "phi" not in s:
            raise ScenarioValidationError(f"[factor.{ident}] needs space and phi")
        H = resolve(*s["space"])
        mult = int(s["multiplicity"][0]) if "multiplicity" in s else 1
        try:
            factors.append(CMFactor.from_labels(ident, CosetSpace(H), _split_list(s["phi"][0]), mult))
        except (CMTypeError, GroupError) as e:
            raise ScenarioValidationError(f"factor {ident}: {e}") from None
    germs = []
    for kind, ident in order:
        if kind != "germ":
            continue
        s = sections[(kind, ident)]
        if "f" not in s:
            raise ScenarioValidationError(f"[germ.{ident}] needs f")
        if D is None:
            raise ScenarioValidationError("germs need a [reduction] D")
        try:
            vals = tuple(int(x) for x in _split_list(s["f"][0]))
        except ValueError:
            raise ScenarioParseError(s["f"][1], "f must be integers") from None
        try:
            gm = WeilGerm(CosetSpace(D), vals, 1)
        except GermError as e:
            raise ScenarioValidationError(f"germ {ident}: {e}") from None
        if not gm.is_effective():
            raise ScenarioValidationError(f"germ {ident}: f must be >= 0")
        germs.append((ident, gm))
    facts = {}
    for key, (value, lineno) in sections.get(("facts", None), {}).items():
        if key in BOOL_FACTS:
            facts[key] = _bool(value, lineno)
        else:
            try:
                facts[key] = int(value)
            except ValueError:
                raise ScenarioParseError(lineno, f"{key} must be an integer") from None
    ch = sections.get(("checks", None), {})
    checks = tuple(_split_list(ch["run"][0])) if "run" in ch else CHECKS
    algebraic = "mt"
    if "algebraic" in ch:
        v = ch["algebraic"][0].strip()
        algebraic = v if v in ("mt", "none") else tuple(x.strip() for x in v.split(";") if x.strip())
    spd = resolve(*ch["s_prime_decomposition"]) if "s_prime_decomposition" in ch else None
    name = sections.get(("scenario", None), {}).get("name", (default_name, 0))[0]
    sc = Scenario(name, G, subgroups, tuple(factors), tuple(germs), D, facts, checks, algebraic, spd)
    return validate(sc)


FIXTURE_DIR = Path(__file__).parent / "fixtures"

ALIASES = {
    "ell_ord": "ell_ordinary", "ell_ss": "ell_supersingular", "ell_ord_x_ell_ss": "ell_ord_x_ss",
    "ell_ord_x_ss": "ell_ord_x_ss",
}


def fixture_names():
    return sorted(p.stem for p in FIXTURE_DIR.glob("*.scn"))


def fixture_path(name):
    key = name.strip().lower().replace("-", "_").replace("×", "_x_")
    key = ALIASES.get(key, key)
    p = FIXTURE_DIR / f"{key}.scn"
    if not p.exists():
        raise FileNotFoundError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
    return p


def resolve_path(path):
    """A file path, the same path plus .scn, or a built-in fixture name."""
    p = Path(path)
    for cand in (p, p.with_name(p.name + ".scn")):
        if cand.is_file():
            return cand
    return fixture_path(p.name)


def parse_scenario(path):
    p = resolve_path(path)
    return parse_text(p.read_text(encoding="utf-8"), p.stem)


def load_fixture(name):
    p = fixture_path(name)
    return parse_text(p.read_text(encoding="utf-8"), p.stem)
