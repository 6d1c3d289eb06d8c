"""Command line: cmtate check | atlas | example | selftest."""
from __future__ import annotations

import argparse
import sys

from .groups import GroupError, build_group, preset_names
from .report import atlas_report, scenario_report
from .scenario import (ScenarioParseError, ScenarioValidationError, fixture_names, load_fixture,
                       parse_scenario)

EXIT_OK, EXIT_FAILS, EXIT_ERROR = 0, 1, 2


def _run_scenario(sc, out):
    text, verdicts, errors = scenario_report(sc)
    out.write(text)
    if errors:
        return EXIT_ERROR
    if any(v.status == "fails" for v in verdicts):
        return EXIT_FAILS
    return EXIT_OK


def cmd_check(args, out, err):
    code = EXIT_OK
    for k, path in enumerate(args.files):
        try:
            sc = parse_scenario(path)
        except (OSError, ScenarioParseError, ScenarioValidationError) as e:
            err.write(f"{path}: {e}\n")
            code = EXIT_ERROR
            continue
        if k:
            out.write("\n")
        code = max(code, _run_scenario(sc, out))
    return code


def cmd_example(args, out, err):
    try:
        sc = load_fixture(args.name)
    except FileNotFoundError as e:
        err.write(f"{e}\n")
        return EXIT_ERROR
    return _run_scenario(sc, out)


def cmd_atlas(args, out, err):
    try:
        G = build_group(args.group)
        D = G.resolve_subgroup(args.D)
    except GroupError as e:
        err.write(f"{e}\n")
        return EXIT_ERROR
    out.write(atlas_report(G, D))
    return EXIT_OK


def cmd_selftest(args, out, err):
    from .selftest import run_selftest
    return EXIT_OK if run_selftest(out) else EXIT_FAILS


def build_parser():
    p = argparse.ArgumentParser(prog="cmtate",
                                description="Exotic Hodge/Tate classes on CM abelian varieties via character lattices.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="run the requested verdicts on scenario files")
    c.add_argument("files", nargs="+", help="scenario files or built-in fixture names")
    c.set_defaults(func=cmd_check)
    a = sub.add_parser("atlas", help="isogeny classes with germs on G/D")
    a.add_argument("group", help="preset: " + ", ".join(preset_names()))
    a.add_argument("D", help="subgroup: a preset name, 1, G, iota, or generators")
    a.set_defaults(func=cmd_atlas)
    e = sub.add_parser("example", help="run a built-in fixture")
    e.add_argument("name", help="one of: " + ", ".join(fixture_names()))
    e.set_defaults(func=cmd_example)
    s = sub.add_parser("selftest", help="run the invariant suite")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
