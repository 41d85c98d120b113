"""Command line interface.

Exit codes: 0 all consistent, 1 inconsistency found, 2 usage error,
3 resource cap reached.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from ..errors import ConfigurationError, ParseError, ResourceLimitError
from ..sigma import PRESETS, SigmaPartition
from ..verifiers import (
    CHECKED,
    SKIPPED,
    STATEMENTS,
    run_statements,
    verify_corollary_1_1,
    verify_corollary_1_2,
    verify_corollary_1_3,
    verify_lemma_2_1_all,
    verify_theorem_A,
    verify_theorem_B,
)
from . import report
from .catalog import default_catalog
from .constructions import GroupSpec, build
from .formats import parse_group_file, parse_sigma_file, parse_spec_string, resolve_sigma

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_group_spec(arg: str) -> GroupSpec:
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_group_file(fh.read())
    return parse_spec_string(arg)


def load_sigma(arg: str) -> SigmaPartition:
    if arg in PRESETS:
        return PRESETS[arg]
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_sigma_file(fh.read())
    if arg.lstrip().startswith("sigma"):
        return resolve_sigma(arg)
    raise UsageError(f"unknown sigma {arg!r}: use a preset ({', '.join(PRESETS)}), "
                     "a sigma file, or an inline 'sigma ...' line")


def _print_verdict(v) -> None:
    print(f"[{v.statement_id}] {v.group_label} / {v.sigma_label}: status={v.status}")
    if v.status != CHECKED:
        print(f"  reason: {v.reason}")
        return
    print(f"  hypothesis={v.hypothesis_holds} conclusion={v.conclusion_holds} "
          f"consistent={v.consistent}")
    if v.evidence:
        print(f"  evidence: {v.evidence}")
    if v.witness:
        print(f"  WITNESS: {v.witness}")


def cmd_analyze(args) -> int:
    spec = load_group_spec(args.group)
    sigma = load_sigma(args.sigma)
    G = build(spec)
    data = report.analyze(G, sigma)
    if args.json:
        sys.stdout.write(report.dumps(data))
        return EXIT_OK
    g = data["group"]
    print(f"group {g['label']}: order {g['order']}, degree {g['degree']}, "
          f"soluble={g['soluble']}, supersoluble={g['supersoluble']}")
    print(f"sigma: {sigma.label}")
    for c in data["sigma"]["classes_meeting_group"]:
        print(f"  class {c['class']}: primes {c['primes']}, {c['hall_subgroups']} Hall subgroup(s)")
    print(f"complete Hall sigma-sets: {data['hall_sigma_set_count']}")
    sb = data["sigma_basis"]
    print(f"every complete Hall sigma-set is a sigma-basis: {sb['every_set_is_basis']}")
    if sb["witness"]:
        print(f"  non-permutable pair: {sb['witness'][0]} | {sb['witness'][1]}")
    h = data["in_H_sigma"]
    print(f"in H_sigma: definitional={h['definitional']} chief-factor criterion={h['chief_factor_criterion']}")
    print("chief series:")
    print(f"  {'|K|':>6} {'|H|':>6} {'|H/K|':>6} {'|G/C|':>6}  admissible")
    for r in data["chief_series"]:
        print(f"  {r['below_order']:>6} {r['above_order']:>6} {r['factor_order']:>6} "
              f"{r['induced_aut_order']:>6}  {r['admissible']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = load_group_spec(args.group)
    sigma = load_sigma(args.sigma)
    G = build(spec)
    sid = args.statement
    if sid == "A":
        v = verify_theorem_A(G, sigma, quantifier=args.quantifier)
    elif sid == "B":
        v = verify_theorem_B(G, sigma)
    elif sid == "C1.1":
        v = verify_corollary_1_1(G, quantifier=args.quantifier)
    elif sid == "C1.2":
        v = verify_corollary_1_2(G)
    elif sid == "C1.3":
        v = verify_corollary_1_3(G)
    else:
        v = verify_lemma_2_1_all(G)
    if args.json:
        out = report.header("verify")
        out["verdict"] = v.to_dict()
        sys.stdout.write(report.dumps(out))
    else:
        _print_verdict(v)
    if v.status == SKIPPED:
        return EXIT_RESOURCE
    return EXIT_INCONSISTENT if v.consistent is False else EXIT_OK


def _catalog_task(task):
    spec, sigmas, statements, options, max_order = task
    try:
        G = build(spec)
    except ResourceLimitError as exc:
        return report.group_entry(spec.label, None, [], status=report.resource_status(exc))
    if max_order is not None and G.order > max_order:
        return None
    verdicts = run_statements(G, sigmas, statements, **options)
    return report.group_entry(spec.label, G.order, verdicts)


def run_catalog(specs, sigmas, statements=STATEMENTS, max_order=None, jobs=1, options=None):
    options = options or {}
    tasks = [(s, tuple(sigmas), tuple(statements), options, max_order) for s in specs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_catalog_task, tasks, chunksize=1))
    else:
        results = [_catalog_task(t) for t in tasks]
    return [r for r in results if r is not None]


def cmd_catalog(args) -> int:
    specs = default_catalog()
    if args.action == "list":
        for s in specs:
            G = build(s)
            if args.max_order is None or G.order <= args.max_order:
                print(f"{s.label}\t{G.order}")
        return EXIT_OK
    sigmas = [load_sigma(s) for s in (args.sigma or list(PRESETS))]
    statements = args.statements or list(STATEMENTS)
    for sid in statements:
        if sid not in STATEMENTS:
            raise UsageError(f"unknown statement {sid!r}")
    options = {"quantifier_A": args.quantifier, "quantifier_C11": args.quantifier}
    t0 = time.perf_counter()
    entries = run_catalog(specs, sigmas, statements, args.max_order, args.jobs, options)
    elapsed = time.perf_counter() - t0
    settings = {"max_order": args.max_order, "sigmas": [s.label for s in sigmas],
                "statements": statements, "quantifier": args.quantifier,
                "catalog_size": len(specs)}
    data = report.catalog_report(entries, settings, elapsed if args.timing else None)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.dumps(data))
    s = data["summary"]
    print(f"groups: {s['groups']}  verdicts: {s['verdicts']}  consistent: {s['consistent']}  "
          f"inconsistent: {s['inconsistent']}  skipped: {s['skipped']}  "
          f"not applicable: {s['not_applicable']}  ({elapsed:.1f}s)")
    for v in data["inconsistencies"]:
        print(f"INCONSISTENT [{v['statement_id']}] {v['group_label']} / {v['sigma_label']}: "
              f"{v['witness']}")
    if data["inconsistencies"]:
        return EXIT_INCONSISTENT
    if s["skipped"] or s["groups_over_caps"]:
        return EXIT_RESOURCE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sigmahall",
                                description="Complete Hall sigma-sets and supersolubility checks")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="Hall sigma-sets, sigma-basis status, chief series")
    a.add_argument("group", help="spec string (e.g. metacyclic:7:6) or group file")
    a.add_argument("--sigma", default="sylow", help="preset, sigma file or inline 'sigma ...'")
    a.add_argument("--json", action="store_true", help="print a JSON report")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="check one statement on one group")
    v.add_argument("--statement", required=True, choices=STATEMENTS)
    v.add_argument("group")
    v.add_argument("--sigma", default="sylow")
    v.add_argument("--quantifier", choices=("exists", "forall"), default="exists",
                   help="quantifier over complete sets for A and C1.1")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="run or list the built-in catalog")
    c.add_argument("action", choices=("run", "list"))
    c.add_argument("--max-order", type=int, default=None)
    c.add_argument("--sigma", action="append", help="repeatable; defaults to all presets")
    c.add_argument("--statements", nargs="+", default=None, metavar="ID")
    c.add_argument("--json", metavar="OUT", help="write the JSON report here")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--quantifier", choices=("exists", "forall"), default="exists")
    c.add_argument("--timing", action="store_true",
                   help="add wall-clock seconds to the JSON report (breaks byte determinism)")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigurationError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
