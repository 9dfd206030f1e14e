"""Command-line entry point: ``lcgroups <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..config import CapExceeded, caps
from ..constructors import GroupSpecError, InvalidTable, build_group
from ..lcm import is_cp2, is_lcm_group, lc_subgroup, lcm_member, lcm_set, nlcm_check
from ..lcseries import lc_series
from ..perm import FiniteGroup, center
from ..structure import is_nilpotent, is_solvable, is_supersolvable, nilpotency_class
from .campaigns import CAMPAIGNS, CampaignReport, run_all, run_campaign
from .corpus import default_corpus
from .groupfile import GroupFileError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(payload: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        out.write(f"{key}: {value}\n")


def _group(text: str) -> FiniteGroup:
    try:
        return build_group(text)
    except (GroupSpecError, GroupFileError, InvalidTable, OSError) as exc:
        raise UsageError(f"bad group spec {text!r}: {exc}") from exc


def cmd_info(args) -> int:
    G = _group(args.spec)
    _emit({
        "group": args.spec,
        "order": G.order,
        "exponent": G.exponent,
        "center_order": center(G).order,
        "abelian": G.is_abelian,
        "nilpotent": is_nilpotent(G),
        "nilpotency_class": nilpotency_class(G),
        "solvable": is_solvable(G),
        "supersolvable": is_supersolvable(G),
    }, args.format)
    return EXIT_OK


def cmd_lcm(args) -> int:
    G = _group(args.spec)
    L = lcm_set(G)
    payload = {
        "group": args.spec,
        "order": G.order,
        "lcm_size": len(L),
        "lcm_elements": [G.elements[i].cycle_string() for i in sorted(L)],
        "lc_order": lc_subgroup(G).order,
        "lcm_group": is_lcm_group(G),
    }
    if args.witnesses:
        payload["witnesses"] = [lcm_member(G, i).describe(G) for i in range(G.order) if i not in L]
    _emit(payload, args.format)
    return EXIT_OK


def cmd_lc_series(args) -> int:
    G = _group(args.spec)
    r = lc_series(G)
    _emit({
        "group": args.spec,
        "terms": r.orders,
        "class": r.lc_class,
        "reaches_group": r.terminated_at_G,
        "factors_nilpotent": list(r.factors_nilpotent),
        "lc_nilpotent": r.lc_nilpotent,
    }, args.format)
    return EXIT_OK


def cmd_cp2(args) -> int:
    G = _group(args.spec)
    v = is_cp2(G)
    payload = {"group": args.spec, "cp2": v.holds, "structural_route": v.structural_route,
               "structural_holds": v.structural_holds}
    if v.counterexample:
        x, y, ox, oy, oxy = v.counterexample
        payload["counterexample"] = {"x": G.elements[x].cycle_string(), "y": G.elements[y].cycle_string(),
                                     "orders": [ox, oy, oxy]}
    _emit(payload, args.format)
    return EXIT_OK


def cmd_nlcm(args) -> int:
    G = _group(args.spec)
    payload = {"group": args.spec}
    payload.update(nlcm_check(G).as_dict())
    _emit(payload, args.format)
    return EXIT_OK


def _emit_report(report: CampaignReport, fmt: str) -> None:
    if fmt == "json":
        _emit(report.as_dict(), "json")
        return
    for row in report.rows:
        line = f"{row.campaign:15} {row.verdict:12} {row.group}"
        if row.witness:
            line += "  witness=" + json.dumps(row.witness, sort_keys=True)
        print(line)
    s = report.summary
    print(f"{report.campaign}: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped, {s['error']} error")


def cmd_verify(args) -> int:
    if args.campaign == "all":
        report = run_all(args.filter)
    elif args.campaign in CAMPAIGNS:
        report = run_campaign(args.campaign, args.filter)
    else:
        raise UsageError(f"unknown campaign {args.campaign!r}; known: all, {', '.join(CAMPAIGNS)}")
    if args.report:
        Path(args.report).write_text(json.dumps(report.as_dict(), sort_keys=True, indent=2) + "\n")
    _emit_report(report, args.format)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_corpus_list(args) -> int:
    entries = default_corpus()
    if args.format == "json":
        _emit({"entries": [{"name": e.name, "tags": sorted(e.tags)} for e in entries]}, "json")
    else:
        for e in entries:
            print(f"{e.name:24} {','.join(sorted(e.tags))}")
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # Registered on the top parser and on every subparser so flags work on either side.
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--cap", type=_positive, default=default, help="group order cap")
    p.add_argument("--lattice-cap", type=_positive, default=default, help="subgroup lattice order cap")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS if suppress else "text")
    p.add_argument("--seedless", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="reserved; rejected because nothing here is randomized")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(prog="lcgroups", parents=[_global_flags(suppress=False)],
                                     description="LCM-sets, LC-series and CP2 checks for finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("info", cmd_info, "basic invariants"),
        ("lcm", cmd_lcm, "LCM set and LC subgroup"),
        ("lc-series", cmd_lc_series, "LC-series and LC-class"),
        ("cp2", cmd_cp2, "CP2 membership"),
        ("nlcm", cmd_nlcm, "minimal non-LCM check"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("spec", help='group expression, e.g. "Dih(8)" or "prod(Alt(4),Cyc(2))"')
        if name == "lcm":
            p.add_argument("--witnesses", action="store_true", help="explain every non-member")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", parents=[common], help="run a campaign over the corpus")
    p.add_argument("campaign", help="campaign id or 'all'")
    p.add_argument("--filter", help="corpus tag or entry name")
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="corpus utilities")
    csub = p.add_subparsers(dest="corpus_command", required=True)
    c = csub.add_parser("list", parents=[common], help="list corpus entries")
    c.set_defaults(func=cmd_corpus_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.seedless:
        print("error: --seedless is reserved; no randomized algorithms exist", file=sys.stderr)
        return EXIT_USAGE
    try:
        with caps(order=args.cap, lattice=args.lattice_cap):
            return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
