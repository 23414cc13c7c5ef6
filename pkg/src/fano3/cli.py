"""Command-line surface: searches, eliminations, oracle tables.

Exit codes: 0 success, 1 internal invariant violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .basket import Basket, gorenstein_index
from .certificates import certificate_to_dict
from .duval import DuValType, class_group, invariants
from .eliminate import eliminate_candidate, candidate_for_case, run_full_pipeline, group_c_closed_form
from .lb import LBContext, lb
from .search import ceil_display, run_search
from .tables import TABLE_MAIN, row
from .wps import WeightedP3, h0 as wps_h0

SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


def _rat(value) -> dict:
    f = Fraction(value)
    return {"num": f.numerator, "den": f.denominator, "display": str(f)}


def _candidate_record(c) -> dict:
    return {
        "basket": [list(p) for p in c.basket.as_tuples()],
        "q": c.q,
        "r_X": c.r_x,
        "J_A": c.j_a,
        "rXc13": c.rXc13,
        "rXc2c1": c.rXc2c1,
        "prime_powers": list(c.prime_powers),
        "lb_values": list(c.lb_values),
        "nabla": _rat(c.nabla),
        "nabla_display": c.nabla_display,
    }


CANDIDATE_COLUMNS = [
    "no", "basket", "q", "r_X", "rXc13", "rXc2c1", "prime_powers",
    "lb_values", "nabla", "nabla_display",
]


def _candidates_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CANDIDATE_COLUMNS)
    for i, r in enumerate(records, 1):
        writer.writerow([
            i,
            ";".join(f"({a},{b})" for a, b in r["basket"]),
            r["q"], r["r_X"], r["rXc13"], r["rXc2c1"],
            ";".join(str(x) for x in r["prime_powers"]),
            ";".join(str(x) for x in r["lb_values"]),
            f"{r['nabla']['num']}/{r['nabla']['den']}",
            r["nabla_display"],
        ])
    return buf.getvalue()


def _candidates_md(records) -> str:
    header = ["No", "B", "q", "r_X", "r_X c1^3", "r_X c2c1", "{p^a}", "{LB(p^a)}", "nabla"]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for i, r in enumerate(records, 1):
        basket = ",".join(f"({a},{b})" for a, b in r["basket"])
        lines.append(
            "| " + " | ".join(str(x) for x in [
                i, basket, r["q"], r["r_X"], r["rXc13"], r["rXc2c1"],
                ",".join(str(x) for x in r["prime_powers"]),
                ",".join(str(x) for x in r["lb_values"]),
                r["nabla_display"],
            ]) + " |"
        )
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_config(path: str | None) -> dict:
    """Plain key-value file: 'qmin = 66' style lines, '#' comments."""
    if not path:
        return {}
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"malformed config line: {line!r}")
            key, val = (part.strip() for part in line.split("=", 1))
            out[key] = val
    allowed = {"qmin", "jobs", "outdir"}
    unknown = set(out) - allowed
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return out


def cmd_search(args) -> int:
    cfg = _load_config(args.config)
    qmin = args.qmin if args.qmin is not None else int(cfg.get("qmin", 66))
    jobs = args.jobs if args.jobs is not None else int(cfg.get("jobs", 1))
    out = args.out
    if out is None and "outdir" in cfg:
        out = f"{cfg['outdir']}/search.{args.format}"
    candidates = run_search(qmin, args.mode, jobs)
    records = [_candidate_record(c) for c in candidates]
    if args.format == "json":
        text = json.dumps(
            {"schema_version": SCHEMA_VERSION, "payload": records}, indent=2
        ) + "\n"
    elif args.format == "csv":
        text = _candidates_csv(records)
    else:
        text = _candidates_md(records)
    _emit(text, out)
    return 0


def cmd_eliminate(args) -> int:
    if args.all:
        report = run_full_pipeline(args.jobs or 1)
        payload = [certificate_to_dict(v.certificate) for _, v in report.verdicts]
        summary = {
            "total": report.total,
            "eliminated": report.eliminated,
            "survivors": report.survivors,
            "mechanical_steps": report.mechanical_steps,
            "cited_steps": report.cited_steps,
        }
        if report.survivors:
            print(f"survivors remain: {report.survivors}", file=sys.stderr)
            return 1
    else:
        try:
            candidate = candidate_for_case(args.case)
        except KeyError:
            raise UsageError(f"unknown case id {args.case}")
        verdict = eliminate_candidate(args.case, candidate)
        payload = [certificate_to_dict(verdict.certificate)]
        summary = {"eliminated": verdict.eliminated}
        if not verdict.eliminated:
            print(f"case {args.case} not eliminated", file=sys.stderr)
            return 1
    if args.format == "json":
        text = json.dumps(
            {"schema_version": SCHEMA_VERSION, "summary": summary, "payload": payload},
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case_id", "step", "kind", "outcome", "domain_size", "citation", "description"])
        for cert in payload:
            for i, s in enumerate(cert["steps"], 1):
                writer.writerow([
                    cert["case_id"], i, s["kind"], s["outcome"],
                    s["domain_size"] if s["domain_size"] is not None else "",
                    s["citation"] or "", s["description"],
                ])
        text = buf.getvalue()
    else:
        lines = []
        for cert in payload:
            lines.append(f"### Case {cert['case_id']}")
            for i, s in enumerate(cert["steps"], 1):
                tag = f" [{s['citation']}]" if s["citation"] else ""
                dom = f" (domain {s['domain_size']})" if s["domain_size"] else ""
                lines.append(f"{i}. **{s['kind']}**{tag}: {s['description']}{dom} -> {s['outcome']}")
            lines.append("")
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def _parse_range(text: str):
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    return int(text), int(text)


def _value_table(pairs, args) -> str:
    if args.format == "json":
        return json.dumps(
            {"schema_version": SCHEMA_VERSION, "payload": [list(p) for p in pairs]},
            indent=2,
        ) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(pairs)
        return buf.getvalue()
    lines = ["| key | value |", "|---|---|"]
    lines += [f"| {k} | {v} |" for k, v in pairs]
    return "\n".join(lines) + "\n"


def cmd_h0(args) -> int:
    lo, hi = _parse_range(args.s)
    if not (0 < lo <= hi < 66):
        raise UsageError("s range must sit inside 1..65")
    pairs = [(s, group_c_closed_form(s)) for s in range(lo, hi + 1)]
    _emit(_value_table(pairs, args), args.out)
    return 0


def cmd_wps(args) -> int:
    try:
        weights = [int(x) for x in args.weights.split(",")]
        space = WeightedP3(weights)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed weights: {exc}")
    pairs = [(s, wps_h0(space, s)) for s in range(1, args.smax + 1)]
    _emit(_value_table(pairs, args), args.out)
    return 0


def cmd_lb(args) -> int:
    try:
        R = tuple(int(x) for x in args.R.split(","))
        ctx = LBContext(R)
    except ValueError as exc:
        raise UsageError(f"malformed R: {exc}")
    if args.N < 1:
        raise UsageError("N must be positive")
    pairs = [(args.N, lb(ctx, args.N))]
    _emit(_value_table(pairs, args), args.out)
    return 0


def cmd_duval(args) -> int:
    try:
        t = DuValType.parse(args.type)
    except ValueError as exc:
        raise UsageError(str(exc))
    e, ep, g, j = invariants(t)
    pairs = [("e", e), ("e'", ep), ("g", g), ("j", j),
             ("class_group", "x".join(str(d) for d in class_group(t)) or "1")]
    _emit(_value_table(pairs, args), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fano3",
        description="Exact search-and-eliminate engine for large Fano indices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "md"), default="json")
        p.add_argument("--out", default=None)

    p_search = sub.add_parser("search", help="enumerate candidates above the threshold")
    p_search.add_argument("--qmin", type=int, default=None)
    p_search.add_argument("--mode", choices=("greater", "equal"), default="greater")
    p_search.add_argument("--jobs", type=int, default=None)
    p_search.add_argument("--config", default=None)
    common(p_search)
    p_search.set_defaults(func=cmd_search)

    p_elim = sub.add_parser("eliminate", help="run elimination scripts, emit certificates")
    which = p_elim.add_mutually_exclusive_group(required=True)
    which.add_argument("--case", type=int)
    which.add_argument("--all", action="store_true")
    p_elim.add_argument("--jobs", type=int, default=None)
    common(p_elim)
    p_elim.set_defaults(func=cmd_eliminate)

    p_h0 = sub.add_parser("h0", help="shared closed-form h^0 values")
    p_h0.add_argument("--s", required=True, help="degree or range A..B")
    common(p_h0)
    p_h0.set_defaults(func=cmd_h0)

    p_wps = sub.add_parser("wps", help="weighted projective monomial counts")
    p_wps.add_argument("--weights", required=True)
    p_wps.add_argument("--smax", type=int, required=True)
    common(p_wps)
    p_wps.set_defaults(func=cmd_wps)

    p_lb = sub.add_parser("lb", help="degree lower bound LB(N) for a multiset R")
    p_lb.add_argument("--R", required=True)
    p_lb.add_argument("--N", type=int, required=True)
    common(p_lb)
    p_lb.set_defaults(func=cmd_lb)

    p_duval = sub.add_parser("duval", help="Du Val type invariants")
    p_duval.add_argument("--type", required=True)
    common(p_duval)
    p_duval.set_defaults(func=cmd_duval)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
