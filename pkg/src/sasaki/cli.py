"""Command-line front end: ``sasaki verify|report-all|ricci|lattice``.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
parameter error.  JSON output is deterministic (sorted catalog order, no
timings unless ``--timing`` is given); rationals print as ``p/q``.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .catalog import (Catalog, CatalogError, VerifyReport, lattice_report, load_catalog,
                      verify_instance)
from .curvature import ricci
from .exact import Mat, fmt_q, q

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_params(text: Optional[str]) -> Dict[str, Fraction]:
    """``"a1=1,b1=-1/2"`` -> ``{"a1": 1, "b1": -1/2}``."""
    out: Dict[str, Fraction] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise UsageError(f"bad parameter {item!r}; expected name=value")
        k, v = (s.strip() for s in item.split("=", 1))
        try:
            out[k] = q(v)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad value for {k}: {v!r}") from None
    return out


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _detail(d) -> str:
    if d is None:
        return ""
    if isinstance(d, dict):
        return ", ".join(f"{k}={v}" for k, v in d.items())
    if isinstance(d, list):
        return " ".join(str(x) for x in d)
    return str(d)


def _md_report(rep: VerifyReport, title: str) -> List[str]:
    head = ", ".join(f"{k}={v}" for k, v in rep.params.items())
    lines = [f"## {rep.id}" + (f" ({head})" if head else "") + f": {title}", "",
             "| check | result | detail |", "|---|---|---|"]
    for c in rep.checks:
        lines.append(f"| {c.name} | {c.status} | {_detail(c.detail)} |")
    ob = rep.get("obstructed")
    if ob is not None:
        lines += ["", f"obstructed: {'true' if ob.status == 'pass' else 'false'}"]
    lines += ["", f"overall: {'pass' if rep.ok else 'FAIL'}", ""]
    return lines


def _instances(cat: Catalog, id: str, params: Dict[str, Fraction]):
    if params:
        return [cat.instantiate(id, params)]
    return cat.instances(id)


def cmd_verify(args, out) -> int:
    cat = load_catalog()
    entry = cat.get(args.id)
    params = parse_params(args.params)
    t0 = time.perf_counter()
    reports = [verify_instance(cat, inst) for inst in _instances(cat, args.id, params)]
    wall = time.perf_counter() - t0
    ok = all(r.ok for r in reports)
    if args.json:
        doc = {"id": args.id, "ok": ok, "reports": [r.to_json_obj() for r in reports]}
        if args.timing:
            doc["wall_time_s"] = round(wall, 3)
        out.write(_dump(doc))
    else:
        lines = []
        for r in reports:
            lines += _md_report(r, entry.title)
        lines.append(f"wall time: {wall:.2f} s")
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def _classification_md(cat: Catalog, rows) -> List[str]:
    lines = ["## Classification", "",
             "| entry | class | center | derived | lower central | unimodular | alpha-Einstein samples |",
             "|---|---|---|---|---|---|---|"]
    by_id: Dict[str, List[VerifyReport]] = {}
    for r in rows:
        by_id.setdefault(r.id, []).append(r)
    for e in cat:
        if e.classification is None:
            continue
        reps = by_id.get(e.id, [])
        prof = next((c.detail for r in reps for c in r.checks if c.name == "profile" and c.status == "pass"), None)
        ae = sum(1 for r in reps for c in r.checks if c.name == "alpha_einstein" and c.detail)
        if prof is None:
            lines.append(f"| {e.title} | {e.classification} | ? | ? | ? | ? | {ae}/{len(reps)} |")
            continue
        lines.append(f"| {e.title} | {e.classification} | {prof['dim_center']} | {prof['derived_dims']} | "
                     f"{prof['lower_central_dims']} | {prof['unimodular']} | {ae}/{len(reps)} |")
    return lines + [""]


def cmd_report_all(args, out) -> int:
    cat = load_catalog()
    t0 = time.perf_counter()
    rows: List[VerifyReport] = []
    for e in cat:
        for inst in cat.instances(e.id):
            rows.append(verify_instance(cat, inst))
    wall = time.perf_counter() - t0
    failed = [r for r in rows if not r.ok]
    summary = {"rows": len(rows), "passed": len(rows) - len(failed), "failed": len(failed)}
    failures = [{"id": r.id, "params": r.params, "checks": [c.name for c in r.checks if c.status == "fail"]}
                for r in failed]
    if args.format == "json":
        doc = {"catalog_version": cat.version, "summary": summary, "failures": failures,
               "rows": [r.to_json_obj() for r in rows]}
        if args.timing:
            doc["wall_time_s"] = round(wall, 3)
        out.write(_dump(doc))
    else:
        lines = ["# Catalog report", "",
                 "| entry | params | result | failing checks |", "|---|---|---|---|"]
        for r in rows:
            p = ", ".join(f"{k}={v}" for k, v in r.params.items())
            bad = ", ".join(c.name for c in r.checks if c.status == "fail")
            lines.append(f"| {r.id} | {p} | {'pass' if r.ok else 'FAIL'} | {bad} |")
        lines += [""] + _classification_md(cat, rows)
        lines.append(f"rows: {summary['rows']}, passed: {summary['passed']}, failed: {summary['failed']}")
        lines.append(f"wall time: {wall:.2f} s")
        out.write("\n".join(lines) + "\n")
    if failed:
        for f in failures:
            print(f"FAIL {f['id']} {f['params']}: {', '.join(f['checks'])}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def format_matrix(M: Mat) -> str:
    n = M.rows
    if all(M[i, j] == 0 for i in range(n) for j in range(n) if i != j):
        return "diag(" + ", ".join(fmt_q(M[i, i]) for i in range(n)) + ")"
    return "\n".join("[" + ", ".join(fmt_q(x) for x in r) + "]" for r in M.to_rows())


def cmd_ricci(args, out) -> int:
    cat = load_catalog()
    entry = cat.get(args.id)
    if entry.kind != "sasakian":
        raise UsageError(f"{args.id} carries no metric")
    inst = cat.instantiate(args.id, parse_params(args.params))
    Ric = ricci(inst.algebra, inst.structure.g)
    if args.json:
        out.write(_dump({"id": args.id, "params": inst.params_json(),
                         "ricci": [[fmt_q(x) for x in r] for r in Ric.to_rows()]}))
    else:
        out.write(format_matrix(Ric) + "\n")
    return EXIT_OK


def cmd_lattice(args, out) -> int:
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    rep = lattice_report(args.samples, args.seed)
    if args.json:
        out.write(_dump(rep))
    else:
        out.write(f"{rep['closed']}/{rep['samples']} closed, {rep['associative']}/{rep['samples']} associative, "
                  f"{rep['unit']}/{rep['samples']} unit (seed {rep['seed']})\n")
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sasaki", description="Exact checks for Sasakian Lie algebras.")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="run every check on one catalog entry")
    v.add_argument("id")
    v.add_argument("--params", help="comma separated name=value (rationals as p/q)")
    fmt = v.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--md", action="store_true", help="Markdown tables (default)")
    v.add_argument("--timing", action="store_true", help="include wall time in JSON")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report-all", help="verify the whole catalog")
    r.add_argument("--format", choices=("json", "md"), default="md")
    r.add_argument("--timing", action="store_true")
    r.set_defaults(func=cmd_report_all)

    c = sub.add_parser("ricci", help="print the Ricci matrix of an entry")
    c.add_argument("id")
    c.add_argument("--params")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_ricci)

    lt = sub.add_parser("lattice", help="closure and associativity on the G_3 lattice")
    lt.add_argument("--samples", type=int, default=100)
    lt.add_argument("--seed", type=int, default=0)
    lt.add_argument("--json", action="store_true")
    lt.set_defaults(func=cmd_lattice)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (CatalogError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
