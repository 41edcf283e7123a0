"""Command-line front end.

Exit codes: 0 success, 1 golden diff or failed check, 2 usage error, 3 data error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import classify, liealg, orbnum
from .diagram import DiagramError, HoleDiagram
from .enumeration import EnumerationLimitError
from .exactlat import read_lattice
from .orbnum import CycleShape

EXIT_OK, EXIT_DIFF, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3
_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


class UsageError(ValueError):
    pass


@dataclass
class Report:
    data: object
    rows: list[dict] = field(default_factory=list)
    text: str = ""
    status: int = EXIT_OK


def parse_rational(text: str) -> Fraction:
    """Exact rational ``a`` or ``a/b``; decimals are refused."""
    t = text.strip()
    if not _RATIONAL.fullmatch(t):
        raise UsageError(f"not an exact rational: {text!r} (write a/b, no decimals)")
    return Fraction(t)


def parse_vector(text: str) -> tuple[Fraction, ...]:
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise UsageError(f"malformed vector {text!r}")
    return tuple(parse_rational(p) for p in parts)


def _shape(text: str) -> CycleShape:
    try:
        return CycleShape.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _diagram(text: str) -> HoleDiagram:
    try:
        return HoleDiagram.parse(text)
    except DiagramError as exc:
        raise UsageError(str(exc)) from None


# --- subcommands ------------------------------------------------------------------


def cmd_coeffs(args) -> Report:
    if args.n < 1:
        raise UsageError("n must be positive")
    c = orbnum.eisenstein_coeffs(args.n)
    rows = [{"d": d, "c": str(v)} for d, v in sorted(c.items())]
    text = "{" + ", ".join(f"{d}: {v}" for d, v in sorted(c.items())) + "}"
    return Report({"n": args.n, "coefficients": {str(d): str(v) for d, v in sorted(c.items())}}, rows, text)


def cmd_vacuum(args) -> Report:
    s = _shape(args.shape)
    rho = orbnum.vacuum_anomaly(s)
    return Report({"shape": str(s), "rho": str(rho)}, [{"shape": str(s), "rho": str(rho)}], str(rho))


def cmd_bound(args) -> Report:
    s = _shape(args.shape)
    try:
        b = orbnum.dim_bound(s, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    row = {"shape": str(s), "n": args.n, "bound": b}
    return Report(row, [row], str(b))


def cmd_trace_solutions(args) -> Report:
    sols = liealg.trace_identity_solutions()
    if args.count_only:
        return Report({"count": len(sols)}, [{"count": len(sols)}], str(len(sols)))
    rows = [{"structure": str(s), "dim": s.dim, "rank": s.rank, "ratio": str(s.ratio)} for s in sols]
    text = "\n".join(f"{r['structure']}\tdim {r['dim']}\trank {r['rank']}" for r in rows)
    return Report(rows, rows, text)


def cmd_candidates(args) -> Report:
    rows = []
    for p in classify.candidate_pairs():
        v = classify.spurious_norm_filter(p)
        if args.spurious_only and v.keep:
            continue
        rows.append({
            "structure": str(p.structure), "shape": str(p.shape), "n": p.n,
            "diagram": p.expected_diagram.ascii_name, "keep": v.keep,
            "norms": v.norms_string if not v.keep else "",
        })
    lines = [f"{r['structure']}\t{r['shape']}\tn={r['n']}\t{r['diagram']}\t"
             + ("keep" if r["keep"] else f"eliminate ({r['norms']})") for r in rows]
    lines.append(f"{len(rows)} pairs")
    return Report(rows, rows, "\n".join(lines))


def cmd_d12_search(args) -> Report:
    target = _diagram(args.diagram)
    try:
        r = classify.d12_centre_search(target, args.n, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    survivors = [list(h) for h in r.surviving_orbits]
    data = {
        "target": target.ascii_name, "n": r.n, "sign_perm_classes": r.sign_perm_classes,
        "orbit_candidates": r.orbit_candidates, "surviving_orbits": survivors,
        "verified": [{"diagram": c.diagram.ascii_name, "twisted_weight": str(c.twisted_weight)} for c in r.checks],
    }
    rows = [{"target": target.ascii_name, "n": r.n, "h": " ".join(map(str, h)),
             "diagram": c.diagram.ascii_name, "twisted_weight": str(c.twisted_weight)}
            for h, c in zip(survivors, r.checks)]
    lines = [f"{target.ascii_name} n={r.n}: {r.sign_perm_classes} classes, "
             f"{r.orbit_candidates} O(K) orbits, {len(survivors)} surviving"]
    lines += [f"  ({', '.join(map(str, h))}) -> {row['diagram']}, weight {row['twisted_weight']}"
              for h, row in zip(survivors, rows)]
    return Report(data, rows, "\n".join(lines))


def cmd_hole_diagram(args) -> Report:
    try:
        lat = read_lattice(args.lattice)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise classify.DataError(f"cannot load lattice {args.lattice}: {exc}") from None
    centre = parse_vector(args.centre)
    if len(centre) != lat.ambient:
        raise UsageError(f"centre has {len(centre)} entries, lattice ambient dimension is {lat.ambient}")
    rho = parse_rational(args.rho)
    if not 0 <= rho < 1:
        raise UsageError("rho must lie in [0, 1)")
    expected = _diagram(args.expected) if args.expected else None
    check = classify.verify_centre(lat, centre, rho, expected, jobs=args.jobs)
    row = {"diagram": check.diagram.ascii_name, "points": check.points,
           "min_half_norm": str(check.min_half_norm), "twisted_weight": str(check.twisted_weight)}
    text = f"{row['diagram']}: {row['points']} closest vectors, twisted weight {row['twisted_weight']}"
    return Report(row, [row], text)


def cmd_complete(args) -> Report:
    try:
        found = classify.affine_completion_search(args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = classify.centres_to_json(found)
    rows = [{"seed": args.seed, "diagram": d.ascii_name, "nodes": d.node_count} for _, d in found]
    for row, c in zip(rows, data["centres"]):
        row["centre"] = ",".join(f"{n}/{d}" if d != 1 else str(n) for n, d in c["basis_coordinates"])
    text = "\n".join(f"{r['seed']} => {r['diagram']} ({r['nodes']} nodes)" for r in rows)
    return Report(data, rows, text)


def cmd_tables(args) -> Report:
    golden = classify.read_golden(args.golden) if args.golden else None
    reports = classify.reproduce_tables(geometry=not args.no_geometry, golden=golden)
    ndiff = sum(len(r.diffs) for r in reports)
    rows = [{"id": r.id, "no": r.no, "structure": r.structure, "shape": r.shape, "rank": r.rank,
             "n": r.n, "dim": r.dim, "diagram": HoleDiagram.parse(r.diagram).ascii_name,
             "verified_diagram": r.verified_diagram and HoleDiagram.parse(r.verified_diagram).ascii_name or "",
             "diffs": "; ".join(r.diffs)} for r in reports]
    summary = f"{len(reports)} rows verified, {ndiff} diffs"
    lines = [f"{r.id}: {d}" for r in reports for d in r.diffs]
    if not args.verify:
        lines = [f"{r['id']}\t{r['structure']}\t{r['shape']}\tn={r['n']}\tDim {r['dim']}\t{r['diagram']}"
                 for r in rows] + lines
    lines.append(summary)
    data = {"rows": [r.to_json() for r in reports], "summary": summary}
    status = EXIT_DIFF if (args.verify and ndiff) else EXIT_OK
    return Report(data, rows, "\n".join(lines), status)


# --- plumbing -----------------------------------------------------------------------


def _render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.data, indent=2, ensure_ascii=False, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if report.rows:
            writer = csv.DictWriter(buf, fieldnames=list(report.rows[0]), quoting=csv.QUOTE_NONNUMERIC,
                                    lineterminator="\n")
            writer.writeheader()
            writer.writerows(report.rows)
        return buf.getvalue()
    return report.text + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--seed-check", action="store_true", help="re-validate bundled data first")

    p = argparse.ArgumentParser(prog="leechgdh", description="Generalised deep holes of the Leech lattice VOA.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("coeffs", parents=[common], help="coefficients c_n(d)")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("vacuum", parents=[common], help="vacuum anomaly of a cycle shape")
    s.add_argument("shape")
    s.set_defaults(func=cmd_vacuum)

    s = sub.add_parser("bound", parents=[common], help="orbifold dimension bound")
    s.add_argument("shape")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("trace-solutions", parents=[common], help="affine structures meeting the trace identity")
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_trace_solutions)

    s = sub.add_parser("candidates", parents=[common], help="candidate (structure, shape) pairs")
    s.add_argument("--spurious-only", action="store_true", help="only pairs eliminated by the norm filter")
    s.set_defaults(func=cmd_candidates)

    s = sub.add_parser("d12-search", parents=[common], help="centre search for cycle shape 2^12")
    s.add_argument("diagram")
    s.add_argument("--n", type=int, default=None, help="order (defaults to the one forced by the diagram)")
    s.set_defaults(func=cmd_d12_search)

    s = sub.add_parser("hole-diagram", parents=[common], help="closest-vector diagram around a centre")
    s.add_argument("--lattice", required=True, help="lattice JSON file")
    s.add_argument("--centre", required=True, help="ambient vector, comma-separated a/b entries")
    s.add_argument("--rho", required=True, help="vacuum anomaly as a/b")
    s.add_argument("--expected", help="diagram the hole must have")
    s.set_defaults(func=cmd_hole_diagram)

    s = sub.add_parser("complete", parents=[common], help="affine completion of a seed in the Leech lattice")
    s.add_argument("--seed", required=True, help="A~1, A~2 or A~3")
    s.set_defaults(func=cmd_complete)

    s = sub.add_parser("tables", parents=[common], help="reproduce the classification table")
    s.add_argument("--verify", action="store_true", help="exit 1 on any golden diff")
    s.add_argument("--golden", help="alternative golden table JSON")
    s.add_argument("--no-geometry", action="store_true", help="skip the centre checks")
    s.set_defaults(func=cmd_tables)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.seed_check:
            problems = classify.seed_check()
            if problems:
                for msg in problems:
                    print(f"data error: {msg}", file=sys.stderr)
                return EXIT_DATA
        report = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except classify.DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (classify.CentreError, EnumerationLimitError, DiagramError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_DIFF
    out = _render(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
