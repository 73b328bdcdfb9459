"""Command line entry points.

Every subcommand prints human-readable text by default and a stable JSON
document with ``--json``; ``--out FILE`` redirects either form to a file.
Series commands share ``--max-degree`` (3 to 20); per-point commands
take ``--points`` with the range the underlying computation supports.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import genus0, genus1_boundary, genus1_fiber, pipeline, verification


def _max_degree_arg(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("max degree must be an integer")
    if not 3 <= n <= 20:
        raise argparse.ArgumentTypeError("max degree must be between 3 and 20")
    return n


def _points_arg(lo: int, hi: int):
    def parse(value: str) -> int:
        try:
            n = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError("points must be an integer")
        if not lo <= n <= hi:
            raise argparse.ArgumentTypeError(f"points must be between {lo} and {hi}")
        return n

    return parse


def _partition_name(lam, head: str = "p") -> str:
    return head + "[" + ",".join(str(part) for part in lam) + "]"


def _series_lines(series, basis: str = "power") -> list[str]:
    lines = []
    for n in range(series.max_degree + 1):
        if basis == "schur":
            table = series.to_schur(n)
            head = "s"
        else:
            table = series.degree_terms(n)
            head = "p"
        if not table:
            continue
        lines.append(f"degree {n}:")
        for lam in sorted(table):
            lines.append(f"  {_partition_name(lam, head)} -> {table[lam]!r}")
    return lines or ["(zero)"]


def _schur_series_json(series) -> dict:
    return series.to_json(basis="schur")


def _stratum_json(ec) -> dict:
    bins = []
    for (m, w) in sorted(ec.bins):
        table = [[list(ct), v] for ct, v in sorted(ec.bins[(m, w)].items())]
        bins.append([m, w, table])
    sym = []
    for (k, j), table in sorted(ec.sym_multiplicities().items()):
        sym.append([k, j, [[list(ct), v] for ct, v in sorted(table.items())]])
    alt = [[m, w, c] for (m, w), c in sorted(ec.alternating_parts().items())]
    return {"points": ec.n, "bins": bins, "sym_multiplicities": sym, "alternating": alt}


def _emit(args, command: str, result, text_lines: list[str], max_degree=None) -> None:
    if args.json:
        doc = {
            "schema_version": 1,
            "command": command,
            "max_degree": max_degree,
            "result": result,
        }
        out = json.dumps(doc, indent=2, sort_keys=True)
    else:
        out = "\n".join(text_lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


# ---------------------------------------------------------------------------
# Subcommand bodies.


def _cmd_a0(args) -> int:
    series = genus0.a0_series(args.max_degree)
    result = series.to_json(basis=args.basis)
    _emit(args, "a0", result, _series_lines(series, args.basis), args.max_degree)
    return 0


def _cmd_b0prime(args) -> int:
    series = genus0.b0_prime(args.max_degree)
    result = series.to_json(basis=args.basis)
    _emit(args, "b0prime", result, _series_lines(series, args.basis), args.max_degree)
    return 0


def _cmd_lie(args) -> int:
    series = genus0.signed_lie(args.max_degree) if args.signed else genus0.ch_lie(args.max_degree)
    name = "signed lie" if args.signed else "lie"
    result = {"signed": args.signed, "series": series.to_json(basis=args.basis)}
    lines = [f"{name} character series:"] + _series_lines(series, args.basis)
    _emit(args, "lie", result, lines, args.max_degree)
    return 0


def _cmd_rows_check(args) -> int:
    tables = genus0.poincare_schur(args.points)
    lines = []
    result = []
    for i, rep in enumerate(tables):
        lines.append(f"H^{i}:")
        entries = []
        for lam in sorted(rep):
            lines.append(f"  {_partition_name(lam, 's')} x {rep[lam]}  ({lam.rows} rows, bound {i + 1})")
            entries.append([list(lam), rep[lam]])
        result.append(entries)
    lines.append("row bounds satisfied: every constituent of H^i has at most i+1 rows")
    _emit(args, "rows-check", {"points": args.points, "cohomology": result}, lines)
    return 0


def _cmd_fiber(args) -> int:
    dims = genus1_fiber.alternating_component(args.points)
    lines = [f"sign-isotypic fiber cohomology, {args.points} points:"]
    for (deg, w) in sorted(dims):
        lines.append(f"  degree {deg}, weight {w}: multiplicity {dims[(deg, w)]}")
    result = {
        "points": args.points,
        "multiplicities": [[deg, w, dims[(deg, w)]] for (deg, w) in sorted(dims)],
    }
    _emit(args, "fiber", result, lines)
    return 0


def _cmd_open_stratum(args) -> int:
    ec = genus1_fiber.ec_open_stratum(args.points)
    lines = [f"equivariant weight table, {args.points} points:"]
    for (m, w) in sorted(ec.bins):
        row = ", ".join(
            f"{_partition_name(ct)}:{v}" for ct, v in sorted(ec.bins[(m, w)].items())
        )
        lines.append(f"  (degree {m}, weight {w})  {row}")
    lines.append("local-system multiplicities (k, twist):")
    for (k, j), table in sorted(ec.sym_multiplicities().items()):
        row = ", ".join(f"{_partition_name(ct)}:{v}" for ct, v in sorted(table.items()))
        lines.append(f"  (k={k}, j={j})  {row}")
    lines.append("sign component by (degree, weight):")
    for (m, w), c in sorted(ec.alternating_parts().items()):
        lines.append(f"  ({m}, {w}): {c}")
    _emit(args, "open-stratum", _stratum_json(ec), lines)
    return 0


def _cmd_necklace(args) -> int:
    neck = genus1_boundary.necklace_series(args.max_degree)
    corr = genus1_boundary.correction_series(args.max_degree)
    lines = ["necklace series:"] + _series_lines(neck)
    lines += ["correction series:"] + _series_lines(corr)
    result = {"necklace": neck.to_json(), "correction": corr.to_json()}
    _emit(args, "necklace", result, lines, args.max_degree)
    return 0


def _cmd_boundary(args) -> int:
    alt = genus1_boundary.boundary_alt(args.max_degree)
    lines = ["alternating image of the boundary sum:"]
    for n in range(1, args.max_degree + 1):
        lines.append(f"  t^{n}: {alt.coefficient(n)!r}")
    result = {
        "series": genus1_boundary.boundary_sum(args.max_degree).to_json(),
        "alt": alt.to_json(),
    }
    _emit(args, "boundary", result, lines, args.max_degree)
    return 0


def _cmd_interior(args) -> int:
    lines = ["interior sign-isotypic classes:"]
    table = []
    for n in range(1, args.points + 1):
        cls = genus1_fiber.interior_alternating(n)
        lines.append(f"  n={n}: {cls!r}")
        table.append([n, cls.to_json()])
    _emit(args, "interior", {"classes": table}, lines)
    return 0


def _cmd_motive(args) -> int:
    res = pipeline.main_theorem(args.points)
    lines = [
        f"n = {res.n}",
        f"interior: {res.interior!r}",
        f"boundary: {res.boundary!r}",
        f"total:    {res.total!r}",
        f"rank:     {res.rank}",
        "hodge:    " + (", ".join(f"h^{{{p},{q}}} x {m}" for p, q, m in res.hodge) or "(none)"),
    ]
    _emit(args, "motive", res.to_json(), lines)
    return 0


def _cmd_verify_all(args) -> int:
    results = verification.run_all(args.max_degree)
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark} {r.name}" + (f": {r.detail}" if r.detail else ""))
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    result = [
        {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
    ]
    _emit(args, "verify-all", result, lines, args.max_degree)
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspmotive",
        description="exact symmetric-function computations for pointed curve spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, series=False, basis=False, points=None):
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.add_argument("--out", metavar="FILE", help="write output to FILE")
        if series:
            p.add_argument(
                "--max-degree",
                type=_max_degree_arg,
                default=14,
                help="truncation degree, 3 to 20 (default 14)",
            )
        if basis:
            p.add_argument(
                "--basis",
                choices=("power", "schur"),
                default="power",
                help="output basis for series terms",
            )
        if points is not None:
            lo, hi = points
            p.add_argument(
                "--points",
                "-n",
                type=_points_arg(lo, hi),
                required=True,
                help=f"number of marked points, {lo} to {hi}",
            )

    p = sub.add_parser("a0", help="open genus-zero configuration series")
    common(p, series=True, basis=True)
    p.set_defaults(fn=_cmd_a0)

    p = sub.add_parser("b0prime", help="stable genus-zero series")
    common(p, series=True, basis=True)
    p.set_defaults(fn=_cmd_b0prime)

    p = sub.add_parser("lie", help="Lie character series")
    common(p, series=True, basis=True)
    p.add_argument("--signed", action="store_true", help="apply the sign twist")
    p.set_defaults(fn=_cmd_lie)

    p = sub.add_parser("rows-check", help="cohomology Schur tables with row bounds")
    common(p, points=(3, 10))
    p.set_defaults(fn=_cmd_rows_check)

    p = sub.add_parser("fiber", help="sign component of the fiber power cohomology")
    common(p, points=(2, genus1_fiber.MAX_FIBER_POINTS))
    p.set_defaults(fn=_cmd_fiber)

    p = sub.add_parser("open-stratum", help="equivariant weight table of the open stratum")
    common(p, points=(1, genus1_fiber.MAX_STRATUM_POINTS))
    p.set_defaults(fn=_cmd_open_stratum)

    p = sub.add_parser("necklace", help="cycle and correction boundary series")
    common(p, series=True)
    p.set_defaults(fn=_cmd_necklace)

    p = sub.add_parser("boundary", help="boundary sum and its alternating image")
    common(p, series=True)
    p.set_defaults(fn=_cmd_boundary)

    p = sub.add_parser("interior", help="interior sign-isotypic classes up to n points")
    common(p, points=(1, pipeline.MAX_POINTS))
    p.set_defaults(fn=_cmd_interior)

    p = sub.add_parser("motive", help="assembled sign-isotypic motive for n points")
    common(p, points=(1, pipeline.MAX_POINTS))
    p.set_defaults(fn=_cmd_motive)

    p = sub.add_parser("verify-all", help="run the full acceptance battery")
    common(p, series=True)
    p.set_defaults(fn=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
