"""Command-line front end.

    k3hilb classify --t 10 --format json
    k3hilb cone --t 2
    k3hilb pell --d 2 --n 1 --all-up-to 3
    k3hilb scan --from 2 --to 500 --only-nontrivial --jobs 4

Exit codes: 0 ok, 2 usage or domain error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import K3HilbError, UnsupportedN
from .oracle import brute_pell
from .pell import (
    is_square,
    minimal_solution_general,
    minimal_solution_p1,
    minimal_solution_pm1,
    positive_solutions,
    solution_power,
)
from .report import build_report, render, to_dict, verify_pell

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3

FORMATS = ("text", "json", "csv")


def _positive_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _int(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3hilb",
        description="Ample cone and automorphisms of the Hilbert square of a generic K3 surface of degree 2t.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full report for one t")
    p.add_argument("--t", type=_positive_int, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracles")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("cone", help="ample cone for one t")
    p.add_argument("--t", type=_positive_int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("pell", help="solve x^2 - D y^2 = N")
    p.add_argument("--d", type=_int, required=True)
    p.add_argument("--n", type=_int, required=True)
    p.add_argument("--all-up-to", type=_positive_int, default=None, metavar="K",
                   help="list the first K positive solutions")
    p.add_argument("--brute", type=_positive_int, default=None, metavar="YMAX",
                   help="exhaustive search over 0 <= y <= YMAX (any N)")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("scan", help="one row per t over a range")
    p.add_argument("--from", dest="start", type=_int, required=True)
    p.add_argument("--to", dest="stop", type=_int, required=True)
    p.add_argument("--only-nontrivial", action="store_true")
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--format", choices=FORMATS, default="text")
    return parser


def _pair(p) -> str:
    return f"({p[0]},{p[1]})"


def cmd_classify(args, out) -> int:
    report = build_report(args.t, do_verify=args.verify)
    out.write(render([report], args.format))
    if args.verify and not report.verified:
        print(f"verification failed for t={args.t}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_cone(args, out) -> int:
    r = build_report(args.t)
    c = r.cone
    if args.format == "json":
        d = to_dict(r)
        out.write(json.dumps({"t": d["t"], "cone": d["cone"]}, sort_keys=True) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "ray1", "ray2", "case", "inequality"])
        w.writerow([r.t, "%d,%d" % c.ray1, "%d,%d" % c.ray2, c.case, c.inequality])
        out.write(buf.getvalue())
    else:
        out.write(f"t = {r.t}\nray1: {_pair(c.ray1)}\nray2: {_pair(c.ray2)}\ncase: {c.case}\n"
                  f"ample cone: {c.inequality}\n")
    return EXIT_OK


def _pell_solutions(D: int, N: int, k: int) -> list:
    if N == 1:
        unit = minimal_solution_p1(D)
        return [solution_power(unit, n) for n in range(1, k + 1)]
    if N == -1:
        z = minimal_solution_pm1(D)
        return [] if z is None else [solution_power(z, 2 * n + 1) for n in range(k)]
    return positive_solutions(D, N, k)


def cmd_pell(args, out) -> int:
    D, N = args.d, args.n
    if D < 2 or is_square(D):
        print(f"D={D} must be a non-square integer >= 2", file=sys.stderr)
        return EXIT_USAGE
    if N == 0:
        raise UnsupportedN("N = 0 is not supported")
    if args.brute is not None:
        sols = [s for s in brute_pell(D, N, args.brute) if s.positive]
        if args.all_up_to is not None:
            sols = sols[: args.all_up_to]
    else:
        if N not in (-1, 1, 5):
            print("only N in {-1, 1, 5} without --brute", file=sys.stderr)
            return EXIT_USAGE
        minimal = minimal_solution_general(D, N)
        sols = [] if minimal is None else [minimal]
        if args.all_up_to is not None and minimal is not None:
            sols = _pell_solutions(D, N, args.all_up_to)

    rows = [(s.x, s.y) for s in sols]
    if args.format == "json":
        out.write(json.dumps({"D": str(D), "N": str(N), "solutions": [[str(x), str(y)] for x, y in rows]}) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["D", "N", "x", "y"])
        for x, y in rows:
            w.writerow([D, N, x, y])
        out.write(buf.getvalue())
    else:
        eq = f"x^2-{D}y^2={N}"
        if not rows:
            out.write(f"{eq}: no solution\n")
        else:
            out.write(f"{eq}: " + ", ".join(_pair(r) for r in rows) + "\n")

    if args.verify:
        problems = verify_pell(D, N)
        for msg in problems:
            print(msg, file=sys.stderr)
        if problems:
            return EXIT_VERIFY
    return EXIT_OK


def _scan_text(reports) -> str:
    lines = [f"{'t':>6}  {'aut':<24}{'cone case':<12}{'inequality':<28}D"]
    for r in reports:
        d = f"{r.aut.D[0]}h-{r.aut.D[1]}delta" if r.aut.D else "-"
        lines.append(f"{r.t:>6}  {r.aut.tag:<24}{r.cone.case:<12}{r.cone.inequality:<28}{d}")
    return "\n".join(lines) + "\n"


def scan_reports(start: int, stop: int, jobs: int = 1) -> list:
    ts = range(start, stop + 1)
    if jobs == 1:
        return [build_report(t) for t in ts]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order regardless of completion order
        return list(pool.map(build_report, ts, chunksize=max(1, len(ts) // (4 * jobs))))


def cmd_scan(args, out) -> int:
    if args.start < 1 or args.stop < args.start:
        print(f"bad range {args.start}..{args.stop}", file=sys.stderr)
        return EXIT_USAGE
    reports = scan_reports(args.start, args.stop, args.jobs)
    if args.only_nontrivial:
        reports = [r for r in reports if r.aut.tag != "trivial"]
    if args.format == "text":
        out.write(_scan_text(reports))
    else:
        out.write(render(reports, args.format))
    return EXIT_OK


COMMANDS = {"classify": cmd_classify, "cone": cmd_cone, "pell": cmd_pell, "scan": cmd_scan}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except K3HilbError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
