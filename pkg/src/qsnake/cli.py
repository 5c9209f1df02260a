"""Command line front end: compute, snake, matchings, kasteleyn, fibonacci, verify."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .kasteleyn import (fibonacci_kasteleyn, fibonacci_kasteleyn_numerator,
                        kasteleyn_matrix, verify_kasteleyn)
from .matching import (enumerate_matchings, matching_stat_dp,
                       matching_weight_exp)
from .qrational import (canonical_fraction, cf_expand, fibonacci_number,
                        fibonacci_polys, q_cf_eval, q_continuant,
                        q_map_general, q_matrix_eval, q_rational)
from .render import render
from .snake import snake_graph
from .verify import run_sweep, summarize


def _pair(parser: argparse.ArgumentParser, r: int, s: int) -> None:
    if s < 1 or r < s:
        parser.error(f"need r >= s >= 1, got {r}/{s}")
    if math.gcd(r, s) != 1:
        parser.error(f"{r}/{s} is not in lowest terms")


def cmd_compute(args, parser) -> int:
    _pair(parser, args.r, args.s)
    cf = cf_expand(args.r, args.s)
    qr = q_rational(args.r, args.s)
    if args.all_routes:
        routes = {
            "matrix": q_matrix_eval(cf),
            "nested-fraction": q_cf_eval(cf),
            "recurrence-map": canonical_fraction(q_map_general(Fraction(args.r, args.s))),
        }
        continuant = q_continuant(cf)
        agree = all(v == qr for v in routes.values()) and continuant == qr.num
        if args.format == "json":
            blob = {
                "r": args.r, "s": args.s, "cf": list(cf),
                "routes": {k: {"num": v.num.to_json(), "den": v.den.to_json()}
                           for k, v in routes.items()},
                "continuant_num": continuant.to_json(),
                "agree": agree,
            }
            print(json.dumps(blob, indent=2))
        else:
            for name, v in routes.items():
                print(f"{name:<16} {v.num}   /   {v.den}")
            print(f"{'continuant':<16} {continuant}   (numerator route)")
            print("agreement: " + ("all routes identical" if agree else "MISMATCH"))
        return 0 if agree else 1
    if args.format == "json":
        print(json.dumps({"r": args.r, "s": args.s, "cf": list(cf),
                          "num": qr.num.to_json(), "den": qr.den.to_json()},
                         indent=2))
    else:
        print(f"[{args.r}/{args.s}]_q = ({qr.num}) / ({qr.den})")
    return 0


def cmd_snake(args, parser) -> int:
    _pair(parser, args.r, args.s)
    g = snake_graph(cf_expand(args.r, args.s))
    out = render(g, args.render)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


def cmd_matchings(args, parser) -> int:
    _pair(parser, args.r, args.s)
    g = snake_graph(cf_expand(args.r, args.s))
    matchings = enumerate_matchings(g)
    stat = matching_stat_dp(g)
    blob = {
        "r": args.r, "s": args.s,
        "count": len(matchings),
        "matchings": [
            {"edges": [[list(u), list(v)] for u, v in m],
             "weight_exp": matching_weight_exp(g, m)}
            for m in matchings
        ],
        "statistic": stat.to_json(),
        "statistic_text": stat.text(),
    }
    print(json.dumps(blob, indent=2))
    return 0


def cmd_kasteleyn(args, parser) -> int:
    _pair(parser, args.r, args.s)
    g = snake_graph(cf_expand(args.r, args.s))
    mat = kasteleyn_matrix(g)
    report = verify_kasteleyn(args.r, args.s)
    blob = mat.to_json()
    blob.update({
        "det": report.det.to_json(),
        "det_text": report.det.text(),
        "sign": report.sign,
        "scalar_exponent": report.scalar,
        "verified": report.ok,
    })
    print(json.dumps(blob, indent=2))
    return 0 if report.ok else 1


def cmd_fibonacci(args, parser) -> int:
    if args.n < 1:
        parser.error("n must be >= 1")
    ok = True
    print(f"{'k':>3}  {'ratio':>12}  numerator / denominator")
    for k in range(1, args.n + 1):
        fr, fs = fibonacci_number(k + 1), fibonacci_number(k)
        num = fibonacci_polys(k + 1)[0]
        den = fibonacci_polys(k)[1]
        qr = q_rational(fr, fs)
        row_ok = (num, den) == (qr.num, qr.den)
        if k >= 2:
            row_ok = row_ok and fibonacci_kasteleyn(k).eval_at_one() == fr
            row_ok = row_ok and fibonacci_kasteleyn_numerator(k) == num
        ok = ok and row_ok
        mark = "ok" if row_ok else "FAIL"
        print(f"{k:>3}  {fr:>6}/{fs:<5}  ({num}) / ({den})  [{mark}]")
    print("coefficient triangles: OEIS A123245 (numerators), A079487 (denominators)")
    return 0 if ok else 1


def cmd_verify(args, parser) -> int:
    if args.max_r < 2:
        parser.error("--max-r must be >= 2")
    results = run_sweep(args.max_r, jobs=args.jobs)
    print(summarize(results))
    return 0 if all(res.ok for res in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsnake",
        description="q-deformed rationals via continued fractions, snake graphs "
                    "and Kasteleyn determinants; all arithmetic is exact.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="numerator/denominator of [r/s]_q")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--all-routes", action="store_true",
                   help="print every computation route and the agreement verdict")

    p = sub.add_parser("snake", help="render the snake graph of r/s")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("--render", choices=("ascii", "svg", "tikz", "json"),
                   default="ascii")
    p.add_argument("--out", help="write to a file instead of stdout")

    p = sub.add_parser("matchings", help="enumerate weighted perfect matchings")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)

    p = sub.add_parser("kasteleyn", help="Kasteleyn matrix, determinant, verdict")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)

    p = sub.add_parser("fibonacci", help="table of deformed Fibonacci ratios")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", help="run every identity over a sweep of pairs")
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--jobs", type=int,
                   default=int(os.environ.get("QSNAKE_JOBS", "1")))
    return parser


_COMMANDS = {
    "compute": cmd_compute,
    "snake": cmd_snake,
    "matchings": cmd_matchings,
    "kasteleyn": cmd_kasteleyn,
    "fibonacci": cmd_fibonacci,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
