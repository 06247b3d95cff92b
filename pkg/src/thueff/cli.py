"""Command-line front end.

Subcommands: roots, bounds, search, solve, verify.  All output is
deterministic; JSON is rendered with sorted keys so a parse/serialize
round trip is byte-identical.  Exit codes: 0 success, 1 failed
reproduction, 2 usage error (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, laurent, search
from .errors import ReproductionFailure


def render_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_roots(args) -> int:
    roots = laurent.quartic_roots(args.order)
    if args.format == "json":
        payload = {
            "order": args.order,
            "roots": [r.to_json() for r in roots],
        }
        _emit(render_json(payload), args.out)
    else:
        lines = [f"alpha_{i} = {r.pretty()}" for i, r in enumerate(roots, start=1)]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_bounds(args) -> int:
    report = bounds.bound_report(args.a)
    if args.format == "json":
        _emit(render_json(report.to_json()), args.out)
    else:
        rows = report.to_json()
        width = max(len(k) for k in rows)
        lines = [f"{k.ljust(width)} = {v}" for k, v in rows.items()]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_search(args) -> int:
    triples = search.admissible_exponents()
    found = search.search_trivial_units(jobs=args.jobs)
    if args.format == "json":
        payload = {
            "triples_searched": len(triples),
            "triples_found": [list(t) for t in found],
        }
        _emit(render_json(payload), args.out)
    else:
        lines = [f"triples searched: {len(triples)}"]
        lines += [f"trivial unit at (r, s, t) = {t}" for t in found]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_solve(args) -> int:
    classes = search.solution_classes()
    if args.format == "json":
        _emit(render_json({"classes": [c.to_json() for c in classes]}), args.out)
    else:
        lines = [
            f"{c.label}  with  xi = {c.xi_factor}·η^4   [unit exponents {c.triple}]"
            for c in classes
        ]
        _emit("\n".join(lines), args.out)
    return 0


def _certificate_text(cert: search.Certificate) -> str:
    lines = []
    for c in cert.checks:
        suffix = f" — {c.detail}" if c.detail else ""
        lines.append(f"{c.status:4s} {c.name}{suffix}")
    for note in cert.notes:
        lines.append(f"note: {note}")
    lines.append(
        f"searched {cert.triples_searched} triples, found {len(cert.triples_found)}; "
        f"certificate: {'PASS' if cert.passed else 'FAIL'}"
    )
    return "\n".join(lines)


def _cmd_verify(args) -> int:
    try:
        cert = search.verify_theorem(order=args.order, jobs=args.jobs)
    except ReproductionFailure as exc:
        cert = exc.certificate
        if cert is None:
            _emit(f"FAIL {exc}", args.out)
            return 1
        code = 1
    else:
        code = 0
    if args.format == "json":
        _emit(render_json(cert.to_json()), args.out)
    else:
        _emit(_certificate_text(cert), args.out)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thueff",
        description=(
            "Exact solver for the quartic family "
            "X^4 - λX^3Y - 6X^2Y^2 + λXY^3 + Y^4 = ξ over rational function fields"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=False, a=False, jobs=False):
        if order:
            p.add_argument("--order", type=int, default=laurent.DEFAULT_ORDER,
                           help="series truncation order")
        if a:
            p.add_argument("--a", type=int, default=1,
                           help="degree of λ in the ground variable")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="parallel workers for the exponent scan")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write output to this file")

    p = sub.add_parser("roots", help="series expansions of the four roots")
    common(p, order=True)
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("bounds", help="the height-bound chain at a given degree")
    common(p, a=True)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("search", help="scan admissible exponents for trivial units")
    common(p, jobs=True)
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("solve", help="the solution families of the equation")
    common(p)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("verify", help="run every reproduction check and certify")
    common(p, order=True, jobs=True)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
