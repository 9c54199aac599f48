"""Command-line front end: ``symlift {decompose,verify,coeffs,gamma} EXPR``.

Exit codes: 0 success (all checks pass), 1 a verification failed,
2 usage or syntax error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from importlib import resources

from .char_ring import VirtualCharacter
from .eigenforms import WEIGHTS, primes_up_to
from .euler import dirichlet_coefficients, gamma_shifts, verify_gamma_identity, verify_local_identity
from .rep_expr import ParseError, lift, parse, render

SCHEMA_VERSION = 1


def report_schema() -> dict:
    """The published JSON schema for ``verify`` reports."""
    text = resources.files("symlift").joinpath("schemas/verify_report.schema.json").read_text()
    return json.loads(text)


def _exact(x) -> str:
    return str(x)


def _decomposition_json(desc, normalization: str) -> dict:
    if normalization == "unitary":
        cons = [{"sym": a, "det": 0, "mult": m} for a, m in desc.unitary_constituents.items()]
    else:
        cons = [{"sym": c.a, "det": c.b, "mult": c.mult} for c in desc.constituents]
    return {"degree": desc.total_degree, "constituents": cons, "levi_blocks": list(desc.levi_blocks)}


def _gamma_json(g) -> dict:
    return {
        "complex_shifts": [_exact(w) for w in g.complex_shifts],
        "real_parities": list(g.real_parities),
    }


def _prime_outcome(expression: str, weight: int, p: int) -> dict:
    out = verify_local_identity(expression, weight, p)
    return {
        "p": p,
        "pass": out.passed,
        "lhs": [_exact(c) for c in out.lhs],
        "rhs": [_exact(c) for c in out.rhs],
    }


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_decompose(args) -> int:
    e = parse(args.expr)
    desc = lift(e)
    obj = {
        "schema_version": SCHEMA_VERSION,
        "expression": render(e),
        "normalization": args.normalization,
        "decomposition": _decomposition_json(desc, args.normalization),
    }
    _emit(_dump(obj), args.output)
    return 0


def cmd_verify(args) -> int:
    start = time.perf_counter()
    e = parse(args.expr)
    canon = render(e)
    desc = lift(e)
    primes = primes_up_to(args.primes_up_to)
    work = partial(_prime_outcome, canon, args.weight)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(work, primes, chunksize=max(1, len(primes) // (4 * args.jobs))))
    else:
        results = [work(p) for p in primes]
    results.sort(key=lambda r: r["p"])
    gamma_ok = verify_gamma_identity(e, args.weight).passed
    ok = gamma_ok and all(r["pass"] for r in results)
    elapsed = None if args.no_timing else int((time.perf_counter() - start) * 1000)
    obj = {
        "schema_version": SCHEMA_VERSION,
        "expression": canon,
        "weight": args.weight,
        "normalization": args.normalization,
        "decomposition": _decomposition_json(desc, args.normalization),
        "primes": results,
        "gamma": _gamma_json(gamma_shifts(e, args.weight)),
        "status": "pass" if ok else "fail",
        "elapsed_ms": elapsed,
    }
    _emit(_dump(obj), args.output)
    return 0 if ok else 1


def cmd_coeffs(args) -> int:
    e = parse(args.expr)
    dc = dirichlet_coefficients(e, args.weight, args.limit)
    rows = [(n, dc.values[n], dc.unitary[n]) for n in range(1, args.limit + 1)]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "value", "unitary"])
        for n, v, u in rows:
            writer.writerow([n, _exact(v), repr(u)])
        text = buf.getvalue()
    else:
        text = _dump({
            "schema_version": SCHEMA_VERSION,
            "expression": render(e),
            "weight": args.weight,
            "limit": args.limit,
            "coefficients": [{"n": n, "value": _exact(v), "unitary": u} for n, v, u in rows],
        })
    _emit(text, args.output)
    return 0


def cmd_gamma(args) -> int:
    e = parse(args.expr)
    g = gamma_shifts(e, args.weight)
    obj = {
        "schema_version": SCHEMA_VERSION,
        "expression": render(e),
        "weight": args.weight,
        "degree": g.degree,
        **_gamma_json(g),
    }
    _emit(_dump(obj), args.output)
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _at_least_two(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"--primes-up-to must be at least 2, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symlift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weight=True):
        p.add_argument("expr", help='expression, e.g. "sym^2(pi)*sym^3(pi)"')
        if weight:
            p.add_argument("--weight", type=int, choices=WEIGHTS, default=12)
        p.add_argument("--output", default=None, help="output path (default: stdout)")

    p = sub.add_parser("decompose", help="isobaric decomposition and Levi blocks")
    common(p, weight=False)
    p.add_argument("--normalization", choices=("unitary", "arithmetic"), default="unitary")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check the local factor identity prime by prime")
    common(p)
    p.add_argument("--primes-up-to", type=_at_least_two, default=100)
    p.add_argument("--normalization", choices=("unitary", "arithmetic"), default="unitary")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as null")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("coeffs", help="Dirichlet coefficients up to --limit")
    common(p)
    p.add_argument("--limit", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("gamma", help="archimedean gamma factors")
    common(p)
    p.set_defaults(func=cmd_gamma)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"symlift: syntax error in {args.expr!r} {exc}", file=sys.stderr)
        return 2
    except VirtualCharacter as exc:
        print(f"symlift: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
