"""Command-line front end: ``hodgeint {compute,table,relation,verify}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .engine import Engine, EscalationError, UnstableIntegralError
from .exact import format_rational
from .hodge import CacheFormatError, HodgeKey, HodgeTable
from .recursion import DegreeWindowError

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_ESCALATION, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse prints a multi-line usage block; keep diagnostics on one line
    def error(self, message: str):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        out = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")
    if any(x < 0 for x in out):
        raise argparse.ArgumentTypeError(f"exponents must be non-negative, got {text!r}")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hodgeint", description="Exact Hodge integrals with at most one lambda class.")
    p.add_argument("--cache", help="cache file of solved integrals (default: $HODGEINT_CACHE, else none)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-v", "--verbose", action="store_true", help="log each solved group to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="evaluate one integral")
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--lambda", dest="lambda_index", type=int, default=0)
    c.add_argument("--psi", type=_int_list, required=True, help="comma list of psi exponents")

    t = sub.add_parser("table", help="every integral of dimension 1..D in cache format")
    t.add_argument("--dims", type=int, required=True, metavar="D")
    t.add_argument("--output", help="file to write (default: stdout)")

    r = sub.add_parser("relation", help="the linear relation for group (g, e) at degree d")
    r.add_argument("--g", type=int, required=True)
    r.add_argument("--e", type=_int_list, default=[], help="comma list of constrained exponents")
    r.add_argument("--d", type=int, required=True)

    v = sub.add_parser("verify", help="compare against known values and independent formulas")
    v.add_argument("--dims", type=int, metavar="D", help="all integrals of dimension 1..D")
    v.add_argument("--genus0", action="store_true", help="genus-0 multinomial formula")
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--lambda-g", action="store_true", help="lambda_g formula")
    v.add_argument("--max-dim", type=int, default=5)
    v.add_argument("--lambda-gm1", action="store_true", help="one-point lambda_{g-1} formula")
    v.add_argument("--max-g", type=int, default=2)
    v.add_argument("--hurwitz", action="store_true", help="Hurwitz weights against characters")
    v.add_argument("--max-d", type=int, default=6)
    return p


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def cmd_compute(args, engine: Engine) -> int:
    if args.g < 0:
        raise ValueError("genus must be non-negative")
    value = engine.compute(args.g, args.lambda_index, args.psi)
    psi = sorted(args.psi, reverse=True)
    _emit(args, format_rational(value),
          {"g": args.g, "lambda": args.lambda_index, "psi": psi, "value": format_rational(value)})
    return EXIT_OK


def cmd_table(args, engine: Engine) -> int:
    if args.dims < 1:
        raise ValueError("--dims must be at least 1")
    keys = engine.all_keys(args.dims)
    for key in keys:
        engine.value(key)
    if args.output:
        engine.table.write(args.output, keys)
        _emit(args, f"wrote {len(keys)} entries to {args.output}", {"entries": len(keys), "output": args.output})
    elif args.format == "json":
        print(json.dumps([{"key": str(k), "value": format_rational(engine.table[k])} for k in keys]))
    else:
        for key in keys:
            print(HodgeTable.format_record(key, engine.table[key]))
    return EXIT_OK


def relation_payload(row) -> dict:
    return {
        "d": row.d,
        "unknowns": [str(k) for k in row.unknowns],
        "coefficients": [format_rational(c) for c in row.coefficients],
        "constant": format_rational(row.constant),
    }


def _relation_text(row) -> str:
    terms = [f"{format_rational(c)}*<{k}>" for c, k in zip(row.coefficients, row.unknowns) if c]
    terms.append(format_rational(row.constant))
    return f"d={row.d}: " + " + ".join(terms) + " = 0"


def cmd_relation(args, engine: Engine) -> int:
    if args.g < 0:
        raise ValueError("genus must be non-negative")
    row = engine.relation(args.g, args.e, args.d)
    _emit(args, _relation_text(row), relation_payload(row))
    return EXIT_OK


def cmd_verify(args, engine: Engine) -> int:
    scoped = args.dims is not None or args.genus0 or args.lambda_g or args.lambda_gm1 or args.hurwitz
    report = engine.verify(
        dims=args.dims if scoped else 4,
        genus0_max_n=args.max_n if args.genus0 else None,
        lambda_g_max_dim=args.max_dim if args.lambda_g else None,
        lambda_gm1_max_genus=args.max_g if args.lambda_gm1 else None,
        hurwitz_max_d=args.max_d if args.hurwitz else None,
    )
    matched = sum(c.ok for c in report.checks)
    total = len(report.checks)
    if args.format == "json":
        print(json.dumps({
            "matched": matched,
            "total": total,
            "checks": [
                {"label": c.label, "expected": format_rational(c.expected),
                 "actual": format_rational(c.actual), "ok": c.ok}
                for c in report.checks
            ],
        }))
    else:
        for c in report.checks:
            status = "ok  " if c.ok else "FAIL"
            print(f"{status} {c.label}: expected {format_rational(c.expected)}, got {format_rational(c.actual)}")
        print(f"{matched}/{total} matched")
    return EXIT_OK if report.ok else EXIT_MISMATCH


COMMANDS = {"compute": cmd_compute, "table": cmd_table, "relation": cmd_relation, "verify": cmd_verify}


def _fail(code: int, message: str) -> int:
    print(f"error: {' '.join(str(message).split())}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(EXIT_INPUT, exc)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(name)s: %(message)s")
    try:
        engine = Engine.from_environment(args.cache)
        return COMMANDS[args.command](args, engine)
    except EscalationError as exc:
        return _fail(EXIT_ESCALATION, exc)
    except (CacheFormatError, OSError) as exc:
        return _fail(EXIT_IO, exc)
    except (UnstableIntegralError, DegreeWindowError, ValueError) as exc:
        return _fail(EXIT_INPUT, exc)


if __name__ == "__main__":
    sys.exit(main())
