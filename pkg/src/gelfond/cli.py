"""Command-line surface.

Four subcommands:

  eval       sum one pFq series and print the SumResult fields
  verify     run the identity registry, one report per case
  constants  print e^pi, e^(+/-pi/2) (and e^(pi*lambda)) against the
             exponential oracle
  heegner    print the near-integer table at double-double precision

The tool is a pure function of argv: no config files, environment
variables, or network access.  JSON and CSV are the stable machine
formats (fixed field order, floats at 17 significant digits, absent
values as null/empty); the text format is for humans and may change.

Exit codes: 0 all verdicts pass, 1 any failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import fnmatch
import io
import math
import sys
from fractions import Fraction

from .errors import ParseError
from .heegner import HEEGNER_BASES, heegner_row, is_near_integer
from .identities import (
    VerificationReport,
    gelfond,
    gelfond_lambda,
    registry,
    sqrt_gelfond_pair,
    verify,
)
from .ddreal import dd_to_decimal
from .series import SeriesSpec, SumPolicy, SumStatus, sum_pfq

REPORT_FIELDS = (
    "id", "n", "lambda", "closed_value", "series_value", "expected_value",
    "abs_residual", "rel_residual", "series_status", "verdict",
)


# ----------------------------------------------------------------------
# complex literal parsing
# ----------------------------------------------------------------------

def _scan_number(text: str, pos: int) -> tuple[Fraction, int]:
    """Unsigned REAL or RATIONAL starting at pos; returns (value, next_pos)."""
    start = pos
    n = len(text)
    while pos < n and text[pos].isdigit():
        pos += 1
    if pos < n and text[pos] == "/":
        if pos == start:
            raise ParseError("expected digits before '/'", pos)
        pos += 1
        dstart = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == dstart:
            raise ParseError("expected digits after '/'", pos)
        try:
            return Fraction(text[start:pos]), pos
        except ZeroDivisionError:
            raise ParseError("zero denominator", dstart) from None
    if pos < n and text[pos] == ".":
        pos += 1
        while pos < n and text[pos].isdigit():
            pos += 1
    if pos == start or text[start:pos] in (".",):
        raise ParseError("expected a number", start)
    if pos < n and text[pos] in "eE":
        epos = pos + 1
        if epos < n and text[epos] in "+-":
            epos += 1
        dstart = epos
        while epos < n and text[epos].isdigit():
            epos += 1
        if epos == dstart:
            raise ParseError("expected digits in exponent", dstart)
        pos = epos
    return Fraction(text[start:pos]), pos


def _scan_sign(text: str, pos: int) -> tuple[int, int]:
    if pos < len(text) and text[pos] in "+-":
        return (-1 if text[pos] == "-" else 1), pos + 1
    return 1, pos


def parse_complex(text: str) -> complex:
    """Parse REAL | RATIONAL | COMPLEX, whitespace-free.

    RATIONAL is p/q over decimal integers and is converted exactly;
    COMPLEX is <r>[+|-]<r>i; a bare or signed "i" means the unit
    imaginary, and forms like "-15/22i" are purely imaginary with the
    sign binding to the imaginary rational.
    """
    for idx, ch in enumerate(text):
        if ch.isspace():
            raise ParseError("whitespace is not allowed", idx)
    if not text:
        raise ParseError("empty input", 0)
    sign, pos = _scan_sign(text, 0)
    if text[pos:] == "i":
        return complex(0.0, float(sign))
    value, pos = _scan_number(text, pos)
    first = sign * value
    if pos == len(text):
        return complex(float(first), 0.0)
    if text[pos] == "i":
        if pos + 1 != len(text):
            raise ParseError("trailing characters after 'i'", pos + 1)
        return complex(0.0, float(first))
    if text[pos] in "+-":
        sign2, pos = _scan_sign(text, pos)
        if text[pos:] == "i":
            return complex(float(first), float(sign2))
        value2, pos = _scan_number(text, pos)
        if pos >= len(text) or text[pos] != "i":
            raise ParseError("expected 'i' to close the imaginary part", pos)
        if pos + 1 != len(text):
            raise ParseError("trailing characters after 'i'", pos + 1)
        return complex(float(first), float(sign2 * value2))
    raise ParseError("unexpected character", pos)


def _parse_complex_list(text: str) -> list[complex]:
    if not text:
        return []
    return [parse_complex(part) for part in text.split(",")]


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------

def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _json_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return '"inf"' if value > 0 else '"-inf"'
        return _fmt_float(value)
    escaped = (str(value).replace("\\", "\\\\").replace('"', '\\"'))
    return f'"{escaped}"'


def _json_rows(rows: list[dict]) -> str:
    """Deterministic JSON array of flat objects, insertion-ordered keys."""
    parts = []
    for row in rows:
        fields = ", ".join(f'"{k}": {_json_scalar(v)}' for k, v in row.items())
        parts.append("  {" + fields + "}")
    return "[\n" + ",\n".join(parts) + "\n]\n"


def _csv_rows(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL)
    if rows:
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow(
                "" if v is None else (_fmt_float(v) if isinstance(v, float) else v)
                for v in row.values()
            )
    return buf.getvalue()


def report_row(report: VerificationReport) -> dict:
    return {
        "id": report.id,
        "n": report.n,
        "lambda": report.lam,
        "closed_value": report.closed_value,
        "series_value": report.series_value,
        "expected_value": report.expected_value,
        "abs_residual": report.abs_residual,
        "rel_residual": report.rel_residual,
        "series_status": report.series_status,
        "verdict": report.verdict,
    }


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def _policy_from_args(args) -> SumPolicy | None:
    if args.tol is None and args.max_terms is None:
        return None
    kwargs = {}
    if args.tol is not None:
        kwargs["tolerance"] = args.tol
    if args.max_terms is not None:
        kwargs["max_terms"] = args.max_terms
    return SumPolicy(**kwargs)


def _cmd_eval(args) -> int:
    spec = SeriesSpec(
        _parse_complex_list(args.upper), _parse_complex_list(args.lower),
        parse_complex(args.z),
    )
    policy = _policy_from_args(args) or SumPolicy()
    result = sum_pfq(spec, policy)
    row = {
        "value_re": result.value.real,
        "value_im": result.value.imag,
        "terms_used": result.terms_used,
        "tail_estimate": result.tail_estimate,
        "status": result.status.value,
    }
    if args.format == "json":
        _emit(_json_rows([row]), args.out)
    else:
        lines = [f"{k} = {_fmt_float(v) if isinstance(v, float) else v}"
                 for k, v in row.items()]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if result.status in (SumStatus.CONVERGED, SumStatus.TRUNCATED) else 1


def _cmd_verify(args) -> int:
    policy = _policy_from_args(args)
    cases = registry()
    if args.id:
        cases = [c for c in cases if fnmatch.fnmatchcase(c.id, args.id)]
    if args.n is not None:
        cases = [c for c in cases if c.parameters.get("n") == args.n]
    if args.lam is not None:
        cases = [c for c in cases
                 if c.parameters.get("lambda") is not None
                 and abs(float(c.parameters["lambda"]) - args.lam) < 1e-12]
    reports = [verify(case, policy) for case in cases]
    rows = [report_row(r) for r in reports]
    passed = sum(1 for r in reports if r.verdict == "Pass")
    failed = sum(1 for r in reports if r.verdict == "Fail")
    skipped = len(reports) - passed - failed
    if args.format == "json":
        _emit(_json_rows(rows), args.out)
    elif args.format == "csv":
        _emit(_csv_rows(rows), args.out)
    else:
        lines = []
        for r in reports:
            detail = ""
            if r.rel_residual is not None:
                detail = f"  rel_residual={r.rel_residual:.3e}"
            if r.series_status is not None:
                detail += f"  series={r.series_status}"
            if r.erratum:
                detail += f"  [erratum: {r.erratum}]"
            lines.append(f"{r.id:<18} {r.verdict:<17}{detail}")
        lines.append(f"passed={passed} failed={failed} skipped={skipped}")
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def _cmd_constants(args) -> int:
    rows = []
    failures = 0

    def add(name: str, closed: float, oracle: float, tol: float):
        nonlocal failures
        abs_res = abs(closed - oracle)
        rel_res = abs_res / abs(oracle)
        if rel_res > tol:
            failures += 1
        rows.append({
            "name": name,
            "closed_value": closed,
            "oracle_value": oracle,
            "abs_residual": abs_res,
            "rel_residual": rel_res,
            "tolerance": tol,
        })

    add("e^pi", gelfond(), math.exp(math.pi), 1e-13)
    plus, minus = sqrt_gelfond_pair()
    add("e^(pi/2)", plus, math.exp(math.pi / 2), 1e-12)
    add("e^(-pi/2)", minus, math.exp(-math.pi / 2), 1e-12)
    if args.lam is not None:
        add(f"e^(pi*{args.lam:g})", gelfond_lambda(args.lam),
            math.exp(math.pi * args.lam), 1e-11)
    if args.format == "json":
        _emit(_json_rows(rows), args.out)
    else:
        lines = [
            f"{row['name']:<12} closed={_fmt_float(row['closed_value'])}  "
            f"oracle={_fmt_float(row['oracle_value'])}  "
            f"rel_residual={row['rel_residual']:.3e}"
            for row in rows
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if failures else 0


def _cmd_heegner(args) -> int:
    ns = [args.n] if args.n is not None else sorted(HEEGNER_BASES)
    rows = []
    ok = True
    for n in ns:
        row = heegner_row(n)
        ok = ok and is_near_integer(row)
        rows.append({
            "n": n,
            "value": dd_to_decimal(row.value, 31),
            "cube_base": row.cube_base,
            "reference": row.reference,
            "deviation": dd_to_decimal(row.deviation, 12),
            "error_bound": row.error_bound,
        })
    if args.format == "json":
        _emit(_json_rows(rows), args.out)
    else:
        lines = [
            f"n={row['n']:<4} e^(pi sqrt n) = {row['value']}\n"
            f"      reference = {row['cube_base']}^3 + 744 = {row['reference']}\n"
            f"      deviation = {row['deviation']}  (error bound "
            f"{row['error_bound']:.2e})"
            for row in rows
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelfond",
        description="Evaluate hypergeometric series and verify the "
                    "closed-form identities for e^pi and its relatives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_eval = sub.add_parser("eval", help="evaluate one pFq series")
    p_eval.add_argument("--upper", default="",
                        help="comma-separated upper parameters, e.g. i,-i")
    p_eval.add_argument("--lower", default="",
                        help="comma-separated lower parameters, e.g. 1/2")
    p_eval.add_argument("--z", required=True, help="argument, e.g. 1 or 0.5")
    p_eval.add_argument("--tol", type=float, default=None)
    p_eval.add_argument("--max-terms", dest="max_terms", type=int, default=None)
    common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run the identity registry")
    p_verify.add_argument("--id", default=None, help="case id glob filter")
    p_verify.add_argument("--n", type=int, default=None,
                          help="filter corollary cases by index n")
    p_verify.add_argument("--lambda", dest="lam", type=float, default=None,
                          help="filter parameterized cases by lambda")
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override the per-case summation tolerance")
    p_verify.add_argument("--max-terms", dest="max_terms", type=int, default=None)
    common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_const = sub.add_parser("constants",
                             help="closed forms vs the exponential oracle")
    p_const.add_argument("--lambda", dest="lam", type=float, default=None)
    common(p_const)
    p_const.set_defaults(func=_cmd_constants)

    p_heeg = sub.add_parser("heegner", help="near-integer table")
    p_heeg.add_argument("--n", type=int, default=None,
                        choices=sorted(HEEGNER_BASES))
    common(p_heeg)
    p_heeg.set_defaults(func=_cmd_heegner)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command != "verify":
        parser.error("--format csv is only available for 'verify'")
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        # ParseError, PoleError, DivergentError, ...: the request itself
        # was invalid, which is a usage error by the exit-code contract
        print(f"error: {exc}", file=sys.stderr)
        return 2
