"""Command-line front door with deterministic text/JSON output.

Exit codes: 0 on success, 2 on argument errors, 3 when a requested precision
cannot be reached.  JSON encodes every rational as a string "p/q" so golden
files stay exact; decimal fields are always labeled truncations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import (
    AmbiguousDigitsError,
    Interval,
    PrecisionUnreachableError,
    decimal_digits,
    decimal_of,
    format_rational,
)
from .coefficients import COEFF6_NOTE, coeff_table
from .series import eq65_family, eq65_family_numeric, eq69_term, gamma_bracket, kluyver_partial
from .oracle import DEFAULT_DIGIT_CEILING, gamma_oracle, pi_interval, zeta2_interval
from .goldbach import goldbach_check, power_stream, two_minus_zeta2_check
from .liouville import DEFAULT_PRECISION_CEILING, c_minus_zeta2_digits, liouville_prefix
from .coefficients import coeff_a


def _emit_json(obj, out):
    print(json.dumps(obj, ensure_ascii=True), file=out)


def _certified_decimal(make_interval, d: int, start: int, ceiling: int):
    """Refine an interval factory until d truncated digits are certified."""
    prec = start
    while True:
        try:
            return decimal_digits(make_interval(prec), d)
        except AmbiguousDigitsError:
            prec *= 2
            if prec > ceiling:
                raise PrecisionUnreachableError(
                    f"digit certification failed below precision ceiling {ceiling}"
                )


def _cmd_coeffs(args, out, err):
    pairs = coeff_table(args.max_k)
    if args.max_k >= 6:
        print(COEFF6_NOTE, file=err)
    if args.format == "json":
        records = []
        for p in pairs:
            rec = {"k": p.k}
            if args.kind in ("a", "both"):
                rec["a"] = format_rational(p.a)
            if args.kind in ("A", "both"):
                rec["A"] = format_rational(p.A)
            records.append(rec)
        _emit_json(records, out)
    else:
        for p in pairs:
            fields = [str(p.k)]
            if args.kind in ("a", "both"):
                fields.append(format_rational(p.a))
            if args.kind in ("A", "both"):
                fields.append(format_rational(p.A))
            print(" ".join(fields), file=out)
    return 0


def _cmd_eq65(args, out, err):
    records = []
    for n in range(args.families):
        fam = eq65_family(n)
        rec = {
            "n": n,
            "rational_part": format_rational(fam.rational_part),
            "zeta2_coeff": format_rational(fam.zeta2_coeff),
        }
        if args.numeric_terms and n != 1:
            rec["numeric_partial"] = format_rational(
                eq65_family_numeric(n, args.numeric_terms)
            )
        records.append(rec)
    if args.format == "json":
        _emit_json(records, out)
    else:
        for rec in records:
            fields = [str(rec["n"]), rec["rational_part"], rec["zeta2_coeff"]]
            if "numeric_partial" in rec:
                fields.append(rec["numeric_partial"])
            print(" ".join(fields), file=out)
    return 0


def _cmd_eq69(args, out, err):
    terms = [eq69_term(n) for n in range(1, args.terms + 1)]
    if args.format == "json":
        _emit_json(
            [{"n": n, "t": format_rational(t)} for n, t in enumerate(terms, 1)], out
        )
    else:
        for t in terms:
            print(format_rational(t), file=out)
    return 0


def _cmd_gamma_kluyver(args, out, err):
    terms = [coeff_a(k) / k for k in range(1, args.terms + 1)]
    total = sum(terms)
    if args.format == "json":
        _emit_json(
            {
                "terms": [format_rational(t) for t in terms],
                "sum": format_rational(total),
            },
            out,
        )
    else:
        for t in terms:
            print(format_rational(t), file=out)
        print(f"sum {format_rational(total)}", file=out)
    return 0


def _cmd_gamma_bracket(args, out, err):
    br = gamma_bracket(args.terms, args.digits)
    dec = args.digits
    rows = [
        ("lower", br.lower),
        ("upper_lo", br.upper.lo),
        ("upper_hi", br.upper.hi),
    ]
    if args.format == "json":
        obj = {"terms": args.terms, "digits": args.digits}
        for name, val in rows:
            obj[name] = format_rational(val)
            obj[name + "_decimal"] = decimal_of(val, dec)
        _emit_json(obj, out)
    else:
        for name, val in rows:
            print(f"{name} {format_rational(val)} {decimal_of(val, dec)}", file=out)
    return 0


def _interval_report(iv: Interval, digits: int, fmt: str, out):
    dec = str(decimal_digits(iv, digits))
    if fmt == "json":
        _emit_json(
            {
                "decimal": dec,
                "lo": format_rational(iv.lo),
                "hi": format_rational(iv.hi),
            },
            out,
        )
    else:
        print(dec, file=out)
        print(f"lo {format_rational(iv.lo)}", file=out)
        print(f"hi {format_rational(iv.hi)}", file=out)


def _cmd_gamma_oracle(args, out, err):
    prec = args.digits + 5
    while True:
        iv = gamma_oracle(prec)
        try:
            decimal_digits(iv, args.digits)
            break
        except AmbiguousDigitsError:
            prec *= 2
            if prec > DEFAULT_DIGIT_CEILING:
                raise PrecisionUnreachableError(
                    "gamma digits not certifiable below the precision ceiling"
                )
    _interval_report(iv, args.digits, args.format, out)
    return 0


def _cmd_const(args, out, err):
    maker = pi_interval if args.name == "pi" else zeta2_interval
    prec = args.digits + 5
    while True:
        iv = maker(prec)
        try:
            decimal_digits(iv, args.digits)
            break
        except AmbiguousDigitsError:
            prec *= 2
            if prec > 4 * DEFAULT_DIGIT_CEILING:
                raise PrecisionUnreachableError(
                    f"{args.name} digits not certifiable below the precision ceiling"
                )
    _interval_report(iv, args.digits, args.format, out)
    return 0


def _cmd_goldbach_check(args, out, err):
    iv = goldbach_check(args.max_n, args.digits)
    rows = [("lo", iv.lo), ("hi", iv.hi)]
    if args.format == "json":
        obj = {"max_n": args.max_n, "digits": args.digits}
        for name, val in rows:
            obj[name] = format_rational(val)
            obj[name + "_decimal"] = decimal_of(val, args.digits)
        _emit_json(obj, out)
    else:
        for name, val in rows:
            print(f"{name} {format_rational(val)} {decimal_of(val, args.digits)}", file=out)
    return 0


def _cmd_goldbach_stream(args, out, err):
    terms = list(power_stream(args.count))
    counts = {}
    for t in terms:
        counts[t.value] = counts.get(t.value, 0) + 1
    if args.format == "json":
        _emit_json(
            [
                {"k": t.k, "n": t.n, "value": format_rational(t.value)}
                for t in terms
            ],
            out,
        )
    else:
        for t in terms:
            dup = " dup" if counts[t.value] > 1 else ""
            print(f"{t.k} {t.n} {format_rational(t.value)}{dup}", file=out)
    return 0


def _cmd_liouville(args, out, err):
    print(str(liouville_prefix(args.digits)), file=out)
    return 0


def _cmd_digits_of(args, out, err):
    ds = c_minus_zeta2_digits(
        Fraction(args.c), args.digits, ceiling=args.precision_ceiling
    )
    print(str(ds), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactgamma",
        description="Exact rational series and rigorous bounds for Euler's constant.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("coeffs", help="series coefficients a_k and A_k")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--kind", choices=("a", "A", "both"), default="both")
    add_format(p)
    p.set_defaults(func=_cmd_coeffs, check=lambda a: a.max_k >= 1)

    p = sub.add_parser("eq65", help="family closed forms of the first decomposition")
    p.add_argument("--families", type=int, required=True)
    p.add_argument("--numeric-terms", type=int, default=0)
    add_format(p)
    p.set_defaults(func=_cmd_eq65, check=lambda a: a.families >= 1 and a.numeric_terms >= 0)

    p = sub.add_parser("eq69", help="terms of the transformed series")
    p.add_argument("--terms", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_eq69, check=lambda a: a.terms >= 1)

    p = sub.add_parser("gamma", help="Euler's constant operations")
    gsub = p.add_subparsers(dest="subcommand", required=True)

    g = gsub.add_parser("kluyver", help="exact rational lower partial sum")
    g.add_argument("--terms", type=int, required=True)
    add_format(g)
    g.set_defaults(func=_cmd_gamma_kluyver, check=lambda a: a.terms >= 1)

    g = gsub.add_parser("bracket", help="rational bracket around gamma")
    g.add_argument("--terms", type=int, required=True)
    g.add_argument("--digits", type=int, required=True)
    add_format(g)
    g.set_defaults(func=_cmd_gamma_bracket, check=lambda a: a.terms >= 1 and a.digits >= 5)

    g = gsub.add_parser("oracle", help="certified digits of gamma")
    g.add_argument("--digits", type=int, required=True)
    add_format(g)
    g.set_defaults(func=_cmd_gamma_oracle, check=lambda a: a.digits >= 1)

    p = sub.add_parser("goldbach", help="zeta-sum identities and the power stream")
    gsub = p.add_subparsers(dest="subcommand", required=True)

    g = gsub.add_parser("check", help="partial sums of (zeta(n)-1) with tail bound")
    g.add_argument("--max-n", type=int, required=True)
    g.add_argument("--digits", type=int, required=True)
    add_format(g)
    g.set_defaults(func=_cmd_goldbach_check, check=lambda a: a.max_n >= 2 and a.digits >= 1)

    g = gsub.add_parser("stream", help="sorted perfect-power terms 1/k^n")
    g.add_argument("--count", type=int, required=True)
    add_format(g)
    g.set_defaults(func=_cmd_goldbach_stream, check=lambda a: a.count >= 1)

    p = sub.add_parser("liouville", help="digits of Liouville's constant")
    p.add_argument("--digits", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_liouville, check=lambda a: a.digits >= 1)

    p = sub.add_parser("digits-of", help="certified digits of C - zeta(2)")
    p.add_argument("--c", type=str, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--precision-ceiling", type=int, default=DEFAULT_PRECISION_CEILING)
    add_format(p)
    p.set_defaults(func=_cmd_digits_of, check=lambda a: a.digits >= 1)

    p = sub.add_parser("const", help="certified digits of pi or zeta(2)")
    p.add_argument("name", choices=("pi", "zeta2"))
    p.add_argument("--digits", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_const, check=lambda a: a.digits >= 1)

    return parser


def dispatch(argv, out=None, err=None) -> int:
    """Route argv to a subcommand; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if not args.check(args):
        print("error: argument out of range", file=err)
        return 2
    try:
        return args.func(args, out, err)
    except PrecisionUnreachableError as exc:
        print(f"error: {exc}", file=err)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
