"""Command-line front end.

    rectprob prob --dist mhg --n 4 --s 4,4 --rect 1:3,1:3 --format json
    rectprob scan --core "s=4,4,4;l=1,1,1" --format csv
    rectprob check-ordering --max-m 4 --max-s 5 --jobs 4
    rectprob moments --n 4 --p 1/4,1/4,1/2 --rect 0:4,0:4,0:1
    rectprob reduction --n 4 --p 1/4,1/4,1/2 --rect 0:4,0:4,0:1 --c 1,0,0
    rectprob demo books

Exit status: 0 on success, 1 on invalid input, 2 when a verification sweep
finds a violation.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence, TextIO

from .convolution import event_prob_convolution, rect_profile
from .demos import BOOKS_CORE, COUNTER_RECT, COUNTER_S, books_table, counterexample
from .errors import ValidationError
from .hypergeom import MhgSpec
from .numeric import DEFAULT_DIGITS, format_decimal, format_exact, parse_rational
from .ordering import CoreCheck, check_core, check_corollary, scan_over_n, sweep_ordering
from .simplex import Rect, parse_core, parse_rect
from .truncmult import (
    MultinomialSpec,
    censored_moments,
    event_probability,
    reduction_sweep,
    reference_variance,
    variance_of_combo,
)

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _ints(text: str, flag: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}", flag) from None


def _rationals(text: str, flag: str) -> list:
    try:
        return [parse_rational(v) for v in text.split(",")]
    except ValidationError as exc:
        raise ValidationError(exc.message, flag) from None


def _flag(exc: ValidationError, default: str) -> str:
    name = exc.parameter or default
    return name if name.startswith("--") else f"--{name}"


def _pair(q, digits):
    return format_exact(q), format_decimal(q, digits)


# -- output ------------------------------------------------------------------


def _emit(rows: list[dict], fmt: str, out: TextIO, text_lines: Sequence[str] | None = None) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        if not rows:
            return
        writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        if text_lines is None:
            text_lines = [" ".join(str(v) for v in row.values()) for row in rows]
        for line in text_lines:
            out.write(line + "\n")


# -- argument resolution -----------------------------------------------------


def _core_or_rect(args) -> tuple[list[int], Rect]:
    """Column sums and rect from ``--core`` or ``--s`` with ``--rect``."""
    if args.core:
        core = parse_core(args.core)
        if args.s and _ints(args.s, "--s") != list(core.s):
            raise ValidationError("--s disagrees with the s=... part of --core", "--s")
        return list(core.s), core.rect
    if not args.s:
        raise ValidationError("required (or give --core)", "--s")
    if not args.rect:
        raise ValidationError("required (or give --core)", "--rect")
    return _ints(args.s, "--s"), parse_rect(args.rect)


def _mult_spec(args) -> tuple[MultinomialSpec, Rect]:
    if args.n is None:
        raise ValidationError("required", "--n")
    if not args.p:
        raise ValidationError("required", "--p")
    p = _rationals(args.p, "--p")
    try:
        spec = MultinomialSpec(args.n, p)
    except ValidationError as exc:
        raise ValidationError(exc.message, _flag(exc, "--p")) from None
    r = parse_rect(args.rect) if args.rect else Rect.full([args.n] * spec.m)
    if r.m != spec.m:
        raise ValidationError(f"has {r.m} coordinates but --p has {spec.m}", "--rect")
    return spec, r


# -- commands ----------------------------------------------------------------


def cmd_prob(args, out) -> int:
    digits = args.precision
    if args.dist == "mhg":
        if args.n is None:
            raise ValidationError("required", "--n")
        s, r = _core_or_rect(args)
        try:
            spec = MhgSpec(args.n, s)
        except ValidationError as exc:
            raise ValidationError(exc.message, _flag(exc, "--n")) from None
        if r.m != spec.m:
            raise ValidationError(f"has {r.m} coordinates but --s has {spec.m}", "--rect")
        q = event_prob_convolution(spec, r)
    else:
        spec, r = _mult_spec(args)
        q = event_probability(spec, r)
    exact, dec = _pair(q, digits)
    _emit([{"exact": exact, "decimal": dec}], args.format, out, [f"P = {exact} = {dec}"])
    return EXIT_OK


def _scan_rows(probs, digits) -> list[dict]:
    return [
        {"n": n, "prob_exact": format_exact(p), "prob_decimal": format_decimal(p, digits)}
        for n, p in enumerate(probs)
    ]


def cmd_scan(args, out) -> int:
    s, r = _core_or_rect(args)
    if len(s) != r.m:
        raise ValidationError(f"has {r.m} coordinates but --s has {len(s)}", "--rect")
    rows = _scan_rows(scan_over_n(s, r), args.precision)
    lines = [f"{row['n']:>3}  {row['prob_decimal']}  {row['prob_exact']}" for row in rows]
    _emit(rows, args.format, out, ["  n  decimal  exact"] + lines)
    return EXIT_OK


def _checks(args) -> list[CoreCheck]:
    if args.core:
        return [check_core(parse_core(args.core))]
    if args.max_m < 2:
        raise ValidationError("must be at least 2", "--max-m")
    if args.max_s < 1:
        raise ValidationError("must be at least 1", "--max-s")
    return sweep_ordering(args.max_m, args.max_s, jobs=args.jobs)


def cmd_check_ordering(args, out) -> int:
    checks = _checks(args)
    keys = ("s", "l", "upper_monotone", "lower_monotone", "symmetric")
    rows = [{k: c.row()[k] for k in keys} for c in checks]
    bad = [c for c in checks if not (c.upper_monotone and c.lower_monotone and c.symmetric)]
    lines = [f"checked {len(checks)} symmetric cores: {len(bad)} violations"]
    for c in bad:
        lines.append(f"  violation: {c.core} first={c.first_violation}")
    _emit(rows, args.format, out, lines)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_check_corollary(args, out) -> int:
    checks = _checks(args)
    keys = ("s", "l", "corollary_holds", "corollary_agrees")
    rows = [{k: c.row()[k] for k in keys} for c in checks]
    bad = [c for c in checks if not (c.corollary_holds and c.corollary_agrees)]
    lines = [f"checked {len(checks)} symmetric cores: {len(bad)} violations"]
    if args.core and args.format == "text":
        core = parse_core(args.core)
        profile = rect_profile(core.s, core.rect)
        for n, holds in check_corollary(profile).items():
            lines.append(f"  n={n}: w_n={profile[n]} w_n+1={profile[n + 1]} holds={holds}")
    for c in bad:
        lines.append(f"  violation: {c.core}")
    _emit(rows, args.format, out, lines)
    return EXIT_VIOLATION if bad else EXIT_OK


def _moment_rows(mom, digits) -> list[dict]:
    """Long format: one row per scalar, matrices indexed from 1."""
    entries = [("event_prob", "", "", mom.event_prob)]
    entries += [("mu", i + 1, "", v) for i, v in enumerate(mom.mu)]
    for name, mat in (("second", mom.second), ("cov", mom.cov)):
        entries += [(name, i + 1, j + 1, v) for i, row in enumerate(mat) for j, v in enumerate(row)]
    rows = []
    for quantity, i, j, q in entries:
        exact, dec = _pair(q, digits)
        rows.append({"quantity": quantity, "i": i, "j": j, "exact": exact, "decimal": dec})
    return rows


def cmd_moments(args, out) -> int:
    spec, r = _mult_spec(args)
    mom = censored_moments(spec, r, method=args.method)
    if args.format == "json":
        json.dump(mom.to_dict(args.precision), out, indent=2)
        out.write("\n")
        return EXIT_OK
    rows = _moment_rows(mom, args.precision)
    lines = [f"P[X in R] = {rows[0]['exact']} = {rows[0]['decimal']}"]
    lines += [f"mu_{row['i']} = {row['exact']} = {row['decimal']}" for row in rows if row["quantity"] == "mu"]
    lines += [
        f"Var(X_{row['i']} | R) = {row['exact']} = {row['decimal']}"
        for row in rows
        if row["quantity"] == "cov" and row["i"] == row["j"]
    ]
    _emit(rows, args.format, out, lines)
    return EXIT_OK


def cmd_reduction(args, out) -> int:
    if args.n is None:
        return _reduction_sweep(args, out)
    spec, r = _mult_spec(args)
    if not args.c:
        raise ValidationError("required", "--c")
    c = _rationals(args.c, "--c")
    if len(c) != spec.m:
        raise ValidationError(f"has {len(c)} entries but --p has {spec.m}", "--c")
    mom = censored_moments(spec, r)
    ref = reference_variance(mom, spec.n, c)
    var = variance_of_combo(mom, c)
    row = {}
    for name, q in (("reference", ref), ("variance", var), ("reduction", ref - var)):
        row[f"{name}_exact"], row[f"{name}_decimal"] = _pair(q, args.precision)
    lines = [
        f"reference variance = {row['reference_exact']} = {row['reference_decimal']}",
        f"censored variance  = {row['variance_exact']} = {row['variance_decimal']}",
        f"reduction          = {row['reduction_exact']} = {row['reduction_decimal']}",
    ]
    _emit([row], args.format, out, lines)
    return EXIT_OK


def _reduction_sweep(args, out) -> int:
    if args.max_m < 2:
        raise ValidationError("must be at least 2", "--max-m")
    if args.max_n < 1:
        raise ValidationError("must be at least 1", "--max-n")
    result = reduction_sweep(args.max_m, args.max_n, jobs=args.jobs)
    rows = [
        {"property": name, "checked": t.checked, "failures": len(t.failures)}
        for name, t in result.tallies().items()
    ]
    lines = [f"{row['property']:<20} checked={row['checked']:<8} failures={row['failures']}" for row in rows]
    _emit(rows, args.format, out, lines)
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_demo(args, out) -> int:
    digits = args.precision
    if args.name == "books":
        probs = books_table()
        rows = _scan_rows(probs, digits)
        lines = [
            "No books in either hand: H_13(n; 4 x 13), B_j = {1, 2, 3}",
            f"core: {BOOKS_CORE}",
            "  n  decimal  exact",
        ]
        lines += [f"{row['n']:>3}  {row['prob_decimal']}  {row['prob_exact']}" for row in rows]
        _emit(rows, args.format, out, lines)
        return EXIT_OK
    rec = counterexample()
    flag = "ordering violated (asymmetric rect)" if rec.violated else "ordering holds"
    rows = []
    for n, q in ((rec.n, rec.p_n), (rec.n_prime, rec.p_n_prime)):
        exact, dec = _pair(q, digits)
        rows.append({"n": n, "prob_exact": exact, "prob_decimal": dec, "violated": rec.violated})
    lines = [
        f"Asymmetric rect: H_2(n; {','.join(map(str, COUNTER_S))}), R = {COUNTER_RECT}",
        "  n  decimal  exact",
    ]
    lines += [f"{row['n']:>3}  {row['prob_decimal']}  {row['prob_exact']}" for row in rows]
    lines.append(flag)
    _emit(rows, args.format, out, lines)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rectprob", description="Exact rectangular event probabilities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--precision", type=int, default=DEFAULT_DIGITS, help="decimal digits")
        return p

    def urn(p):
        p.add_argument("--s", help="column sums, e.g. 4,6")
        p.add_argument("--rect", help="intervals l1:u1,l2:u2,...")
        p.add_argument("--core", help='symmetric core "s=4,4;l=1,1"')

    def sweep(p, max_m, bound, default):
        p.add_argument("--max-m", type=int, default=max_m)
        p.add_argument(bound, type=int, default=default)
        p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = common(sub.add_parser("prob", help="probability of a rectangular event"))
    p.add_argument("--dist", choices=("mhg", "mult"), default="mhg")
    p.add_argument("--n", type=int)
    p.add_argument("--p", help="probabilities a/b,c/d,...")
    urn(p)
    p.set_defaults(func=cmd_prob)

    p = common(sub.add_parser("scan", help="P_n over n = 0..t"))
    urn(p)
    p.set_defaults(func=cmd_scan)

    for name, func, helptext in (
        ("check-ordering", cmd_check_ordering, "monotonicity and symmetry over symmetric cores"),
        ("check-corollary", cmd_check_corollary, "profile ratio inequality over symmetric cores"),
    ):
        p = common(sub.add_parser(name, help=helptext))
        p.add_argument("--core", help="check a single core instead of the sweep")
        sweep(p, 4, "--max-s", 5)
        p.set_defaults(func=func)

    p = common(sub.add_parser("moments", help="truncated multinomial moments"))
    p.add_argument("--n", type=int)
    p.add_argument("--p")
    p.add_argument("--rect")
    p.add_argument("--method", choices=("series", "enumerate"), default="series")
    p.set_defaults(func=cmd_moments)

    p = common(sub.add_parser("reduction", help="variance reduction of c.X (sweep when --n is absent)"))
    p.add_argument("--n", type=int)
    p.add_argument("--p")
    p.add_argument("--rect")
    p.add_argument("--c", help="coefficients of the linear combination")
    sweep(p, 3, "--max-n", 8)
    p.set_defaults(func=cmd_reduction)

    p = common(sub.add_parser("demo", help="worked examples"))
    p.add_argument("name", choices=("books", "counterexample"))
    p.set_defaults(func=cmd_demo)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "precision", 0) < 0:
        err.write("rectprob: error: --precision: must be non-negative\n")
        return EXIT_INVALID
    try:
        return args.func(args, out)
    except ValidationError as exc:
        prefix = f"{_flag(exc, '')}: " if exc.parameter else ""
        err.write(f"rectprob: error: {prefix}{exc.message}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
