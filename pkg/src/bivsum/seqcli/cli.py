"""Command-line front end.

Exit codes: 0 solution found and verified, 1 verification failed,
2 no solution within the search bounds, 3 degenerate field, 4 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..difffield import DiffField
from ..errors import (
    BivsumError,
    DegeneracyError,
    NotRenderable,
)
from ..polysolve import SearchLimits
from ..solver import MODES, solve_equation
from .parser import parse_expr
from .render import render_sum_identity
from .sequences import SequenceSpec, lucas_u, lucas_v, preset
from .verify import Identity, residual, verify_pointwise

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_NOT_FOUND, EXIT_DEGENERATE, EXIT_INPUT = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _field_args(p: argparse.ArgumentParser):
    g = p.add_argument_group("field")
    g.add_argument("--u", type=_rational, help="sigma(beta) = u*alpha + v*beta")
    g.add_argument("--v", type=_rational)
    g.add_argument("--sequence", metavar="NAME",
                   help="preset: fibonacci, lucas, pell, pell-lucas")
    g.add_argument("--lucasU", nargs=2, type=_rational, metavar=("P", "Q"))
    g.add_argument("--lucasV", nargs=2, type=_rational, metavar=("P", "Q"))
    g.add_argument("--s0", type=_rational, help="override S_0 used for pointwise checks")
    g.add_argument("--s1", type=_rational, help="override S_1 used for pointwise checks")
    g.add_argument("--approx", type=int, metavar="K", help="also print K-digit decimal values")
    g.add_argument("--json", action="store_true", help="machine-readable output")


def _limit_args(p: argparse.ArgumentParser):
    g = p.add_argument_group("search limits")
    g.add_argument("--mmax", type=int, default=30, help="spread search bound (default 30)")
    g.add_argument("--dmax", type=int, help="cap on the trial numerator degree")
    g.add_argument("--slack", type=int, default=10,
                   help="extra trial degrees when leading terms may cancel (default 10)")
    g.add_argument("--infinite-degree-slack", type=int, default=0,
                   help="widen (or narrow, if negative) the eigenform denominator range")
    g.add_argument("--n-max", type=int, default=30, help="last index for pointwise checks")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bivsum", description="Solve a*sigma(g) + b*g = f in F(alpha, beta), "
                     "sigma(alpha) = beta, sigma(beta) = u*alpha + v*beta.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="find a rational solution g")
    _field_args(solve)
    _limit_args(solve)
    solve.add_argument("--a", default="1")
    solve.add_argument("--b", default="-1")
    solve.add_argument("--f", required=True)
    solve.add_argument("--mode", choices=MODES, default="auto")

    verify = sub.add_parser("verify", help="check a given g symbolically and pointwise")
    _field_args(verify)
    verify.add_argument("--a", default="1")
    verify.add_argument("--b", default="-1")
    verify.add_argument("--f", required=True)
    verify.add_argument("--g", required=True)
    verify.add_argument("--n-max", type=int, default=30)

    info = sub.add_parser("field-info", help="eigenvalues and eigenforms of the field")
    _field_args(info)

    summ = sub.add_parser("sum", help="solve with a = 1, b = -1 and print the summation identity")
    _field_args(summ)
    _limit_args(summ)
    summ.add_argument("--f", required=True)
    summ.add_argument("--mode", choices=MODES, default="auto")
    return parser


def _resolve_sequence(args) -> SequenceSpec:
    chosen = [name for name in ("sequence", "lucasU", "lucasV") if getattr(args, name) is not None]
    uv = args.u is not None or args.v is not None
    if len(chosen) + uv != 1:
        raise InputError("give exactly one of --u/--v, --sequence, --lucasU, --lucasV")
    if uv:
        if args.u is None or args.v is None:
            raise InputError("--u and --v must be given together")
        spec = SequenceSpec(args.u, args.v, 0, 1, None, "S")
    elif args.sequence is not None:
        try:
            spec = preset(args.sequence)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    elif args.lucasU is not None:
        spec = lucas_u(*args.lucasU)
    else:
        spec = lucas_v(*args.lucasV)
    return spec.with_initial(args.s0, args.s1)


def _field_dict(field: DiffField, digits):
    d = {
        "u": str(field.u),
        "v": str(field.v),
        "D": field.radicand,
        "lambda1": str(field.lambda1),
        "lambda2": str(field.lambda2),
    }
    if digits:
        d["approx"] = {"lambda1": field.lambda1.approx(digits), "lambda2": field.lambda2.approx(digits)}
    return d


def _print_field(field: DiffField, digits, out):
    print(f"field: u = {field.u}, v = {field.v}, D = {field.radicand}", file=out)
    for name in ("lambda1", "lambda2"):
        val = getattr(field, name)
        extra = f"  (~ {val.approx(digits)})" if digits else ""
        print(f"  {name} = {val}{extra}", file=out)


def _cmd_field_info(args, field, spec, out):
    verdict = "admissible"
    if args.json:
        d = field.to_dict()
        if args.approx:
            d["approx"] = _field_dict(field, args.approx)["approx"]
        d["verdict"] = verdict
        print(json.dumps({"field": d}, indent=2), file=out)
        return EXIT_OK
    _print_field(field, args.approx, out)
    print(f"  h1 = {field.h1}", file=out)
    print(f"  h2 = {field.h2}", file=out)
    print(f"  norm form = {field.norm_form}  (sigma multiplies it by {-field.u})", file=out)
    print(f"  verdict: {verdict}", file=out)
    return EXIT_OK


def _degenerate_info(args, spec, exc, out):
    reason = type(exc).__name__
    if args.json:
        print(json.dumps({"field": {"u": str(spec.u), "v": str(spec.v),
                                    "verdict": f"degenerate ({reason})", "detail": str(exc)}},
                         indent=2), file=out)
    else:
        print(f"field: u = {spec.u}, v = {spec.v}", file=out)
        print(f"  verdict: degenerate ({reason}): {exc}", file=out)
    return EXIT_DEGENERATE


def _limits(args) -> SearchLimits:
    return SearchLimits(m_max=args.mmax, slack=args.slack, d_max=args.dmax,
                        infinite_degree_slack=args.infinite_degree_slack)


def _cmd_solve(args, field, spec, out, render=False):
    D = field.radicand
    a = parse_expr(getattr(args, "a", "1"), D)
    b = parse_expr(getattr(args, "b", "-1"), D)
    f = parse_expr(args.f, D)
    outcome = solve_equation(field, a, b, f, args.mode, _limits(args))
    rep = outcome.report
    warnings = list(outcome.warnings)
    verification = None
    rendered = None
    if outcome.found:
        ident = Identity(field, a, b, f, outcome.solution, rep, warnings)
        verification = verify_pointwise(field, a, b, f, outcome.solution, spec,
                                        range(0, args.n_max + 1))
        if render:
            try:
                rendered = render_sum_identity(ident, spec)
            except NotRenderable as exc:
                warnings.append(str(exc))
    elif not any(w.startswith("bound exhaustion") for w in warnings):
        warnings.append("structural failure: the solver produced no candidate")
    code = EXIT_NOT_FOUND if not outcome.found else (
        EXIT_OK if verification.failure is None else EXIT_VERIFY_FAILED)

    if args.json:
        doc = {
            "field": _field_dict(field, args.approx),
            "input": {"a": str(a), "b": str(b), "f": str(f)},
            "mode": outcome.mode,
            "solution": {"g": str(outcome.solution)} if outcome.found else None,
            "report": rep.to_dict(),
            "denominator_report": rep.to_dict() if outcome.mode == "nontrivial" else None,
            "warnings": warnings,
            "limits_hit": outcome.limits_hit,
            "verification": verification.to_dict() if verification else None,
        }
        if rendered is not None:
            doc["identity"] = rendered.text
        print(json.dumps(doc, indent=2), file=out)
        return code

    _print_field(field, args.approx, out)
    print(f"mode: {outcome.mode}", file=out)
    if outcome.found:
        print(f"g = {outcome.solution}", file=out)
        print(f"pointwise check over n = 0..{args.n_max}: {verification.passed}/{verification.checked} "
              f"passed, {len(verification.skipped)} skipped", file=out)
        for n, reason in verification.skipped:
            print(f"  skipped n = {n}: {reason}", file=out)
        if verification.failure:
            fl = verification.failure
            print(f"  FAILED at n = {fl['n']}: lhs = {fl['lhs']}, rhs = {fl['rhs']}", file=out)
        if rendered is not None:
            print(rendered.text, file=out)
    else:
        print("no solution found", file=out)
    for w in warnings:
        print(f"warning: {w}", file=out)
    return code


def _cmd_verify(args, field, spec, out):
    D = field.radicand
    a, b, f, g = (parse_expr(getattr(args, k), D) for k in ("a", "b", "f", "g"))
    res = residual(field, a, b, f, g)
    ver = verify_pointwise(field, a, b, f, g, spec, range(0, args.n_max + 1))
    ok = not res and ver.failure is None
    if args.json:
        print(json.dumps({
            "field": _field_dict(field, args.approx),
            "input": {"a": str(a), "b": str(b), "f": str(f), "g": str(g)},
            "symbolic": {"holds": not res, "residual": str(res)},
            "verification": ver.to_dict(),
        }, indent=2), file=out)
    else:
        print(f"({a})*sigma(g) + ({b})*g = {f}   with g = {g}", file=out)
        print(f"symbolic: {'holds' if not res else f'fails, residual {res}'}", file=out)
        print(f"pointwise: {ver.passed}/{ver.checked} passed, {len(ver.skipped)} skipped", file=out)
        for n, reason in ver.skipped:
            print(f"  skipped n = {n}: {reason}", file=out)
        if ver.failure:
            fl = ver.failure
            print(f"  FAILED at n = {fl['n']}: lhs = {fl['lhs']}, rhs = {fl['rhs']}", file=out)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        spec = _resolve_sequence(args)
        try:
            field = DiffField(spec.u, spec.v)
        except DegeneracyError as exc:
            if args.command == "field-info":
                return _degenerate_info(args, spec, exc, out)
            raise
        if args.command == "field-info":
            return _cmd_field_info(args, field, spec, out)
        if args.command == "verify":
            return _cmd_verify(args, field, spec, out)
        if args.command == "sum":
            args.a, args.b = "1", "-1"
            return _cmd_solve(args, field, spec, out, render=True)
        return _cmd_solve(args, field, spec, out)
    except DegeneracyError as exc:
        print(f"degenerate field: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (InputError, BivsumError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
