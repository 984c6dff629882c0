"""Command-line front end.

Exit status: 0 when everything checked holds, 1 when an identity fails,
2 on a usage error (bad flags, bad partition or rational text).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import quad
from .jack import eval_at_ones, jack, jack_poly, restricted_jack
from .partitions import PartitionError
from .qop import ZPoly, beta_lambda, f_polynomial, q_eigenvalue_eta, q_eigenvalue_sum, qz_apply
from .scalars import PoleError, RatFunc, SpecializedField, SymbolicField, specialize
from .serialize import dumps, from_json, parse_partition, parse_rational, to_json
from .sov import MultiZPoly, reconstruct, separate_via_chain, separate_via_q
from .sympoly import SymPoly
from .verify import SUITE_NAMES, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(text):
    if text is None or text == "symbolic":
        return SymbolicField(), "symbolic"
    try:
        g0 = parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return SpecializedField(g0), f"{g0.numerator}/{g0.denominator}"


def _partition(args):
    try:
        lam = parse_partition(args.lambda_)
    except (PartitionError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    n = args.n if args.n is not None else len(lam)
    if len(lam) > n:
        raise UsageError(f"partition {lam} has more than {n} parts")
    return lam + (0,) * (n - len(lam))


def _cmd_jack(args):
    field, label = _field(args.g)
    lam = _partition(args)
    return {"g": label, "jack": to_json(jack(lam, field=field))}, True


def _cmd_qz_apply(args):
    field, label = _field(args.g)
    text = args.poly
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        p = from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad polynomial JSON: {exc}") from exc
    if not isinstance(p, SymPoly):
        raise UsageError("--poly must be a symmetric polynomial in the m basis")
    if args.n is not None and p.n != args.n:
        raise UsageError(f"polynomial has {p.n} variables, --n says {args.n}")
    if isinstance(field, SpecializedField):
        try:
            p = p.map_coeffs(lambda c: specialize(c, field.g0) if isinstance(c, RatFunc) else field(c))
        except PoleError as exc:
            raise UsageError(str(exc)) from exc
    else:
        p = p.map_coeffs(lambda c: c if isinstance(c, RatFunc) else RatFunc.const(c))
    return {"g": label, "result": to_json(qz_apply(p, field))}, True


def _cmd_q_eigenvalue(args):
    field, label = _field(args.g)
    lam = _partition(args)
    q_sum = q_eigenvalue_sum(lam, field=field)
    q_eta = q_eigenvalue_eta(lam, field=field)
    restricted = ZPoly(restricted_jack(lam, 1, field).univariate_coeffs()) * (field.one / eval_at_ones(lam, field=field))
    f = f_polynomial(lam, field=field)
    beta = beta_lambda(lam, field=field)
    diffs = {
        "sum_minus_eta": q_sum - q_eta,
        "sum_minus_restricted": q_sum - restricted,
        "f_minus_beta_q": f - q_sum * beta,
    }
    ok = all(d.is_zero() for d in diffs.values())
    out = {
        "g": label,
        "lambda": list(lam),
        "q": to_json(q_sum),
        "routes": {"multiple_sum": to_json(q_sum), "eta_rule": to_json(q_eta), "restricted_jack": to_json(restricted)},
        "f": to_json(f),
        "beta": to_json(beta),
        "differences": {k: to_json(v) for k, v in diffs.items()},
        "agree": ok,
    }
    return out, ok


def _cmd_separate(args):
    field, label = _field(args.g)
    lam = _partition(args)
    n = len(lam)
    P = jack_poly(lam, field)
    via_q = separate_via_q(P, field=field)
    via_chain = separate_via_chain(P, field=field)
    c = eval_at_ones(lam, field=field)
    q = q_eigenvalue_sum(lam, field=field)
    factored = MultiZPoly.from_factors(c, [q] * n)
    ok = via_q == via_chain == factored
    out = {
        "g": label,
        "lambda": list(lam),
        "separated": to_json(via_q),
        "factored": {"c": to_json(c), "factors": [to_json(q) for _ in range(n)]},
        "chain_agrees": via_chain == via_q,
        "factorisation_holds": factored == via_q,
    }
    return out, ok


def _cmd_reconstruct(args):
    field, label = _field(args.g)
    lam = _partition(args)
    rebuilt = reconstruct(lam, field=field)
    ok = rebuilt == jack(lam, field=field)
    return {"g": label, "reconstructed": to_json(rebuilt), "equals_jack": ok}, ok


def _quad_report_json(r: quad.QuadReport):
    return {
        "kind": r.kind,
        "label": r.label,
        "computed": r.computed,
        "expected": r.expected,
        "relative_error": r.relative_error,
        "evaluations": r.evaluations,
        "nodes": r.nodes,
        "passed": r.passed,
    }


def _cmd_quad_verify(args):
    if args.tol <= 0 or args.nodes <= 0:
        raise UsageError("--tol and --nodes must be positive")
    if args.g is None:
        g_values = (1, 2, 3)
    else:
        try:
            g_values = (parse_rational(args.g),)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if g_values[0] <= 0:
            raise UsageError("--g must be positive")
    problems = quad.default_suite(g_values, tolerance=args.tol, extended=args.suite == "extended")
    reports = quad.run_suite(problems, nodes=args.nodes, grading=args.grading)
    failures = sum(1 for r in reports if not r.passed)
    out = {
        "reports": [_quad_report_json(r) for r in reports],
        "summary": {"cases": len(reports), "failures": failures, "passed": failures == 0},
    }
    return out, failures == 0


def _cmd_verify(args):
    if args.max_weight < 0 or args.max_n < 1 or args.tol <= 0 or args.nodes <= 0:
        raise UsageError("bounds, --tol and --nodes must be positive")
    field, label = _field(args.g)
    only = args.only.split(",") if args.only else None
    if only:
        unknown = [s for s in only if s not in SUITE_NAMES]
        if unknown:
            raise UsageError(f"unknown suites: {unknown}")
    reports = run_verify(args.max_weight, args.max_n, field, label, tol=args.tol, nodes=args.nodes,
                         quad_suite=args.suite, include_quad=not args.skip_quad, only=only)
    passed = all(r.passed for r in reports)
    first = next((f for r in reports for f in r.failures), None)
    out = {
        "config": {"max_weight": args.max_weight, "max_n": args.max_n, "g": label, "tol": args.tol,
                   "nodes": args.nodes},
        "suites": [r.as_json() for r in reports],
        "passed": passed,
        "first_failure": first.as_json() if first else None,
    }
    return out, passed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jacksov", description="Jack polynomials, Q-operator and separation of variables.")
    parser.add_argument("--output", "-o", help="write JSON here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_lambda(p):
        p.add_argument("--n", type=int, help="number of variables")
        p.add_argument("--lambda", dest="lambda_", required=True, help="comma-separated parts, e.g. 2,1,0")
        p.add_argument("--g", help="'symbolic' (default) or a rational such as 1/2")
        p.add_argument("--output", "-o", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    with_lambda(sub.add_parser("jack", help="Jack polynomial in the monomial basis"))
    p = sub.add_parser("qz-apply", help="apply Q_z to a symmetric polynomial")
    p.add_argument("--n", type=int)
    p.add_argument("--poly", required=True, help="polynomial JSON, or @file")
    p.add_argument("--g")
    p.add_argument("--output", "-o", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    with_lambda(sub.add_parser("q-eigenvalue", help="q_lambda(z) by independent routes"))
    with_lambda(sub.add_parser("separate", help="separated form of P_lambda"))
    with_lambda(sub.add_parser("reconstruct", help="P_lambda rebuilt by the Q0' recursion"))

    p = sub.add_parser("quad-verify", help="numeric integral identities")
    p.add_argument("--suite", choices=("default", "extended"), default="default")
    p.add_argument("--g", help="run at this g only (default: 1, 2 and 3)")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--nodes", type=int, default=64)
    p.add_argument("--grading", type=float, default=1.0, help="endpoint clustering exponent (1 = off)")
    p.add_argument("--output", "-o", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    p = sub.add_parser("verify", help="run every exact and numeric suite")
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--g", default="symbolic")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--nodes", type=int, default=64)
    p.add_argument("--suite", choices=("default", "extended"), default="default")
    p.add_argument("--only", help="comma-separated suite names")
    p.add_argument("--skip-quad", action="store_true")
    p.add_argument("--output", "-o", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    return parser


COMMANDS = {
    "jack": _cmd_jack,
    "qz-apply": _cmd_qz_apply,
    "q-eigenvalue": _cmd_q_eigenvalue,
    "separate": _cmd_separate,
    "reconstruct": _cmd_reconstruct,
    "quad-verify": _cmd_quad_verify,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        payload, ok = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = dumps(payload) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
