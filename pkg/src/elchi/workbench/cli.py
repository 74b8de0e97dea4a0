"""``elchi`` command line.  Exit codes: 0 pass, 1 verification failure, 2 usage error."""

from __future__ import annotations

import argparse
import sys
import time
from typing import List, Optional

from ..classical import classical_oracle, limit_compare, z0_limit, PoleAtZeroError
from ..envalg import ell_action, lambda_action, u_f_pairing
from ..funalg import FElement
from ..qplane import NotInPlaneError, PlaneElement, plane_from_f, plane_lambda, plane_to_f, poch_basis_convert
from ..schrodinger import AngularSpec, PlaneWaveSpec, angular_state, plane_wave_convert, plane_wave_state
from ..scalar import ParamScalar
from .parser import AlphabetMixError, ExpressionSyntaxError, parse_expression
from .serialize import text_key, render
from .suites import SUITE_NAMES, SuiteConfig, UnknownSuiteError, gate, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _corrupt_key(text: str):
    try:
        m, n = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M,N, got {text!r}")
    return (m, n)


def _add_output(p):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="elchi", description="Exact workbench for the deformed Euclidean quantum group.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--degree", type=int)
    v.add_argument("--order", type=int)
    v.add_argument("--r-max", type=int)
    v.add_argument("--l-max", type=int)
    v.add_argument("--corrupt", type=_corrupt_key, metavar="M,N",
                   help="negative control: perturb one coefficient (prop33, classical-limits)")
    _add_output(v)

    a = sub.add_parser("act", help="apply lambda(u) or ell(u) to an F or plane element")
    a.add_argument("--side", choices=("lambda", "ell"), default="lambda")
    a.add_argument("--element", required=True, help="U expression")
    a.add_argument("--on", required=True, help="F or plane expression")
    _add_output(a)

    pr = sub.add_parser("pair", help="evaluate the pairing <u, f>")
    pr.add_argument("--u", required=True)
    pr.add_argument("--f", required=True)
    _add_output(pr)

    s = sub.add_parser("state", help="build a truncated eigenstate")
    s.add_argument("kind", choices=("plane", "angular"))
    s.add_argument("--order", type=int, default=8)
    s.add_argument("--r", type=int, default=0)
    s.add_argument("--basis", choices=("monomial", "product"), default="monomial",
                   help="product: coordinates in (chi)_m(1-chibar)_n or rho_l(chi)_r")
    _add_output(s)

    lm = sub.add_parser("limit", help="z -> 0 limit of a state, compared with the classical series")
    lm.add_argument("kind", choices=("plane", "angular"))
    lm.add_argument("--order", type=int, default=8)
    lm.add_argument("--r", type=int, default=0)
    _add_output(lm)
    return ap


def _parse(src: str, allowed, what: str):
    expr = parse_expression(src)
    if expr.alphabet not in allowed:
        raise UsageError(f"{what} must be a {' or '.join(allowed)} expression, got {expr.alphabet}")
    return expr.evaluate()


def _as_u(v):
    from ..envalg import UElement

    return UElement.one().scale(v) if isinstance(v, ParamScalar) else v


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_verify(args) -> int:
    try:
        cfg = SuiteConfig(args.suite, args.degree, args.order, args.r_max, args.l_max,
                          out=args.out, fmt=args.format, corrupt=args.corrupt)
    except (UnknownSuiteError, ValueError) as exc:
        raise UsageError(str(exc))
    timings = {}
    t0 = time.perf_counter()
    code, _, text = run_suite(cfg, timings)
    if not args.out:
        sys.stdout.write(text)
    if args.format == "text":
        for name, sec in timings.items():
            print(f"# {name}: {sec:.1f}s", file=sys.stderr)
        print(f"# total: {time.perf_counter() - t0:.1f}s, {'PASS' if code == 0 else 'FAIL'}", file=sys.stderr)
    return code


def _cmd_act(args) -> int:
    u = _as_u(_parse(args.element, ("U", "scalar"), "--element"))
    target = _parse(args.on, ("F", "plane", "scalar"), "--on")
    if isinstance(target, ParamScalar):
        target = FElement.one().scale(target)
    if isinstance(target, PlaneElement):
        if args.side == "lambda":
            result = plane_lambda(u, target)
        else:
            img = ell_action(u, plane_to_f(target))
            try:
                result = plane_from_f(img)
            except NotInPlaneError:
                result = img
    else:
        result = (lambda_action if args.side == "lambda" else ell_action)(u, target)
    _emit(render(result, args.format), args.out)
    return EXIT_PASS


def _cmd_pair(args) -> int:
    u = _as_u(_parse(args.u, ("U", "scalar"), "--u"))
    f = _parse(args.f, ("F", "plane", "scalar"), "--f")
    if isinstance(f, ParamScalar):
        f = FElement.one().scale(f)
    if isinstance(f, PlaneElement):
        f = plane_to_f(f)
    _emit(render(u_f_pairing(u, f), args.format), args.out)
    return EXIT_PASS


def _check_order(order: int) -> None:
    if order < 0:
        raise UsageError("--order must be nonnegative")


def _cmd_state(args) -> int:
    _check_order(args.order)
    if args.kind == "plane":
        state = plane_wave_state(PlaneWaveSpec(order=args.order))
        coords = plane_wave_convert(state)
    else:
        state = angular_state(AngularSpec(args.r, args.order))
        coords = poch_basis_convert(state, "to_poch")
    if args.basis == "monomial":
        value = state
    elif args.format == "json":
        value = [{"key": k, "coeff": c} for k, c in sorted(coords.items())]
    elif args.format == "csv":
        value = {"terms": sorted(coords.items())}
    else:
        value = "\n".join(f"{text_key(k)}: {c}" for k, c in sorted(coords.items()))
    _emit(render(value, args.format), args.out)
    return EXIT_PASS


def _cmd_limit(args) -> int:
    _check_order(args.order)
    if args.kind == "plane":
        state = plane_wave_state(PlaneWaveSpec(order=args.order))
        oracle = classical_oracle("planewave", args.order)
    else:
        state = angular_state(AngularSpec(args.r, args.order))
        fam = "chi" if args.r <= 0 else "chibar"
        oracle = classical_oracle("bessel", args.order, r=abs(args.r), family=fam)
    report = limit_compare(state, oracle, args.order, identity=f"{args.kind} limit")
    try:
        report.details["limit"] = str(z0_limit(state))
    except PoleAtZeroError:
        pass
    _emit(render(report, args.format), args.out)
    return EXIT_PASS if gate([report]) else EXIT_FAIL


_COMMANDS = {"verify": _cmd_verify, "act": _cmd_act, "pair": _cmd_pair, "state": _cmd_state, "limit": _cmd_limit}


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, ExpressionSyntaxError, AlphabetMixError) as exc:
        print(f"elchi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
