"""Command-line front end.

Every subcommand reads inline JSON (or @file payloads), runs one library
decision procedure, and prints a single JSON document on stdout.
Rationals are always serialized as canonical "num/den" strings; --pretty
switches to indented output with decimal approximations appended for
human reading.  Exit codes: 0 = decided / no counterexample found,
2 = NotHyperbolic, 1 = error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import HypercheckError, InvalidInput
from .hyperbolicity import (
    NOT_HYPERBOLIC,
    SearchBudget,
    cone_member,
    conjecture_case,
    decide_cubic,
    decide_quartic_hook,
    falsify_hyperbolicity,
)
from .operators import (
    DiagonalMap,
    apply,
    associated_operator,
    decide_extendable,
    g0,
    map_sending_g0_to,
    operator_to_hook,
    phi,
)
from .rationals import Q, format_rational, parse_rational, to_q
from .sympoly import HookPoly
from .unipoly import UniPoly, ZeroSumPoly


# -- JSON plumbing ---------------------------------------------------------


def _load_payload(text: str) -> dict:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as handle:
            text = handle.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON payload: {exc}") from exc
    if not isinstance(payload, dict):
        raise InvalidInput("payload must be a JSON object")
    return payload


def _rat_list(values, what: str):
    if not isinstance(values, list):
        raise InvalidInput(f"{what} must be a list of rationals")
    return [parse_rational(str(v)) for v in values]


def poly_to_json(p: UniPoly) -> dict:
    return {"n": p.ambient_degree, "coeffs": [format_rational(c) for c in p.coeffs]}


def poly_from_json(payload: dict) -> UniPoly:
    if "coeffs" not in payload:
        raise InvalidInput('polynomial payload needs "coeffs"')
    coeffs = _rat_list(payload["coeffs"], "coeffs")
    n = payload.get("n", len(coeffs) - 1)
    if not isinstance(n, int) or n < 0:
        raise InvalidInput('"n" must be a nonnegative integer')
    return UniPoly(coeffs, n)


def hook_to_json(p: HookPoly) -> dict:
    return {
        "n": p.n,
        "d": p.d,
        "basis": "etilde",
        "a": [format_rational(c) for c in p.a],
    }


def hook_from_json(payload: dict) -> HookPoly:
    for key in ("n", "d", "a"):
        if key not in payload:
            raise InvalidInput(f'hook payload needs "{key}"')
    n, d = payload["n"], payload["d"]
    if not isinstance(n, int) or not isinstance(d, int):
        raise InvalidInput('"n" and "d" must be integers')
    a = _rat_list(payload["a"], "a")
    basis = payload.get("basis", "etilde")
    if basis == "e":
        return HookPoly.from_e_basis(n, d, a)
    if basis == "etilde":
        return HookPoly(n, d, tuple(a))
    raise InvalidInput('"basis" must be "e" or "etilde"')


def map_to_json(T: DiagonalMap) -> dict:
    return {
        "n": T.n,
        "d": T.d,
        "gamma": [format_rational(c) for c in T.gamma],
        "coords": "binomial-normalized",
    }


def map_from_json(payload: dict) -> DiagonalMap:
    for key in ("n", "d", "gamma"):
        if key not in payload:
            raise InvalidInput(f'map payload needs "{key}"')
    coords = payload.get("coords", "binomial-normalized")
    if coords != "binomial-normalized":
        raise InvalidInput('only "binomial-normalized" coords are supported')
    return DiagonalMap(
        payload["n"], payload["d"], tuple(_rat_list(payload["gamma"], "gamma"))
    )


def point_from_json(payload: dict):
    if "x" not in payload:
        raise InvalidInput('point payload needs "x"')
    return _rat_list(payload["x"], "x")


def verdict_to_json(v) -> dict:
    out = {"status": v.status, "detail": {}}
    for key, value in v.detail.items():
        if isinstance(value, UniPoly):
            out["detail"][key] = poly_to_json(value)
        elif isinstance(value, (bool, int, float, str, list)):
            out["detail"][key] = value
        elif hasattr(value, "denominator"):
            out["detail"][key] = format_rational(value)
        else:
            out["detail"][key] = value
    if v.witness is not None:
        point, prof = v.witness
        out["witness"] = {
            "x": [format_rational(c) for c in point.x],
            "nonreal_roots": prof.n_nonreal,
        }
    return out


def certificate_to_json(cert) -> dict:
    out = {"kind": cert.kind}
    if cert.f is not None:
        out["f"] = poly_to_json(cert.f)
    if cert.obstruction:
        out["obstruction"] = [
            [format_rational(root.exact), mult] if root.is_exact()
            else [[format_rational(root.interval()[0]),
                   format_rational(root.interval()[1])], mult]
            for root, mult in cert.obstruction
        ]
    if cert.detail:
        out["detail"] = cert.detail
    return out


def _approximate(node):
    """Append decimal approximations to rational strings (pretty mode)."""
    if isinstance(node, dict):
        return {k: _approximate(v) for k, v in node.items()}
    if isinstance(node, list):
        return [_approximate(v) for v in node]
    if isinstance(node, str) and "/" in node:
        try:
            q = parse_rational(node)
        except HypercheckError:
            return node
        return f"{node} ~ {float(q.numerator) / float(q.denominator):.6g}"
    return node


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(_approximate(payload), indent=2, sort_keys=True))
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _status_exit(status: str) -> int:
    return 2 if status == NOT_HYPERBOLIC else 0


# -- subcommand handlers -----------------------------------------------------


def _budget_from_args(args) -> SearchBudget:
    kwargs = {}
    if getattr(args, "budget", None) is not None:
        kwargs["grid"] = args.budget
    if getattr(args, "seed", None) is not None:
        kwargs["seed"] = args.seed
    return SearchBudget(**kwargs)


def _cmd_check_cubic(args) -> int:
    v = decide_cubic(
        parse_rational(args.a), parse_rational(args.b), parse_rational(args.c),
        args.n,
    )
    _emit(verdict_to_json(v), args.pretty)
    return _status_exit(v.status)


def _cmd_check_quartic(args) -> int:
    p = hook_from_json(_load_payload(args.hook))
    v = decide_quartic_hook(p)
    _emit(verdict_to_json(v), args.pretty)
    return _status_exit(v.status)


def _cmd_operator(args) -> int:
    p = hook_from_json(_load_payload(args.hook))
    _emit(map_to_json(associated_operator(p)), args.pretty)
    return 0


def _cmd_hook_of(args) -> int:
    T = map_from_json(_load_payload(args.map))
    _emit(hook_to_json(operator_to_hook(T)), args.pretty)
    return 0


def _cmd_g0(args) -> int:
    _emit(poly_to_json(g0(args.n).inner), args.pretty)
    return 0


def _cmd_extend(args) -> int:
    if (args.map is None) == (args.target is None):
        raise InvalidInput("provide exactly one of --map or --target")
    if args.map is not None:
        T = map_from_json(_load_payload(args.map))
    else:
        target = poly_from_json(_load_payload(args.target))
        n = args.n if args.n is not None else max(2, target.ambient_degree)
        T = map_sending_g0_to(ZeroSumPoly(target), n)
    extendable, cert = decide_extendable(T)
    _emit(
        {"extendable": extendable, "certificate": certificate_to_json(cert)},
        args.pretty,
    )
    return 0


def _cmd_phi(args) -> int:
    roots = [parse_rational(part) for part in args.roots.split(",")]
    width = Q(1, 1 << args.width_bits)
    enclosures = phi(roots, width=width)
    _emit(
        {
            "enclosures": [
                [format_rational(lo), format_rational(hi)] for lo, hi in enclosures
            ],
            "width": format_rational(width),
        },
        args.pretty,
    )
    return 0


def _cmd_falsify(args) -> int:
    p = hook_from_json(_load_payload(args.hook))
    v = falsify_hyperbolicity(p, _budget_from_args(args))
    _emit(verdict_to_json(v), args.pretty)
    return _status_exit(v.status)


def _cmd_cone_member(args) -> int:
    p = hook_from_json(_load_payload(args.hook))
    x = point_from_json(_load_payload(args.point))
    _emit({"member": cone_member(p, x)}, args.pretty)
    return 0


def _cmd_conjecture(args) -> int:
    target = poly_from_json(_load_payload(args.target))
    report = conjecture_case(
        ZeroSumPoly(target),
        args.n,
        _budget_from_args(args),
        delta_trials=args.delta_trials,
    )
    payload = {
        "n": report.n,
        "d": report.d,
        "hook": hook_to_json(report.hook),
        "falsifier": verdict_to_json(report.falsifier),
        "delta_samples": {
            "trials": report.delta_trials,
            "negative": report.delta_negative,
            "min": format_rational(report.delta_min),
        },
        "extendable": report.extendable,
        "certificate_kind": report.certificate_kind,
    }
    _emit(payload, args.pretty)
    return _status_exit(report.falsifier.status)


def _cmd_demo_quintic(args) -> int:
    p = HookPoly.from_e_basis(5, 5, (0, 0, 7, -220, 4500))
    T = associated_operator(p)
    image = apply(T, g0(5)).inner
    verdict = falsify_hyperbolicity(p, _budget_from_args(args))
    extendable, cert = decide_extendable(T)
    report = conjecture_case(
        ZeroSumPoly(image), 5, _budget_from_args(args),
        delta_trials=args.delta_trials,
    )
    payload = {
        "hook": hook_to_json(p),
        "operator": map_to_json(T),
        "image_of_pivot": poly_to_json(image),
        "falsifier": verdict_to_json(verdict),
        "extendable": extendable,
        "certificate": certificate_to_json(cert),
        "delta_samples": {
            "trials": report.delta_trials,
            "negative": report.delta_negative,
            "min": format_rational(report.delta_min),
        },
    }
    _emit(payload, args.pretty)
    return _status_exit(verdict.status)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercheck",
        description=(
            "Exact decision procedures for symmetric hyperbolic polynomials "
            "and diagonal zero-sum hyperbolicity preservers."
        ),
    )
    parser.add_argument(
        "--pretty", action="store_true",
        help="indented output with decimal approximations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-cubic", help="exact cubic hyperbolicity test")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--c", required=True)
    s.add_argument("--n", type=int, default=3)
    s.set_defaults(func=_cmd_check_cubic)

    s = sub.add_parser("check-quartic", help="exact hook-quartic test")
    s.add_argument("--hook", required=True, help="hook polynomial JSON or @file")
    s.set_defaults(func=_cmd_check_quartic)

    s = sub.add_parser("operator", help="diagonal map associated to a hook polynomial")
    s.add_argument("--hook", required=True)
    s.set_defaults(func=_cmd_operator)

    s = sub.add_parser("hook-of", help="hook polynomial of a diagonal map")
    s.add_argument("--map", required=True)
    s.set_defaults(func=_cmd_hook_of)

    s = sub.add_parser("g0", help="the pivot polynomial (t+n-1)(t-1)^(n-1)")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=_cmd_g0)

    s = sub.add_parser("extend", help="extendability of a diagonal map")
    s.add_argument("--map", help="diagonal map JSON or @file")
    s.add_argument("--target", help="zero-sum polynomial JSON (image of the pivot)")
    s.add_argument("--n", type=int, help="source degree when using --target")
    s.set_defaults(func=_cmd_extend)

    s = sub.add_parser("phi", help="root-simplex map induced by delta_d")
    s.add_argument("--roots", required=True, help="comma-separated rationals")
    s.add_argument("--width-bits", type=int, default=40,
                   help="enclosure width 2^-bits")
    s.set_defaults(func=_cmd_phi)

    s = sub.add_parser("falsify", help="search for a non-hyperbolicity witness")
    s.add_argument("--hook", required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--budget", type=int, help="grid points per axis")
    s.set_defaults(func=_cmd_falsify)

    s = sub.add_parser("cone-member", help="hyperbolicity cone membership")
    s.add_argument("--hook", required=True)
    s.add_argument("--point", required=True)
    s.set_defaults(func=_cmd_cone_member)

    s = sub.add_parser("conjecture", help="sufficiency-conjecture evidence run")
    s.add_argument("--target", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--budget", type=int)
    s.add_argument("--delta-trials", type=int, default=1000)
    s.set_defaults(func=_cmd_conjecture)

    s = sub.add_parser("demo-quintic", help="full quintic reproduction pipeline")
    s.add_argument("--seed", type=int)
    s.add_argument("--budget", type=int)
    s.add_argument("--delta-trials", type=int, default=1000)
    s.set_defaults(func=_cmd_demo_quintic)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except HypercheckError as exc:
        print(
            json.dumps(
                {"error": type(exc).__name__, "message": str(exc)},
                sort_keys=True,
            ),
            file=sys.stdout,
        )
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
