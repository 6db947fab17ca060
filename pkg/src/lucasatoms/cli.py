"""Command-line front end with stable text and JSON output.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal-consistency
error. JSON mode (--json) emits exactly one envelope object on stdout:
{"command": ..., "inputs": ..., "result": ..., "warnings": [...]}.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .atoms import atom, atom_eval, decompose_ratio, lucanomial, prime_search
from .errors import InternalConsistencyError
from .exactpoly import BiPoly, UniPoly
from .holonomy import divisibility_scan, fit_recurrence, t_zero_profile
from .lucasfam import (
    LucasParams,
    companion_int,
    companion_poly,
    cyclotomic,
    lucas_int,
    lucas_poly,
)
from .numtheory import DETERMINISTIC_PRIMALITY_BOUND
from .valuations import (
    classify,
    rank_of_appearance,
    vp_atom_closed,
    vp_atom_mobius,
    vp_atom_oracle,
)

_ROUTE_ALIASES = {
    "sym": "symmetric",
    "div": "division",
    "red": "reduction",
    "checked": "checked",
}


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from exc


def _fraction_str(x: Fraction) -> str:
    return str(x)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucasatoms",
        description="Exact arithmetic for Lucas polynomials and Lucas atoms.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    p_atom = sub.add_parser("atom", help="Lucas atom P_N")
    p_atom.add_argument("n", type=int)
    p_atom.add_argument("--route", choices=sorted(_ROUTE_ALIASES), default="checked")
    p_atom.add_argument("--eval", dest="eval_at", nargs=2, type=int, metavar=("S", "T"))

    for name, help_text in (("lucas", "Lucas polynomial U_N"), ("companion", "companion polynomial W_N")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("n", type=int)
        p.add_argument("--eval", dest="eval_at", nargs=2, type=int, metavar=("S", "T"))

    p_cyc = sub.add_parser("cyclotomic", help="cyclotomic polynomial of index N")
    p_cyc.add_argument("n", type=int)

    p_dec = sub.add_parser("decompose", help="polynomiality of a Lucas-product ratio")
    p_dec.add_argument("--num", type=_int_list, required=True, metavar="A,B,...")
    p_dec.add_argument("--den", type=_int_list, default=[], metavar="C,D,...")

    p_lucan = sub.add_parser("lucanomial", help="Lucas binomial analogue (N over K)")
    p_lucan.add_argument("n", type=int)
    p_lucan.add_argument("k", type=int)
    p_lucan.add_argument("--eval", dest="eval_at", nargs=2, type=int, metavar=("S", "T"))

    p_val = sub.add_parser("val", help="p-adic valuation of an atom value")
    p_val.add_argument("--p", type=int, required=True)
    p_val.add_argument("--s", type=int, required=True)
    p_val.add_argument("--t", type=int, required=True)
    p_val.add_argument("--n", type=int, required=True)
    p_val.add_argument(
        "--method", choices=("closed", "mobius", "oracle", "all"), default="all"
    )

    for name in ("rank", "classify"):
        p = sub.add_parser(
            name,
            help="rank of appearance" if name == "rank" else "valuation regime",
        )
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--t", type=int, required=True)

    p_scan = sub.add_parser("scan", help="divisibility pattern of p | P_n")
    p_scan.add_argument("--p", type=int, required=True)
    p_scan.add_argument("--s", type=int, required=True)
    p_scan.add_argument("--t", type=int, required=True)
    p_scan.add_argument("--limit", type=int, required=True)

    p_fit = sub.add_parser("fit", help="fit or refute a polynomial recurrence")
    p_fit.add_argument("--s", type=int, required=True)
    p_fit.add_argument("--t", type=int, required=True)
    p_fit.add_argument("--order", type=int, required=True)
    p_fit.add_argument("--degree", type=int, required=True)
    p_fit.add_argument("--from", dest="n_from", type=int, default=None)
    p_fit.add_argument("--to", dest="n_to", type=int, default=None)

    p_tzero = sub.add_parser("tzero", help="the t = 0 profile s^phi(n)")
    p_tzero.add_argument("--s", type=int, required=True)
    p_tzero.add_argument("--limit", type=int, required=True)

    p_ps = sub.add_parser("primesearch", help="prime atom values on a grid")
    p_ps.add_argument("n", type=int)
    p_ps.add_argument("--bound", type=int, required=True)

    return parser


def _poly_payload(poly: BiPoly | UniPoly) -> str:
    return str(poly)


def _eval_lines(
    poly_kind: str, n: int, eval_at: list[int] | None, value_fn
) -> tuple[dict, list[str]]:
    payload: dict = {}
    lines: list[str] = []
    if eval_at is not None:
        s0, t0 = eval_at
        value = value_fn(n, LucasParams(s0, t0))
        payload["eval"] = {"s": s0, "t": t0, "value": value}
        lines.append(f"at s={s0}, t={t0}: {value}")
    return payload, lines


def _run_atom(args) -> tuple[dict, list[str], list[str]]:
    route = _ROUTE_ALIASES[args.route]
    poly = atom(args.n, route)
    payload = {"n": args.n, "route": route, "polynomial": str(poly)}
    lines = [str(poly)]
    extra, extra_lines = _eval_lines("atom", args.n, args.eval_at, atom_eval)
    payload.update(extra)
    return payload, lines + extra_lines, []


def _run_family(args) -> tuple[dict, list[str], list[str]]:
    if args.command == "lucas":
        poly, value_fn = lucas_poly(args.n), lucas_int
    else:
        poly, value_fn = companion_poly(args.n), companion_int
    payload = {"n": args.n, "polynomial": str(poly)}
    lines = [str(poly)]
    extra, extra_lines = _eval_lines(args.command, args.n, args.eval_at, value_fn)
    payload.update(extra)
    return payload, lines + extra_lines, []


def _run_cyclotomic(args) -> tuple[dict, list[str], list[str]]:
    poly = cyclotomic(args.n)
    return {"n": args.n, "polynomial": str(poly)}, [str(poly)], []


def _run_decompose(args) -> tuple[dict, list[str], list[str]]:
    dec = decompose_ratio(args.num, args.den)
    payload = {
        "numerators": args.num,
        "denominators": args.den,
        "exponents": {str(d): {"a": a, "b": b} for d, (a, b) in dec.exponents.items()},
        "is_polynomial": dec.is_polynomial,
        "quotient_exponents": (
            None
            if dec.quotient_exponents is None
            else {str(d): e for d, e in dec.quotient_exponents.items()}
        ),
    }
    lines = [f"polynomial: {'true' if dec.is_polynomial else 'false'}"]
    for d, (a, b) in dec.exponents.items():
        lines.append(f"d={d}: a={a} b={b}")
    if dec.quotient_exponents is not None:
        quotient = " ".join(f"{d}^{e}" for d, e in dec.quotient_exponents.items())
        lines.append(f"quotient: {quotient or '1'}")
    return payload, lines, []


def _run_lucanomial(args) -> tuple[dict, list[str], list[str]]:
    exponents, poly = lucanomial(args.n, args.k)
    payload = {
        "n": args.n,
        "k": args.k,
        "exponents": {str(d): e for d, e in exponents.items()},
        "polynomial": str(poly),
    }
    lines = [
        "exponents: " + (" ".join(f"{d}^{e}" for d, e in exponents.items()) or "1"),
        str(poly),
    ]
    if args.eval_at is not None:
        s0, t0 = args.eval_at
        value = poly.eval(s0, t0)
        payload["eval"] = {"s": s0, "t": t0, "value": value}
        lines.append(f"at s={s0}, t={t0}: {value}")
    return payload, lines, []


def _run_val(args) -> tuple[dict, list[str], list[str]]:
    params = LucasParams(args.s, args.t)
    methods = (
        ("closed", "mobius", "oracle") if args.method == "all" else (args.method,)
    )
    fns = {
        "closed": vp_atom_closed,
        "mobius": vp_atom_mobius,
        "oracle": vp_atom_oracle,
    }
    values = {name: fns[name](args.p, params, args.n) for name in methods}
    if len(set(values.values())) > 1:
        raise InternalConsistencyError(
            f"valuation methods disagree: {values}"
        )
    payload = {
        "p": args.p,
        "s": args.s,
        "t": args.t,
        "n": args.n,
        "method": args.method,
        "values": values,
    }
    line = " ".join(f"{name}={values[name]}" for name in methods)
    return payload, [line], []


def _run_rank(args) -> tuple[dict, list[str], list[str]]:
    res = rank_of_appearance(args.p, LucasParams(args.s, args.t))
    payload = {
        "p": args.p,
        "s": args.s,
        "t": args.t,
        "rho": res.rho,
        "divides_bound": res.divides_bound,
    }
    rho = "undefined" if res.rho is None else res.rho
    bound = "-" if res.divides_bound is None else res.divides_bound
    return payload, [f"rho={rho} divides_bound={bound}"], []


def _run_classify(args) -> tuple[dict, list[str], list[str]]:
    case = classify(args.p, LucasParams(args.s, args.t))
    payload = {
        "p": case.p,
        "s": case.params.s,
        "t": case.params.t,
        "regime": case.regime.value,
        "a": case.a,
        "b": case.b,
        "s_prime": case.s_prime,
        "t_prime": case.t_prime,
        "delta": case.delta,
        "k": case.k,
        "lambda": case.lam,
    }
    show = lambda v, inf: ("inf" if inf else "-") if v is None else v  # noqa: E731
    line = (
        f"regime={case.regime.value} a={show(case.a, True)} b={case.b}"
        f" s_prime={show(case.s_prime, False)} t_prime={case.t_prime}"
        f" delta={case.delta} k={show(case.k, False)} lambda={show(case.lam, False)}"
    )
    return payload, [line], []


def _run_scan(args) -> tuple[dict, list[str], list[str]]:
    pattern = divisibility_scan(args.p, LucasParams(args.s, args.t), args.limit)
    payload = {
        "p": args.p,
        "s": args.s,
        "t": args.t,
        "limit": args.limit,
        "hits": list(pattern.hit_indices),
        "matches_closed_form": pattern.matches,
        "ap_expressible": pattern.ap_expressible,
    }
    lines = [
        "hits: " + " ".join(str(n) for n in pattern.hit_indices),
        f"matches_closed_form: {'true' if pattern.matches else 'false'}",
        f"ap_expressible: {'true' if pattern.ap_expressible else 'false'}",
    ]
    return payload, lines, []


def _run_fit(args) -> tuple[dict, list[str], list[str]]:
    n_from = args.n_from if args.n_from is not None else 10
    if args.n_to is not None:
        n_to = args.n_to
    else:
        n_to = n_from + 3 * (args.order + 1) * (args.degree + 1)
    fit = fit_recurrence(
        LucasParams(args.s, args.t), args.order, args.degree, n_from, n_to
    )
    payload = {
        "s": args.s,
        "t": args.t,
        "order": fit.order,
        "degree": fit.degree,
        "from": fit.window[0],
        "to": fit.window[1],
        "status": fit.status,
        "coefficients": (
            None
            if fit.coefficients is None
            else [[_fraction_str(c) for c in row] for row in fit.coefficients]
        ),
        "dimension": fit.dimension,
        "witness_end": fit.witness_end,
        "certificate": (
            None
            if fit.certificate is None
            else [_fraction_str(c) for c in fit.certificate]
        ),
    }
    if fit.status == "refuted":
        lines = [f"refuted: first inconsistent prefix ends at n={fit.witness_end}"]
    else:
        lines = [f"fit: dimension={fit.dimension}"]
        for j, row in enumerate(fit.coefficients or ()):
            terms = " + ".join(
                f"{_fraction_str(c)}*n^{r}" if r else _fraction_str(c)
                for r, c in enumerate(row)
                if c
            )
            lines.append(f"G_{j}(n) = {terms or '0'}")
    return payload, lines, []


def _run_tzero(args) -> tuple[dict, list[str], list[str]]:
    profile = t_zero_profile(args.s, args.limit)
    payload = {"s": args.s, "limit": args.limit, "values": [[n, v] for n, v in profile]}
    return payload, [f"{n} {v}" for n, v in profile], []


def _run_primesearch(args) -> tuple[dict, list[str], list[str]]:
    results = prime_search(args.n, args.bound)
    warnings = []
    if any(value >= DETERMINISTIC_PRIMALITY_BOUND for _, _, value in results):
        warnings.append("probabilistic primality: some verdicts exceed the deterministic bound")
    payload = {
        "n": args.n,
        "bound": args.bound,
        "hits": [[s, t, value] for s, t, value in results],
    }
    return payload, [f"{s} {t} {value}" for s, t, value in results], warnings


_HANDLERS = {
    "atom": _run_atom,
    "lucas": _run_family,
    "companion": _run_family,
    "cyclotomic": _run_cyclotomic,
    "decompose": _run_decompose,
    "lucanomial": _run_lucanomial,
    "val": _run_val,
    "rank": _run_rank,
    "classify": _run_classify,
    "scan": _run_scan,
    "fit": _run_fit,
    "tzero": _run_tzero,
    "primesearch": _run_primesearch,
}


def _inputs_echo(args: argparse.Namespace) -> dict:
    skip = {"command", "json"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        payload, lines, warnings = _HANDLERS[args.command](args)
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": _inputs_echo(args),
            "result": payload,
            "warnings": warnings,
        }
        print(json.dumps(envelope))
    else:
        for line in lines:
            print(line)
        for warning in warnings:
            print(f"warning: {warning}", file=sys.stderr)
    return 0


def entry() -> None:
    raise SystemExit(main())
