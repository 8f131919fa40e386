"""Command-line front end.

JSON is the machine output format; --pretty renders small human tables.
Exit codes: 0 success, 1 when a verification or feasibility answer is
negative, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .harmonic import criterion_basis, full_basis, fully_even_subset
from .moments import first_failure
from .numeric import format_rational
from .orbit import DesignConfig, enumerate_orbit, orbit_size
from .solver import solve_t5, solve_t7, tau_table
from .strength import classify, property_g
from .tight import fisher_bound, tight_5_3d, tight_7_3d, tight_7_4d, tightness_certificate


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r} (expected p or p/q)")
    return value


def _parse_r2_list(text: str) -> dict[int, Fraction]:
    """Parse 'k=val,k=val' with the failing entry position reported."""
    result: dict[int, Fraction] = {}
    for pos, item in enumerate(text.split(","), start=1):
        item = item.strip()
        if "=" not in item:
            raise argparse.ArgumentTypeError(
                f"--r2 entry {pos} ({item!r}): expected k=value"
            )
        key, _, value = item.partition("=")
        try:
            k = int(key)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"--r2 entry {pos} ({item!r}): bad orbit index {key!r}"
            )
        try:
            result[k] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(
                f"--r2 entry {pos} ({item!r}): malformed rational {value!r}"
            )
    return result


def _parse_index_set(text: str) -> list[int]:
    try:
        return sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed index set {text!r} (expected e.g. 1,3)")


def _load_config(path: str) -> DesignConfig:
    with open(path) as handle:
        return DesignConfig.from_json_dict(json.load(handle))


def _emit(data, pretty_lines=None, pretty: bool = False) -> None:
    if pretty and pretty_lines is not None:
        for line in pretty_lines:
            print(line)
    else:
        print(json.dumps(data, indent=2))


def _cmd_orbit(args) -> int:
    if not 1 <= args.k <= args.n:
        raise ValueError(f"need 1 <= k <= n, got k={args.k}, n={args.n}")
    size = orbit_size(args.n, args.k)
    data = {"n": args.n, "k": args.k, "count": size}
    if not args.count_only:
        data["points"] = [list(pt.coords) for pt in enumerate_orbit(args.n, args.k)]
    _emit(data, pretty=args.pretty, pretty_lines=[f"|I^{args.n}_{args.k}| = {size}"])
    return 0


def _cmd_verify(args) -> int:
    cfg = _load_config(args.config)
    failure = first_failure(cfg, args.t)
    data = {
        "t": args.t,
        "is_design": failure is None,
        "first_failure": None,
    }
    if failure is not None:
        data["first_failure"] = {
            "degree": failure.degree,
            "monomial": list(failure.exponents),
            "residual": format_rational(failure.residual),
        }
    verdict = "PASS" if failure is None else f"FAIL at degree {failure.degree}"
    _emit(data, pretty=args.pretty, pretty_lines=[f"t={args.t}: {verdict}"])
    return 0 if failure is None else 1


def _cmd_classify(args) -> int:
    cfg = _load_config(args.config)
    report = classify(cfg)
    lines = [f"strength = {report.strength}"]
    lines += [f"  {eq} = {format_rational(v)}" for eq, v in report.residuals.items()]
    _emit(report.to_json_dict(), pretty=args.pretty, pretty_lines=lines)
    return 0


def _cmd_solve(args) -> int:
    if args.t == 5:
        result = solve_t5(args.n, args.J, args.r2)
    elif args.t == 7:
        result = solve_t7(args.n, args.J, args.r2)
    else:
        raise SystemExit(2)
    lines = [f"feasible: {result.feasible} ({result.reason})"]
    if result.solution:
        for layer in result.solution.layers:
            lines.append(
                f"  k={layer.k}  r^2={format_rational(layer.r_squared)}  w={format_rational(layer.weight)}"
            )
    _emit(result.to_json_dict(), pretty=args.pretty, pretty_lines=lines)
    return 0 if result.feasible else 1


def _cmd_property_g(args) -> int:
    values = []
    witnesses = {}
    for n in range(1, args.max + 1):
        witness = property_g(n)
        if witness is not None:
            values.append(n)
            witnesses[str(n)] = list(witness)
    data = {"max": args.max, "values": values, "witnesses": witnesses}
    lines = [", ".join(str(v) for v in values)]
    _emit(data, pretty=args.pretty, pretty_lines=lines)
    return 0


def _cmd_fisher(args) -> int:
    bound = fisher_bound(args.n, args.p, args.t)
    _emit(
        bound.to_json_dict(),
        pretty=args.pretty,
        pretty_lines=[f"N({args.n},{args.p},{args.t}) = {bound.value}"],
    )
    return 0


_FAMILIES = {"5-3d": tight_5_3d, "7-3d": tight_7_3d, "7-4d": tight_7_4d}


def _cmd_tight(args) -> int:
    cfg = _FAMILIES[args.family](args.r2, args.rho2, args.w)
    certificate = tightness_certificate(cfg)
    lines = [
        f"family {args.family}: size {certificate['size']}, "
        f"strength {certificate['strength_report']['strength']}, "
        f"bound {certificate['fisher_bound']['value']}, "
        f"tight: {certificate['tight']}"
    ]
    _emit(certificate, pretty=args.pretty, pretty_lines=lines)
    return 0


def _cmd_tau(args) -> int:
    table = tau_table(args.n)
    data = {"n": args.n, "tau": {f"p={p},j={j}": v for (p, j), v in sorted(table.items())}}
    lines = [f"tau(p={p}, j={j}) = {v}" for (p, j), v in sorted(table.items())]
    _emit(data, pretty=args.pretty, pretty_lines=lines)
    return 0


def _cmd_basis(args) -> int:
    if args.criterion:
        basis = criterion_basis(args.n, args.s)
        polys = list(basis.elements)
        data = {
            "n": args.n,
            "s": args.s,
            "kind": "criterion",
            "elements": [p.canonical_str() for p in polys],
        }
    else:
        elements = full_basis(args.n, args.s)
        if args.fully_even:
            elements = fully_even_subset(elements)
        data = {
            "n": args.n,
            "s": args.s,
            "kind": "fully-even" if args.fully_even else "full",
            "elements": [
                {"index": list(el.index), "poly": el.poly.canonical_str()} for el in elements
            ],
        }
    lines = [f"{len(data['elements'])} basis elements"]
    _emit(data, pretty=args.pretty, pretty_lines=lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperoct",
        description="Euclidean designs on hyperoctahedral orbits, in exact arithmetic",
    )
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_orbit = sub.add_parser("orbit", help="enumerate one orbit")
    p_orbit.add_argument("--n", type=int, required=True)
    p_orbit.add_argument("--k", type=int, required=True)
    p_orbit.add_argument("--count-only", action="store_true")
    p_orbit.set_defaults(func=_cmd_orbit)

    p_verify = sub.add_parser("verify", help="oracle check of the design property")
    p_verify.add_argument("--config", required=True)
    p_verify.add_argument("--t", type=int, required=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_classify = sub.add_parser("classify", help="closed-form strength classification")
    p_classify.add_argument("--config", required=True)
    p_classify.set_defaults(func=_cmd_classify)

    p_solve = sub.add_parser("solve", help="weight/radius feasibility")
    p_solve.add_argument("--n", type=int, required=True)
    p_solve.add_argument("--J", type=_parse_index_set, required=True)
    p_solve.add_argument("--t", type=int, choices=(5, 7), required=True)
    p_solve.add_argument("--r2", type=_parse_r2_list, default=None)
    p_solve.set_defaults(func=_cmd_solve)

    p_pg = sub.add_parser("property-g", help="integers whose G form has a zero")
    p_pg.add_argument("--max", type=int, default=100)
    p_pg.set_defaults(func=_cmd_property_g)

    p_fisher = sub.add_parser("fisher", help="minimum-size bound")
    p_fisher.add_argument("--n", type=int, required=True)
    p_fisher.add_argument("--p", type=int, required=True)
    p_fisher.add_argument("--t", type=int, required=True)
    p_fisher.set_defaults(func=_cmd_fisher)

    p_tight = sub.add_parser("tight", help="construct and certify a tight family member")
    p_tight.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p_tight.add_argument("--r2", type=_rational, required=True)
    p_tight.add_argument("--rho2", type=_rational, required=True)
    p_tight.add_argument("--w", type=_rational, default=Fraction(1))
    p_tight.set_defaults(func=_cmd_tight)

    p_tau = sub.add_parser("tau", help="maximum strengths for one dimension")
    p_tau.add_argument("--n", type=int, required=True)
    p_tau.set_defaults(func=_cmd_tau)

    p_basis = sub.add_parser("basis", help="harmonic basis polynomials")
    p_basis.add_argument("--n", type=int, required=True)
    p_basis.add_argument("--s", type=int, required=True)
    group = p_basis.add_mutually_exclusive_group()
    group.add_argument("--fully-even", action="store_true")
    group.add_argument("--criterion", action="store_true")
    p_basis.set_defaults(func=_cmd_basis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
