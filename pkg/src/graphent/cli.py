"""Command-line front end: generate graphs, compute entropies, check bounds.

Subcommands compose over stdin/stdout edge lists:

    graphent gen star 4 | graphent compute --alpha 2 --dist orbits
    graphent check thm1 --alpha 0.5 --variant literal --probs 0.9,0.1 --strict
    graphent sweep --config sweep.json --format text

Exit status: 0 success, 1 violation found under --strict, 2 usage or
domain errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .errors import GraphEntropyError
from .graph import Graph, generate_graph, parse_edge_list, write_edge_list
from .harness import SweepConfig, run_sweep, summarize_report
from .inequalities import (
    class_closed_forms,
    connected_functional_bounds,
    jensen_gap_bound,
    ordering_bound,
    thm1_refined_bound,
    thm3_partition_vs_functional,
    thm4_scaled_dominance,
    thm5_additive_dominance,
    thm6_convex_combination,
)
from .measures import (
    Distribution,
    FunctionalSpec,
    distribution_from_values,
    distribution_stats,
    exponential_functional_values,
    linear_functional_values,
    partition_distribution,
    renyi_entropy,
    shannon_entropy,
)
from .orbits import vertex_orbits

_CHECKS = (
    "ordering",
    "jensen",
    "thm1",
    "thm3",
    "thm4",
    "thm5",
    "thm6",
    "conn",
    "star",
    "wheel",
    "path",
)

_BASE_CHECKS = ("thm3", "thm4", "thm5", "thm6")


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphent",
        description="graph entropies and their bound catalog",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit an edge list for a graph class")
    gen.add_argument(
        "cls",
        metavar="class",
        choices=("star", "path", "cycle", "wheel", "complete", "gnp"),
    )
    gen.add_argument("n", type=int)
    gen.add_argument("--p", type=float, help="gnp edge probability")
    gen.add_argument("--seed", type=int, help="gnp seed")

    comp = sub.add_parser("compute", help="entropy report for a piped edge list")
    comp.add_argument("--alpha", type=float)
    comp.add_argument("--dist", choices=("orbits", "linear", "exp"), default="orbits")
    comp.add_argument("--c", help="comma-separated sphere coefficients")
    comp.add_argument("--beta", type=float, help="exponential functional base")
    comp.add_argument("--n", type=int, help="vertex count override for the edge list")

    chk = sub.add_parser("check", help="evaluate one bound instance")
    chk.add_argument("theorem", choices=_CHECKS)
    chk.add_argument("--alpha", type=float, required=True)
    chk.add_argument("--variant", choices=("literal", "corrected"), default="corrected")
    chk.add_argument("--strict", action="store_true",
                     help="exit 1 if any emitted report is violated")
    chk.add_argument("--log-base", choices=("2", "e"), default="2",
                     help="log base for the thm3..thm6 bound formulas")
    chk.add_argument("--probs", help="raw distribution, e.g. 0.9,0.1")
    chk.add_argument("--probs1", help="first raw distribution (thm4/thm5)")
    chk.add_argument("--probs2", help="second raw distribution (thm4/thm5)")
    chk.add_argument("--use-epsilon", action="store_true",
                     help="thm1: use the epsilon**2 corollary form")
    chk.add_argument("--psi", type=float, help="thm4 dominance constant")
    chk.add_argument("--s1", type=float, help="thm4 corollary: total of f1")
    chk.add_argument("--s2", type=float, help="thm4 corollary: total of f2")
    chk.add_argument("--phi", type=float, help="thm5 additive constant")
    chk.add_argument("--dist", choices=("orbits", "linear", "exp"))
    chk.add_argument("--functional", choices=("linear", "exp"))
    chk.add_argument("--c", help="comma-separated sphere coefficients")
    chk.add_argument("--beta", type=float)
    chk.add_argument("--n", type=int, help="class size (star/wheel/path) or parse override")
    chk.add_argument("--c1", type=float, help="thm6 weight for f1")
    chk.add_argument("--c2", type=float, help="thm6 weight for f2")
    chk.add_argument("--symmetric", action="store_true", help="thm6 averaged form")
    chk.add_argument("--f2-functional", choices=("linear", "exp"))
    chk.add_argument("--f2-c", help="thm6: coefficients for f2")
    chk.add_argument("--f2-beta", type=float)

    swp = sub.add_parser("sweep", help="run a sweep from a JSON config")
    swp.add_argument("--config", required=True)
    swp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    swp.add_argument("--strict", action="store_true",
                     help="exit 1 if the sweep recorded any violation")
    return parser


def _parse_probs(text: str) -> Distribution:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise _UsageError(f"cannot parse probabilities from {text!r}") from None
    return Distribution(p=np.array(values))


def _parse_coeffs(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise _UsageError(f"cannot parse coefficients from {text!r}") from None


def _round12(value):
    if isinstance(value, float):
        return float(f"{value:.12g}")
    return value


def _functional_spec(kind: str, c: str | None, beta: float | None) -> FunctionalSpec:
    coeffs = _parse_coeffs(c) if c else None
    if kind == "linear":
        if beta is not None:
            raise _UsageError("--beta only applies to the exponential functional")
        return FunctionalSpec(kind="linear", coeffs=coeffs)
    if beta is None:
        raise _UsageError("the exponential functional requires --beta")
    return FunctionalSpec(kind="exponential", coeffs=coeffs, beta=beta)


def _graph_from_stdin(stdin: str | None, n_override: int | None) -> Graph:
    if stdin is None:
        stdin = sys.stdin.read()
    return parse_edge_list(stdin, n=n_override)


def _distribution_for(g: Graph, dist_kind: str, c: str | None, beta: float | None):
    """(Distribution, kind-specific extras) for orbits/linear/exp on g."""
    if dist_kind == "orbits":
        if c is not None or beta is not None:
            raise _UsageError("--c/--beta do not apply to the orbit distribution")
        part = vertex_orbits(g)
        return partition_distribution(part), {"orbit_sizes": list(part.sizes)}
    spec = _functional_spec(
        "linear" if dist_kind == "linear" else "exp", c, beta
    )
    if spec.kind == "linear":
        fv = linear_functional_values(g, spec)
    else:
        fv = exponential_functional_values(g, spec)
    extras = {
        "functional_params": {
            "kind": spec.kind,
            "c": None if spec.coeffs is None else list(spec.coeffs),
            "beta": spec.beta,
            "S": None if fv.values is None else _round12(float(fv.values.sum())),
            "log2_S": _round12(fv.total_log / math.log(2.0)),
        }
    }
    return distribution_from_values(fv), extras


def emit_entropy_report(g: Graph, flags: dict) -> str:
    """JSON entropy report, numbers at 12 significant digits."""
    dist_kind = flags.get("dist", "orbits")
    alpha = flags.get("alpha")
    d, extras = _distribution_for(g, dist_kind, flags.get("c"), flags.get("beta"))
    stats = distribution_stats(d)
    doc = {
        "n": g.n,
        "distribution_kind": "exponential" if dist_kind == "exp" else dist_kind,
        "alpha": _round12(alpha) if alpha is not None else None,
        "shannon": _round12(shannon_entropy(d)),
        "renyi": _round12(renyi_entropy(d, alpha)) if alpha is not None else None,
        "rho": _round12(stats.rho),
        "epsilon": _round12(stats.epsilon),
    }
    doc.update(extras)
    return json.dumps(doc)


def _spec_from_flags(kind_flag: str | None, c: str | None, beta: float | None,
                     what: str) -> FunctionalSpec:
    if kind_flag is None:
        raise _UsageError(f"{what} requires --functional linear|exp")
    return _functional_spec("linear" if kind_flag == "linear" else "exp", c, beta)


def _run_check(args, stdin: str | None) -> tuple[int, str]:
    base = 2.0 if args.log_base == "2" else math.e
    if args.log_base != "2" and args.theorem not in _BASE_CHECKS:
        raise _UsageError("--log-base only applies to thm3/thm4/thm5/thm6")
    reports = []
    theorem = args.theorem

    if theorem in ("ordering", "jensen", "thm1"):
        if args.probs is not None:
            d = _parse_probs(args.probs)
        else:
            g = _graph_from_stdin(stdin, args.n)
            d, _ = _distribution_for(g, args.dist or "orbits", args.c, args.beta)
        if theorem == "ordering":
            reports.append(ordering_bound(d, args.alpha))
        elif theorem == "jensen":
            reports.append(jensen_gap_bound(d, args.alpha))
        else:
            reports.append(
                thm1_refined_bound(
                    d, args.alpha, args.variant, use_epsilon=args.use_epsilon
                )
            )
    elif theorem == "thm3":
        g = _graph_from_stdin(stdin, args.n)
        spec = _spec_from_flags(args.functional, args.c, args.beta, "thm3")
        if spec.kind == "linear":
            fv = linear_functional_values(g, spec)
        else:
            fv = exponential_functional_values(g, spec)
        reports.append(
            thm3_partition_vs_functional(g, vertex_orbits(g), fv, args.alpha, base=base)
        )
    elif theorem == "thm4":
        if args.probs1 is None or args.probs2 is None:
            raise _UsageError("thm4 requires --probs1 and --probs2")
        d1, d2 = _parse_probs(args.probs1), _parse_probs(args.probs2)
        derive = None
        if args.s1 is not None or args.s2 is not None:
            if args.s1 is None or args.s2 is None:
                raise _UsageError("corollary mode requires both --s1 and --s2")
            derive = (args.s1, args.s2)
        elif args.psi is None:
            raise _UsageError("thm4 requires --psi or --s1/--s2")
        reports.append(
            thm4_scaled_dominance(
                d1, d2, args.psi, args.alpha, derive_psi_from=derive, base=base
            )
        )
    elif theorem == "thm5":
        if args.probs1 is None or args.probs2 is None or args.phi is None:
            raise _UsageError("thm5 requires --probs1, --probs2 and --phi")
        reports.append(
            thm5_additive_dominance(
                _parse_probs(args.probs1),
                _parse_probs(args.probs2),
                args.phi,
                args.alpha,
                args.variant,
                base=base,
            )
        )
    elif theorem == "thm6":
        g = _graph_from_stdin(stdin, args.n)
        spec1 = _spec_from_flags(args.functional, args.c, args.beta, "thm6 (f1)")
        spec2 = _spec_from_flags(
            args.f2_functional, args.f2_c, args.f2_beta, "thm6 (f2)"
        )
        fv1 = (
            linear_functional_values(g, spec1)
            if spec1.kind == "linear"
            else exponential_functional_values(g, spec1)
        )
        fv2 = (
            linear_functional_values(g, spec2)
            if spec2.kind == "linear"
            else exponential_functional_values(g, spec2)
        )
        if args.c1 is None or args.c2 is None:
            raise _UsageError("thm6 requires --c1 and --c2")
        reports.append(
            thm6_convex_combination(
                g, fv1, fv2, args.c1, args.c2, args.alpha, args.variant,
                symmetric=args.symmetric, base=base,
            )
        )
    elif theorem == "conn":
        g = _graph_from_stdin(stdin, args.n)
        spec = _spec_from_flags(args.functional, args.c, args.beta, "conn")
        reports.append(
            connected_functional_bounds(g, spec, args.alpha, args.variant)
        )
    else:  # star / wheel / path closed forms
        if args.n is None:
            raise _UsageError(f"{theorem} closed forms require --n")
        fv = None
        if args.functional is not None:
            spec = _functional_spec(
                "linear" if args.functional == "linear" else "exp",
                args.c,
                args.beta,
            )
            g = generate_graph(theorem, args.n)
            fv = (
                linear_functional_values(g, spec)
                if spec.kind == "linear"
                else exponential_functional_values(g, spec)
            )
        reports.extend(class_closed_forms(theorem, args.n, args.alpha, fv=fv))

    docs = [r.to_dict() for r in reports]
    out = json.dumps(docs[0] if len(docs) == 1 else docs)
    status = 0
    if args.strict and any(r.holds is False for r in reports):
        status = 1
    return status, out + "\n"


def dispatch(argv: list[str], stdin: str | None = None) -> tuple[int, str]:
    """Run one invocation; returns (exit status, stdout text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), ""
    try:
        if args.command == "gen":
            if args.cls == "gnp":
                if args.p is None or args.seed is None:
                    raise _UsageError("gnp requires --p and --seed")
                g = generate_graph("gnp", args.n, p=args.p, seed=args.seed)
            else:
                if args.p is not None or args.seed is not None:
                    raise _UsageError("--p/--seed only apply to gnp")
                g = generate_graph(args.cls, args.n)
            return 0, write_edge_list(g)
        if args.command == "compute":
            g = _graph_from_stdin(stdin, args.n)
            flags = {
                "alpha": args.alpha,
                "dist": args.dist,
                "c": args.c,
                "beta": args.beta,
            }
            return 0, emit_entropy_report(g, flags) + "\n"
        if args.command == "check":
            return _run_check(args, stdin)
        if args.command == "sweep":
            with open(args.config, "r", encoding="utf-8") as fh:
                cfg = SweepConfig.from_dict(json.load(fh))
            report = run_sweep(cfg)
            out = summarize_report(report, format=args.format)
            if not out.endswith("\n"):
                out += "\n"
            status = 0
            if args.strict and any(
                agg["violated"] > 0 for agg in report.aggregates.values()
            ):
                status = 1
            return status, out
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"graphent: {exc}", file=sys.stderr)
        return 2, ""
    except GraphEntropyError as exc:
        print(f"graphent: {exc}", file=sys.stderr)
        return 2, ""
    except (OSError, json.JSONDecodeError) as exc:
        print(f"graphent: {exc}", file=sys.stderr)
        return 2, ""


def main(argv: list[str] | None = None) -> int:
    status, out = dispatch(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
