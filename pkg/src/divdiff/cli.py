"""Command-line front end.

One subcommand per library operation; every run emits a single Report
(JSON by default, CSV with --format csv) on stdout or to --out.
Diagnostics go to stderr only.  Exit codes: 0 success, 1 usage or parse
errors, 2 domain errors (duplicate knots, a rational-function pole, an
infeasible optimization).
"""

import argparse
import sys
from fractions import Fraction
from typing import Any, Optional

from .cascade import NonzeroAtOrder, polynomial_cascade
from .constraints import build_constraint_system, nullspace
from .differences import (
    FiniteDifferenceRequest,
    KnotValueList,
    check_equispaced_identity,
    divided_difference_direct,
    divided_difference_recursive,
    finite_difference,
)
from .errors import DomainEvaluationError, DuplicateKnotError, ParseError, PoleError
from .extremal import min_lipschitz_unit_norm
from .funcs import PolynomialFunc, parse_funcspec
from .interpolation import EquispacedSample, lagrange_equispaced, leading_coefficient
from .probes import averaging_probe, proof_walkthrough, telescope_shift_identity
from .rational import parse_rational
from .report import Report, render_csv, render_json

DEFAULT_MAX_N = 12

Outcome = tuple[Report, int, Optional[str]]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; our contract is 1.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def rational(text: str) -> Fraction:
    return parse_rational(text)


def _rational_list(text: str, what: str) -> tuple[Fraction, ...]:
    items = [item.strip() for item in text.split(",")]
    if not items or any(not item for item in items):
        raise ParseError(f"{what} must be a comma-separated list of rationals")
    return tuple(parse_rational(item) for item in items)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="divdiff",
        description="Exact divided differences, equispaced interpolation, "
        "and difference-constraint exploration.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name: str, description: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=description, description=description)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write the report to this path instead of stdout")
        return p

    def func_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--func",
            required=True,
            help="function spec: poly:a0,a1,..., ratfun:a0,...;b0,..., or pl:<path>",
        )
        p.add_argument(
            "--extend-zero",
            action="store_true",
            help="treat the function as 0 outside [0, 1]",
        )

    p = command("eval", "divided difference at explicit knots")
    p.add_argument("--knots", required=True, help="comma-separated rational knots")
    p.add_argument("--values", required=True, help="comma-separated rational values")

    p = command("uniform", "divided difference at the equispaced knots k/n")
    func_arg(p)
    p.add_argument("--n", type=int, required=True)

    p = command("fd", "forward finite difference of order n with step h")
    func_arg(p)
    p.add_argument("--x", type=rational, required=True)
    p.add_argument("--h", type=rational, required=True)
    p.add_argument("--n", type=int, required=True)

    p = command(
        "identity",
        "equispaced divided difference against the scaled finite difference",
    )
    func_arg(p)
    p.add_argument("--n", type=int, required=True)

    p = command("interp", "equispaced interpolating polynomial and leading coefficient")
    func_arg(p)
    p.add_argument("--n", type=int, required=True)

    p = command("cascade", "difference cascade locating the degree of a polynomial")
    p.add_argument("--func", required=True, help="polynomial spec poly:a0,a1,...")

    p = command("nullspace", "null space of the difference constraint system")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-N", type=int, help=f"raise the N cap (default {DEFAULT_MAX_N})")

    p = command("minlip", "least Lipschitz constant among unit-size solutions")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-N", type=int, help=f"raise the N cap (default {DEFAULT_MAX_N})")

    p = command("probe", "averaged forward differences of a zero-extended function")
    func_arg(p)
    p.add_argument("--x", type=rational, required=True)
    p.add_argument("--h", type=rational, required=True)
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--N", type=int, help="single shift count")
    group.add_argument("--Nmax", type=int, help="sweep N = 1, 2, 4, ... up to this value")

    p = command("telescope", "exact reindexing identity for shifted sums")
    func_arg(p)
    p.add_argument("--x", type=rational, required=True)
    p.add_argument("--h", type=rational, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--N", type=int, required=True)

    p = command("walkthrough", "full exact trace of the averaged-defect identity")
    func_arg(p)
    p.add_argument("--x", type=rational, required=True)
    p.add_argument("--h", type=rational, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)

    return parser


def _cmd_eval(args: argparse.Namespace) -> Outcome:
    knots = _rational_list(args.knots, "--knots")
    values = _rational_list(args.values, "--values")
    if len(knots) != len(values):
        raise ParseError(
            f"got {len(knots)} knots but {len(values)} values; they must match"
        )
    kv = KnotValueList(tuple(zip(knots, values)))
    direct = divided_difference_direct(kv)
    recursive = divided_difference_recursive(kv)
    report = Report(
        command="eval",
        inputs={"knots": list(knots), "values": list(values)},
        results={
            "order": kv.order,
            "direct": direct,
            "recursive": recursive,
            "equal": direct == recursive,
        },
    )
    return report, 0, None


def _cmd_uniform(args: argparse.Namespace) -> Outcome:
    f = parse_funcspec(args.func, args.extend_zero)
    if args.n < 0:
        raise ParseError("--n must be nonnegative")
    kv = KnotValueList.equispaced(f, args.n)
    value = divided_difference_direct(kv)
    report = Report(
        command="uniform",
        inputs={"func": args.func, "n": args.n},
        results={"n": args.n, "divided_difference": value},
    )
    return report, 0, None


def _cmd_fd(args: argparse.Namespace) -> Outcome:
    f = parse_funcspec(args.func, args.extend_zero)
    request = FiniteDifferenceRequest(f=f, x=args.x, h=args.h, n=args.n)
    value = finite_difference(request)
    report = Report(
        command="fd",
        inputs={"func": args.func, "x": args.x, "h": args.h, "n": args.n},
        results={"n": args.n, "x": args.x, "h": args.h, "value": value},
    )
    return report, 0, None


def _cmd_identity(args: argparse.Namespace) -> Outcome:
    f = parse_funcspec(args.func, args.extend_zero)
    check = check_equispaced_identity(f, args.n)
    report = Report(
        command="identity",
        inputs={"func": args.func, "n": args.n},
        results={"n": check.n, "lhs": check.lhs, "rhs": check.rhs, "equal": check.equal},
    )
    return report, 0, None


def _cmd_interp(args: argparse.Namespace) -> Outcome:
    f = parse_funcspec(args.func, args.extend_zero)
    if args.n < 0:
        raise ParseError("--n must be nonnegative")
    sample = EquispacedSample.from_function(f, args.n)
    q = lagrange_equispaced(sample)
    lead = leading_coefficient(q, args.n)
    degree: Any = "-inf" if q.is_zero else q.degree
    report = Report(
        command="interp",
        inputs={"func": args.func, "n": args.n},
        results={
            "n": args.n,
            "coefficients": tuple(q.coefficients),
            "degree": degree,
            "leading": lead,
            "degree_reduced": lead == 0,
        },
    )
    return report, 0, None


def _cmd_cascade(args: argparse.Namespace) -> Outcome:
    f = parse_funcspec(args.func, False)
    if not isinstance(f, PolynomialFunc):
        raise ParseError("cascade works on polynomials; pass --func poly:a0,a1,...")
    result = polynomial_cascade(f.poly)
    verdict = result.verdict
    report = Report(
        command="cascade",
        inputs={"func": args.func},
        results={
            "verdict": type(verdict).__name__,
            "order": verdict.order if isinstance(verdict, NonzeroAtOrder) else None,
            "rows": [
                {"order": check.order, "step": check.step, "value": check.value}
                for check in result.checks
            ],
        },
    )
    return report, 0, None


def _capped_N(args: argparse.Namespace) -> int:
    cap = args.max_N if args.max_N is not None else DEFAULT_MAX_N
    if args.N < 1:
        raise ParseError("--N must be at least 1")
    if args.N > cap:
        raise ParseError(f"N={args.N} exceeds the cap {cap}; raise it with --max-N")
    return args.N


def _cmd_nullspace(args: argparse.Namespace) -> Outcome:
    N = _capped_N(args)
    result = nullspace(build_constraint_system(N))
    basis = [
        {str(k): v for k, v in sorted(vec.entries.items())} for vec in result.basis
    ]
    report = Report(
        command="nullspace",
        inputs={"N": N},
        results={
            "N": result.N,
            "L": result.L,
            "rank": result.rank,
            "dimension": result.dimension,
            "forced_zero_points": list(result.forced_zero_points),
            "basis": basis,
        },
    )
    return report, 0, None


def _cmd_minlip(args: argparse.Namespace) -> Outcome:
    N = _capped_N(args)
    result = min_lipschitz_unit_norm(N)
    witness = None
    if result.witness is not None:
        witness = {str(k): v for k, v in sorted(result.witness.entries.items())}
    report = Report(
        command="minlip",
        inputs={"N": N},
        results={
            "N": result.N,
            "L": result.L,
            "status": result.status,
            "value": result.value,
            "pin_index": result.pin_index,
            "witness": witness,
        },
    )
    if result.status == "infeasible":
        return report, 2, f"minlip: no solution with sup norm 1 exists for N={N}"
    return report, 0, None


def _cmd_probe(args: argparse.Namespace) -> Outcome:
    if not args.extend_zero:
        raise ParseError("probe requires --extend-zero (f must vanish outside [0, 1])")
    f = parse_funcspec(args.func, True)
    if not 0 <= args.x < 1:
        raise ParseError("--x must lie in [0, 1)")
    if args.N is not None:
        if args.N < 1:
            raise ParseError("--N must be at least 1")
        counts = [args.N]
    else:
        if args.Nmax < 1:
            raise ParseError("--Nmax must be at least 1")
        counts = []
        N = 1
        while N <= args.Nmax:
            counts.append(N)
            N *= 2
    rows = []
    cutoff = 0
    for N in counts:
        probe = averaging_probe(f, args.x, args.h, args.n, N)
        cutoff = probe.cutoff
        rows.append(
            {
                "N": N,
                "average": probe.average,
                "residual": probe.residual,
                "bound": probe.bound,
            }
        )
    report = Report(
        command="probe",
        inputs={"func": args.func, "x": args.x, "h": args.h, "n": args.n},
        results={"n": args.n, "h": args.h, "x": args.x, "cutoff": cutoff, "rows": rows},
    )
    return report, 0, None


def _cmd_telescope(args: argparse.Namespace) -> Outcome:
    f = parse_funcspec(args.func, args.extend_zero)
    check = telescope_shift_identity(f, args.x, args.n, args.j, args.h, args.N)
    report = Report(
        command="telescope",
        inputs={
            "func": args.func,
            "x": args.x,
            "h": args.h,
            "n": args.n,
            "j": args.j,
            "N": args.N,
        },
        results={
            "n": check.n,
            "j": check.j,
            "jprime": check.jprime,
            "N": check.N,
            "x": check.x,
            "h": check.h,
            "y": check.y,
            "lhs": check.lhs,
            "rhs": check.rhs,
            "equal": check.equal,
        },
    )
    return report, 0, None


def _cmd_walkthrough(args: argparse.Namespace) -> Outcome:
    if not args.extend_zero:
        raise ParseError(
            "walkthrough requires --extend-zero (f must vanish outside [0, 1])"
        )
    f = parse_funcspec(args.func, True)
    if not 0 <= args.x < 1:
        raise ParseError("--x must lie in [0, 1)")
    w = proof_walkthrough(f, args.n, args.h, args.N, args.x)
    report = Report(
        command="walkthrough",
        inputs={"func": args.func, "x": args.x, "h": args.h, "n": args.n, "N": args.N},
        results={
            "n": w.n,
            "h": w.h,
            "N": w.N,
            "x": w.x,
            "y": w.y,
            "interpolant": tuple(w.interpolant.coefficients),
            "leading": w.leading,
            "degree_reduced": w.degree_reduced,
            "f_at_x": w.f_at_x,
            "q_at_x": w.q_at_x,
            "defect_at_x": w.defect_at_x,
            "defect_at_y": w.defect_at_y,
            "avg_defect_x": w.avg_defect_x,
            "avg_defect_y": w.avg_defect_y,
            "avg_interp_x": w.avg_interp_x,
            "avg_interp_y": w.avg_interp_y,
            "boundary": [
                {
                    "j": term.j,
                    "jprime": term.jprime,
                    "near_sum": term.near_sum,
                    "far_sum": term.far_sum,
                    "weighted": term.weighted,
                    "envelope": term.envelope,
                }
                for term in w.boundary
            ],
            "boundary_total": w.boundary_total,
            "identity_lhs": w.identity_lhs,
            "identity_rhs": w.identity_rhs,
            "identity_equal": w.identity_equal,
            "residual": w.residual,
            "residual_envelope": w.residual_envelope,
            "interp_limit_terms": [
                {"j": j, "term": term} for j, term in w.interp_limit_terms
            ],
            "note": w.note,
        },
    )
    return report, 0, None


_HANDLERS = {
    "eval": _cmd_eval,
    "uniform": _cmd_uniform,
    "fd": _cmd_fd,
    "identity": _cmd_identity,
    "interp": _cmd_interp,
    "cascade": _cmd_cascade,
    "nullspace": _cmd_nullspace,
    "minlip": _cmd_minlip,
    "probe": _cmd_probe,
    "telescope": _cmd_telescope,
    "walkthrough": _cmd_walkthrough,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, code, diagnostic = _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"divdiff: error: {exc}", file=sys.stderr)
        return 1
    except (DuplicateKnotError, PoleError, DomainEvaluationError) as exc:
        print(f"divdiff: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"divdiff: error: {exc}", file=sys.stderr)
        return 1
    text = render_json(report) if args.format == "json" else render_csv(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if diagnostic:
        print(diagnostic, file=sys.stderr)
    return code
