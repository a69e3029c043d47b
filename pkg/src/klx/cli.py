"""Command-line interface.

Subcommands: verify (zeta(2) pipelines), eigen (eigenpair tables), oracle
(analytic vs Nystrom comparison), simulate (path ensembles + covariance
test), series (classical partial sums).  Exit codes: 0 success/pass,
1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import series
from .eigen import eigenfunction, eigenvalue
from .kernels import KernelKind
from .mercer import PROOF_IDS, ZETA2, proof_report
from .nystrom import EIGENVALUE_RTOL, compare_eigenpairs
from .reports import Table, render
from .simulate import (
    SimulationConfig,
    covariance_test,
    sample_paths,
    write_ensemble_csv,
    write_ensemble_klx1,
)

_FORMATS = ("pretty", "csv", "json")


def _int_list(text: str) -> list[int]:
    try:
        return [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _emit(table: Table, fmt: str, extra: dict | None = None) -> None:
    sys.stdout.write(render(table, fmt, extra))


def _cmd_verify(args) -> int:
    if not args.J:
        raise ValueError("--J must list at least one truncation level")
    proofs = list(PROOF_IDS) if args.proof == "all" else [int(args.proof)]
    rows = []
    ok = True
    for proof in proofs:
        report = proof_report(proof, args.J)
        ok = ok and report.passes()
        for row in report.rows:
            rows.append((report.proof_id, row.j_terms, row.estimate, row.abs_error, row.tail_bound))
    table = Table(("proof_id", "J", "estimate", "abs_error", "tail_bound"), tuple(rows))
    _emit(table, args.format, extra={"target": ZETA2, "passed": ok})
    if args.format == "pretty":
        status = "all rows within tail bounds" if ok else "tail bound violated"
        sys.stdout.write(f"target pi^2/6 = {ZETA2:.17g}; {status}\n")
    return 0 if ok else 1


def _cmd_eigen(args) -> int:
    kind = KernelKind.parse(args.kind)
    if args.j_max < 1:
        raise ValueError("--j-max must be >= 1")
    rows = []
    for j in range(1, args.j_max + 1):
        if kind is KernelKind.DETRENDED:
            branch = "odd" if j % 2 == 1 else "even"
        else:
            branch = "-"
        rows.append(
            (
                j,
                eigenvalue(kind, j),
                branch,
                eigenfunction(kind, j, 0.0),
                eigenfunction(kind, j, 0.5),
                eigenfunction(kind, j, 1.0),
            )
        )
    table = Table(("j", "lambda", "branch", "f_at_0", "f_at_half", "f_at_1"), tuple(rows))
    _emit(table, args.format)
    return 0


def _cmd_oracle(args) -> int:
    kind = KernelKind.parse(args.kind)
    comparison = compare_eigenpairs(kind, args.eigs, args.nodes)
    rows = tuple(
        (row.j, row.analytic, row.nystrom, row.rel_error, row.max_deviation)
        for row in comparison.rows
    )
    table = Table(("j", "lambda_analytic", "lambda_nystrom", "rel_error", "max_deviation"), rows)
    ok = comparison.passes()
    _emit(table, args.format, extra={"rtol": EIGENVALUE_RTOL, "passed": ok})
    if args.format == "pretty":
        verdict = "within" if ok else "exceeds"
        sys.stdout.write(
            f"{kind.value} at {args.nodes} nodes: eigenvalue error {verdict} rtol {EIGENVALUE_RTOL:g}\n"
        )
    return 0 if ok else 1


def _cmd_simulate(args) -> int:
    kind = KernelKind.parse(args.kind)
    if args.grid_points < 2:
        raise ValueError("--grid-points must be >= 2 to include both endpoints")
    config = SimulationConfig(
        kind=kind,
        truncation=args.J,
        n_paths=args.M,
        grid=np.linspace(0.0, 1.0, args.grid_points),
        seed=args.seed,
    )
    if args.out:
        ensemble = sample_paths(config)
        out_format = args.out_format
        if out_format == "auto":
            out_format = "csv" if args.out.endswith(".csv") else "klx1"
        try:
            if out_format == "csv":
                write_ensemble_csv(ensemble, args.out)
            else:
                write_ensemble_klx1(ensemble, args.out)
        except OSError as exc:
            raise ValueError(f"cannot write output file {args.out!r}: {exc}") from exc
    report = covariance_test(config, pair_count=args.pairs, z_threshold=args.z_threshold)
    rows = tuple(
        (c.s, c.t, c.empirical, c.truncated_target, c.stderr, c.z_score) for c in report.checks
    )
    table = Table(("s", "t", "empirical", "truncated_target", "stderr", "z_score"), rows)
    _emit(
        table,
        args.format,
        extra={
            "passed": report.passed,
            "skipped": report.skipped,
            "exceedances": report.exceedances,
            "allowed_exceedances": report.allowed_exceedances,
        },
    )
    if report.skipped:
        sys.stderr.write(f"warning: {report.message}\n")
    elif args.format == "pretty":
        sys.stdout.write(report.message + "\n")
    return 0 if report.passed else 1


_SERIES_LIMITS = {
    "zeta": math.pi**2 / 6.0,
    "triangular": 2.0,
    "odd": math.pi**2 / 8.0,
    "leibniz": math.pi / 4.0,
    "estermann": 0.0,
    "bernoulli": math.pi**2 / 16.0,
}


def _series_value(which: str, n: int) -> float:
    if which == "zeta":
        return series.zeta_partial(2.0, n).value
    if which == "triangular":
        return series.triangular_partial(n).value
    if which == "odd":
        return series.odd_squares_partial(n).value
    if which == "leibniz":
        return series.leibniz_partial(n).value
    if which == "estermann":
        return series.estermann_residual(n).residual
    return series.bernoulli_residual(n).residual


def _cmd_series(args) -> int:
    if not args.N:
        raise ValueError("--N must list at least one index")
    limit = _SERIES_LIMITS[args.which]
    rows = []
    for n in args.N:
        value = _series_value(args.which, n)
        rows.append((args.which, n, value, limit, value - limit))
    table = Table(("series", "N", "value", "reference_limit", "distance"), tuple(rows))
    _emit(table, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klx",
        description="Karhunen-Loeve eigenstructure toolkit: zeta(2) verification, "
        "eigen tables, Nystrom cross-checks, path simulation and series tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the zeta(2) convergence pipelines")
    p.add_argument("--proof", choices=("1", "2", "3", "all"), default="all")
    p.add_argument("--J", type=_int_list, required=True, help="comma-separated truncation levels")
    p.add_argument("--format", choices=_FORMATS, default="pretty")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("eigen", help="tabulate analytic eigenpairs")
    p.add_argument("--kind", required=True)
    p.add_argument("--j-max", type=int, required=True)
    p.add_argument("--format", choices=_FORMATS, default="pretty")
    p.set_defaults(func=_cmd_eigen)

    p = sub.add_parser("oracle", help="compare analytic eigenpairs with the Nystrom solver")
    p.add_argument("--kind", required=True)
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--eigs", type=int, required=True)
    p.add_argument("--format", choices=_FORMATS, default="pretty")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("simulate", help="simulate truncated-expansion paths")
    p.add_argument("--kind", required=True)
    p.add_argument("--J", type=int, required=True, help="truncation level")
    p.add_argument("--M", type=int, required=True, help="number of paths")
    p.add_argument("--grid-points", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write the ensemble to this path")
    p.add_argument("--out-format", choices=("auto", "csv", "klx1"), default="auto")
    p.add_argument("--pairs", type=int, default=50, help="covariance pairs to test")
    p.add_argument("--z-threshold", type=float, default=4.0)
    p.add_argument("--format", choices=_FORMATS, default="pretty")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("series", help="classical partial-sum tables")
    p.add_argument("--which", choices=sorted(_SERIES_LIMITS), required=True)
    p.add_argument("--N", type=_int_list, required=True)
    p.add_argument("--format", choices=_FORMATS, default="pretty")
    p.set_defaults(func=_cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except RuntimeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
