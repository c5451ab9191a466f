"""Command-line front end.

Exit codes: 0 success, 1 runtime failure, 2 usage or configuration-gate error.
The master seed comes from --seed, else the RFJ_SEED environment variable,
else DEFAULT_SEED; with a fixed seed every experiment's CSV is byte-identical
across reruns and worker counts.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from .catalog import catalog_ids, resolve
from .jacobi import JacobiParams
from .lab import (
    DEFAULT_SEED,
    ConvergenceReport,
    ExperimentConfig,
    GateError,
    UnsupportedRegimeError,
    cesaro_summability_experiment,
    integrand_alpha_norm,
    lemma1_rhs,
    lemma2_rhs,
    mean_convergence_experiment,
    tail_scaling_experiment,
    weak_continuity_profile,
)
from .series import fj_coefficients
from .summation import SummationMatrix, check_conditions, make_cesaro, make_identity, make_zero

__all__ = ["main"]


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {text!r}") from exc


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}") from exc


def _resolve_seed(ns: argparse.Namespace) -> int:
    if ns.seed is not None:
        return ns.seed
    env = os.environ.get("RFJ_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise GateError(f"RFJ_SEED must be an integer, got {env!r}") from exc
    return DEFAULT_SEED


def _add_common(p: argparse.ArgumentParser, experiment: bool = True) -> None:
    p.add_argument("--gamma", type=float, default=0.5, help="weight exponent on (1-t)")
    p.add_argument("--delta", type=float, default=0.5, help="weight exponent on (1+t)")
    p.add_argument("--seed", type=int, default=None,
                   help=f"master seed (default: RFJ_SEED env or {DEFAULT_SEED})")
    p.add_argument("--format", choices=("csv", "json", "table"), default="table",
                   help="output format (default: table)")
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")
    if experiment:
        p.add_argument("--trials", type=int, default=2000, help="Monte Carlo trials")
        p.add_argument("--grid", type=int, default=4096, help="increment grid steps m")
        p.add_argument("--workers", type=int, default=max(os.cpu_count() or 1, 1),
                       help="worker threads (results are worker-count independent)")
        p.add_argument("--n-ref-mult", type=int, default=4,
                       help="reference truncation multiplier (>= 4)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfjlab",
        description="Monte Carlo laboratory for random Fourier-Jacobi series "
        "driven by symmetric alpha-stable processes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="deterministic Fourier-Jacobi coefficients of a catalog function")
    p.add_argument("--f", required=True, help=f"catalog id ({', '.join(catalog_ids())})")
    p.add_argument("--n", type=int, required=True, help="highest coefficient index N")
    _add_common(p, experiment=False)
    p.set_defaults(fn=cmd_coeffs)

    p = sub.add_parser("converge-mean", help="E|S_n - reference| over a truncation schedule (alpha > 1)")
    p.add_argument("--alpha", type=float, required=True, help="stable index in (1, 2]")
    p.add_argument("--f", default="runge", help="catalog id")
    p.add_argument("--n-schedule", type=_int_list, default=(2, 4, 8, 16))
    p.add_argument("--y", type=_float_list, default=(0.3,), help="evaluation points")
    _add_common(p)
    p.set_defaults(fn=cmd_converge_mean)

    p = sub.add_parser("cesaro", help="(C,1) mean tail probabilities in the Cauchy case (alpha = 1)")
    p.add_argument("--alpha", type=float, default=1.0, help="stable index (must be 1)")
    p.add_argument("--f", default="runge", help="catalog id")
    p.add_argument("--eta", type=float, default=0.5, help="sup-norm weight exponent on (1-t)")
    p.add_argument("--tau", type=float, default=0.5, help="sup-norm weight exponent on (1+t)")
    p.add_argument("--eps", type=_float_list, default=(0.1,), help="tail thresholds")
    p.add_argument("--n-schedule", type=_int_list, default=(8, 16, 32, 64))
    p.add_argument("--y", type=_float_list, default=(0.3,))
    _add_common(p)
    p.set_defaults(fn=cmd_cesaro)

    p = sub.add_parser("weak-continuity", help="P(|I(y+h) - I(y)| > eps) over shrinking offsets")
    p.add_argument("--alpha", type=float, required=True, help="stable index in (0, 2]")
    p.add_argument("--f", default="runge", help="catalog id")
    p.add_argument("--y", type=float, default=0.1, help="base point")
    p.add_argument("--x-offsets", type=_float_list, default=(0.4, 0.2, 0.1))
    p.add_argument("--eps", type=float, default=0.1, help="tail threshold")
    p.add_argument("--n-schedule", type=_int_list, default=(16,),
                   help="schedule whose max sets the truncation (n_ref = mult * max)")
    _add_common(p)
    p.set_defaults(fn=cmd_weak_continuity)

    p = sub.add_parser("tail-bound", help="tail probabilities of integral f dX vs the analytic bounds")
    p.add_argument("--alpha", type=float, required=True, help="stable index in (0, 2]")
    p.add_argument("--f", default="runge", help="catalog id")
    p.add_argument("--eps", type=_float_list, default=(1.0, 2.0, 4.0, 8.0))
    _add_common(p)
    p.set_defaults(fn=cmd_tail_bound)
    # tail-bound favors many trials on a small grid; the integral's law is
    # exactly stable for any m, so the slope does not need a fine grid.
    p.set_defaults(trials=100000, grid=512)

    p = sub.add_parser("check-theta", help="T1..T5 / Xi gates for a summation matrix")
    p.add_argument("--family", default=None,
                   help="built-in family: cesaro<mu> (e.g. cesaro1), identity, zero")
    p.add_argument("--matrix-file", default=None, help="JSON file with a serialized matrix")
    p.add_argument("--n-max", type=int, default=128, help="depth to materialize and check")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_check_theta)

    return parser


def _emit(text: str, out: str | None, summary: str | None = None) -> None:
    """Data goes to --out (summary then on stdout) or to stdout (summary on stderr)."""
    if out is not None:
        with open(out, "w", newline="") as fh:
            fh.write(text)
        if summary:
            print(summary)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        if summary:
            print(summary, file=sys.stderr)


def _report_text(report: ConvergenceReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv()
    widths = [max(len(c), 12) for c in report.columns]
    lines = ["  ".join(c.rjust(w) for c, w in zip(report.columns, widths))]
    for row in report.rows:
        lines.append(
            "  ".join(
                (f"{v:.6g}" if isinstance(v, float) else str(v)).rjust(w)
                for v, w in zip(row, widths)
            )
        )
    return "\n".join(lines) + "\n"


def cmd_coeffs(ns: argparse.Namespace) -> int:
    params = JacobiParams(ns.gamma, ns.delta)
    entry = resolve(ns.f, params)
    if ns.n < 0:
        raise GateError("--n must be nonnegative")
    coeffs = fj_coefficients(entry.fn, ns.n, params, source=ns.f)
    if ns.format == "json":
        _emit(coeffs.to_json() + "\n", ns.out)
    elif ns.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "a"])
        for n, a in enumerate(coeffs.values):
            writer.writerow([n, repr(float(a))])
        _emit(buf.getvalue(), ns.out)
    else:
        lines = [f"{'n':>4}  {'a_n':>24}"]
        lines += [f"{n:>4}  {a:>24.16g}" for n, a in enumerate(coeffs.values)]
        _emit("\n".join(lines) + "\n", ns.out)
    return 0


def _experiment_config(ns: argparse.Namespace, **overrides) -> ExperimentConfig:
    kwargs = dict(
        alpha=ns.alpha,
        gamma=ns.gamma,
        delta=ns.delta,
        f=ns.f,
        grid_m=ns.grid,
        trials=ns.trials,
        seed=_resolve_seed(ns),
        n_ref_mult=ns.n_ref_mult,
        workers=ns.workers,
    )
    kwargs.update(overrides)
    return ExperimentConfig(**kwargs)


def cmd_converge_mean(ns: argparse.Namespace) -> int:
    cfg = _experiment_config(ns, y=ns.y, n_schedule=ns.n_schedule)
    report = mean_convergence_experiment(cfg)
    _emit(_report_text(report, ns.format), ns.out, summary=report.summary())
    return 0


def cmd_cesaro(ns: argparse.Namespace) -> int:
    cfg = _experiment_config(
        ns, y=ns.y, n_schedule=ns.n_schedule, eta=ns.eta, tau=ns.tau, epsilons=ns.eps
    )
    report = cesaro_summability_experiment(cfg)
    _emit(_report_text(report, ns.format), ns.out, summary=report.summary())
    return 0


def cmd_weak_continuity(ns: argparse.Namespace) -> int:
    cfg = _experiment_config(ns, y=(ns.y,), n_schedule=ns.n_schedule)
    report = weak_continuity_profile(cfg, ns.y, ns.x_offsets, ns.eps)
    _emit(_report_text(report, ns.format), ns.out, summary=report.summary())
    return 0


def cmd_tail_bound(ns: argparse.Namespace) -> int:
    cfg = _experiment_config(ns, epsilons=ns.eps)
    report = tail_scaling_experiment(cfg)
    # Attach the expectation bound when it exists; it needs alpha > 1.
    if cfg.alpha > 1.0:
        l2 = lemma2_rhs(integrand_alpha_norm(resolve(cfg.f, cfg.params).fn, cfg.alpha, cfg.params), cfg.alpha)
        report.verdicts["lemma2_rhs"] = l2.total
    _emit(_report_text(report, ns.format), ns.out, summary=report.summary())
    return 0


def cmd_check_theta(ns: argparse.Namespace) -> int:
    if (ns.family is None) == (ns.matrix_file is None):
        raise GateError("provide exactly one of --family or --matrix-file")
    if ns.family is not None:
        fam = ns.family.lower()
        if fam == "identity":
            theta = make_identity(ns.n_max)
        elif fam == "zero":
            theta = make_zero(ns.n_max)
        elif fam.startswith("cesaro"):
            mu = int(fam[len("cesaro"):] or "1")
            theta = make_cesaro(mu, n_max=ns.n_max)
        else:
            raise GateError(f"unknown family {ns.family!r}")
    else:
        with open(ns.matrix_file) as fh:
            theta = SummationMatrix.from_json(fh.read())
    report = check_conditions(theta, min(ns.n_max, theta.n_max))
    text = report.to_json() + "\n" if ns.format == "json" else report.to_text() + "\n"
    _emit(text, ns.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.fn(ns)
    except (GateError, UnsupportedRegimeError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports, never hides
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
