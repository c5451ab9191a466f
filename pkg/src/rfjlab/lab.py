"""Monte Carlo experiments over random Fourier-Jacobi series.

Coupling contract: within a trial, every estimator (partial sums, Cesaro means,
the high-truncation reference) is a linear functional of one shared coefficient
realization A = G @ dx, so all comparisons are made pathwise on one increment
draw.  Trial j always consumes the stream keyed by (seed, j); work is split
into fixed-size chunks, so results are identical for any worker count.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad

from .catalog import in_weighted_space, resolve
from .integrals import basis_rows, ito_stieltjes
from .jacobi import (
    JacobiParams,
    WeightedSpaceParams,
    check_parameter_gate,
    orthonormal_table,
    weight,
)
from .series import CoefficientSet, fj_coefficients, kernel_partial
from .stable import GridSpec, sample_increments, trial_rng, validate_alpha
from .summation import make_cesaro

__all__ = [
    "DEFAULT_SEED",
    "CHUNK",
    "GateError",
    "UnsupportedRegimeError",
    "ExperimentConfig",
    "ConvergenceReport",
    "WeakContinuityResult",
    "Lemma2Terms",
    "LemmaBoundsReport",
    "reference_integral",
    "mean_convergence_experiment",
    "weak_continuity_experiment",
    "weak_continuity_profile",
    "cesaro_summability_experiment",
    "tail_scaling_experiment",
    "integrand_alpha_norm",
    "lemma1_rhs",
    "lemma2_rhs",
    "lemma_bounds",
]

DEFAULT_SEED = 12345
# Trials per work unit.  Fixed (never derived from the worker count) so that
# chunk boundaries, and hence floating-point reductions, are reproducible.
CHUNK = 256


class GateError(ValueError):
    """A documented configuration gate was violated (usage error, not a bug)."""


class UnsupportedRegimeError(ValueError):
    """A bound or estimator was requested outside its validity regime."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Shared experiment configuration; individual experiments add gates."""

    alpha: float
    gamma: float
    delta: float
    f: str = "runge"
    eta: float = 0.0
    tau: float = 0.0
    y: tuple[float, ...] = (0.3,)
    n_schedule: tuple[int, ...] = (2, 4, 8, 16)
    grid_m: int = 4096
    trials: int = 2000
    epsilons: tuple[float, ...] = (0.1,)
    seed: int = DEFAULT_SEED
    n_ref_mult: int = 4
    workers: int = 1

    def __post_init__(self) -> None:
        validate_alpha(self.alpha)
        JacobiParams(self.gamma, self.delta)
        WeightedSpaceParams(self.eta, self.tau)
        if self.trials < 1:
            raise GateError("trials must be >= 1")
        if self.grid_m < 1:
            raise GateError("grid size must be >= 1")
        if len(self.n_schedule) == 0:
            raise GateError("truncation schedule must be nonempty")
        if any(n < 0 for n in self.n_schedule) or any(
            b <= a for a, b in zip(self.n_schedule, self.n_schedule[1:])
        ):
            raise GateError("truncation schedule must be strictly increasing and >= 0")
        if self.n_ref_mult < 4:
            raise GateError("reference truncation must be at least 4x the largest n")
        if len(self.y) == 0:
            raise GateError("need at least one evaluation point")
        if any(not (-1.0 <= v <= 1.0) for v in self.y):
            raise GateError("evaluation points must lie in [-1, 1]")
        if any(e <= 0.0 for e in self.epsilons):
            raise GateError("epsilons must be positive")
        if self.seed < 0:
            raise GateError("seed must be nonnegative")
        if self.workers < 1:
            raise GateError("workers must be >= 1")

    @property
    def params(self) -> JacobiParams:
        return JacobiParams(self.gamma, self.delta)

    @property
    def wspace(self) -> WeightedSpaceParams:
        return WeightedSpaceParams(self.eta, self.tau)

    @property
    def grid(self) -> GridSpec:
        return GridSpec(self.grid_m)

    @property
    def n_ref(self) -> int:
        return self.n_ref_mult * max(self.n_schedule)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "gamma": self.gamma,
            "delta": self.delta,
            "f": self.f,
            "eta": self.eta,
            "tau": self.tau,
            "y": list(self.y),
            "n_schedule": list(self.n_schedule),
            "grid_m": self.grid_m,
            "trials": self.trials,
            "epsilons": list(self.epsilons),
            "seed": self.seed,
            "n_ref_mult": self.n_ref_mult,
            "n_ref": self.n_ref,
            "workers": self.workers,
        }


@dataclass(frozen=True)
class ConvergenceReport:
    """Tabular experiment output plus verdicts; CSV is the byte-stable surface."""

    kind: str
    config: dict
    columns: tuple[str, ...]
    rows: list[tuple]
    verdicts: dict
    wall_time_s: float
    schema: str = "rfjlab-report-v1"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_csv_cell(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": self.schema,
                "kind": self.kind,
                "config": self.config,
                "columns": list(self.columns),
                "rows": [list(r) for r in self.rows],
                "verdicts": self.verdicts,
                "wall_time_s": self.wall_time_s,
            },
            sort_keys=True,
            indent=2,
        )

    def summary(self) -> str:
        parts = [f"{self.kind}: {len(self.rows)} rows"]
        for key, val in sorted(self.verdicts.items()):
            parts.append(f"{key}={val}")
        return "; ".join(parts)


def _csv_cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _jsonable(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _realize(
    alpha: float,
    grid: GridSpec,
    rows: np.ndarray,
    seed: int,
    trials: int,
    workers: int = 1,
) -> np.ndarray:
    """Per-trial integrals of the given integrand rows: out[j, k] = rows[k] . dx_j.

    rows has shape (K, m) holding integrand values at the left grid nodes.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    out = np.empty((trials, rows.shape[0]))
    spans = [(lo, min(lo + CHUNK, trials)) for lo in range(0, trials, CHUNK)]

    def work(span: tuple[int, int]) -> None:
        lo, hi = span
        dxs = np.empty((hi - lo, grid.m))
        for j in range(lo, hi):
            inc = sample_increments(
                alpha, grid, trial_rng(seed, j), seed_info=f"seed={seed},trial={j}"
            )
            dxs[j - lo] = inc.dx
        out[lo:hi] = dxs @ rows.T

    if workers <= 1:
        for span in spans:
            work(span)
    else:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            list(ex.map(work, spans))
    return out


def reference_integral(y: float, coeffs: CoefficientSet, inc, n_ref: int) -> float:
    """High-truncation surrogate for the limit: kernel_partial(y, .) integrated
    against the same increments the estimators consume."""
    if n_ref > coeffs.n_max:
        raise ValueError(f"n_ref={n_ref} exceeds available coefficients {coeffs.n_max}")
    trunc = CoefficientSet(
        values=coeffs.values[: n_ref + 1], params=coeffs.params, source=coeffs.source
    )
    return ito_stieltjes(
        lambda t: kernel_partial(y, t, trunc) * weight(t, trunc.params), inc
    )


def _mean_se(x: np.ndarray) -> tuple[float, float]:
    est = float(np.mean(x))
    se = float(np.std(x, ddof=1) / np.sqrt(x.size)) if x.size > 1 else 0.0
    return est, se


def _tail_prob(x: np.ndarray, eps: float) -> tuple[float, float]:
    p = float(np.mean(np.abs(x) > eps))
    se = float(np.sqrt(p * (1.0 - p) / x.size))
    return p, se


def _separated(first: tuple[float, float], last: tuple[float, float]) -> bool:
    gap = first[0] - last[0]
    return gap > 2.0 * float(np.hypot(first[1], last[1]))


def _gate_flags(cfg: ExperimentConfig) -> dict:
    entry = resolve(cfg.f, cfg.params)
    return {
        "theorem_gate_strict": cfg.params.theorem_gate_strict(),
        "theorem_gate_weak": cfg.params.theorem_gate_weak(),
        "f_continuous": entry.continuous,
    }


def mean_convergence_experiment(cfg: ExperimentConfig) -> ConvergenceReport:
    """Estimate E|S_n(y) - reference(y)| over the truncation schedule.

    Gate: alpha in (1, 2] (the expectation is infinite at alpha <= 1).
    """
    if not (1.0 < cfg.alpha <= 2.0):
        raise GateError(
            f"mean-convergence requires alpha in (1, 2]; got alpha={cfg.alpha} "
            "(first moments do not exist at or below 1)"
        )
    t0 = time.perf_counter()
    f = resolve(cfg.f, cfg.params).fn
    dc = fj_coefficients(f, cfg.n_ref, cfg.params, source=cfg.f)
    A = _realize(
        cfg.alpha,
        cfg.grid,
        basis_rows(cfg.n_ref, cfg.params, cfg.grid),
        cfg.seed,
        cfg.trials,
        cfg.workers,
    )
    py = orthonormal_table(cfg.n_ref, cfg.params, np.asarray(cfg.y))
    estimates: dict[float, list[tuple[float, float]]] = {}
    rows: list[tuple] = []
    for n in cfg.n_schedule:
        for yi, yv in enumerate(cfg.y):
            wvec = dc.values * py[:, yi]
            tail = wvec.copy()
            tail[: n + 1] = 0.0  # reference minus S_n keeps only k > n
            est, se = _mean_se(np.abs(A @ tail))
            rows.append((int(n), float(yv), est, se, cfg.trials, cfg.seed))
            estimates.setdefault(yv, []).append((est, se))
    verdicts: dict = dict(_gate_flags(cfg))
    for yv, series in estimates.items():
        vals = [e for e, _ in series]
        verdicts[f"strictly_decreasing[y={yv}]"] = all(
            b < a for a, b in zip(vals, vals[1:])
        )
        verdicts[f"first_last_separated[y={yv}]"] = _separated(series[0], series[-1])
    return ConvergenceReport(
        kind="mean-convergence",
        config=cfg.to_dict(),
        columns=("n", "y", "estimate", "se", "trials", "seed"),
        rows=rows,
        verdicts=_jsonable(verdicts),
        wall_time_s=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class WeakContinuityResult:
    """P(|I(x) - I(y)| > eps) estimate plus the computable tail-bound pieces."""

    x: float
    y: float
    epsilon: float
    probability: float
    se: float
    trials: int
    seed: int
    gap_alpha_integral: float
    lemma1_rhs: float


def _kernel_gap_alpha_integral(
    dc: CoefficientSet, x: float, y: float, alpha: float
) -> float:
    """integral over t of |(K(x, t) - K(y, t)) rho(t)|^alpha."""
    p = dc.params
    pxy = orthonormal_table(dc.n_max, p, np.array([x, y]))
    gap_w = dc.values * (pxy[:, 0] - pxy[:, 1])

    def g(t: float) -> float:
        col = orthonormal_table(dc.n_max, p, np.array([t]))[:, 0]
        return abs(float(np.dot(gap_w, col)) * float(weight(t, p))) ** alpha

    val, _ = quad(g, -1.0, 1.0, limit=200)
    return float(val)


def weak_continuity_experiment(
    cfg: ExperimentConfig, x: float, y: float, epsilon: float
) -> WeakContinuityResult:
    """Tail probability of the increment gap I(x) - I(y) at truncation n_ref."""
    report = weak_continuity_profile(cfg, y, offsets=(x - y,), epsilon=epsilon)
    (_, xv, yv, eps, est, se, trials, seed, gap_j, l1) = report.rows[0]
    return WeakContinuityResult(
        x=xv,
        y=yv,
        epsilon=eps,
        probability=est,
        se=se,
        trials=trials,
        seed=seed,
        gap_alpha_integral=gap_j,
        lemma1_rhs=l1,
    )


def weak_continuity_profile(
    cfg: ExperimentConfig,
    y: float,
    offsets: Sequence[float],
    epsilon: float,
) -> ConvergenceReport:
    """Tail probabilities of I(y + h) - I(y) over a shrinking-offset schedule.

    All offsets are evaluated on the same trials (one coefficient realization
    per trial), so the profile is pathwise coupled.
    """
    if len(offsets) == 0:
        raise GateError("need at least one offset")
    if any(not (-1.0 <= y + h <= 1.0) for h in offsets):
        raise GateError("offset points must stay inside [-1, 1]")
    if epsilon <= 0.0:
        raise GateError("epsilon must be positive")
    t0 = time.perf_counter()
    f = resolve(cfg.f, cfg.params).fn
    dc = fj_coefficients(f, cfg.n_ref, cfg.params, source=cfg.f)
    A = _realize(
        cfg.alpha,
        cfg.grid,
        basis_rows(cfg.n_ref, cfg.params, cfg.grid),
        cfg.seed,
        cfg.trials,
        cfg.workers,
    )
    pts = np.concatenate(([y], [y + h for h in offsets]))
    ptab = orthonormal_table(cfg.n_ref, cfg.params, pts)
    rows: list[tuple] = []
    series: list[tuple[float, float]] = []
    for rank, h in enumerate(offsets, start=1):
        gap_w = dc.values * (ptab[:, rank] - ptab[:, 0])
        est, se = _tail_prob(A @ gap_w, epsilon)
        gap_j = _kernel_gap_alpha_integral(dc, y + h, y, cfg.alpha)
        l1 = lemma1_rhs(gap_j, cfg.alpha, epsilon)
        rows.append(
            (rank, float(y + h), float(y), float(epsilon), est, se, cfg.trials, cfg.seed, gap_j, l1)
        )
        series.append((est, se))
    vals = [e for e, _ in series]
    verdicts = dict(_gate_flags(cfg))
    verdicts["nonincreasing"] = all(b <= a for a, b in zip(vals, vals[1:]))
    verdicts["first_last_separated"] = _separated(series[0], series[-1])
    return ConvergenceReport(
        kind="weak-continuity",
        config={**cfg.to_dict(), "profile_y": y, "offsets": list(offsets), "epsilon": epsilon},
        columns=(
            "rank",
            "x",
            "y",
            "eps",
            "estimate",
            "se",
            "trials",
            "seed",
            "gap_alpha_integral",
            "lemma1_rhs",
        ),
        rows=rows,
        verdicts=_jsonable(verdicts),
        wall_time_s=time.perf_counter() - t0,
    )


def cesaro_summability_experiment(cfg: ExperimentConfig) -> ConvergenceReport:
    """Tail probabilities of the (C,1) mean against the reference, with the raw
    partial sum as a pathwise-coupled contrast column.

    Gates: alpha == 1 (the Cauchy case), f in the weighted continuous space for
    (eta, tau), and the (gamma, delta) vs (eta, tau) window gate.
    """
    if cfg.alpha != 1.0:
        raise GateError(
            f"Cesaro summability experiment is stated for the Cauchy case alpha=1; got {cfg.alpha}"
        )
    entry = resolve(cfg.f, cfg.params)
    if not in_weighted_space(entry, cfg.wspace):
        raise GateError(
            f"catalog function {cfg.f!r} is not in the weighted continuous space "
            f"for eta={cfg.eta}, tau={cfg.tau}"
        )
    gate = check_parameter_gate(cfg.params, cfg.wspace)
    if not gate:
        raise GateError("parameter window gate failed: " + "; ".join(gate.violations))
    if min(cfg.n_schedule) < 1:
        raise GateError("Cesaro schedule entries must be >= 1")
    t0 = time.perf_counter()
    dc = fj_coefficients(entry.fn, cfg.n_ref, cfg.params, source=cfg.f)
    A = _realize(
        cfg.alpha,
        cfg.grid,
        basis_rows(cfg.n_ref, cfg.params, cfg.grid),
        cfg.seed,
        cfg.trials,
        cfg.workers,
    )
    theta = make_cesaro(1, n_max=max(cfg.n_schedule))
    py = orthonormal_table(cfg.n_ref, cfg.params, np.asarray(cfg.y))
    rows: list[tuple] = []
    track: dict[tuple[float, float], list[tuple[float, float]]] = {}
    max_abs_err = 0.0
    coef_gap = 0.0  # discrepancy in coefficient space, immune to draw tails
    coef_scale = 1.0
    for n in cfg.n_schedule:
        for yi, yv in enumerate(cfg.y):
            wvec = dc.values * py[:, yi]
            ces = -wvec.copy()  # sigma'_n minus the full reference
            ces[:n] += theta.row(n) * wvec[:n]
            raw = wvec.copy()
            raw[: n + 1] = 0.0  # S_n minus the reference, sign-flipped; |.| used
            err_ces = A @ ces
            err_raw = A @ raw
            max_abs_err = max(max_abs_err, float(np.max(np.abs(err_ces))))
            coef_gap = max(coef_gap, float(np.max(np.abs(ces))))
            coef_scale = max(coef_scale, float(np.max(np.abs(wvec))))
            for eps in cfg.epsilons:
                est, se = _tail_prob(err_ces, eps)
                rest, rse = _tail_prob(err_raw, eps)
                rows.append(
                    (int(n), float(yv), float(eps), est, se, rest, rse, cfg.trials, cfg.seed)
                )
                track.setdefault((yv, eps), []).append((est, se))
    verdicts: dict = dict(_gate_flags(cfg))
    for (yv, eps), series in track.items():
        vals = [e for e, _ in series]
        key = f"[y={yv},eps={eps}]"
        verdicts["nonincreasing" + key] = all(b <= a for a, b in zip(vals, vals[1:]))
        verdicts["first_last_separated" + key] = _separated(series[0], series[-1])
    verdicts["max_abs_error"] = max_abs_err
    # degenerate when every live coefficient already sits inside the (C,1)
    # window at weight 1, up to expansion rounding dust
    verdicts["degenerate_exact"] = coef_gap <= 1e-12 * coef_scale
    return ConvergenceReport(
        kind="cesaro-summability",
        config=cfg.to_dict(),
        columns=(
            "n",
            "y",
            "eps",
            "estimate",
            "se",
            "partial_estimate",
            "partial_se",
            "trials",
            "seed",
        ),
        rows=rows,
        verdicts=_jsonable(verdicts),
        wall_time_s=time.perf_counter() - t0,
    )


def tail_scaling_experiment(cfg: ExperimentConfig) -> ConvergenceReport:
    """Empirical P(|integral of f dX| > eps) over an epsilon ladder, with the
    fitted log-log slope (theory: -alpha) and per-eps first-bound constants."""
    t0 = time.perf_counter()
    entry = resolve(cfg.f, cfg.params)
    t = cfg.grid.left_nodes
    g = np.asarray(entry.fn(t), dtype=float) * np.asarray(weight(t, cfg.params))
    if not np.all(np.isfinite(g)):
        raise GateError(f"integrand {cfg.f!r} * rho is not finite on the grid")
    V = _realize(cfg.alpha, cfg.grid, g[None, :], cfg.seed, cfg.trials, cfg.workers)[:, 0]
    J = integrand_alpha_norm(entry.fn, cfg.alpha, cfg.params)
    rows: list[tuple] = []
    pts: list[tuple[float, float]] = []
    for eps in sorted(cfg.epsilons):
        est, se = _tail_prob(V, eps)
        l1 = lemma1_rhs(J, cfg.alpha, eps)
        c_fit = est * eps**cfg.alpha / J if J > 0.0 else float("nan")
        rows.append((float(eps), est, se, cfg.trials, cfg.seed, l1, c_fit))
        if est > 0.0:
            pts.append((np.log(eps), np.log(est)))
    verdicts: dict = {"alpha": cfg.alpha, "alpha_integral": J}
    if len(pts) >= 2:
        xs = np.array([a for a, _ in pts])
        ys = np.array([b for _, b in pts])
        slope, intercept = np.polyfit(xs, ys, 1)
        verdicts["slope"] = float(slope)
        verdicts["intercept"] = float(intercept)
    else:
        verdicts["slope"] = None
        verdicts["intercept"] = None
    verdicts["c_fit_max"] = max((r[6] for r in rows), default=float("nan"))
    return ConvergenceReport(
        kind="tail-scaling",
        config=cfg.to_dict(),
        columns=("eps", "estimate", "se", "trials", "seed", "lemma1_rhs", "c_fit"),
        rows=rows,
        verdicts=_jsonable(verdicts),
        wall_time_s=time.perf_counter() - t0,
    )


def integrand_alpha_norm(
    f: Callable[[np.ndarray], np.ndarray], alpha: float, p: JacobiParams
) -> float:
    """integral over [-1, 1] of |f(t) rho(t)|^alpha (adaptive quadrature)."""
    validate_alpha(alpha)

    def g(t: float) -> float:
        return abs(float(f(np.float64(t))) * float(weight(t, p))) ** alpha

    val, _ = quad(g, -1.0, 1.0, limit=200)
    return float(val)


def lemma1_rhs(
    J: float, alpha: float, eps: float, eps_prime: float | None = None, C: float = 1.0
) -> float:
    """First tail bound: C * 2^(alpha+1) / ((alpha+1) eps'^alpha) * J, eps' < eps.

    Defaults: eps' = 0.9 eps; C = 1 is an instantiation (the true constant is
    not estimated), so these values are comparators, not certified bounds.
    """
    validate_alpha(alpha)
    if eps_prime is None:
        eps_prime = 0.9 * eps
    if not (0.0 < eps_prime < eps):
        raise ValueError(f"need 0 < eps' < eps, got eps'={eps_prime}, eps={eps}")
    return C * 2.0 ** (alpha + 1.0) / ((alpha + 1.0) * eps_prime**alpha) * J


@dataclass(frozen=True)
class Lemma2Terms:
    total: float
    first_term: float
    u_integral: float
    tail_allowance: float
    u_max: float


def lemma2_rhs(J: float, alpha: float, u_max: float = 1e4) -> Lemma2Terms:
    """Expectation bound: 4J/(pi(alpha-1)) + (2/pi) * integral over |u|>1 of
    (1 - exp(-|u|^alpha J)) / u^2, truncated at u_max with a 2/u_max allowance.

    Valid only for alpha > 1 (the prefactor diverges at alpha = 1).
    """
    validate_alpha(alpha)
    if alpha <= 1.0:
        raise UnsupportedRegimeError(
            "the expectation bound needs alpha > 1; its prefactor diverges at alpha = 1"
        )
    if J < 0.0:
        raise ValueError("the alpha-norm integral must be nonnegative")
    if J == 0.0:
        # degenerate integrand: the u-integrand vanishes identically, so no
        # truncation allowance is owed either
        return Lemma2Terms(0.0, 0.0, 0.0, 0.0, float(u_max))
    first = 4.0 * J / (np.pi * (alpha - 1.0))
    val, _ = quad(lambda u: (1.0 - np.exp(-(u**alpha) * J)) / u**2, 1.0, u_max, limit=500)
    tail = 2.0 / u_max  # integrand <= 1/u^2 on both tails beyond u_max
    total = first + (2.0 / np.pi) * (2.0 * val + tail)
    return Lemma2Terms(
        total=float(total),
        first_term=float(first),
        u_integral=float(val),
        tail_allowance=float(tail),
        u_max=float(u_max),
    )


@dataclass(frozen=True)
class LemmaBoundsReport:
    f: str
    alpha: float
    gamma: float
    delta: float
    alpha_integral: float
    lemma1: dict[float, float] = field(default_factory=dict)
    lemma2: Lemma2Terms | None = None

    def to_json(self) -> str:
        obj = {
            "f": self.f,
            "alpha": self.alpha,
            "gamma": self.gamma,
            "delta": self.delta,
            "alpha_integral": self.alpha_integral,
            "lemma1": {repr(k): v for k, v in self.lemma1.items()},
            "lemma2": None
            if self.lemma2 is None
            else {
                "total": self.lemma2.total,
                "first_term": self.lemma2.first_term,
                "u_integral": self.lemma2.u_integral,
                "tail_allowance": self.lemma2.tail_allowance,
                "u_max": self.lemma2.u_max,
            },
        }
        return json.dumps(obj, sort_keys=True, indent=2)


def lemma_bounds(
    f_id: str,
    alpha: float,
    p: JacobiParams,
    epsilons: Sequence[float] = (1.0,),
    include_lemma2: bool = True,
    u_max: float = 1e4,
) -> LemmaBoundsReport:
    """Both analytic tail/expectation bounds for the integrand f * rho.

    With include_lemma2 and alpha <= 1 this raises UnsupportedRegimeError;
    pass include_lemma2=False to get the tail bound alone in that regime.
    """
    entry = resolve(f_id, p)
    J = integrand_alpha_norm(entry.fn, alpha, p)
    l1 = {float(e): lemma1_rhs(J, alpha, e) for e in epsilons}
    l2 = lemma2_rhs(J, alpha, u_max=u_max) if include_lemma2 else None
    return LemmaBoundsReport(
        f=f_id,
        alpha=alpha,
        gamma=p.gamma,
        delta=p.delta,
        alpha_integral=J,
        lemma1=l1,
        lemma2=l2,
    )
