"""Independent numerical oracles used by the test suite.

These deliberately avoid the package's own code paths: polynomial values come
from the explicit finite hypergeometric sum, moments from the weight's
integration-by-parts recurrence, and stable CDFs from characteristic-function
inversion (Gil-Pelaez), so each package implementation is checked against a
second, structurally different route.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import PchipInterpolator
from scipy.special import binom


def jacobi_explicit_sum(n: int, gamma: float, delta: float, t: np.ndarray) -> np.ndarray:
    """Classical P_n via the explicit sum
    sum_s binom(n+gamma, n-s) binom(n+delta, s) ((t-1)/2)^s ((t+1)/2)^(n-s)."""
    t = np.asarray(t, dtype=float)
    total = np.zeros_like(t)
    for s in range(n + 1):
        total += (
            binom(n + gamma, n - s)
            * binom(n + delta, s)
            * ((t - 1.0) / 2.0) ** s
            * ((t + 1.0) / 2.0) ** (n - s)
        )
    return total


def jacobi_moments(k_max: int, gamma: float, delta: float) -> np.ndarray:
    """Exact moments mu_k = integral t^k (1-t)^gamma (1+t)^delta dt, k=0..k_max.

    Recurrence from integrating d[(1-t)^(gamma+1) (1+t)^(delta+1)] by parts:
    (gamma+delta+2+k) mu_{k+1} = (delta-gamma) mu_k + k mu_{k-1}.
    """
    mu = np.empty(k_max + 1)
    mu[0] = math.exp(
        (gamma + delta + 1.0) * math.log(2.0)
        + math.lgamma(gamma + 1.0)
        + math.lgamma(delta + 1.0)
        - math.lgamma(gamma + delta + 2.0)
    )
    if k_max >= 1:
        mu[1] = (delta - gamma) * mu[0] / (gamma + delta + 2.0)
    for k in range(1, k_max):
        mu[k + 1] = ((delta - gamma) * mu[k] + k * mu[k - 1]) / (gamma + delta + 2.0 + k)
    return mu


def sas_cdf(x: float, alpha: float, u_max: float = 40.0) -> float:
    """Gil-Pelaez CDF of the standard symmetric alpha-stable law
    (cf exp(-|u|^alpha)): F(x) = 1/2 + (1/pi) integral_0^inf sin(xu) e^(-u^alpha) / u du.

    The integral is split at u* = min(1, 1/|x|); the head is smooth and at most
    one oscillation, the rest is handled by the oscillatory (QAWO) rule.
    """
    if x == 0.0:
        return 0.5
    sign = 1.0 if x > 0 else -1.0
    ax = abs(x)
    ustar = min(1.0, 1.0 / ax)
    head, _ = quad(
        lambda u: np.sin(ax * u) / u * np.exp(-(u**alpha)), 0.0, ustar, limit=200
    )
    osc, _ = quad(
        lambda u: np.exp(-(u**alpha)) / u,
        ustar,
        u_max,
        weight="sin",
        wvar=ax,
        limit=400,
    )
    return 0.5 + sign * (head + osc) / np.pi


def sas_cdf_interpolator(alpha: float, lo: float, hi: float, points: int = 2001):
    """Monotone interpolant of the CDF on [lo, hi] built from pointwise inversion.

    The grid is dense where the density is non-negligible and coarse in the far
    tails, where the CDF is nearly flat.
    """
    pieces = [np.linspace(lo, hi, max(points // 4, 2))]
    core_lo, core_hi = max(lo, -50.0), min(hi, 50.0)
    if core_lo < core_hi:
        pieces.append(np.linspace(core_lo, core_hi, points))
    grid = np.unique(np.concatenate(pieces))
    vals = np.array([sas_cdf(float(g), alpha) for g in grid])
    vals = np.clip(vals, 0.0, 1.0)
    vals = np.maximum.accumulate(vals)  # wash out rounding-level non-monotonicity
    return PchipInterpolator(grid, vals)


def ks_distance(sample: np.ndarray, cdf_values: np.ndarray) -> float:
    """Kolmogorov-Smirnov distance given the oracle CDF at the sorted sample."""
    n = sample.size
    i = np.arange(1, n + 1)
    return float(
        np.max(np.maximum(np.abs(cdf_values - i / n), np.abs(cdf_values - (i - 1) / n)))
    )


def lemma2_u_integral_oracle(J: float, alpha: float, u_max: float, points: int = 2_000_000) -> float:
    """Midpoint rule for integral_1^{u_max} (1 - exp(-u^alpha J)) / u^2 du under
    the substitution v = 1/u (bounded smooth integrand on (1/u_max, 1))."""
    lo = 1.0 / u_max
    v = lo + (np.arange(points) + 0.5) * (1.0 - lo) / points
    vals = 1.0 - np.exp(-(v ** (-alpha)) * J)
    return float(np.mean(vals) * (1.0 - lo))
