"""Jacobi weights, orthonormal polynomials, and Gauss-Jacobi quadrature.

Conventions used throughout the package:

* weight: rho(t) = (1 - t)^gamma * (1 + t)^delta on [-1, 1], gamma, delta > -1.
* jacobi_eval returns the classical P_n (P_n(1) = binom(n+gamma, n)); everything
  downstream consumes the orthonormalized p_n = P_n / sqrt(norm_constant(n)).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "JacobiParams",
    "WeightedSpaceParams",
    "QuadratureRule",
    "weight",
    "jacobi_eval",
    "norm_constant",
    "orthonormal_eval",
    "orthonormal_table",
    "gauss_jacobi",
    "weighted_sup_norm",
    "check_parameter_gate",
    "GateReport",
]


@dataclass(frozen=True)
class JacobiParams:
    """Exponent pair (gamma, delta) of the weight (1-t)^gamma (1+t)^delta."""

    gamma: float
    delta: float

    def __post_init__(self) -> None:
        if not (self.gamma > -1.0 and self.delta > -1.0):
            raise ValueError(
                f"Jacobi exponents must satisfy gamma > -1 and delta > -1, "
                f"got gamma={self.gamma}, delta={self.delta}"
            )

    def theorem_gate_strict(self) -> bool:
        """gamma > 0 and delta > 0 (integrand p_n * rho vanishes at the endpoints)."""
        return self.gamma > 0.0 and self.delta > 0.0

    def theorem_gate_weak(self) -> bool:
        """gamma >= 0 and delta >= 0."""
        return self.gamma >= 0.0 and self.delta >= 0.0

    def lemma_gate(self) -> bool:
        """gamma >= -1/2 and delta >= -1/2."""
        return self.gamma >= -0.5 and self.delta >= -0.5


@dataclass(frozen=True)
class WeightedSpaceParams:
    """Exponent pair (eta, tau) of the sup-norm weight (1-t)^eta (1+t)^tau."""

    eta: float
    tau: float

    def __post_init__(self) -> None:
        if not (self.eta >= 0.0 and self.tau >= 0.0):
            raise ValueError(
                f"weighted-space exponents must be nonnegative, "
                f"got eta={self.eta}, tau={self.tau}"
            )


def weight(t: float | np.ndarray, p: JacobiParams) -> float | np.ndarray:
    """Evaluate rho(t) = (1-t)^gamma (1+t)^delta; domain is [-1, 1]."""
    arr = np.asarray(t, dtype=float)
    if np.any(arr < -1.0) or np.any(arr > 1.0):
        raise ValueError("weight evaluated outside [-1, 1]")
    with np.errstate(divide="ignore"):
        out = (1.0 - arr) ** p.gamma * (1.0 + arr) ** p.delta
    if np.isscalar(t) or arr.ndim == 0:
        return float(out)
    return out


def jacobi_eval(n: int, p: JacobiParams, t: float | np.ndarray) -> float | np.ndarray:
    """Classical Jacobi polynomial P_n^(gamma,delta)(t) by three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    table = _classical_table(n, p, np.atleast_1d(np.asarray(t, dtype=float)))
    out = table[n]
    if np.isscalar(t) or np.asarray(t).ndim == 0:
        return float(out[0])
    return out


def _classical_table(n_max: int, p: JacobiParams, t: np.ndarray) -> np.ndarray:
    """Rows 0..n_max of classical P_n at the points t, shape (n_max+1, len(t))."""
    a, b = p.gamma, p.delta
    out = np.empty((n_max + 1, t.size), dtype=float)
    out[0] = 1.0
    if n_max == 0:
        return out
    out[1] = 0.5 * (a + b + 2.0) * t + 0.5 * (a - b)
    for n in range(2, n_max + 1):
        s = 2.0 * n + a + b
        c1 = 2.0 * n * (n + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (a * a - b * b)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s
        out[n] = ((c2 + c3 * t) * out[n - 1] - c4 * out[n - 2]) / c1
    return out


def norm_constant(n: int, p: JacobiParams) -> float:
    """h_n = integral of P_n^2 * rho over [-1, 1] (orthonormalization constant)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a, b = p.gamma, p.delta
    if n == 0:
        # 2^(a+b+1) * B(a+1, b+1); the generic formula divides by a+b+1.
        return math.exp(
            (a + b + 1.0) * math.log(2.0)
            + math.lgamma(a + 1.0)
            + math.lgamma(b + 1.0)
            - math.lgamma(a + b + 2.0)
        )
    return math.exp(
        (a + b + 1.0) * math.log(2.0)
        - math.log(2.0 * n + a + b + 1.0)
        + math.lgamma(n + a + 1.0)
        + math.lgamma(n + b + 1.0)
        - math.lgamma(n + a + b + 1.0)
        - math.lgamma(n + 1.0)
    )


def orthonormal_eval(n: int, p: JacobiParams, t: float | np.ndarray) -> float | np.ndarray:
    """Orthonormal p_n(t) = P_n(t) / sqrt(h_n); integral of p_n p_m rho is delta_nm."""
    return jacobi_eval(n, p, t) / math.sqrt(norm_constant(n, p))


def orthonormal_table(n_max: int, p: JacobiParams, t: np.ndarray) -> np.ndarray:
    """Rows 0..n_max of orthonormal p_n at the points t, shape (n_max+1, len(t))."""
    t = np.asarray(t, dtype=float)
    table = _classical_table(n_max, p, t)
    scale = np.array([1.0 / math.sqrt(norm_constant(n, p)) for n in range(n_max + 1)])
    return table * scale[:, None]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights pair; integrates f against rho over [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def order(self) -> int:
        return self.nodes.size

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        vals = np.asarray(f(self.nodes), dtype=float)
        return float(np.dot(self.weights, np.broadcast_to(vals, self.nodes.shape)))

    def to_json(self) -> str:
        return json.dumps(
            {"nodes": self.nodes.tolist(), "weights": self.weights.tolist()},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "QuadratureRule":
        obj = json.loads(text)
        return cls(
            nodes=np.asarray(obj["nodes"], dtype=float),
            weights=np.asarray(obj["weights"], dtype=float),
        )


def _monic_recurrence(m: int, p: JacobiParams) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and square-rooted off-diagonal of the m-point Jacobi matrix."""
    a, b = p.gamma, p.delta
    s = a + b
    diag = np.empty(m)
    diag[0] = (b - a) / (s + 2.0)
    if m > 1:
        i = np.arange(1, m, dtype=float)
        diag[1:] = (b * b - a * a) / ((2.0 * i + s) * (2.0 * i + s + 2.0))
    off = np.empty(max(m - 1, 0))
    if m > 1:
        off[0] = math.sqrt(4.0 * (a + 1.0) * (b + 1.0) / ((s + 2.0) ** 2 * (s + 3.0)))
    if m > 2:
        j = np.arange(2, m, dtype=float)
        sj = 2.0 * j + s
        off[1:] = np.sqrt(
            4.0 * j * (j + a) * (j + b) * (j + s) / (sj * sj * (sj * sj - 1.0))
        )
    return diag, off


def gauss_jacobi(m: int, p: JacobiParams) -> QuadratureRule:
    """m-point Gauss rule for rho: exact for polynomial degree <= 2m-1.

    Golub-Welsch: nodes are eigenvalues of the symmetrized recurrence matrix,
    weights are mu_0 times the squared first eigenvector components.
    """
    if m < 1:
        raise ValueError("node count must be >= 1")
    mu0 = norm_constant(0, p)
    diag, off = _monic_recurrence(m, p)
    try:
        vals, vecs = eigh_tridiagonal(diag, off)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - scipy rarely fails here
        raise RuntimeError(f"Gauss-Jacobi eigensolve failed for m={m}, {p}") from exc
    nodes = vals
    weights = mu0 * vecs[0, :] ** 2
    if not (np.all(np.diff(nodes) > 0.0) and np.all(np.abs(nodes) < 1.0)):
        raise RuntimeError("Gauss-Jacobi nodes not strictly increasing inside (-1, 1)")
    if not np.all(weights > 0.0):
        raise RuntimeError("Gauss-Jacobi produced non-positive weights")
    return QuadratureRule(nodes=nodes, weights=weights)


def _chebyshev_grid(sampling: int) -> np.ndarray:
    """Chebyshev points of the first kind: interior, clustered at the endpoints."""
    j = np.arange(sampling)
    return np.cos(np.pi * (2.0 * j + 1.0) / (2.0 * sampling))[::-1]


def weighted_sup_norm(
    f: Callable[[np.ndarray], np.ndarray],
    w: WeightedSpaceParams,
    sampling: int = 4097,
) -> float:
    """sup over [-1, 1] of |f(t)| (1-t)^eta (1+t)^tau, on an endpoint-clustered grid.

    The grid is interior, so integrable endpoint singularities of f are probed
    arbitrarily closely without evaluating f at exactly +-1.
    """
    if sampling < 3:
        raise ValueError("sampling must be >= 3")
    t = _chebyshev_grid(sampling)
    fv = np.broadcast_to(np.asarray(f(t), dtype=float), t.shape)
    if not np.all(np.isfinite(fv)):
        raise ValueError("non-finite function value in weighted_sup_norm")
    rho = (1.0 - t) ** w.eta * (1.0 + t) ** w.tau
    return float(np.max(np.abs(fv) * rho))


@dataclass(frozen=True)
class GateReport:
    """Outcome of the (eta, tau) vs (gamma, delta) parameter window check."""

    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def check_parameter_gate(p: JacobiParams, w: WeightedSpaceParams) -> GateReport:
    """Window gate: gamma/2 - 1/4 < eta < gamma/2 + 3/4 (and the delta/tau twin).

    Also requires gamma, delta >= -1/2. Returns every violated clause.
    """
    violations: list[str] = []
    if p.gamma < -0.5:
        violations.append(f"gamma={p.gamma} < -1/2")
    if p.delta < -0.5:
        violations.append(f"delta={p.delta} < -1/2")
    lo_e, hi_e = p.gamma / 2.0 - 0.25, p.gamma / 2.0 + 0.75
    if not (lo_e < w.eta < hi_e):
        violations.append(f"eta={w.eta} outside ({lo_e}, {hi_e})")
    lo_t, hi_t = p.delta / 2.0 - 0.25, p.delta / 2.0 + 0.75
    if not (lo_t < w.tau < hi_t):
        violations.append(f"tau={w.tau} outside ({lo_t}, {hi_t})")
    return GateReport(ok=not violations, violations=tuple(violations))
