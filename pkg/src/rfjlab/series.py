"""Fourier-Jacobi coefficients, kernels, and (random) partial/theta sums.

Deterministic coefficients use the orthonormal basis: a_n = integral of
f * p_n * rho, so f = sum a_n p_n in L2(rho).  Random sums combine these with
the random coefficients A_n of a single increment realization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .integrals import RandomCoefficientSet
from .jacobi import JacobiParams, QuadratureRule, gauss_jacobi, orthonormal_table
from .summation import SummationMatrix, make_cesaro

__all__ = [
    "CoefficientSet",
    "fj_coefficients",
    "kernel_partial",
    "partial_sum",
    "theta_sum",
    "random_theta_sum",
    "cesaro_mean",
]


@dataclass(frozen=True)
class CoefficientSet:
    """Deterministic coefficients a_0..a_N of a function, with provenance."""

    values: np.ndarray
    params: JacobiParams
    source: str = ""

    @property
    def n_max(self) -> int:
        return self.values.size - 1

    def to_json(self) -> str:
        return json.dumps(
            {
                "gamma": self.params.gamma,
                "delta": self.params.delta,
                "source": self.source,
                "a": self.values.tolist(),
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "CoefficientSet":
        obj = json.loads(text)
        return cls(
            values=np.asarray(obj["a"], dtype=float),
            params=JacobiParams(gamma=obj["gamma"], delta=obj["delta"]),
            source=obj.get("source", ""),
        )


def default_rule_order(N: int) -> int:
    """Quadrature size used when no rule is supplied: exact well past degree 2N."""
    return max(64, 2 * N + 16)


def fj_coefficients(
    f,
    N: int,
    p: JacobiParams,
    rule: QuadratureRule | None = None,
    source: str = "",
) -> CoefficientSet:
    """Coefficients a_0..a_N of f via Gauss-Jacobi quadrature."""
    if N < 0:
        raise ValueError("coefficient count must be nonnegative")
    if rule is None:
        rule = gauss_jacobi(default_rule_order(N), p)
    fv = np.broadcast_to(np.asarray(f(rule.nodes), dtype=float), rule.nodes.shape)
    if not np.all(np.isfinite(fv)):
        raise ValueError("non-finite function value at a quadrature node")
    table = orthonormal_table(N, p, rule.nodes)
    values = table @ (rule.weights * fv)
    return CoefficientSet(values=values, params=p, source=source)


def kernel_partial(
    y: float, t: float | np.ndarray, coeffs: CoefficientSet
) -> float | np.ndarray:
    """Truncated kernel f_N(y, t) = sum_k a_k p_k(y) p_k(t); symmetric in (y, t)."""
    N = coeffs.n_max
    py = orthonormal_table(N, coeffs.params, np.array([y]))[:, 0]
    tarr = np.atleast_1d(np.asarray(t, dtype=float))
    pt = orthonormal_table(N, coeffs.params, tarr)
    out = (coeffs.values * py) @ pt
    if np.isscalar(t) or np.asarray(t).ndim == 0:
        return float(out[0])
    return out


def _check_match(dc: CoefficientSet, rc: RandomCoefficientSet) -> None:
    if dc.params != rc.params:
        raise ValueError(
            f"coefficient sets built with different weights: {dc.params} vs {rc.params}"
        )


def _weights_at(y: float, dc: CoefficientSet, n: int) -> np.ndarray:
    """a_k p_k(y) for k = 0..n."""
    if n < 0:
        raise ValueError("truncation must be nonnegative")
    if n > dc.n_max:
        raise ValueError(f"truncation n={n} exceeds available coefficients {dc.n_max}")
    py = orthonormal_table(n, dc.params, np.array([y]))[:, 0]
    return dc.values[: n + 1] * py


def partial_sum(y: float, dc: CoefficientSet, rc: RandomCoefficientSet, n: int) -> float:
    """S_n(y) = sum_{k<=n} a_k A_k p_k(y)."""
    _check_match(dc, rc)
    if n > rc.n_max:
        raise ValueError(f"truncation n={n} exceeds available coefficients {rc.n_max}")
    w = _weights_at(y, dc, n)
    return float(np.dot(w, rc.values[: n + 1]))


def theta_sum(y: float, dc: CoefficientSet, theta: SummationMatrix, n: int) -> float:
    """Deterministic theta-sum: sum_{k<n} theta[k, n] a_k p_k(y) (theta[n, n] = 0)."""
    if n < 1:
        raise ValueError("theta sums start at n = 1")
    w = _weights_at(y, dc, n - 1)
    return float(np.dot(theta.row(n), w))


def random_theta_sum(
    y: float, dc: CoefficientSet, rc: RandomCoefficientSet, theta: SummationMatrix, n: int
) -> float:
    """Randomized theta-sum: sum_{k<n} theta[k, n] a_k A_k p_k(y)."""
    _check_match(dc, rc)
    if n < 1:
        raise ValueError("theta sums start at n = 1")
    if n - 1 > rc.n_max:
        raise ValueError(f"truncation n={n} exceeds available coefficients {rc.n_max}")
    w = _weights_at(y, dc, n - 1)
    return float(np.dot(theta.row(n), w * rc.values[:n]))


def cesaro_mean(y: float, dc: CoefficientSet, rc: RandomCoefficientSet, n: int) -> float:
    """Arithmetic mean of the first n partial sums S_0 .. S_{n-1}.

    Rearranging the double sum gives sum_{k<n} ((n-k)/n) a_k A_k p_k(y), i.e. the
    (C,1) theta-sum at n; tests pin this equality.
    """
    if n < 1:
        raise ValueError("the mean needs at least one partial sum")
    return float(np.mean([partial_sum(y, dc, rc, j) for j in range(n)]))


def cesaro_matrix_for(n: int) -> SummationMatrix:
    """(C,1) matrix realized through row n."""
    return make_cesaro(1, n_max=n)
