"""Discretized stochastic integrals against stable increments.

ito_stieltjes(g, inc) is the left-endpoint Riemann-Stieltjes sum
sum_i g(t_i) dx_i.  Because the dx_i are iid symmetric alpha-stable, the sum is
itself exactly alpha-stable with scale (sum_i |g(t_i)|^alpha dt)^(1/alpha) for
any grid size; refinement only sharpens the Riemann sum inside that scale.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .jacobi import JacobiParams, orthonormal_eval, orthonormal_table, weight
from .stable import GridSpec, StableIncrements

__all__ = [
    "ito_stieltjes",
    "basis_rows",
    "random_fj_coefficient",
    "coefficient_set",
    "RandomCoefficientSet",
]


def ito_stieltjes(g: Callable[[np.ndarray], np.ndarray], inc: StableIncrements) -> float:
    """Left-endpoint sum of g against one increment realization."""
    t = inc.grid.left_nodes
    vals = np.broadcast_to(np.asarray(g(t), dtype=float), t.shape)
    if not np.all(np.isfinite(vals)):
        raise ValueError("non-finite integrand value in ito_stieltjes")
    return float(np.dot(vals, inc.dx))


def basis_rows(n_max: int, p: JacobiParams, grid: GridSpec) -> np.ndarray:
    """Matrix G with G[n, i] = p_n(t_i) * rho(t_i) at the left endpoints.

    Row n is the integrand of the n-th random coefficient, so A = G @ dx gives
    all coefficients of one realization in a single product.
    """
    t = grid.left_nodes
    return orthonormal_table(n_max, p, t) * np.asarray(weight(t, p))[None, :]


def random_fj_coefficient(n: int, p: JacobiParams, inc: StableIncrements) -> float:
    """A_n = integral of p_n * rho against the increments."""
    return ito_stieltjes(lambda t: orthonormal_eval(n, p, t) * weight(t, p), inc)


@dataclass(frozen=True)
class RandomCoefficientSet:
    """Random coefficients A_0..A_N of one realization, with provenance."""

    values: np.ndarray
    params: JacobiParams
    alpha: float
    grid: GridSpec
    seed_info: str = field(default="", compare=False)

    @property
    def n_max(self) -> int:
        return self.values.size - 1

    def to_json(self) -> str:
        return json.dumps(
            {
                "alpha": self.alpha,
                "gamma": self.params.gamma,
                "delta": self.params.delta,
                "A": self.values.tolist(),
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str, grid: GridSpec | None = None) -> "RandomCoefficientSet":
        obj = json.loads(text)
        return cls(
            values=np.asarray(obj["A"], dtype=float),
            params=JacobiParams(gamma=obj["gamma"], delta=obj["delta"]),
            alpha=obj["alpha"],
            grid=grid if grid is not None else GridSpec(m=1),
        )


def coefficient_set(N: int, p: JacobiParams, inc: StableIncrements) -> RandomCoefficientSet:
    """All coefficients A_0..A_N from one shared increment realization."""
    if N < 0:
        raise ValueError("coefficient count must be nonnegative")
    values = np.array([random_fj_coefficient(n, p, inc) for n in range(N + 1)])
    return RandomCoefficientSet(
        values=values, params=p, alpha=inc.alpha, grid=inc.grid, seed_info=inc.seed_info
    )
