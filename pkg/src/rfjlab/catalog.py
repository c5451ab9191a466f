"""Named test functions used by the experiments and the CLI.

Ids:
  zero        f(t) = 0
  t, t2, ...  monomials t^d ("t" == "t1")
  abs         |t|
  step        sign(t - 0.3) (jump; not continuous)
  runge       1 / (1 + 25 t^2)
  exp         e^t
  singular    (1 - t)^(-1/4) (integrable endpoint blow-up at +1)
  p0, p1, ... orthonormal basis functions (resolved against the weight params)

Each entry carries endpoint growth exponents g+ and g- (f ~ (1 -+ t)^(-g) near
+-1; 0 means bounded with a limit) used for weighted-space membership checks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .jacobi import JacobiParams, WeightedSpaceParams, orthonormal_eval

__all__ = ["CatalogEntry", "resolve", "catalog_ids", "in_weighted_space"]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    fn: Callable[[np.ndarray], np.ndarray]
    continuous: bool
    growth_plus: float
    growth_minus: float
    description: str


_FIXED: dict[str, tuple[Callable[[np.ndarray], np.ndarray], bool, float, float, str]] = {
    "zero": (lambda t: np.zeros_like(np.asarray(t, dtype=float)), True, 0.0, 0.0, "0"),
    "abs": (np.abs, True, 0.0, 0.0, "|t|"),
    "step": (lambda t: np.sign(t - 0.3), False, 0.0, 0.0, "sign(t - 0.3)"),
    "runge": (lambda t: 1.0 / (1.0 + 25.0 * t * t), True, 0.0, 0.0, "1/(1+25t^2)"),
    "exp": (np.exp, True, 0.0, 0.0, "e^t"),
    "singular": (
        lambda t: (1.0 - t) ** (-0.25),
        True,
        0.25,
        0.0,
        "(1-t)^(-1/4)",
    ),
}


def catalog_ids() -> tuple[str, ...]:
    """Fixed ids plus the parametric families ("t<d>", "p<k>")."""
    return tuple(sorted(_FIXED)) + ("t", "t<d>", "p<k>")


def resolve(f_id: str, p: JacobiParams | None = None) -> CatalogEntry:
    """Look up a catalog entry; "p<k>" entries need the weight params."""
    if f_id in _FIXED:
        fn, cont, gp, gm, desc = _FIXED[f_id]
        return CatalogEntry(f_id, fn, cont, gp, gm, desc)
    m = re.fullmatch(r"t(\d*)", f_id)
    if m:
        d = int(m.group(1)) if m.group(1) else 1
        return CatalogEntry(
            f_id, lambda t, d=d: np.asarray(t, dtype=float) ** d, True, 0.0, 0.0, f"t^{d}"
        )
    m = re.fullmatch(r"p(\d+)", f_id)
    if m:
        if p is None:
            raise ValueError(f"catalog id {f_id!r} needs weight parameters")
        k = int(m.group(1))
        return CatalogEntry(
            f_id,
            lambda t, k=k, p=p: orthonormal_eval(k, p, t),
            True,
            0.0,
            0.0,
            f"orthonormal basis p_{k}",
        )
    raise ValueError(f"unknown catalog id {f_id!r}; known: {', '.join(catalog_ids())}")


def in_weighted_space(entry: CatalogEntry, w: WeightedSpaceParams) -> bool:
    """Membership in the weighted continuous space with exponents (eta, tau).

    Requires continuity on (-1, 1) and, per endpoint: with positive exponent the
    weighted function must vanish in the limit (growth strictly below the
    exponent); with zero exponent the function itself must stay bounded.
    """
    if not entry.continuous:
        return False

    def side_ok(exponent: float, growth: float) -> bool:
        if exponent > 0.0:
            return growth < exponent
        return growth <= 0.0

    return side_ok(w.eta, entry.growth_plus) and side_ok(w.tau, entry.growth_minus)
