"""Symmetric alpha-stable sampling and process increments on a uniform grid.

Scale convention (declared, used consistently everywhere): a draw with scale s
has characteristic function exp(-s^alpha |u|^alpha).  At alpha = 2 this is
N(0, 2 s^2); at alpha = 1 it is Cauchy with scale s.  The increment of the
driving process over a step of length dt therefore gets scale dt^(1/alpha).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

__all__ = [
    "GridSpec",
    "StableIncrements",
    "validate_alpha",
    "sample_sas",
    "sample_increments",
    "trial_rng",
]


def validate_alpha(alpha: float) -> float:
    """Stability index gate: alpha in (0, 2]."""
    if not (0.0 < alpha <= 2.0):
        raise ValueError(f"stable index must lie in (0, 2], got {alpha}")
    return float(alpha)


@dataclass(frozen=True)
class GridSpec:
    """Uniform partition of [-1, 1] into m steps; nodes t_i = -1 + i * dt."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"grid must have at least one step, got m={self.m}")

    @property
    def dt(self) -> float:
        return 2.0 / self.m

    @cached_property
    def nodes(self) -> np.ndarray:
        return -1.0 + self.dt * np.arange(self.m + 1)

    @cached_property
    def left_nodes(self) -> np.ndarray:
        return self.nodes[:-1]


def sample_sas(
    alpha: float,
    scale: float,
    rng: np.random.Generator,
    size: int | tuple[int, ...] | None = None,
) -> float | np.ndarray:
    """Draw symmetric alpha-stable variates with cf exp(-scale^alpha |u|^alpha).

    Chambers-Mallows-Stuck for generic alpha; exact normal and Cauchy branches
    at alpha = 2 and alpha = 1.
    """
    validate_alpha(alpha)
    if scale <= 0.0:
        raise ValueError(f"scale must be positive, got {scale}")
    if alpha == 2.0:
        return rng.normal(0.0, np.sqrt(2.0) * scale, size)
    if alpha == 1.0:
        return scale * rng.standard_cauchy(size)
    phi = (rng.random(size) - 0.5) * np.pi
    w = rng.standard_exponential(size)
    x = (np.sin(alpha * phi) / np.cos(phi) ** (1.0 / alpha)) * (
        np.cos((1.0 - alpha) * phi) / w
    ) ** ((1.0 - alpha) / alpha)
    return scale * x


@dataclass(frozen=True)
class StableIncrements:
    """One realization of the driving-process increments dx_i over the grid."""

    alpha: float
    grid: GridSpec
    dx: np.ndarray
    seed_info: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        validate_alpha(self.alpha)
        if self.dx.shape != (self.grid.m,):
            raise ValueError(
                f"expected {self.grid.m} increments, got shape {self.dx.shape}"
            )

    def to_csv(self, path: str) -> None:
        """Debug dump: rows (t_i, dx_i), dx_i being the increment over [t_i, t_i+dt]."""
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["t", "dx"])
            for t, d in zip(self.grid.left_nodes, self.dx):
                writer.writerow([repr(float(t)), repr(float(d))])

    def to_json(self) -> str:
        return json.dumps(
            {
                "alpha": self.alpha,
                "m": self.grid.m,
                "seed_info": self.seed_info,
                "dx": self.dx.tolist(),
            },
            sort_keys=True,
        )


def sample_increments(
    alpha: float,
    grid: GridSpec,
    rng: np.random.Generator,
    seed_info: str = "",
) -> StableIncrements:
    """Sample the m iid increments, each with scale dt^(1/alpha).

    Summing any sub-block of k increments yields scale (k * dt)^(1/alpha), so the
    aggregate over all of [-1, 1] has scale 2^(1/alpha) for every m.
    """
    scale = grid.dt ** (1.0 / alpha)
    dx = sample_sas(alpha, scale, rng, size=grid.m)
    return StableIncrements(alpha=alpha, grid=grid, dx=np.asarray(dx), seed_info=seed_info)


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """Independent, reproducible stream for one Monte Carlo trial.

    Streams are keyed by (master_seed, trial_index), so trial j's draws do not
    depend on how many trials run, in what order, or on how work is chunked.
    """
    if master_seed < 0 or trial_index < 0:
        raise ValueError("seed and trial index must be nonnegative")
    return np.random.default_rng(np.random.SeedSequence((master_seed, trial_index)))
