"""Triangular summation matrices and finite-depth regularity condition checks.

A summation matrix theta assigns to each n >= 1 the row theta[k, n], k < n (the
diagonal theta[n, n] is 0 by convention).  The checker probes five conditions:

  T1: theta[k, n] -> 1 as n -> inf, for each fixed k
  T2: theta[n-1, n] = O(1/n)
  T3: second differences in k are O(1/n^2), uniformly in k
  T4: second differences have constant sign over all (k, n)
  T5: second differences share the sign of theta[n-1, n]

with composite gates Xi1 = Xi2 = {T1, T2, T3} and Xi3 = {T1, T5}.  Verdicts are
finite-n evidence over rows 1..n_max, not proofs; each verdict carries the
witness statistic it was decided on.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "SummationMatrix",
    "make_cesaro",
    "make_identity",
    "make_zero",
    "from_function",
    "check_conditions",
    "ConditionVerdict",
    "ConditionReport",
]

_SIGN_TOL = 1e-12


@dataclass(frozen=True)
class SummationMatrix:
    """Rows theta[., n] for n = 1..n_max; rows[i] has length i+1 (row n = i+1)."""

    rows: tuple[np.ndarray, ...]
    family: str = "custom"

    def __post_init__(self) -> None:
        for i, row in enumerate(self.rows):
            if row.shape != (i + 1,):
                raise ValueError(f"row for n={i + 1} must have length {i + 1}")

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> np.ndarray:
        """Entries theta[k, n] for k = 0..n-1 (excludes the zero diagonal)."""
        if not (1 <= n <= self.n_max):
            raise ValueError(f"row n={n} outside populated range 1..{self.n_max}")
        return self.rows[n - 1]

    def entry(self, k: int, n: int) -> float:
        """theta[k, n] for 0 <= k <= n, including the conventional theta[n, n] = 0."""
        if not (0 <= k <= n):
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        if k == n:
            return 0.0
        return float(self.row(n)[k])

    def delta2(self, n: int) -> np.ndarray:
        """Second differences theta[k+2,n] - 2 theta[k+1,n] + theta[k,n], k=0..n-2.

        The k = n-2 entry uses theta[n, n] = 0.
        """
        full = np.append(self.row(n), 0.0)
        if n < 2:
            return np.empty(0)
        return np.diff(full, n=2)

    def to_json(self) -> str:
        return json.dumps(
            {
                "family": self.family,
                "n_max": self.n_max,
                "rows": [row.tolist() for row in self.rows],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "SummationMatrix":
        obj = json.loads(text)
        rows = tuple(np.asarray(row, dtype=float) for row in obj["rows"])
        return cls(rows=rows, family=obj.get("family", "custom"))


def from_function(
    fn: Callable[[int, int], float], n_max: int, family: str = "custom"
) -> SummationMatrix:
    """Materialize theta[k, n] = fn(k, n) for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = tuple(
        np.array([float(fn(k, n)) for k in range(n)]) for n in range(1, n_max + 1)
    )
    return SummationMatrix(rows=rows, family=family)


def make_cesaro(mu: int, n_max: int = 128) -> SummationMatrix:
    """(C, mu) means: theta[k, n] = A_{n-1-k} / A_{n-1} with A_j = binom(j+mu, j).

    mu = 1 gives the classical theta[k, n] = (n - k) / n.
    """
    if mu < 1:
        raise ValueError("Cesaro order must be a positive integer")

    def coef(j: int) -> int:
        return math.comb(j + mu, j)

    return from_function(
        lambda k, n: coef(n - 1 - k) / coef(n - 1), n_max, family=f"cesaro{mu}"
    )


def make_identity(n_max: int = 128) -> SummationMatrix:
    """Plain truncation: theta[k, n] = 1 for k < n."""
    return from_function(lambda k, n: 1.0, n_max, family="identity")


def make_zero(n_max: int = 128) -> SummationMatrix:
    """Degenerate all-zero matrix (fails T1; useful as a checker control)."""
    return from_function(lambda k, n: 0.0, n_max, family="zero")


@dataclass(frozen=True)
class ConditionVerdict:
    passed: bool
    stat: float
    witness: str


@dataclass(frozen=True)
class ConditionReport:
    """Per-condition verdicts plus the composite gates."""

    n_max: int
    t1: ConditionVerdict
    t2: ConditionVerdict
    t3: ConditionVerdict
    t4: ConditionVerdict
    t5: ConditionVerdict

    @property
    def xi1(self) -> bool:
        return self.t1.passed and self.t2.passed and self.t3.passed

    @property
    def xi2(self) -> bool:
        # Printed with the same condition set as xi1; reported separately so a
        # different intended set remains recoverable from the five T verdicts.
        return self.t1.passed and self.t2.passed and self.t3.passed

    @property
    def xi3(self) -> bool:
        return self.t1.passed and self.t5.passed

    def verdicts(self) -> dict[str, ConditionVerdict]:
        return {"T1": self.t1, "T2": self.t2, "T3": self.t3, "T4": self.t4, "T5": self.t5}

    def to_json(self) -> str:
        obj: dict = {"n_max": self.n_max}
        for name, v in self.verdicts().items():
            stat = v.stat if math.isfinite(v.stat) else None
            obj[name] = {"passed": v.passed, "stat": stat, "witness": v.witness}
        obj["Xi1"] = self.xi1
        obj["Xi2"] = self.xi2
        obj["Xi3"] = self.xi3
        return json.dumps(obj, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"condition check through n = {self.n_max} (finite-n evidence)"]
        for name, v in self.verdicts().items():
            status = "PASS" if v.passed else "FAIL"
            lines.append(f"  {name}: {status}  stat={v.stat:.6g}  [{v.witness}]")
        for name, ok in (("Xi1", self.xi1), ("Xi2", self.xi2), ("Xi3", self.xi3)):
            lines.append(f"  {name}: {'PASS' if ok else 'FAIL'}")
        return "\n".join(lines)


def _check_t1(theta: SummationMatrix, n_max: int) -> ConditionVerdict:
    """Fixed-k convergence to 1: residual tiny at n_max or still shrinking."""
    ks = range(min(8, max(n_max // 2 - 1, 0)) + 1)
    worst: tuple[float, str] | None = None
    passed = True
    for k in ks:
        n_half = max(k + 1, n_max // 2)
        r_half = abs(1.0 - theta.entry(k, n_half))
        r_full = abs(1.0 - theta.entry(k, n_max))
        ok = r_full <= 1e-9 or r_full <= 0.9 * r_half
        if worst is None or r_full > worst[0]:
            worst = (r_full, f"k={k}: |1-theta| {r_half:.3g} -> {r_full:.3g}")
        if not ok:
            passed = False
            worst = (r_full, f"k={k}: |1-theta| {r_half:.3g} -> {r_full:.3g}")
            break
    assert worst is not None
    return ConditionVerdict(passed=passed, stat=worst[0], witness=worst[1])


def _bounded_split(values: np.ndarray, label: str) -> ConditionVerdict:
    """Boundedness heuristic: the second half of n may not outgrow the first."""
    n_max = values.size
    half = max(1, n_max // 2)
    m_first = float(np.max(values[:half]))
    m_second = float(np.max(values[half:])) if half < n_max else m_first
    ok = m_second <= max(1.25 * m_first, m_first + 1e-9)
    n_at = int(np.argmax(values)) + 1
    witness = f"max {label} = {float(np.max(values)):.6g} at n={n_at}; halves {m_first:.6g} -> {m_second:.6g}"
    return ConditionVerdict(passed=ok, stat=float(np.max(values)), witness=witness)


def check_conditions(theta: SummationMatrix, n_max: int | None = None) -> ConditionReport:
    """Evaluate T1..T5 over rows 1..n_max (defaults to the populated depth)."""
    if n_max is None:
        n_max = theta.n_max
    if not (2 <= n_max <= theta.n_max):
        raise ValueError(f"need 2 <= n_max <= populated depth {theta.n_max}")

    t1 = _check_t1(theta, n_max)

    edge = np.array([abs(theta.entry(n - 1, n)) for n in range(1, n_max + 1)])
    t2 = _bounded_split(np.arange(1, n_max + 1) * edge, "n*|theta[n-1,n]|")

    d2max = np.array(
        [np.max(np.abs(theta.delta2(n))) if n >= 2 else 0.0 for n in range(1, n_max + 1)]
    )
    t3 = _bounded_split(np.arange(1, n_max + 1) ** 2 * d2max, "n^2*max|d2|")

    pos_w = neg_w = None
    for n in range(2, n_max + 1):
        d2 = theta.delta2(n)
        for j in np.nonzero(np.abs(d2) > _SIGN_TOL)[0]:
            if d2[j] > 0 and pos_w is None:
                pos_w = f"d2[k={j},n={n}]={d2[j]:.3g}"
            if d2[j] < 0 and neg_w is None:
                neg_w = f"d2[k={j},n={n}]={d2[j]:.3g}"
    if pos_w and neg_w:
        t4 = ConditionVerdict(False, float("nan"), f"mixed signs: {pos_w}; {neg_w}")
    else:
        t4 = ConditionVerdict(True, 0.0, pos_w or neg_w or "all second differences ~ 0")

    t5_passed, t5_witness = True, "signs consistent with theta[n-1, n]"
    for n in range(2, n_max + 1):
        e = theta.entry(n - 1, n)
        s_edge = 0 if abs(e) <= _SIGN_TOL else (1 if e > 0 else -1)
        d2 = theta.delta2(n)
        for j in np.nonzero(np.abs(d2) > _SIGN_TOL)[0]:
            s = 1 if d2[j] > 0 else -1
            if s != s_edge:
                t5_passed = False
                t5_witness = (
                    f"d2[k={j},n={n}]={d2[j]:.3g} vs theta[n-1,n]={e:.3g}"
                )
                break
        if not t5_passed:
            break
    t5 = ConditionVerdict(t5_passed, 0.0 if t5_passed else float("nan"), t5_witness)

    return ConditionReport(n_max=n_max, t1=t1, t2=t2, t3=t3, t4=t4, t5=t5)
