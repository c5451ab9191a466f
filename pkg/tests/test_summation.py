"""Summation-matrix construction and the finite-depth condition checker,
exercised on families with known pass/fail profiles."""

import json
import math

import jsonschema
import numpy as np
import pytest

from rfjlab import (
    ConditionReport,
    SummationMatrix,
    check_conditions,
    from_function,
    make_cesaro,
    make_identity,
    make_zero,
)


def _schema(name: str) -> dict:
    import os

    import rfjlab

    path = os.path.join(os.path.dirname(rfjlab.__file__), "schemas", name)
    with open(path) as fh:
        return json.load(fh)


class TestMatrixShape:
    def test_row_lengths_and_diagonal(self):
        theta = make_cesaro(1, n_max=6)
        assert theta.n_max == 6
        for n in range(1, 7):
            assert theta.row(n).shape == (n,)
            assert theta.entry(n, n) == 0.0

    def test_cesaro1_closed_form(self):
        theta = make_cesaro(1, n_max=16)
        for n in [1, 4, 16]:
            for k in range(n):
                assert theta.entry(k, n) == pytest.approx((n - k) / n, abs=1e-15)

    def test_cesaro2_closed_form(self):
        # A_j = binom(j+2, j) = (j+1)(j+2)/2
        theta = make_cesaro(2, n_max=12)
        A = lambda j: math.comb(j + 2, j)
        for n in [2, 7, 12]:
            for k in range(n):
                assert theta.entry(k, n) == pytest.approx(A(n - 1 - k) / A(n - 1))

    def test_invalid_orders(self):
        with pytest.raises(ValueError):
            make_cesaro(0)
        with pytest.raises(ValueError):
            from_function(lambda k, n: 1.0, 0)

    def test_row_out_of_range(self):
        theta = make_identity(4)
        with pytest.raises(ValueError):
            theta.row(0)
        with pytest.raises(ValueError):
            theta.row(5)
        with pytest.raises(ValueError):
            theta.entry(3, 2)

    def test_bad_row_shape_rejected(self):
        with pytest.raises(ValueError):
            SummationMatrix(rows=(np.array([1.0, 2.0]),))

    def test_delta2_uses_zero_diagonal(self):
        # for (C,1): theta[k,n] = (n-k)/n is affine in k through the zero diagonal,
        # so second differences vanish (up to division rounding).
        theta = make_cesaro(1, n_max=32)
        for n in range(2, 33):
            assert np.max(np.abs(theta.delta2(n))) < 1e-15

    def test_delta2_identity_edge(self):
        # identity rows are constant 1 but the appended 0 diagonal makes the last
        # second difference -2*1 + 1 = ... explicitly: [1, 1, ..., 1, 0]
        theta = make_identity(8)
        d2 = theta.delta2(8)
        assert np.allclose(d2[:-1], 0.0)
        assert d2[-1] == pytest.approx(-1.0)

    def test_json_round_trip_and_schema(self):
        theta = make_cesaro(2, n_max=5)
        text = theta.to_json()
        jsonschema.validate(json.loads(text), _schema("summation_matrix.schema.json"))
        back = SummationMatrix.from_json(text)
        assert back.n_max == 5
        assert back.family == "cesaro2"
        for n in range(1, 6):
            assert np.array_equal(back.row(n), theta.row(n))


class TestCheckerOnKnownFamilies:
    def test_cesaro1_all_pass(self):
        rep = check_conditions(make_cesaro(1, n_max=128))
        for name, v in rep.verdicts().items():
            assert v.passed, f"{name}: {v.witness}"
        assert rep.xi1 and rep.xi2 and rep.xi3

    def test_cesaro2_all_pass(self):
        rep = check_conditions(make_cesaro(2, n_max=128))
        for name, v in rep.verdicts().items():
            assert v.passed, f"{name}: {v.witness}"

    def test_identity_fails_t2_with_witness(self):
        rep = check_conditions(make_identity(128))
        assert rep.t1.passed
        assert not rep.t2.passed
        assert "n*|theta[n-1,n]|" in rep.t2.witness
        assert not rep.xi1

    def test_zero_fails_t1(self):
        rep = check_conditions(make_zero(64))
        assert not rep.t1.passed
        assert not rep.xi3

    def test_scaled_cesaro_fails_only_t1(self):
        # theta[k, n] = 0.5 (n-k)/n converges to 0.5, not 1; everything else
        # inherits the (C,1) structure.
        theta = from_function(lambda k, n: 0.5 * (n - k) / n, 128, family="halved")
        rep = check_conditions(theta)
        assert not rep.t1.passed
        assert rep.t2.passed and rep.t3.passed and rep.t4.passed and rep.t5.passed

    def test_quadratic_fails_only_t5(self):
        # theta[k, n] = 1 - (k/n)^2: d2 = -2/n^2 (negative) while the edge entry
        # theta[n-1, n] = (2n-1)/n^2 > 0, so T5's sign comparison fails; T4 holds
        # because the d2 sign is constant.
        theta = from_function(lambda k, n: 1.0 - (k / n) ** 2, 128, family="quadratic")
        rep = check_conditions(theta)
        assert rep.t1.passed and rep.t2.passed and rep.t3.passed and rep.t4.passed
        assert not rep.t5.passed
        assert "vs theta[n-1,n]" in rep.t5.witness
        assert rep.xi1 and not rep.xi3

    def test_midpoint_kink_fails_only_t3(self):
        # piecewise-linear rows with a convex slope break n^(-3/2) at k = n//2:
        # the second-difference scale n^(-3/2) beats O(1/n^2), so n^2 max|d2|
        # grows like sqrt(n) and the split-growth heuristic flags T3.  The kink
        # bends upward, matching the positive edge entry, so T4/T5 stay green;
        # the edge entry remains ~1/n for T2 and low-k entries still -> 1.
        def kink(k: int, n: int) -> float:
            h = n // 2
            b = n ** -1.5
            a = -(1.0 + (n - h) * b) / n
            return 1.0 + k * a + max(0, k - h) * b

        theta = from_function(kink, 256, family="kinked")
        rep = check_conditions(theta)
        assert rep.t1.passed, rep.t1.witness
        assert rep.t2.passed, rep.t2.witness
        assert not rep.t3.passed
        assert rep.t4.passed, rep.t4.witness
        assert rep.t5.passed, rep.t5.witness

    def test_depth_override_and_validation(self):
        theta = make_cesaro(1, n_max=64)
        rep = check_conditions(theta, n_max=32)
        assert rep.n_max == 32
        with pytest.raises(ValueError):
            check_conditions(theta, n_max=1)
        with pytest.raises(ValueError):
            check_conditions(theta, n_max=65)


class TestConditionReportSerialization:
    def test_json_is_strict_and_matches_schema(self):
        rep = check_conditions(make_identity(64))
        text = rep.to_json()
        obj = json.loads(text)  # would fail on bare NaN
        jsonschema.validate(obj, _schema("condition_report.schema.json"))
        assert obj["T2"]["passed"] is False
        assert obj["Xi1"] is False and obj["Xi3"] in (True, False)

    def test_failed_sign_stat_serializes_as_null(self):
        theta = from_function(lambda k, n: 1.0 - (k / n) ** 2, 64)
        obj = json.loads(check_conditions(theta).to_json())
        assert obj["T5"]["passed"] is False
        assert obj["T5"]["stat"] is None

    def test_text_rendering(self):
        rep = check_conditions(make_cesaro(1, n_max=32))
        text = rep.to_text()
        assert "T1: PASS" in text
        assert "Xi3: PASS" in text
        assert isinstance(rep, ConditionReport)
