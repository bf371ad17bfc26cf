"""Global-minimum grid verification, majorization trials, proof chain."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import power_sum_mp
from sincsum import DomainError
from sincsum.verify.engine import (
    THRESHOLD,
    majorization_property,
    proof_chain,
    verify_global_min,
)


class TestGlobalMin:
    def test_r2_minimum_is_one_third(self):
        rep = verify_global_min(2.0, grid_n=512, tol=1e-9)
        assert rep.status == "passed"
        assert rep.min_value == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert rep.worst_margin >= -1e-9
        assert rep.deriv_worst <= 1e-9
        assert rep.antisym_worst <= 1e-9

    def test_r1_trivial_margins(self):
        rep = verify_global_min(1.0, grid_n=256, tol=1e-9)
        assert rep.status == "passed"
        # the sum is constant, so every margin collapses to rounding noise
        assert abs(rep.worst_margin) <= 1e-11
        assert rep.deriv_worst <= 1e-11

    def test_half_integer_minimum_value(self):
        rep = verify_global_min(1.5, grid_n=256, tol=1e-9)
        assert rep.status == "passed"
        assert rep.min_value == pytest.approx(
            float(power_sum_mp(1.5, 0.5)), abs=1e-12
        )

    def test_spread_small(self):
        rep = verify_global_min(3.0, grid_n=128, tol=1e-9)
        assert rep.spread_max <= 1e-11

    def test_unreachable_tolerance_is_inconclusive(self):
        rep = verify_global_min(2.0, grid_n=64, tol=1e-30)
        assert rep.status == "inconclusive"
        assert "rigor floor" in rep.note

    def test_validation(self):
        with pytest.raises(DomainError):
            verify_global_min(0.9, grid_n=64, tol=1e-9)
        with pytest.raises(DomainError):
            verify_global_min(2.0, grid_n=8, tol=1e-9)


class TestMajorization:
    def test_documented_instance(self):
        # x = (0.3, 0.8), y = (0.4, 0.6), threshold 0.5, g(t) = t^2:
        # 0.09 + 0.64 = 0.73 >= 0.16 + 0.36 = 0.52
        gx = 0.3**2 + 0.8**2
        gy = 0.4**2 + 0.6**2
        assert gx == pytest.approx(0.73)
        assert gy == pytest.approx(0.52)
        assert gx >= gy

    def test_equal_sequences_give_equality(self):
        xs = ys = (0.2, 0.5, 1.4)
        for g in (lambda t: t**2, math.expm1, lambda t: max(0.0, t - 0.3) ** 2):
            assert math.fsum(map(g, xs)) == math.fsum(map(g, ys))

    def test_bulk_run_no_violations(self):
        rep = majorization_property(20_000, seed=42)
        assert rep.violations == 0
        assert rep.first_violation is None
        assert rep.min_margin >= -1e-12

    def test_deterministic(self):
        a = majorization_property(2_000, seed=5)
        b = majorization_property(2_000, seed=5)
        assert a == b

    @given(st.integers(0, 10_000))
    def test_any_seed_holds(self, seed):
        rep = majorization_property(50, seed=seed)
        assert rep.violations == 0

    def test_validation(self):
        with pytest.raises(DomainError):
            majorization_property(0, seed=1)


class TestProofChain:
    def test_generic_point(self):
        w = proof_chain(2.0, 0.3, 64)
        assert w.passed, w.margins
        assert w.threshold == pytest.approx(4.0 / math.pi**2, abs=1e-16)
        assert len(w.x_seq) == 65
        assert w.y0_tilde > w.threshold
        assert all(v < w.threshold for v in w.y_seq[1:])

    def test_at_the_minimizer_everything_is_tight(self):
        w = proof_chain(2.0, 0.5, 64)
        assert w.passed
        for a, b in zip(w.x_seq, w.y_seq):
            assert a == pytest.approx(b, abs=1e-15)
        assert w.x0_tilde == pytest.approx(w.y0_tilde, abs=1e-15)

    def test_first_far_pair_value(self):
        w = proof_chain(2.0, 0.5, 64)
        assert w.y_seq[1] == pytest.approx(8.0 / (9.0 * math.pi**2), abs=1e-15)
        assert w.y_seq[1] < THRESHOLD

    def test_full_cross_product(self):
        for r in (1.0, 1.5, 2.0, 4.0):
            for i in range(1, 20):
                w = proof_chain(r, 0.05 * i, 64)
                assert w.passed, (r, 0.05 * i, w.margins)

    def test_validation(self):
        with pytest.raises(DomainError):
            proof_chain(0.8, 0.3)
        with pytest.raises(DomainError):
            proof_chain(2.0, 1.5)
        with pytest.raises(DomainError):
            proof_chain(2.0, 0.3, m_terms=4)
