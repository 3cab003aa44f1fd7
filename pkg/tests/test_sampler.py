import math

import numpy as np
import pytest

from evcopula import (
    copula_cdf,
    empirical_rho,
    empirical_tau,
    random_pickands,
    rho,
    sample,
    support_curve,
    support_geometry,
    tau,
    triangular,
)
from evcopula.errors import DomainError, InsufficientData

N = 20_000
# 0.001-level Kolmogorov critical factor sqrt(ln(2/alpha)/2)
KS_FACTOR = math.sqrt(math.log(2000.0) / 2.0)


def tau_sigma(n):
    return math.sqrt(2.0 * (2.0 * n + 5.0) / (9.0 * n * (n - 1.0)))


class TestSample:
    def test_shape_and_range(self, tent):
        pairs = sample(tent, 1000, seed=0)
        assert pairs.shape == (1000, 2)
        assert np.all((pairs > 0.0) & (pairs < 1.0))

    def test_deterministic(self, tent):
        a = sample(tent, 500, seed=77)
        b = sample(tent, 500, seed=77)
        assert np.array_equal(a, b)

    def test_independence_case(self, product):
        pairs = sample(product, N, seed=11)
        r = np.corrcoef(pairs[:, 0], pairs[:, 1])[0, 1]
        assert abs(r) < 3.0 / math.sqrt(N)

    def test_comonotone_diagonal(self, comonotone):
        pairs = sample(comonotone, 2000, seed=12)
        assert np.max(np.abs(pairs[:, 0] - pairs[:, 1])) < 1e-9

    def test_uniform_margins(self, tent):
        pairs = sample(tent, N, seed=13)
        for col in (0, 1):
            x = np.sort(pairs[:, col])
            ecdf = np.arange(1, N + 1) / N
            stat = max(np.max(np.abs(ecdf - x)), np.max(np.abs(ecdf - 1.0 / N - x)))
            assert stat < KS_FACTOR / math.sqrt(N)

    def test_joint_cdf_matches_copula(self, tent):
        pairs = sample(tent, N, seed=14)
        bound = 3.0 * math.sqrt(math.log(2.0 / 0.001) / (2.0 * N))
        for x in (0.2, 0.4, 0.6, 0.8, 0.9):
            for y in (0.2, 0.4, 0.6, 0.8, 0.9):
                emp = np.mean((pairs[:, 0] <= x) & (pairs[:, 1] <= y))
                assert abs(emp - copula_cdf(tent, x, y)) < bound

    def test_support_band_when_binding(self):
        # first slope -1 and last slope +1 make the support band proper
        A = triangular(0.5, 0.5)
        left, right = support_geometry(A)
        pairs = sample(A, 2000, seed=15)
        for u, v in pairs:
            lo = support_curve(left, u)
            hi = support_curve(right, u)
            assert lo - 1e-6 <= v <= hi + 1e-6

    def test_bad_size(self, tent):
        with pytest.raises(DomainError):
            sample(tent, 0, seed=1)


class TestEmpiricalTau:
    def test_comonotone_exact_one(self):
        pairs = np.column_stack([np.arange(10.0), np.arange(10.0) * 2.0])
        assert empirical_tau(pairs) == 1.0

    def test_countermonotone_minus_one(self):
        pairs = np.column_stack([np.arange(10.0), -np.arange(10.0)])
        assert empirical_tau(pairs) == -1.0

    def test_matches_scipy(self):
        from scipy.stats import kendalltau

        rng = np.random.default_rng(16)
        pairs = rng.uniform(size=(500, 2))
        assert empirical_tau(pairs) == pytest.approx(
            kendalltau(pairs[:, 0], pairs[:, 1]).statistic, abs=1e-12
        )

    def test_independent_near_zero(self, product):
        pairs = sample(product, N, seed=17)
        assert abs(empirical_tau(pairs)) < 3.0 * tau_sigma(N)

    def test_tent_converges(self, tent):
        pairs = sample(tent, N, seed=18)
        assert abs(empirical_tau(pairs) - 1 / 3) < 4.0 * tau_sigma(N)

    def test_insufficient(self):
        with pytest.raises(InsufficientData):
            empirical_tau([(0.5, 0.5)])


class TestEmpiricalRho:
    def test_comonotone_exact_one(self):
        pairs = np.column_stack([np.arange(10.0), np.arange(10.0) ** 3])
        assert empirical_rho(pairs) == pytest.approx(1.0, abs=1e-12)

    def test_matches_scipy(self):
        from scipy.stats import spearmanr

        rng = np.random.default_rng(19)
        pairs = rng.uniform(size=(500, 2))
        assert empirical_rho(pairs) == pytest.approx(
            spearmanr(pairs[:, 0], pairs[:, 1]).statistic, abs=1e-12
        )

    def test_independent_near_zero(self, product):
        pairs = sample(product, N, seed=20)
        assert abs(empirical_rho(pairs)) < 3.0 / math.sqrt(N)

    def test_tent_converges(self, tent):
        pairs = sample(tent, N, seed=21)
        assert abs(empirical_rho(pairs) - 3 / 7) < 4.0 / math.sqrt(N)

    def test_insufficient(self):
        with pytest.raises(InsufficientData):
            empirical_rho([(0.5, 0.5)])


class TestCrossValidation:
    def test_random_function_measures(self):
        A = random_pickands(4, seed=2026)
        pairs = sample(A, N, seed=22)
        assert abs(empirical_tau(pairs) - tau(A)) < 4.0 * tau_sigma(N)
        assert abs(empirical_rho(pairs) - rho(A)) < 4.0 / math.sqrt(N)
