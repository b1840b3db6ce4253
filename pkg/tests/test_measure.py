"""Measure parameters, entrywise law, sampling, and the lambda_1 CDF."""

import math
from fractions import Fraction

import numpy as np
import pytest

from tschur.measure import (
    MeasureParams,
    empirical_cdf,
    entry_pmf,
    ks_distance,
    lambda1_cdf_exact,
    lambda1_cdf_exact_oracle,
    lambda1_cdf_mc,
    log_z_norm,
    partition_prob,
    sample_lambda1,
    sample_matrix,
    z_norm,
)
from tschur.partitions import Partition, partitions_in_box

F = Fraction


def test_params_validation():
    with pytest.raises(ValueError):
        MeasureParams(0, 1, F(1, 2), 0)
    with pytest.raises(ValueError):
        MeasureParams(1, 1, F(3, 2), 0)
    with pytest.raises(ValueError):
        MeasureParams(1, 1, F(1, 2), F(1, 2))
    p = MeasureParams(2, 4, F(1, 2), F(-1))
    assert p.tau == 0.5 and p.rho == F(1, 4) and p.exact


def test_z_norm_value():
    p = MeasureParams(2, 2, F(1, 2), F(-1))
    assert z_norm(p) == F(625, 81)
    assert math.isclose(log_z_norm(p), math.log(625 / 81), rel_tol=1e-14)


def test_entry_pmf_values():
    # rho = 1/4, t = -1: p0 = 3/5, p(±1) split 3/20 each
    d = entry_pmf(F(1, 4), F(-1))
    assert d.p0 == F(3, 5)
    assert d.p_unmarked(1) == F(3, 20)
    assert d.p_marked(1) == F(3, 20)
    # masses sum to one
    total = d.p0 + sum(d.p_unmarked(k) + d.p_marked(k) for k in range(1, 200))
    assert abs(float(total) - 1.0) < 1e-50


def test_cumulative_table_normalized_monotone():
    cum = entry_pmf(0.25, -0.5).cumulative_table()
    assert cum[-1] == 1.0
    assert np.all(np.diff(cum) > 0)


def test_partition_prob_known_value():
    # empty partition at t=0: P(emptyset) = (1 - alpha^2)^{mn}
    p = MeasureParams(2, 2, F(1, 2), F(0))
    assert partition_prob(Partition([]), p) == F(3, 4) ** 4
    assert partition_prob(Partition([]), p) == F(81, 256)


def test_partition_probs_sum_to_one_within_box():
    p = MeasureParams(2, 2, F(1, 2), F(-1))
    total = sum(partition_prob(lam, p) for lam in partitions_in_box(30, 2))
    # the infinite tail is positive, so the partial sum brackets 1 from below
    assert 0 < total < 1
    assert 1 - total < 1e-10


def test_sample_matrix_fixture():
    p = MeasureParams(2, 2, F(1, 2), F(-1))
    assert sample_matrix(p, 42).to_text() == "1' 0\n1 1"


def test_sampling_no_marks_at_t0():
    p = MeasureParams(3, 3, F(1, 2), F(0))
    for seed in range(5):
        assert sample_matrix(p, seed).mark() == 0


def test_sample_lambda1_deterministic_and_order_free():
    p = MeasureParams(3, 3, F(2, 5), F(-1))
    a = sample_lambda1(p, 50, seed=9)
    b = sample_lambda1(p, 50, seed=9)
    assert np.array_equal(a, b)
    # child streams: the first k samples agree with a shorter run
    c = sample_lambda1(p, 10, seed=9)
    assert np.array_equal(a[:10], c)


def test_entry_frequencies_match_pmf():
    # 3-sigma agreement of empirical entry frequencies with the exact law
    p = MeasureParams(1, 1, F(1, 2), F(-1))
    d = entry_pmf(p.rho, p.t)
    n = 4000
    vals = [sample_matrix(p, seed).entries[0][0] for seed in range(n)]
    f0 = sum(1 for e in vals if e is None) / n
    fm = sum(1 for e in vals if e is not None and e.value == 1 and e.marked) / n
    for freq, prob in ((f0, d.p0), (fm, d.p_marked(1))):
        se = math.sqrt(float(prob) * (1 - float(prob)) / n)
        assert abs(freq - float(prob)) < 3 * se + 1e-12


def test_cdf_exact_matches_box_oracle():
    for (m, n) in ((2, 2), (3, 2), (3, 3)):
        p = MeasureParams(m, n, F(1, 2), F(-1))
        for h in range(5):
            assert lambda1_cdf_exact(p, h, mode="exact") == lambda1_cdf_exact_oracle(p, h)


def test_cdf_float_matches_exact():
    p = MeasureParams(3, 2, F(2, 5), F(-1, 2))
    for h in range(8):
        ex = float(lambda1_cdf_exact(p, h, mode="exact"))
        fl = lambda1_cdf_exact(p, h, mode="float")
        assert abs(ex - fl) < 1e-12


def test_cdf_monotone_and_limits():
    p = MeasureParams(4, 4, F(2, 5), F(-1))
    vals = [lambda1_cdf_exact(p, h, mode="float") for h in range(25)]
    assert all(vals[i] <= vals[i + 1] + 1e-12 for i in range(len(vals) - 1))
    assert vals[0] > 0  # P(lambda_1 = 0) = P(empty) > 0
    assert vals[-1] > 1 - 1e-10


def test_cdf_rejects_negative_h():
    with pytest.raises(ValueError):
        lambda1_cdf_exact(MeasureParams(2, 2, F(1, 2), 0), -1)


def test_mc_cdf_consistent():
    p = MeasureParams(3, 3, F(2, 5), F(-1))
    est, se = lambda1_cdf_mc(p, 4, samples=3000, seed=5)
    exact = float(lambda1_cdf_exact(p, 4, mode="exact"))
    assert abs(est - exact) < 4 * se + 1e-12


def test_empirical_cdf_and_ks():
    vals = np.array([0, 1, 1, 2])
    grid = np.arange(4)
    np.testing.assert_allclose(empirical_cdf(vals, grid), [0.25, 0.75, 1.0, 1.0])
    p = MeasureParams(3, 3, F(2, 5), F(-1))
    draws = sample_lambda1(p, 3000, seed=3)
    assert ks_distance(draws, p) < 0.05
