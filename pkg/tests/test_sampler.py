"""Exact path sampling and Monte Carlo estimators against the exact layer."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import stats

from spinpaths import (CorrelationQuery, DegenerateEnsemble, InterfaceXXZ,
                       PinnedRep1, Point, SamplerState, crossing_probability,
                       enumerate_paths, estimate_crossing, partition_dp,
                       sample_path, sample_paths, sample_step_matrix)

ORIGIN = Point(0, 0)
HALF = Fraction(1, 2)


def make_state(end=Point(1, 1), scheme=None, seed=11, q0=HALF):
    return SamplerState(scheme or InterfaceXXZ(), ORIGIN, end, q0, seed)


class TestSamplePath:
    def test_two_path_square(self):
        state = make_state(seed=101)
        counts = {"HV": 0, "VH": 0}
        n = 40000
        for _ in range(n):
            counts[sample_path(state).steps] += 1
        # exact P(HV) = 4/5; binomial 4 sigma band
        sigma = math.sqrt(0.8 * 0.2 / n)
        assert abs(counts["HV"] / n - 0.8) <= 4 * sigma

    def test_deterministic_rectangle(self):
        state = make_state(end=Point(0, 4))
        assert sample_path(state).steps == "VVVV"

    def test_seed_determinism(self):
        a = make_state(end=Point(3, 3), seed=99)
        b = make_state(end=Point(3, 3), seed=99)
        assert [sample_path(a).steps for _ in range(50)] == \
            [sample_path(b).steps for _ in range(50)]

    def test_degenerate_ensemble(self):
        with pytest.raises(DegenerateEnsemble):
            make_state(end=Point(-1, 2))

    def test_batch_matches_stream_determinism(self):
        a = make_state(end=Point(2, 2), seed=5)
        b = make_state(end=Point(2, 2), seed=5)
        assert [p.steps for p in sample_paths(a, 20)] == \
            [p.steps for p in sample_paths(b, 20)]

    def test_substreams_are_disjoint(self):
        base = make_state(end=Point(3, 3), seed=7)
        other = base.substream(0)
        seq_base = [sample_path(base).steps for _ in range(30)]
        seq_other = [sample_path(other).steps for _ in range(30)]
        assert seq_base != seq_other


class TestWholePathDistribution:
    def test_chi_square_small_rectangles(self):
        # every rectangle with at most 20 paths: per-path 4 sigma plus chi-square
        for end in (Point(2, 2), Point(3, 2)):
            paths = enumerate_paths(ORIGIN, end)
            assert len(paths) <= 20
            z = partition_dp(InterfaceXXZ(), ORIGIN, end).evaluate(HALF)
            probs = {p.steps: float(InterfaceXXZ().path_weight(p).evaluate(HALF) / z)
                     for p in paths}
            state = make_state(end=end, seed=1)
            n = 100000
            words = ["".join("H" if h else "V" for h in row)
                     for row in sample_step_matrix(state, n)]
            counts = {}
            for w in words:
                counts[w] = counts.get(w, 0) + 1
            observed, expected = [], []
            for steps, prob in probs.items():
                c = counts.get(steps, 0)
                sigma = math.sqrt(n * prob * (1 - prob))
                assert abs(c - n * prob) <= 4 * sigma, (end, steps)
                observed.append(c)
                expected.append(n * prob)
            assert sum(counts.values()) == n
            _, pvalue = stats.chisquare(observed, expected)
            assert pvalue > 1e-3


class TestEstimateCrossing:
    def test_through_start(self):
        est, stderr = estimate_crossing(make_state(end=Point(2, 2)), ORIGIN, 100)
        assert est == 1.0 and stderr == 0.0

    def test_outside_rectangle(self):
        est, stderr = estimate_crossing(make_state(end=Point(2, 2)), Point(5, 5), 100)
        assert est == 0.0 and stderr == 0.0

    def test_matches_exact_crossing(self):
        end = Point(2, 3)
        scheme = PinnedRep1(K=2, L=2)
        state = SamplerState(scheme, ORIGIN, end, HALF, seed=31415)
        for idx, point in enumerate(Point(i, j) for i in range(3) for j in range(4)):
            exact = float(crossing_probability(
                CorrelationQuery(scheme, ORIGIN, end, (point,)), HALF))
            est, stderr = estimate_crossing(state.substream(idx), point, 100000)
            if stderr == 0.0:
                assert est == exact
            else:
                assert abs(est - exact) <= 3 * stderr, (point, est, exact)

    def test_requires_samples(self):
        with pytest.raises(ValueError):
            estimate_crossing(make_state(), Point(1, 0), 0)


def test_step_probabilities_are_exact_before_float():
    # construction asserts the exact rational step probabilities sum to 1;
    # reaching here means every interior point passed that check
    state = make_state(end=Point(3, 2), scheme=PinnedRep1(K=3, L=2))
    assert state.prob_h.shape == (4, 3)
    assert 0.0 <= state.prob_h.min() and state.prob_h.max() <= 1.0
