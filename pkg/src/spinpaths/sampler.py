"""Exact sampling from the path measure w(p)/Z and Monte Carlo estimators.

Step probabilities come from the backward partition table, so a sampled
path is distributed exactly per the measure (up to the one double
conversion at the uniform-draw comparison, bounded by 2^-52 per step and
negligible against Monte Carlo error).  The generator is counter-based
(Philox), so derived streams are provably disjoint.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .correlations import DegenerateEnsemble
from .lattice import H_STEP, LatticePath, Point, V_STEP, horizontal_bond, vertical_bond
from .partition import PartitionTable, backward_table
from .weights import WeightScheme


class SamplerState:
    """Sampling context for one rectangle ensemble.

    Holds the exact backward table, the per-point horizontal-step
    probabilities (formed as exact rationals, converted to double once),
    and the Philox stream.
    """

    def __init__(self, scheme: WeightScheme, start: Point, end: Point, q0, seed: int):
        q0 = Fraction(q0)
        if not end.dominates(start):
            raise DegenerateEnsemble(f"empty ensemble {start} -> {end}")
        self.scheme = scheme
        self.start = start
        self.end = end
        self.q0 = q0
        self.seed = seed
        self.backward: PartitionTable = backward_table(scheme, start, end)
        if self.backward[start].evaluate(q0) == 0:
            raise DegenerateEnsemble(f"Z{start}->{end} = 0 at q = {q0}")

        di = end.i - start.i
        dj = end.j - start.j
        prob_h = np.zeros((di + 1, dj + 1), dtype=np.float64)
        for a in range(di + 1):
            for b in range(dj + 1):
                q_pt = Point(start.i + a, start.j + b)
                if q_pt == end:
                    continue
                z_here = self.backward[q_pt].evaluate(q0)
                if z_here == 0:
                    continue  # unreachable at this q; probability never consulted
                p_h = Fraction(0)
                p_v = Fraction(0)
                if a < di:
                    w = scheme.bond_weight(horizontal_bond(q_pt)).evaluate(q0)
                    p_h = w * self.backward[q_pt.translate(1, 0)].evaluate(q0) / z_here
                if b < dj:
                    w = scheme.bond_weight(vertical_bond(q_pt)).evaluate(q0)
                    p_v = w * self.backward[q_pt.translate(0, 1)].evaluate(q0) / z_here
                if p_h + p_v != 1:
                    raise AssertionError(f"step probabilities at {q_pt} sum to {p_h + p_v}")
                prob_h[a, b] = float(p_h)
        self.prob_h = prob_h
        self.rng = np.random.Generator(np.random.Philox(key=seed))

    def substream(self, index: int) -> "SamplerState":
        """A sampler over the same ensemble with a disjoint random stream.

        Stream index k jumps the Philox counter k+1 times (2^128 draws per
        jump), so workers never overlap each other or the base stream.
        """
        clone = object.__new__(SamplerState)
        clone.scheme = self.scheme
        clone.start = self.start
        clone.end = self.end
        clone.q0 = self.q0
        clone.seed = self.seed
        clone.backward = self.backward
        clone.prob_h = self.prob_h
        clone.rng = np.random.Generator(np.random.Philox(key=self.seed).jumped(index + 1))
        return clone


def sample_path(state: SamplerState) -> LatticePath:
    """Draw one path exactly from w(p)/Z, advancing the state's stream."""
    a, b = 0, 0
    di = state.end.i - state.start.i
    dj = state.end.j - state.start.j
    word = []
    for _ in range(di + dj):
        if a == di:
            step = V_STEP
        elif b == dj:
            step = H_STEP
        else:
            step = H_STEP if state.rng.random() < state.prob_h[a, b] else V_STEP
        if step == H_STEP:
            a += 1
        else:
            b += 1
        word.append(step)
    return LatticePath(state.start, "".join(word))


def sample_step_matrix(state: SamplerState, samples: int) -> np.ndarray:
    """Vectorized batch draw: samples x total_steps boolean matrix, True = H.

    Row r is the step word of the r-th path; all rows use the state's
    stream in one deterministic order.
    """
    di = state.end.i - state.start.i
    dj = state.end.j - state.start.j
    total = di + dj
    ai = np.zeros(samples, dtype=np.int64)
    bj = np.zeros(samples, dtype=np.int64)
    out = np.zeros((samples, total), dtype=bool)
    for t in range(total):
        p = state.prob_h[ai, bj]
        take_h = state.rng.random(samples) < p
        # exhausted coordinates force the other step
        take_h[ai == di] = False
        take_h[bj == dj] = True
        out[:, t] = take_h
        ai = ai + take_h
        bj = bj + (~take_h)
    return out


def sample_paths(state: SamplerState, samples: int) -> list[LatticePath]:
    matrix = sample_step_matrix(state, samples)
    return [LatticePath(state.start, "".join(H_STEP if h else V_STEP for h in row))
            for row in matrix]


def estimate_crossing(state: SamplerState, point: Point, samples: int) -> tuple[float, float]:
    """Empirical crossing frequency through `point` with binomial stderr."""
    if samples < 1:
        raise ValueError("need at least one sample")
    radius = (point.i - state.start.i) + (point.j - state.start.j)
    total = (state.end.i - state.start.i) + (state.end.j - state.start.j)
    if radius < 0 or radius > total:
        hits = 0
    else:
        matrix = sample_step_matrix(state, samples)
        h_at_radius = matrix[:, :radius].sum(axis=1)
        hits = int(np.count_nonzero(h_at_radius == point.i - state.start.i))
    est = hits / samples
    stderr = math.sqrt(est * (1.0 - est) / samples)
    return est, stderr
