"""Crossing probabilities and derived observables.

Monotone paths cross each lattice sphere exactly once, so conditioning on
waypoints factorizes the partition function into independent segments.
Probabilities are exact rationals throughout; no tolerances are involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import Point, horizontal_bond
from .partition import (ORIGIN, PinnedInstance, backward_table, forward_table,
                        partition_dp, rep2_start)
from .qpoly import LaurentPoly, ONE, ZERO
from .weights import PinnedRep2, WeightScheme


class DegenerateEnsemble(ValueError):
    """The normalizing partition function vanishes at the chosen q."""


@dataclass(frozen=True)
class CorrelationQuery:
    scheme: WeightScheme
    start: Point
    end: Point
    waypoints: tuple[Point, ...] = ()


def conditioned_partition(query: CorrelationQuery) -> LaurentPoly:
    """Weighted sum over paths through all waypoints, in order.

    Factorizes as the product of segment partition functions; any empty
    segment (consecutive points that do not dominate) makes it 0.
    """
    stops = [query.start, *query.waypoints, query.end]
    value = ONE
    for a, b in zip(stops, stops[1:]):
        value = value * partition_dp(query.scheme, a, b)
        if not value:
            return ZERO
    return value


def crossing_probability(query: CorrelationQuery, q0) -> Fraction:
    """Probability that a path drawn from the ensemble visits every waypoint."""
    q0 = Fraction(q0)
    z = partition_dp(query.scheme, query.start, query.end).evaluate(q0)
    if z == 0:
        raise DegenerateEnsemble(f"Z({query.start},{query.end}) = 0 at q = {q0}")
    return conditioned_partition(query).evaluate(q0) / z


def magnetization_profile(inst: PinnedInstance, q0) -> list[tuple[int, Fraction]]:
    """Per-site down-spin probability of the pinned ground state.

    Site x corresponds to the path step ending on the sphere i+j = x of the
    second representation, so P(down at x) is the probability that this
    step is horizontal.  The ensemble splits over the admissible start/end
    sphere pairs; within each part the bond-crossing weight factorizes
    through the origin.  All arithmetic is exact; the probabilities sum
    to N exactly.
    """
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise ValueError("q0 must lie in (0, 1)")
    scheme = PinnedRep2()

    totals = {x: Fraction(0) for x in range(-inst.L, inst.K + 1)}
    z = Fraction(0)
    for a in range(0, min(inst.N, inst.L + 1) + 1):
        n_fwd = inst.N - a
        if n_fwd > inst.K:
            continue
        start = rep2_start(inst, a)
        end = Point(n_fwd, inst.K - n_fwd)
        back_fwd = forward_table(scheme, start, ORIGIN)
        back_bwd = backward_table(scheme, start, ORIGIN)
        fore_fwd = forward_table(scheme, ORIGIN, end)
        fore_bwd = backward_table(scheme, ORIGIN, end)
        z_back = back_fwd[ORIGIN].evaluate(q0)
        z_fore = fore_fwd[end].evaluate(q0)
        z += z_back * z_fore

        def bond_sum(radius: int, fwd, bwd, lo: Point, hi: Point) -> Fraction:
            # weighted sum over horizontal steps ending on the given sphere
            acc = Fraction(0)
            for head in _sphere_points(radius, lo, hi):
                tail = head.translate(-1, 0)
                if tail.i < lo.i:
                    continue
                w = scheme.bond_weight(horizontal_bond(tail)).evaluate(q0)
                acc += fwd[tail].evaluate(q0) * w * bwd[head].evaluate(q0)
            return acc

        for x in range(-inst.L, 0 + 1):
            totals[x] += bond_sum(x, back_fwd, back_bwd, start, ORIGIN) * z_fore
        for x in range(1, inst.K + 1):
            totals[x] += z_back * bond_sum(x, fore_fwd, fore_bwd, ORIGIN, end)

    return [(x, totals[x] / z) for x in range(-inst.L, inst.K + 1)]


def _sphere_points(radius: int, lo: Point, hi: Point) -> list[Point]:
    """Points with i+j = radius inside the rectangle [lo, hi]."""
    pts = []
    for i in range(lo.i, hi.i + 1):
        j = radius - i
        if lo.j <= j <= hi.j:
            pts.append(Point(i, j))
    return pts
