"""Crossing probabilities via Markov factorization, and the per-site
down-spin profile of the pinned ground state.

Everything is an exact rational; the decimals are just for reading.
"""

from fractions import Fraction

from spinpaths import (CorrelationQuery, InterfaceXXZ, PinnedInstance, Point,
                       conditioned_partition, crossing_probability,
                       magnetization_profile, sphere)

scheme = InterfaceXXZ()
origin, end = Point(0, 0), Point(3, 3)
q0 = Fraction(1, 2)

print(f"crossing probabilities on {origin} -> {end} at q = {q0}:")
for radius in (2, 3):
    total = Fraction(0)
    row = []
    for pt in sphere(origin, radius):
        if pt.i <= end.i and pt.j <= end.j:
            p = crossing_probability(CorrelationQuery(scheme, origin, end, (pt,)), q0)
            total += p
            row.append(f"{pt}: {p}")
    print(f"  sphere {radius}: " + ", ".join(row))
    print(f"    total = {total} (law of total probability)")

query = CorrelationQuery(scheme, origin, end, (Point(1, 1), Point(2, 2)))
print("\ntwo-waypoint conditioned partition:", conditioned_partition(query))
print("its probability:", crossing_probability(query, q0))

inst = PinnedInstance(K=2, L=2, N=2)
print(f"\nground-state down-spin profile, sites [-{inst.L}, {inst.K}], "
      f"N = {inst.N}, q = {q0}:")
total = Fraction(0)
for site, prob in magnetization_profile(inst, q0):
    bar = "#" * round(40 * float(prob))
    print(f"  x = {site:+d}: {str(prob):>8s}  {bar}")
    total += prob
print("  sum over sites =", total, "(equals N exactly)")
