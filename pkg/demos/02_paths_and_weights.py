"""Monotone paths and the three bond-weight schemes.

Every path is a word over {H, V}; horizontal bonds carry monomial
weights that depend on where the bond ends, vertical bonds weigh 1.
"""

from spinpaths import (InterfaceXXZ, LatticePath, PinnedRep1, PinnedRep2,
                       Point, enumerate_paths, sphere)

start, end = Point(0, 0), Point(2, 1)
paths = enumerate_paths(start, end)
print(f"paths {start} -> {end}:")
for p in paths:
    print(" ", p.text(), "visits", [str(pt) for pt in p.points()])

print("\nweights per scheme:")
schemes = [InterfaceXXZ(), PinnedRep1(K=1, L=1), PinnedRep2()]
for scheme in schemes:
    for p in paths:
        print(f"  {scheme.name:9s} {p.text()}  ->  {scheme.path_weight(p)}")

print("\nlattice spheres around the origin:")
for radius in range(3):
    print(f"  radius {radius}:", [str(pt) for pt in sphere(Point(0, 0), radius)])
print("  backward radius 2:", [str(pt) for pt in sphere(Point(0, 0), 2, 'backward')])

p = LatticePath.parse("(0,0):HVH")
print("\nparsed", p.text(), "ends at", p.endpoint(),
      "and passes through (1,1):", p.passes_through(Point(1, 1)))
