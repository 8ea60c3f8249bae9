"""Annulus and cone counting on the lattice.

Slice the plane into gauge annuli of width 10 and intersect them with an open
cone.  For a well-distributed set the N-th annulus meets any fixed cone in at
least N * (angle span) points once N is large; on the lattice the counts beat
that bound by a wide margin.  Meanwhile the distances from two fixed base
points to all the points of one annulus take only boundedly many distinct
values when the gauge is polygonal: they fall in an interval of width
independent of N.
"""

import math

from gaugedist import (
    Cone,
    GeneratorSpec,
    annulus_cone_points,
    distance_lists_from_two_points,
    generate,
    run_moser,
    square,
)

cone = Cone(0.0, math.pi / 2)
inner = Cone(math.pi / 8, 3 * math.pi / 8)

rows = run_moser(square(), cone, inner, range(1, 11))
print(f"{'N':>3} {'count':>7} {'bound':>8}")
for r in rows:
    print(f"{r.N:>3} {r.count:>7} {r.bound:>8.3f}  {'ok' if r.met else 'FAIL'}")

# One annulus up close: max-norm between 0 and 10, first open quadrant.
ps = generate(GeneratorSpec(kind="lattice", R=12.0))
first = annulus_cone_points(ps, square(), 0, cone)
print(f"\nannulus 0 in the open first quadrant: {len(first)} points (the 9x9 block)")

# Distance lists from P = (1,0) and Q = (-1,0) to annulus N=1: the values sit
# in [10*N - 1, 10*(N+1) + 1], so at most a constant number of integers.
ps = generate(GeneratorSpec(kind="lattice", R=25.0))
gauges = abs(ps.points).max(axis=1)
annulus1 = ps.points[(gauges > 10) & (gauges < 20)]
from gaugedist import PointSet

d, dprime = distance_lists_from_two_points(
    (1.0, 0.0), (-1.0, 0.0), PointSet(annulus1, ps.R), square()
)
print(f"distances from P: {len(d)} distinct values {d[0]:.0f}..{d[-1]:.0f}")
print(f"distances from Q: {len(dprime)} distinct values {dprime[0]:.0f}..{dprime[-1]:.0f}")
