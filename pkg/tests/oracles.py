"""Independent oracles used by the tests.

These deliberately avoid the library's evaluation paths: the gauge oracle is a
ray cast (binary search on the scale with a cross-product point-in-polygon
test, no half-plane normal form), distance oracles are brute-force pair loops,
and orientation checks use exact rational cross products.
"""

from fractions import Fraction

import numpy as np


def point_in_polygon(vertices, p) -> bool:
    """p inside the convex CCW polygon (boundary counts), by edge orientation."""
    m = len(vertices)
    for i in range(m):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % m]
        if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) < 0:
            return False
    return True


def raycast_gauge(vertices, x, iters: int = 80) -> float:
    """Gauge via scaling x until it meets the boundary (scalar version)."""
    px, py = float(x[0]), float(x[1])
    if px == 0 and py == 0:
        return 0.0
    hi = 1.0
    for _ in range(200):
        if point_in_polygon(vertices, (px / hi, py / hi)):
            break
        hi *= 2.0
    lo = 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid > 0 and point_in_polygon(vertices, (px / mid, py / mid)):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def raycast_gauge_many(vertices, X, iters: int = 80) -> np.ndarray:
    """Vectorized ray-cast gauge for an (n, 2) array of nonzero points."""
    verts = np.asarray(vertices, dtype=float)
    edges = np.roll(verts, -1, axis=0) - verts

    def inside(P):
        rel = P[:, None, :] - verts[None, :, :]
        cr = edges[None, :, 0] * rel[:, :, 1] - edges[None, :, 1] * rel[:, :, 0]
        return np.all(cr >= 0.0, axis=1)

    X = np.asarray(X, dtype=float)
    n = len(X)
    hi = np.ones(n)
    for _ in range(200):
        out = ~inside(X / hi[:, None])
        if not out.any():
            break
        hi[out] *= 2.0
    lo = np.zeros(n)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        ok = inside(X / mid[:, None])
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    return 0.5 * (lo + hi)


def brute_pairwise_values(gauge_fn, points):
    """Sorted list of all pairwise values (including the diagonal zeros)."""
    vals = []
    pts = list(points)
    for i, p in enumerate(pts):
        for q in pts[i:]:
            vals.append(gauge_fn((q[0] - p[0], q[1] - p[1])))
    return sorted(vals)


def brute_min_pairwise_euclid(points) -> float:
    pts = np.asarray(points, dtype=float)
    best = np.inf
    for i in range(len(pts) - 1):
        d = np.hypot(pts[i + 1 :, 0] - pts[i, 0], pts[i + 1 :, 1] - pts[i, 1])
        best = min(best, float(np.min(d)))
    return best


def exact_turn(o, a, b) -> int:
    """Sign of the cross product in exact rational arithmetic."""
    ox, oy = Fraction(o[0]), Fraction(o[1])
    cr = (Fraction(a[0]) - ox) * (Fraction(b[1]) - oy) - (Fraction(a[1]) - oy) * (
        Fraction(b[0]) - ox
    )
    return (cr > 0) - (cr < 0)
