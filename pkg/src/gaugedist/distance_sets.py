"""Gauge distance sets and the annulus/cone counting apparatus.

The distance set of A under a body K collects every pairwise gauge distance,
including the zero from coincident pairs.  Floating mode merges values into
clusters of spread <= tol (distinctness at double precision needs a tolerance);
exact mode works for polygon bodies (rational gauge) and for the disc (exact
squared values), so lattice counts are tolerance-free.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .convex_body import (
    ConvexBody,
    Disc,
    SymmetricPolygon,
    _ensure_valid,
    gauge_exact,
    gauge_many,
    max_chebyshev_radius,
)
from .point_sets import PointSet

__all__ = [
    "Annulus",
    "Cone",
    "DistanceSet",
    "MoserRow",
    "annulus_cone_points",
    "distance_lists_from_two_points",
    "distance_set",
    "grid_distance_set",
    "min_gap",
    "moser_count_check",
    "write_results_csv",
]

Number = Union[float, Fraction]


@dataclass(frozen=True)
class DistanceSet:
    """Sorted distinct distance values with pair multiplicities.

    values are strictly increasing with consecutive gaps > tol; the zero
    distance is always present (pairs x == y count), with multiplicity n.
    """

    values: tuple
    multiplicities: tuple[int, ...]
    tol: float

    def __len__(self) -> int:
        return len(self.values)


def _cluster(sorted_vals: Sequence[float], tol: float) -> tuple[list, list[int]]:
    reps: list = []
    counts: list[int] = []
    start = None
    run = 0
    for v in sorted_vals:
        if start is None or v - start > tol:
            if start is not None:
                reps.append(start)
                counts.append(run)
            start = v
            run = 1
        else:
            run += 1
    if start is not None:
        reps.append(start)
        counts.append(run)
    return reps, counts


def _as_points(source) -> np.ndarray:
    if isinstance(source, PointSet):
        return source.points
    pts = np.asarray(source, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must have shape (n, 2)")
    return pts


def distance_set(
    body: ConvexBody,
    points,
    tol: Optional[float] = None,
    exact: bool = False,
) -> DistanceSet:
    """All pairwise gauge distances of the point collection, clustered.

    Floating mode defaults tol to 1e-9 times the largest distance.  Exact mode
    (tol = 0) supports polygon bodies for any rational points and the disc via
    exact squared distances; the p-ball has no exact evaluator.
    """
    _ensure_valid(body)
    pts = _as_points(points)
    n = len(pts)
    if n == 0:
        raise ValueError("distance set of an empty point collection")
    if exact:
        return _distance_set_exact(body, pts)
    chunks = [np.zeros(1)]
    for i in range(n - 1):
        diffs = pts[i + 1 :] - pts[i]
        chunks.append(gauge_many(body, diffs))
    vals = np.sort(np.concatenate(chunks))
    if tol is None:
        tol = 1e-9 * float(vals[-1])
    reps, counts = _cluster(vals.tolist(), tol)
    counts[0] += n - 1  # the n coincident pairs all land in the zero cluster
    return DistanceSet(tuple(reps), tuple(counts), float(tol))


def _distance_set_exact(body: ConvexBody, pts: np.ndarray) -> DistanceSet:
    n = len(pts)
    acc: dict = {}
    if isinstance(body, SymmetricPolygon):
        fr = [(Fraction(x), Fraction(y)) for x, y in pts]
        for i in range(n):
            for j in range(i + 1, n):
                d = gauge_exact(body, (fr[j][0] - fr[i][0], fr[j][1] - fr[i][1]))
                acc[d] = acc.get(d, 0) + 1
        zero = Fraction(0)
    elif isinstance(body, Disc):
        fr = [(Fraction(x), Fraction(y)) for x, y in pts]
        r2 = Fraction(body.radius) ** 2
        for i in range(n):
            for j in range(i + 1, n):
                q = ((fr[j][0] - fr[i][0]) ** 2 + (fr[j][1] - fr[i][1]) ** 2) / r2
                acc[q] = acc.get(q, 0) + 1
        acc = {_fraction_sqrt(q): c for q, c in acc.items()}
        zero = 0.0
    else:
        raise ValueError("exact distance sets need a polygon or disc body")
    acc[zero] = acc.get(zero, 0) + n
    items = sorted(acc.items())
    return DistanceSet(
        tuple(v for v, _ in items), tuple(c for _, c in items), 0.0
    )


def _fraction_sqrt(q: Fraction) -> float:
    return math.sqrt(q.numerator) / math.sqrt(q.denominator)


def grid_distance_set(
    body: ConvexBody,
    n_cols: int,
    n_rows: int,
    spacing: float = 1.0,
    tol: Optional[float] = None,
    exact: bool = True,
) -> DistanceSet:
    """Distance set of a full n_cols x n_rows rectangular grid.

    Uses the difference multiset: the grid has only O(n_cols * n_rows)
    distinct difference vectors, each with a closed-form pair count, so this
    avoids the quadratic pair loop entirely.  Semantics match
    :func:`distance_set` on the same grid.
    """
    _ensure_valid(body)
    if n_cols < 1 or n_rows < 1:
        raise ValueError("grid must have at least one point per side")
    total = n_cols * n_rows
    # representatives of +-(dx, dy): dx > 0 with any dy, or dx == 0 with dy > 0
    reps = [(0, dy) for dy in range(1, n_rows)]
    reps.extend(
        (dx, dy) for dx in range(1, n_cols) for dy in range(-(n_rows - 1), n_rows)
    )
    mult = [(n_cols - abs(dx)) * (n_rows - abs(dy)) for dx, dy in reps]

    if exact:
        s = Fraction(spacing)
        acc: dict = {}
        if isinstance(body, SymmetricPolygon):
            for (dx, dy), c in zip(reps, mult):
                v = gauge_exact(body, (dx, dy)) * s
                acc[v] = acc.get(v, 0) + c
            zero = Fraction(0)
        elif isinstance(body, Disc):
            r2 = Fraction(body.radius) ** 2
            for (dx, dy), c in zip(reps, mult):
                q = (dx * dx + dy * dy) * s * s / r2
                acc[q] = acc.get(q, 0) + c
            acc = {_fraction_sqrt(q): c for q, c in acc.items()}
            zero = 0.0
        else:
            raise ValueError("exact distance sets need a polygon or disc body")
        acc[zero] = acc.get(zero, 0) + total
        items = sorted(acc.items())
        return DistanceSet(
            tuple(v for v, _ in items), tuple(c for _, c in items), 0.0
        )

    diffs = np.array(reps, dtype=float).reshape(-1, 2) * spacing
    vals = np.concatenate([[0.0], gauge_many(body, diffs)]) if len(diffs) else np.zeros(1)
    counts = np.concatenate([[total], mult]).astype(int) if len(diffs) else np.array([total])
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    counts = counts[order]
    if tol is None:
        tol = 1e-9 * float(vals[-1])
    reps_out: list[float] = []
    counts_out: list[int] = []
    start = None
    acc_count = 0
    for v, c in zip(vals.tolist(), counts.tolist()):
        if start is None or v - start > tol:
            if start is not None:
                reps_out.append(start)
                counts_out.append(acc_count)
            start, acc_count = v, c
        else:
            acc_count += c
    reps_out.append(start)
    counts_out.append(acc_count)
    return DistanceSet(tuple(reps_out), tuple(counts_out), float(tol))


def min_gap(ds: DistanceSet):
    """Smallest difference between consecutive distinct values; None if < 2 values."""
    if len(ds.values) < 2:
        return None
    return min(b - a for a, b in zip(ds.values, ds.values[1:]))


@dataclass(frozen=True)
class Annulus:
    """Gauge annulus: points with gauge distance from center in (width*N, width*(N+1))."""

    N: int
    width: float = 10.0
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("annulus index must be >= 0")
        if not (self.width > 0):
            raise ValueError("annulus width must be positive")

    @property
    def inner(self) -> float:
        return self.width * self.N

    @property
    def outer(self) -> float:
        return self.width * (self.N + 1)


@dataclass(frozen=True)
class Cone:
    """Open cone with apex at the origin: polar angle strictly between theta1 and theta2."""

    theta1: float
    theta2: float

    def __post_init__(self):
        span = self.theta2 - self.theta1
        if not (0 < span <= 2 * math.pi):
            raise ValueError("cone must satisfy 0 < theta2 - theta1 <= 2*pi")

    def contains(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        ang = np.arctan2(pts[:, 1], pts[:, 0])
        d = np.mod(ang - self.theta1, 2 * math.pi)
        return (d > 0) & (d < self.theta2 - self.theta1)


def annulus_cone_points(
    ps: PointSet,
    body: ConvexBody,
    N: int,
    cone: Cone,
    width: float = 10.0,
) -> PointSet:
    """Points of S strictly inside the gauge annulus (width*N, width*(N+1)) and the open cone."""
    _ensure_valid(body)
    ann = Annulus(N, width)
    if len(ps) == 0:
        return ps
    g = gauge_many(body, ps.points)
    mask = (g > ann.inner) & (g < ann.outer) & cone.contains(ps.points)
    return PointSet(ps.points[mask], ps.R)


def distance_lists_from_two_points(
    P,
    Q,
    subset: PointSet,
    body: ConvexBody,
    tol: Optional[float] = None,
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Distinct (tol-clustered) gauge distances from P and from Q to every subset point."""
    _ensure_valid(body)
    out = []
    for base in (P, Q):
        if len(subset) == 0:
            out.append(())
            continue
        vals = np.sort(gauge_many(body, subset.points - np.asarray(base, dtype=float)))
        t = 1e-9 * float(vals[-1]) if tol is None else tol
        reps, _ = _cluster(vals.tolist(), t)
        out.append(tuple(reps))
    return out[0], out[1]


@dataclass(frozen=True)
class MoserRow:
    N: int
    count: int
    bound: float
    met: bool
    truncated: bool


def moser_count_check(
    ps: PointSet,
    body: ConvexBody,
    cone: Cone,
    inner_cone: Cone,
    N_range: Sequence[int],
    width: float = 10.0,
) -> list[MoserRow]:
    """Per-annulus counts in the inner cone against the N*(angle span) bound.

    Rows whose annulus is not fully contained in the window are flagged
    truncated and should be excluded from pass/fail judgments.  The caller is
    responsible for S actually being well-distributed.
    """
    if not (
        cone.theta1 < inner_cone.theta1
        and inner_cone.theta2 < cone.theta2
    ):
        raise ValueError("inner cone must be strictly inside the outer cone")
    span = inner_cone.theta2 - inner_cone.theta1
    reach = max_chebyshev_radius(body)
    rows = []
    for N in N_range:
        subset = annulus_cone_points(ps, body, N, inner_cone, width)
        count = len(subset)
        bound = N * span
        truncated = width * (N + 1) * reach > ps.R + 1e-9
        rows.append(MoserRow(int(N), count, bound, count >= bound, truncated))
    return rows


def write_results_csv(rows: Sequence[tuple], path) -> None:
    """Write "R,n_points,n_distances,min_gap" rows; min_gap empty when undefined."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["R", "n_points", "n_distances", "min_gap"])
        for R, n_points, n_distances, gap in rows:
            writer.writerow(
                [
                    repr(float(R)),
                    int(n_points),
                    int(n_distances),
                    "" if gap is None else repr(float(gap)),
                ]
            )
