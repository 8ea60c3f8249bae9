"""Structure of boundary intersections between a convex curve and its scaled translate.

For a convex polygon boundary G and a scaled translate a*G + u, the
intersection decomposes into isolated points plus maximal segments.  This
module computes that decomposition, counts the distinct supporting lines of
the segments (never more than two when u != 0), and checks the concurrence
law: for a != 1 every supporting line passes through u/(1-a), and for a == 1
every segment is parallel to u except when u carries one of two anti-parallel
edges onto the other (reported as an "opposite-edge coincidence").

Overlap-versus-crossing classification is discontinuous, so the default mode
converts coordinates to exact rationals (doubles convert losslessly) and
decides with integer arithmetic; a floating mode with an epsilon is available
for noisy data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .convex_body import (
    Disc,
    PBall,
    SymmetricPolygon,
    _ensure_valid,
    boundary_point,
    boundary_points,
    gauge,
    gauge_many,
    validate,
)
from .prng import Xorshift64Star, derive_seed, quantize

__all__ = [
    "ConcurrenceReport",
    "IntersectionResult",
    "Line",
    "RootScan",
    "Segment",
    "boundary_intersection",
    "concurrence_check",
    "convex_hull",
    "direction_line_classes",
    "random_symmetric_polygon",
    "strictly_convex_intersection_count",
    "transform_polygon",
]


@dataclass(frozen=True)
class Segment:
    """Closed segment with distinct endpoints (zero length is never allowed)."""

    a: tuple
    b: tuple

    def __post_init__(self):
        if tuple(self.a) == tuple(self.b):
            raise ValueError("segment endpoints must differ")
        object.__setattr__(self, "a", (self.a[0], self.a[1]))
        object.__setattr__(self, "b", (self.b[0], self.b[1]))

    def direction(self) -> tuple:
        return (self.b[0] - self.a[0], self.b[1] - self.a[1])


@dataclass(frozen=True)
class Line:
    """Implicit line a*x + b*y = c with a*a + b*b = 1 and a > 0 or (a == 0, b > 0)."""

    a: float
    b: float
    c: float

    @classmethod
    def from_points(cls, p, q) -> "Line":
        dx = float(q[0]) - float(p[0])
        dy = float(q[1]) - float(p[1])
        length = math.hypot(dx, dy)
        if length == 0:
            raise ValueError("line through coincident points")
        a, b = -dy / length, dx / length
        c = a * float(p[0]) + b * float(p[1])
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        return cls(a, b, c)

    def distance_to(self, p) -> float:
        return abs(self.a * float(p[0]) + self.b * float(p[1]) - self.c)


@dataclass(frozen=True)
class IntersectionResult:
    """Isolated points plus maximal segments; no point lies on a listed segment."""

    isolated_points: tuple
    maximal_segments: tuple


def transform_polygon(boundary, alpha: float, u) -> tuple:
    """Vertices of alpha * boundary + u (orientation preserved; alpha > 0)."""
    if not (alpha > 0):
        raise ValueError("scale factor must be positive")
    verts = boundary.vertices if isinstance(boundary, SymmetricPolygon) else boundary
    ux, uy = float(u[0]), float(u[1])
    return tuple((alpha * float(x) + ux, alpha * float(y) + uy) for x, y in verts)


def _boundary_vertices(boundary) -> tuple:
    if isinstance(boundary, SymmetricPolygon):
        verts = boundary.vertices
    else:
        verts = tuple((float(p[0]), float(p[1])) for p in boundary)
    m = len(verts)
    if m < 3:
        raise ValueError("a closed boundary needs at least 3 vertices")
    for i in range(m):
        if verts[i] == verts[(i + 1) % m]:
            raise ValueError(f"degenerate edge at vertex {i}")
    sign = 0
    for i in range(m):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % m]
        cx, cy = verts[(i + 2) % m]
        cr = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
        if cr == 0:
            raise ValueError("collinear consecutive edges; merge them first")
        s = 1 if cr > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            raise ValueError("boundary is not convex")
    return verts if sign > 0 else verts[::-1]


def boundary_intersection(
    boundary1,
    boundary2,
    mode: str = "exact",
    eps: Optional[float] = None,
) -> IntersectionResult:
    """Decompose the intersection of two convex closed polylines.

    All edge pairs are classified as crossings, touches, or collinear
    overlaps; overlaps are merged into maximal segments per supporting line,
    and any crossing or touching point lying on a maximal segment is absorbed
    by it.  Exact mode keeps rational coordinates end to end.
    """
    V1 = _boundary_vertices(boundary1)
    V2 = _boundary_vertices(boundary2)
    if mode == "exact":
        return _intersect_exact(V1, V2)
    if mode == "float":
        return _intersect_float(V1, V2, eps)
    raise ValueError(f"unknown mode {mode!r}")


def _scale_to_ints(V1, V2):
    F1 = [(Fraction(x), Fraction(y)) for x, y in V1]
    F2 = [(Fraction(x), Fraction(y)) for x, y in V2]
    den = 1
    for pts in (F1, F2):
        for x, y in pts:
            den = math.lcm(den, x.denominator, y.denominator)
    A = [(int(x * den), int(y * den)) for x, y in F1]
    B = [(int(x * den), int(y * den)) for x, y in F2]
    return A, B, den


def _int_line_key(point, direction):
    dx, dy = direction
    g = math.gcd(abs(dx), abs(dy))
    dx, dy = dx // g, dy // g
    nx, ny = -dy, dx
    c = nx * point[0] + ny * point[1]
    if nx < 0 or (nx == 0 and ny < 0):
        nx, ny, c = -nx, -ny, -c
    return (nx, ny, c)


def _key_param(key, p):
    # arclength-proportional parameter along the canonical direction (ny, -nx)
    nx, ny, _ = key
    return ny * p[0] - nx * p[1]


def _intersect_exact(V1, V2) -> IntersectionResult:
    A, B, den = _scale_to_ints(V1, V2)
    m1, m2 = len(A), len(B)
    point_pool: set = set()
    overlaps: dict = {}

    for i in range(m1):
        ax, ay = A[i]
        bx, by = A[(i + 1) % m1]
        rx, ry = bx - ax, by - ay
        for j in range(m2):
            cx, cy = B[j]
            dx, dy = B[(j + 1) % m2]
            sx, sy = dx - cx, dy - cy
            qx, qy = cx - ax, cy - ay
            rxs = rx * sy - ry * sx
            qxr = qx * ry - qy * rx
            if rxs == 0:
                if qxr != 0:
                    continue
                rr = rx * rx + ry * ry
                t0 = qx * rx + qy * ry
                t1 = t0 + sx * rx + sy * ry
                lo, hi = (t0, t1) if t0 <= t1 else (t1, t0)
                lo = max(lo, 0)
                hi = min(hi, rr)
                if lo > hi:
                    continue
                p_lo = (Fraction(ax * rr + lo * rx, rr), Fraction(ay * rr + lo * ry, rr))
                if lo == hi:
                    point_pool.add(p_lo)
                    continue
                p_hi = (Fraction(ax * rr + hi * rx, rr), Fraction(ay * rr + hi * ry, rr))
                key = _int_line_key((ax, ay), (rx, ry))
                overlaps.setdefault(key, []).append((p_lo, p_hi))
            else:
                qxs = qx * sy - qy * sx
                if rxs > 0:
                    if not (0 <= qxs <= rxs and 0 <= qxr <= rxs):
                        continue
                else:
                    if not (rxs <= qxs <= 0 and rxs <= qxr <= 0):
                        continue
                t = Fraction(qxs, rxs)
                point_pool.add((ax + t * rx, ay + t * ry))

    merged: list = []  # (key, lo, hi, p_lo, p_hi) in scaled coordinates
    for key, items in overlaps.items():
        spans = sorted(
            (( _key_param(key, p), _key_param(key, q), p, q) if _key_param(key, p) <= _key_param(key, q)
             else (_key_param(key, q), _key_param(key, p), q, p))
            for p, q in items
        )
        cur = list(spans[0])
        for lo, hi, p, q in spans[1:]:
            if lo <= cur[1]:
                if hi > cur[1]:
                    cur[1], cur[3] = hi, q
            else:
                merged.append((key, *cur))
                cur = [lo, hi, p, q]
        merged.append((key, *cur))

    isolated = []
    for p in point_pool:
        absorbed = False
        for key, lo, hi, _, _ in merged:
            nx, ny, c = key
            if nx * p[0] + ny * p[1] == c and lo <= _key_param(key, p) <= hi:
                absorbed = True
                break
        if not absorbed:
            isolated.append(p)

    scale = Fraction(1, den)
    points = sorted((p[0] * scale, p[1] * scale) for p in isolated)
    segments = []
    for _, _, _, p, q in merged:
        a = (p[0] * scale, p[1] * scale)
        b = (q[0] * scale, q[1] * scale)
        segments.append(Segment(min(a, b), max(a, b)))
    segments.sort(key=lambda s: (s.a, s.b))
    return IntersectionResult(tuple(points), tuple(segments))


def _intersect_float(V1, V2, eps: Optional[float]) -> IntersectionResult:
    allpts = V1 + V2
    span = max(
        max(p[0] for p in allpts) - min(p[0] for p in allpts),
        max(p[1] for p in allpts) - min(p[1] for p in allpts),
    )
    if eps is None:
        eps = 1e-9 * max(span, 1.0)
    m1, m2 = len(V1), len(V2)
    raw_points: list = []
    raw_overlaps: list = []  # (line, p_lo, p_hi)

    for i in range(m1):
        a = V1[i]
        b = V1[(i + 1) % m1]
        rx, ry = b[0] - a[0], b[1] - a[1]
        rlen = math.hypot(rx, ry)
        for j in range(m2):
            c = V2[j]
            d = V2[(j + 1) % m2]
            sx, sy = d[0] - c[0], d[1] - c[1]
            slen = math.hypot(sx, sy)
            qx, qy = c[0] - a[0], c[1] - a[1]
            qxr = qx * ry - qy * rx
            dist_c = abs(qxr) / rlen
            dist_d = abs((d[0] - a[0]) * ry - (d[1] - a[1]) * rx) / rlen
            if dist_c <= eps and dist_d <= eps:
                t0 = (qx * rx + qy * ry) / rlen
                t1 = t0 + (sx * rx + sy * ry) / rlen
                lo, hi = min(t0, t1), max(t0, t1)
                lo, hi = max(lo, 0.0), min(hi, rlen)
                if hi < lo - eps:
                    continue
                ux, uy = rx / rlen, ry / rlen
                p_lo = (a[0] + lo * ux, a[1] + lo * uy)
                p_hi = (a[0] + hi * ux, a[1] + hi * uy)
                if hi - lo <= eps:
                    raw_points.append(p_lo)
                else:
                    raw_overlaps.append((Line.from_points(a, b), p_lo, p_hi))
                continue
            rxs = rx * sy - ry * sx
            if abs(rxs) <= eps * max(rlen, slen):
                continue
            qxs = qx * sy - qy * sx
            t = qxs / rxs
            w = qxr / rxs
            et, ew = eps / rlen, eps / slen
            if -et <= t <= 1 + et and -ew <= w <= 1 + ew:
                t = min(max(t, 0.0), 1.0)
                raw_points.append((a[0] + t * rx, a[1] + t * ry))

    # group overlaps by supporting line, then merge arclength spans
    groups: list = []  # [line, [(lo, hi, p_lo, p_hi), ...], (dx, dy)]
    for line, p, q in raw_overlaps:
        for grp in groups:
            rep = grp[0]
            if (
                abs(line.a - rep.a) <= 1e-9
                and abs(line.b - rep.b) <= 1e-9
                and abs(line.c - rep.c) <= eps
            ):
                grp[1].append((p, q))
                break
        else:
            groups.append([line, [(p, q)]])

    merged: list = []  # (line, lo, hi, p_lo, p_hi)
    for line, items in groups:
        dx, dy = line.b, -line.a  # unit direction of the line
        spans = []
        for p, q in items:
            tp = dx * p[0] + dy * p[1]
            tq = dx * q[0] + dy * q[1]
            spans.append((tp, tq, p, q) if tp <= tq else (tq, tp, q, p))
        spans.sort()
        cur = list(spans[0])
        for lo, hi, p, q in spans[1:]:
            if lo <= cur[1] + eps:
                if hi > cur[1]:
                    cur[1], cur[3] = hi, q
            else:
                merged.append((line, *cur))
                cur = [lo, hi, p, q]
        merged.append((line, *cur))

    isolated = []
    for p in raw_points:
        absorbed = False
        for line, lo, hi, _, _ in merged:
            if line.distance_to(p) <= eps:
                t = line.b * p[0] - line.a * p[1]
                if lo - eps <= t <= hi + eps:
                    absorbed = True
                    break
        if not absorbed:
            isolated.append(p)

    deduped: list = []
    for p in sorted(isolated):
        if not any(math.hypot(p[0] - q[0], p[1] - q[1]) <= eps for q in deduped):
            deduped.append(p)

    segments = []
    for _, _, _, p, q in merged:
        a, b = min(p, q), max(p, q)
        segments.append(Segment(a, b))
    segments.sort(key=lambda s: (s.a, s.b))
    return IntersectionResult(tuple(deduped), tuple(segments))


def _is_exact(result: IntersectionResult) -> bool:
    for seg in result.maximal_segments:
        return isinstance(seg.a[0], Fraction)
    return False


def _frac_line_key(a, b):
    fa = (Fraction(a[0]), Fraction(a[1]))
    fb = (Fraction(b[0]), Fraction(b[1]))
    dx, dy = fb[0] - fa[0], fb[1] - fa[1]
    den = math.lcm(dx.denominator, dy.denominator)
    ix, iy = int(dx * den), int(dy * den)
    g = math.gcd(abs(ix), abs(iy))
    ix, iy = ix // g, iy // g
    nx, ny = -iy, ix
    c = nx * fa[0] + ny * fa[1]
    if nx < 0 or (nx == 0 and ny < 0):
        nx, ny, c = -nx, -ny, -c
    return (nx, ny, c)


def direction_line_classes(result: IntersectionResult, tol: float = 1e-9) -> int:
    """Number of distinct supporting lines among the maximal segments."""
    segs = result.maximal_segments
    if not segs:
        return 0
    if _is_exact(result):
        return len({_frac_line_key(s.a, s.b) for s in segs})
    reps: list[Line] = []
    for s in segs:
        line = Line.from_points(s.a, s.b)
        for rep in reps:
            if (
                abs(line.a - rep.a) <= tol
                and abs(line.b - rep.b) <= tol
                and abs(line.c - rep.c) <= tol * (1.0 + abs(rep.c))
            ):
                break
        else:
            reps.append(line)
    return len(reps)


@dataclass(frozen=True)
class ConcurrenceReport:
    ok: bool
    checked: int
    flagged: int
    max_point_error: float
    max_angle_error: float
    violations: tuple[str, ...] = ()
    flags: tuple[str, ...] = ()


def _on_segment_frac(p, a, b) -> bool:
    cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    if cross != 0:
        return False
    dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
    return 0 <= dot <= (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2


def _opposite_edge_coincidence(seg: Segment, u, polygon: SymmetricPolygon) -> bool:
    """True when the segment sits on an edge of the polygon and seg - u sits on an
    anti-parallel edge, i.e. the translate carried one of two parallel edges onto
    the other."""
    fa = (Fraction(seg.a[0]), Fraction(seg.a[1]))
    fb = (Fraction(seg.b[0]), Fraction(seg.b[1]))
    fu = (Fraction(u[0]), Fraction(u[1]))
    verts = [(Fraction(x), Fraction(y)) for x, y in polygon.vertices]
    m = len(verts)
    edges = [(verts[i], verts[(i + 1) % m]) for i in range(m)]
    shifted = ((fa[0] - fu[0], fa[1] - fu[1]), (fb[0] - fu[0], fb[1] - fu[1]))
    for v, w in edges:
        if not (_on_segment_frac(fa, v, w) and _on_segment_frac(fb, v, w)):
            continue
        evx, evy = w[0] - v[0], w[1] - v[1]
        for p, q in edges:
            eqx, eqy = q[0] - p[0], q[1] - p[1]
            if evx * eqy - evy * eqx != 0 or evx * eqx + evy * eqy >= 0:
                continue
            if _on_segment_frac(shifted[0], p, q) and _on_segment_frac(shifted[1], p, q):
                return True
    return False


def concurrence_check(
    result: IntersectionResult,
    alpha: float,
    u,
    tol: float = 1e-9,
    angular_tol: float = 1e-12,
    polygon: Optional[SymmetricPolygon] = None,
) -> ConcurrenceReport:
    """Check the concurrence/parallelism law on every maximal segment.

    For alpha != 1 each segment's supporting line must pass through
    u/(1-alpha), within tol relative to that point's norm.  For alpha == 1
    each segment must be parallel to u (angular sine <= angular_tol); a
    non-parallel segment is accepted only when the polygon is supplied and the
    segment verifiably comes from two anti-parallel edges at offset u, in
    which case it is flagged rather than failing.
    """
    ux, uy = float(u[0]), float(u[1])
    if alpha == 1 and ux == 0 and uy == 0:
        raise ValueError("alpha == 1 requires a nonzero translation")
    if not (alpha > 0):
        raise ValueError("scale factor must be positive")
    segs = result.maximal_segments
    exact = _is_exact(result)
    checked = flagged = 0
    max_pt = 0.0
    max_ang = 0.0
    violations: list[str] = []
    flags: list[str] = []

    if alpha != 1:
        if exact:
            fu = (Fraction(u[0]), Fraction(u[1]))
            scale = Fraction(1) - Fraction(alpha)
            target = (fu[0] / scale, fu[1] / scale)
        else:
            target = (ux / (1 - alpha), uy / (1 - alpha))
        norm = math.hypot(float(target[0]), float(target[1]))
        denom = norm if norm > 0 else 1.0
        for k, seg in enumerate(segs):
            if exact:
                nx, ny, c = _frac_line_key(seg.a, seg.b)
                resid = nx * target[0] + ny * target[1] - c
                err = abs(float(resid)) / math.hypot(float(nx), float(ny))
            else:
                line = Line.from_points(seg.a, seg.b)
                err = line.distance_to(target)
            rel = err / denom
            checked += 1
            max_pt = max(max_pt, rel)
            if rel > tol:
                violations.append(
                    f"segment {k}: supporting line misses u/(1-alpha) by {rel:.3e} (rel)"
                )
    else:
        for k, seg in enumerate(segs):
            dx = seg.b[0] - seg.a[0]
            dy = seg.b[1] - seg.a[1]
            if exact:
                cr = Fraction(dx) * Fraction(u[1]) - Fraction(dy) * Fraction(u[0])
                sin_ang = (
                    0.0
                    if cr == 0
                    else abs(float(cr))
                    / (math.hypot(float(dx), float(dy)) * math.hypot(ux, uy))
                )
            else:
                cr = float(dx) * uy - float(dy) * ux
                sin_ang = abs(cr) / (math.hypot(float(dx), float(dy)) * math.hypot(ux, uy))
            if sin_ang <= angular_tol:
                checked += 1
                max_ang = max(max_ang, sin_ang)
            elif polygon is not None and _opposite_edge_coincidence(seg, u, polygon):
                flagged += 1
                flags.append("opposite-edge coincidence")
            else:
                checked += 1
                max_ang = max(max_ang, sin_ang)
                violations.append(
                    f"segment {k}: direction off u by sin angle {sin_ang:.3e}"
                )

    return ConcurrenceReport(
        ok=not violations,
        checked=checked,
        flagged=flagged,
        max_point_error=max_pt,
        max_angle_error=max_ang,
        violations=tuple(violations),
        flags=tuple(flags),
    )


@dataclass(frozen=True)
class RootScan:
    count: int
    thetas: tuple[float, ...]
    tangent: tuple[bool, ...]


def strictly_convex_intersection_count(
    body,
    alpha: float,
    x,
    resolution: float = 1e-4,
    tangent_tol: float = 1e-9,
    detail: bool = False,
):
    """Count the points of G intersect (alpha*G + x) for a strictly convex body.

    Scans g(theta) = gauge((boundary(theta) - x)/alpha) - 1 over a full turn at
    the given angular resolution, refines each sign change by bisection, and
    counts grid zeros and below-tolerance tangential minima once (tangencies
    are flagged in the detail view).
    """
    if not isinstance(body, (Disc, PBall)):
        raise ValueError("strict-convexity scan needs a disc or p-ball body")
    _ensure_valid(body)
    if not (alpha > 0):
        raise ValueError("scale factor must be positive")
    x0, x1 = float(x[0]), float(x[1])
    if x0 == 0 and x1 == 0:
        raise ValueError("translation must be nonzero")
    if not (0 < resolution <= 1e-2):
        raise ValueError("angular resolution must be in (0, 1e-2]")

    n = int(math.ceil(2 * math.pi / resolution))
    step = 2 * math.pi / n
    th = np.arange(n) * step
    bp = boundary_points(body, th)
    g = gauge_many(body, (bp - np.array([x0, x1])) / alpha) - 1.0
    sign = np.sign(g)

    def g_scalar(theta: float) -> float:
        px, py = boundary_point(body, theta)
        return gauge(body, ((px - x0) / alpha, (py - x1) / alpha)) - 1.0

    roots: list[tuple[float, bool]] = []
    zero_idx = np.flatnonzero(sign == 0)
    if len(zero_idx) == n:
        raise ValueError("degenerate scan: the curves coincide at every sample")
    used = np.zeros(n, dtype=bool)
    if len(zero_idx):
        runs = []
        run = [int(zero_idx[0])]
        for idx in zero_idx[1:]:
            if idx == run[-1] + 1:
                run.append(int(idx))
            else:
                runs.append(run)
                run = [int(idx)]
        runs.append(run)
        # a run wrapping the 0 index joins the last run
        if len(runs) > 1 and runs[0][0] == 0 and runs[-1][-1] == n - 1:
            runs[0] = runs.pop() + runs[0]
        for run in runs:
            before = sign[(run[0] - 1) % n]
            after = sign[(run[-1] + 1) % n]
            theta = th[run[len(run) // 2]]
            roots.append((theta, before == after))
            for idx in run:
                used[idx] = True

    sign_next = np.roll(sign, -1)
    crossing = (sign != 0) & (sign_next != 0) & (sign != sign_next)
    for i in np.flatnonzero(crossing):
        j = (i + 1) % n
        lo, hi = th[i], th[i] + step
        flo = g[i]
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm = g_scalar(mid)
            if fm == 0.0:
                lo = hi = mid
                break
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        roots.append((0.5 * (lo + hi), False))
        used[i] = used[j] = True

    absg = np.abs(g)
    sign_prev = np.roll(sign, 1)
    near = (
        ~used
        & ~np.roll(used, 1)
        & ~np.roll(used, -1)
        & (sign != 0)
        & (absg <= tangent_tol)
        & (absg <= np.roll(absg, 1))
        & (absg <= np.roll(absg, -1))
        & (sign_prev == sign)
        & (sign_next == sign)
    )
    for i in np.flatnonzero(near):
        roots.append((th[i], True))
        used[i] = True

    if not roots:
        result = RootScan(0, (), ())
        return result if detail else 0

    # cyclic dedupe of roots closer than 1.5 grid steps
    roots.sort()
    clusters: list[list[tuple[float, bool]]] = [[roots[0]]]
    for r in roots[1:]:
        if r[0] - clusters[-1][-1][0] <= 1.5 * step:
            clusters[-1].append(r)
        else:
            clusters.append([r])
    if len(clusters) > 1:
        wrap = (roots[0][0] + 2 * math.pi) - clusters[-1][-1][0]
        if wrap <= 1.5 * step:
            clusters[0] = clusters.pop() + clusters[0]
    thetas = tuple(c[0][0] for c in clusters)
    tangent = tuple(any(t for _, t in c) for c in clusters)
    result = RootScan(len(clusters), thetas, tangent)
    return result if detail else result.count


def convex_hull(points) -> list:
    """Counterclockwise convex hull (monotone chain, strict turns).

    Collinear input returns the two-point degenerate chain; a single distinct
    point returns itself.  No collinear triples survive on a proper hull.
    """
    pts = sorted({(float(p[0]), float(p[1])) for p in points})
    if len(pts) <= 2:
        return list(pts)

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return [pts[0], pts[-1]]
    return hull


def random_symmetric_polygon(
    n_half_vertices: int,
    seed: int,
    grid_bits: int = 16,
    max_attempts: int = 64,
) -> SymmetricPolygon:
    """Random valid origin-symmetric polygon, deterministic per seed.

    Draws n points in the annulus 0.5 <= |p| <= 1.5 (rejection sampling, no
    transcendentals), snaps them to the dyadic grid 2**-grid_bits so downstream
    rational arithmetic stays cheap, and takes the hull of the points and their
    negations.  Degenerate draws retry with a derived seed.
    """
    if n_half_vertices < 2:
        raise ValueError("need at least 2 half-turn vertices")
    for attempt in range(max_attempts):
        rng = Xorshift64Star(derive_seed(seed, attempt))
        pts = []
        while len(pts) < n_half_vertices:
            px = rng.uniform(-1.5, 1.5)
            py = rng.uniform(-1.5, 1.5)
            rho = px * px + py * py
            if not (0.25 <= rho <= 2.25):
                continue
            qx, qy = quantize(px, grid_bits), quantize(py, grid_bits)
            if qx == 0.0 and qy == 0.0:
                continue
            pts.append((qx, qy))
        sym = pts + [(-a, -b) for a, b in pts]
        hull = convex_hull(sym)
        if len(hull) < 4:
            continue
        poly = SymmetricPolygon(hull)
        if validate(poly).ok:
            return poly
    raise RuntimeError(
        f"no valid symmetric polygon after {max_attempts} attempts (seed {seed})"
    )
