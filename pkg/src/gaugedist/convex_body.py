"""Origin-symmetric convex bodies and their Minkowski gauge.

A body K here is a polygon, a Euclidean disc, or a p-ball; each induces the
gauge ``||x||_K = inf {t > 0 : x in t*K}``, a norm whose unit ball is K.  The
polygon gauge is evaluated through the half-plane normal form (a max of linear
functionals, O(edges) per point); a ray-casting evaluator lives in the test
suite as an independent oracle.  For polygons an exact-rational evaluator is
also provided so lattice experiments can count distinct distances without any
clustering tolerance.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Union

import numpy as np

__all__ = [
    "ConvexBody",
    "Disc",
    "EdgeNormalForm",
    "InvalidBodyError",
    "PBall",
    "SymmetricPolygon",
    "ValidationReport",
    "body_from_spec",
    "boundary_point",
    "boundary_points",
    "diamond",
    "edge_normal_form",
    "gauge",
    "gauge_exact",
    "gauge_many",
    "load_body",
    "max_chebyshev_radius",
    "max_euclid_radius",
    "square",
    "validate",
]


class InvalidBodyError(ValueError):
    """An operation received a body that fails its invariants."""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = ()


def _as_vertex_tuple(vertices) -> tuple[tuple[float, float], ...]:
    out = []
    for v in vertices:
        x, y = v
        out.append((float(x), float(y)))
    return tuple(out)


@dataclass(frozen=True)
class SymmetricPolygon:
    """Strictly convex polygon, counterclockwise, with ``vertices[i+n] == -vertices[i]``.

    Coordinates are doubles.  Antipodal vertex pairs must be exact negations
    (floats negate exactly, so this costs nothing); use
    :func:`SymmetricPolygon.from_half` to build a body from one half-turn of
    vertices.
    """

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", _as_vertex_tuple(self.vertices))

    @classmethod
    def from_half(cls, half_vertices) -> "SymmetricPolygon":
        half = _as_vertex_tuple(half_vertices)
        return cls(half + tuple((-x, -y) for x, y in half))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def _report(self) -> ValidationReport:
        return _validate_polygon(self)

    @cached_property
    def _normal_form(self) -> tuple[np.ndarray, np.ndarray]:
        verts = np.asarray(self.vertices, dtype=float)
        edges = np.roll(verts, -1, axis=0) - verts
        raw = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
        length = np.hypot(raw[:, 0], raw[:, 1])
        normals = raw / length[:, None]
        offsets = verts[:, 0] * normals[:, 0] + verts[:, 1] * normals[:, 1]
        normals.setflags(write=False)
        offsets.setflags(write=False)
        return normals, offsets

    @cached_property
    def _exact_functionals(self) -> tuple[tuple[Fraction, Fraction, Fraction], ...]:
        # per edge: (ey, -ex, <v_i, n_raw>) with n_raw = (ey, -ex); gauge is
        # max_i <x, n_raw_i> / <v_i, n_raw_i>, exact for rational x
        verts = [(Fraction(x), Fraction(y)) for x, y in self.vertices]
        m = len(verts)
        funcs = []
        for i in range(m):
            vx, vy = verts[i]
            wx, wy = verts[(i + 1) % m]
            ex, ey = wx - vx, wy - vy
            funcs.append((ey, -ex, vx * ey - vy * ex))
        return tuple(funcs)


@dataclass(frozen=True)
class Disc:
    radius: float


@dataclass(frozen=True)
class PBall:
    """Unit ball of the l^p norm scaled by ``radius``; p > 1 keeps it strictly convex."""

    p: float
    radius: float


ConvexBody = Union[SymmetricPolygon, Disc, PBall]


@dataclass(frozen=True)
class EdgeNormalForm:
    """Half-plane form K = {y : <y, n_i> <= h_i}, one row per edge, normals unit length."""

    normals: np.ndarray
    offsets: np.ndarray


def square(half_width: float = 1.0) -> SymmetricPolygon:
    """The square [-c, c]^2; its gauge is the scaled max-coordinate norm."""
    c = float(half_width)
    return SymmetricPolygon(((c, c), (-c, c), (-c, -c), (c, -c)))


def diamond(radius: float = 1.0) -> SymmetricPolygon:
    """The l^1 ball of the given radius; its gauge is the scaled taxicab norm."""
    r = float(radius)
    return SymmetricPolygon(((r, 0.0), (0.0, r), (-r, 0.0), (0.0, -r)))


def _validate_polygon(poly: SymmetricPolygon) -> ValidationReport:
    v = poly.vertices
    m = len(v)
    viol = []
    if m == 0:
        return ValidationReport(False, ("polygon has no vertices",))
    if not all(math.isfinite(x) and math.isfinite(y) for x, y in v):
        return ValidationReport(False, ("non-finite vertex coordinate",))
    if m % 2 == 1 or m < 4:
        viol.append(
            f"symmetry pairing impossible: vertex count {m} (need an even count >= 4)"
        )
    else:
        n = m // 2
        bad = [i for i in range(n) if v[i + n] != (-v[i][0], -v[i][1])]
        if bad:
            viol.append(f"symmetry pairing fails: vertices {bad} not negated at +n")
    dup = [i for i in range(m) if v[i] == v[(i + 1) % m]]
    if dup:
        viol.append(f"repeated consecutive vertices at {dup}")
    else:
        bad_turn = []
        for i in range(m):
            ax, ay = v[i]
            bx, by = v[(i + 1) % m]
            cx, cy = v[(i + 2) % m]
            if (bx - ax) * (cy - by) - (by - ay) * (cx - bx) <= 0:
                bad_turn.append(i)
        if bad_turn:
            viol.append(f"non-strict convex turn sign at vertices {bad_turn}")
        outside = [
            i
            for i in range(m)
            if v[i][0] * v[(i + 1) % m][1] - v[i][1] * v[(i + 1) % m][0] <= 0
        ]
        if outside:
            viol.append(f"origin not strictly inside: edges {outside}")
    return ValidationReport(not viol, tuple(viol))


def validate(body: ConvexBody) -> ValidationReport:
    """Check every invariant of the body; reports all violations, raises nothing."""
    if isinstance(body, SymmetricPolygon):
        return body._report
    if isinstance(body, Disc):
        if not (math.isfinite(body.radius) and body.radius > 0):
            return ValidationReport(False, (f"disc radius {body.radius} not positive",))
        return ValidationReport(True)
    if isinstance(body, PBall):
        viol = []
        if not (math.isfinite(body.p) and body.p > 1):
            viol.append(f"p-ball exponent {body.p} not in (1, inf)")
        if not (math.isfinite(body.radius) and body.radius > 0):
            viol.append(f"p-ball radius {body.radius} not positive")
        return ValidationReport(not viol, tuple(viol))
    return ValidationReport(False, (f"unsupported body type {type(body).__name__}",))


def _ensure_valid(body: ConvexBody) -> None:
    rep = validate(body)
    if not rep.ok:
        raise InvalidBodyError("; ".join(rep.violations))


def edge_normal_form(poly: SymmetricPolygon) -> EdgeNormalForm:
    """Outward unit normals and offsets of a valid polygon (normals in angular order)."""
    if not isinstance(poly, SymmetricPolygon):
        raise InvalidBodyError("edge_normal_form needs a polygon body")
    _ensure_valid(poly)
    normals, offsets = poly._normal_form
    return EdgeNormalForm(normals, offsets)


def gauge(body: ConvexBody, x) -> float:
    """Minkowski gauge of x with respect to the body; 0 iff x == 0."""
    _ensure_valid(body)
    px, py = float(x[0]), float(x[1])
    if not (math.isfinite(px) and math.isfinite(py)):
        raise ValueError("gauge of a non-finite point")
    if isinstance(body, SymmetricPolygon):
        normals, offsets = body._normal_form
        return float(np.max((normals[:, 0] * px + normals[:, 1] * py) / offsets))
    if isinstance(body, Disc):
        return math.hypot(px, py) / body.radius
    return (abs(px) ** body.p + abs(py) ** body.p) ** (1.0 / body.p) / body.radius


def gauge_many(body: ConvexBody, points) -> np.ndarray:
    """Vectorized gauge over an (n, 2) array of points."""
    _ensure_valid(body)
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must have shape (n, 2)")
    if isinstance(body, SymmetricPolygon):
        normals, offsets = body._normal_form
        # elementwise, not matmul: bit-identical to the scalar path and
        # independent of BLAS threading
        vals = pts[:, 0, None] * normals[None, :, 0] + pts[:, 1, None] * normals[None, :, 1]
        vals /= offsets
        return np.max(vals, axis=1)
    if isinstance(body, Disc):
        return np.hypot(pts[:, 0], pts[:, 1]) / body.radius
    p = body.p
    return (np.abs(pts[:, 0]) ** p + np.abs(pts[:, 1]) ** p) ** (1.0 / p) / body.radius


def gauge_exact(poly: SymmetricPolygon, x) -> Fraction:
    """Exact gauge of a rational point with respect to a polygon.

    Doubles are dyadic rationals, so any float input is converted losslessly.
    """
    if not isinstance(poly, SymmetricPolygon):
        raise InvalidBodyError("gauge_exact is defined for polygon bodies")
    _ensure_valid(poly)
    fx, fy = Fraction(x[0]), Fraction(x[1])
    best = Fraction(0)
    for a, b, den in poly._exact_functionals:
        val = (fx * a + fy * b) / den
        if val > best:
            best = val
    return best


def boundary_point(body: ConvexBody, theta: float) -> tuple[float, float]:
    """The boundary point of the body in direction theta (gauge exactly ~1)."""
    d = (math.cos(theta), math.sin(theta))
    g = gauge(body, d)
    return (d[0] / g, d[1] / g)


def boundary_points(body: ConvexBody, thetas) -> np.ndarray:
    th = np.asarray(thetas, dtype=float)
    dirs = np.stack([np.cos(th), np.sin(th)], axis=1)
    g = gauge_many(body, dirs)
    return dirs / g[:, None]


def max_euclid_radius(body: ConvexBody) -> float:
    """Largest Euclidean norm on the gauge-unit boundary (for window sizing)."""
    _ensure_valid(body)
    if isinstance(body, SymmetricPolygon):
        return max(math.hypot(x, y) for x, y in body.vertices)
    if isinstance(body, Disc):
        return body.radius
    return body.radius * max(1.0, 2.0 ** (0.5 - 1.0 / body.p))


def max_chebyshev_radius(body: ConvexBody) -> float:
    """Largest max-coordinate norm on the gauge-unit boundary.

    The gauge ball of radius G fits inside the square window [-R, R]^2 exactly
    when G times this value is at most R.
    """
    _ensure_valid(body)
    if isinstance(body, SymmetricPolygon):
        return max(max(abs(x), abs(y)) for x, y in body.vertices)
    return body.radius  # disc and p-ball peak on the axes


def body_from_spec(spec: dict) -> ConvexBody:
    """Build a body from its JSON description.

    ``{"type": "polygon", "vertices": [[x, y], ...], "symmetric_completion": bool}``
    or ``{"type": "disc", "radius": r}`` or ``{"type": "pball", "p": p, "radius": r}``.
    """
    kind = spec.get("type")
    if kind == "polygon":
        verts = spec["vertices"]
        if spec.get("symmetric_completion"):
            return SymmetricPolygon.from_half(verts)
        return SymmetricPolygon(verts)
    if kind == "disc":
        return Disc(float(spec["radius"]))
    if kind == "pball":
        return PBall(float(spec["p"]), float(spec["radius"]))
    raise ValueError(f"unknown body type {kind!r}")


_NAMED_BODIES = {
    "square": square,
    "diamond": diamond,
    "disc": lambda: Disc(1.0),
}


def load_body(source) -> ConvexBody:
    """Load a body from a dict, a builtin name (square/diamond/disc), or a JSON file."""
    if isinstance(source, dict):
        return body_from_spec(source)
    if isinstance(source, (SymmetricPolygon, Disc, PBall)):
        return source
    name = str(source)
    if name in _NAMED_BODIES:
        return _NAMED_BODIES[name]()
    with open(Path(name), "r", encoding="utf-8") as fh:
        return body_from_spec(json.load(fh))
