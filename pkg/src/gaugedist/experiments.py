"""Experiment drivers: distance-set sweeps, lattice counts, and lemma-check batches.

Everything here is deterministic under a fixed seed.  Trial batches derive one
child seed per trial (see :mod:`gaugedist.prng`), so runs are reproducible and
order-independent; report writers emit byte-identical output unless the
optional timestamp header is enabled.

The translation vectors used in the polygon trial batches are constructed, not
blind draws: a uniformly random translate of a scaled polygon almost never
shares a boundary segment with the original, so segment events would have
measure zero.  Each trial picks one of several constructions (align one edge's
supporting line, scale about a vertex, carry an edge onto its opposite, or a
fully random translate) with dyadic coordinates, keeping every case exact.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .convex_body import (
    ConvexBody,
    Disc,
    PBall,
    SymmetricPolygon,
    gauge,
    max_chebyshev_radius,
)
from .distance_sets import (
    Cone,
    distance_set,
    grid_distance_set,
    min_gap,
    moser_count_check,
    MoserRow,
)
from .geometry_kernel import (
    boundary_intersection,
    concurrence_check,
    direction_line_classes,
    random_symmetric_polygon,
    strictly_convex_intersection_count,
    transform_polygon,
)
from .point_sets import GeneratorSpec, alpha_dimension_estimate, generate
from .prng import Xorshift64Star, derive_seed, quantize

__all__ = [
    "ExperimentRow",
    "LemmaBatch",
    "erdos_bound",
    "run_lemma_checks",
    "run_moser",
    "run_sweep",
    "taxicab_count",
    "write_jsonl",
    "write_moser_csv",
    "write_sweep_csv",
]


@dataclass(frozen=True)
class ExperimentRow:
    R: float
    n_points: int
    n_distances: int
    min_gap: Optional[float]
    alpha_hat: Optional[float]


def _lattice_side_count(R: float, spacing: float) -> int:
    return 2 * int(math.floor(R / spacing + 1e-12)) + 1


def run_sweep(
    body: ConvexBody,
    genspec: GeneratorSpec,
    R_list: Sequence[float],
    tol: Optional[float] = None,
    exact: bool = False,
) -> list[ExperimentRow]:
    """One distance-set row per window radius; exact mode uses the grid fast path."""
    rows = []
    samples = []
    for R in sorted(R_list):
        spec = replace(genspec, R=float(R))
        if exact and spec.kind == "lattice":
            side = _lattice_side_count(spec.R, spec.spacing)
            ds = grid_distance_set(body, side, side, spec.spacing, exact=True)
            n_points = side * side
        else:
            ps = generate(spec)
            n_points = len(ps)
            ds = distance_set(body, ps, tol=tol, exact=exact)
        gap = min_gap(ds)
        rows.append(
            ExperimentRow(
                R=float(R),
                n_points=n_points,
                n_distances=len(ds),
                min_gap=None if gap is None else gap,
                alpha_hat=None,
            )
        )
        samples.append((float(R), n_points))
    if len(samples) >= 3:
        alpha = alpha_dimension_estimate(samples).alpha
        rows = [replace(r, alpha_hat=alpha) for r in rows]
    return rows


def taxicab_count(n: int, body_name: str = "square") -> dict:
    """Distinct gauge distances of the (n+1) x (n+1) corner lattice, exactly."""
    if n < 1:
        raise ValueError("lattice size must be >= 1")
    from .convex_body import diamond, square

    bodies = {"square": square(), "diamond": diamond(), "disc": Disc(1.0)}
    if body_name not in bodies:
        raise ValueError(f"taxicab count supports {sorted(bodies)}, not {body_name!r}")
    body = bodies[body_name]
    ds = grid_distance_set(body, n + 1, n + 1, 1.0, exact=True)
    n_points = (n + 1) ** 2
    return {
        "body": body_name,
        "n": n,
        "n_points": n_points,
        "n_distances": len(ds),
        "ratio_to_sqrt_n_points": len(ds) / math.sqrt(n_points),
    }


def erdos_bound(body: ConvexBody, N: int, seed: int = 0) -> dict:
    """Distinct-distance counts for N random points and the ceil(sqrt(N))^2 lattice.

    The counts come with their ratio to sqrt(N); a ratio below 0.5 is flagged
    (it never is, for any body: the lower bound holds universally).
    """
    if N < 4:
        raise ValueError("need N >= 4")
    n = int(math.ceil(math.sqrt(N)))
    rng = Xorshift64Star(seed)
    pts = np.array([[rng.uniform(0.0, n), rng.uniform(0.0, n)] for _ in range(N)])
    random_ds = distance_set(body, pts, tol=1e-12 * n)
    exact_ok = isinstance(body, (SymmetricPolygon, Disc))
    if exact_ok:
        lattice_ds = grid_distance_set(body, n, n, 1.0, exact=True)
    else:
        lattice_ds = grid_distance_set(body, n, n, 1.0, exact=False, tol=1e-12 * n)
    out = {"N": N, "seed": seed, "witnesses": {}}
    flagged = False
    for name, ds, count in (
        ("random", random_ds, N),
        ("lattice", lattice_ds, n * n),
    ):
        ratio = len(ds) / math.sqrt(N)
        flag = ratio < 0.5
        flagged = flagged or flag
        out["witnesses"][name] = {
            "n_points": count,
            "n_distances": len(ds),
            "ratio_to_sqrt_N": ratio,
            "below_half": flag,
        }
    out["flagged"] = flagged
    return out


@dataclass(frozen=True)
class LemmaBatch:
    which: str
    trials: int
    seed: int
    rows: tuple[dict, ...]
    violations: int
    segments_checked: int
    segments_flagged: int
    max_classes: int
    max_count: int


_ALPHAS_13 = (0.5, 1.0, 2.0, 3.0)
_ALPHAS_14 = (0.5, 2.0, 3.0, 1.0)


def _choose_u(rng: Xorshift64Star, poly: SymmetricPolygon, alpha: float):
    """Dyadic translation for one trial; see the module docstring for the kinds."""
    verts = poly.vertices
    m = len(verts)
    roll = rng.below(3)
    i = rng.below(m)
    vx, vy = verts[i]
    wx, wy = verts[(i + 1) % m]
    ex, ey = wx - vx, wy - vy
    if roll == 0:
        # place alpha*edge + u on the edge's own supporting line, overlapping it
        beta = quantize(-alpha + (1.0 + alpha) * (0.0625 + 0.875 * rng.random()), 12)
        u = ((1.0 - alpha) * vx + beta * ex, (1.0 - alpha) * vy + beta * ey)
    elif roll == 1:
        if alpha == 1.0:
            # carry the opposite edge onto this one
            s = quantize(-0.875 + 1.75 * rng.random(), 12)
            u = (vx + wx + s * ex, vy + wy + s * ey)
        else:
            # scaling about the shared vertex aligns both incident edges
            u = ((1.0 - alpha) * wx, (1.0 - alpha) * wy)
    else:
        u = (quantize(rng.uniform(-2.5, 2.5), 16), quantize(rng.uniform(-2.5, 2.5), 16))
    if u == (0.0, 0.0):
        u = (2.0 ** -12, 0.0)
    return u


def _polygon_trial(k: int, seed: int, alpha: float) -> tuple[dict, dict]:
    rng = Xorshift64Star(derive_seed(seed, k))
    n_half = 2 + rng.below(7)
    poly = random_symmetric_polygon(n_half, rng.next_u64())
    u = _choose_u(rng, poly, alpha)
    moved = transform_polygon(poly, alpha, u)
    res = boundary_intersection(poly.vertices, moved)
    classes = direction_line_classes(res)
    rep = concurrence_check(res, alpha, u, polygon=poly)
    row = {
        "trial": k,
        "alpha": alpha,
        "u": [u[0], u[1]],
        "classes": classes,
        "max_concurrence_error": float(max(rep.max_point_error, rep.max_angle_error)),
        "flags": sorted(rep.flags),
    }
    info = {
        "classes": classes,
        "concurrence_ok": rep.ok,
        "checked": rep.checked,
        "flagged": rep.flagged,
        "segments": len(res.maximal_segments),
    }
    return row, info


def _strict_trial(k: int, seed: int, resolution: float) -> tuple[dict, dict]:
    rng = Xorshift64Star(derive_seed(seed, k))
    body = (Disc(1.0), PBall(1.5, 1.0), PBall(3.0, 1.0))[k % 3]
    alpha = 0.5 + 1.5 * rng.random()
    while True:
        dx, dy = rng.in_disc()
        if dx * dx + dy * dy >= 0.01:
            break
    gd = gauge(body, (dx, dy))
    lo, hi = abs(1.0 - alpha), 1.0 + alpha
    regime = rng.below(10)
    if regime < 7:
        rho = lo + (hi - lo) * (0.05 + 0.9 * rng.random())  # two crossings
    elif regime < 9:
        rho = hi + 0.1 + rng.random()  # disjoint
    else:
        rho = lo + (hi - lo) * 0.002  # barely past internal tangency
    x = (rho * dx / gd, rho * dy / gd)
    count = strictly_convex_intersection_count(body, alpha, x, resolution=resolution)
    row = {
        "trial": k,
        "alpha": alpha,
        "u": [x[0], x[1]],
        "count": count,
        "flags": [],
    }
    return row, {"count": count}


def run_lemma_checks(
    which: str,
    trials: int,
    seed: int,
    resolution: float = 1e-4,
) -> LemmaBatch:
    """Run a seeded trial batch.

    which "13": bound on distinct supporting-line classes (must stay <= 2).
    which "14": concurrence of segment lines through u/(1-alpha); every fourth
    trial exercises alpha == 1 parallelism with opposite-edge flagging.
    which "strict": intersection counts for strictly convex bodies (<= 2).
    """
    which = str(which)
    if trials < 1:
        raise ValueError("need at least one trial")
    rows = []
    violations = 0
    seg_checked = seg_flagged = 0
    max_classes = 0
    max_count = 0
    for k in range(trials):
        if which == "strict":
            row, info = _strict_trial(k, seed, resolution)
            max_count = max(max_count, info["count"])
            if info["count"] > 2:
                violations += 1
        elif which in ("13", "14"):
            alphas = _ALPHAS_13 if which == "13" else _ALPHAS_14
            row, info = _polygon_trial(k, seed, alphas[k % 4])
            max_classes = max(max_classes, info["classes"])
            seg_checked += info["checked"]
            seg_flagged += info["flagged"]
            if which == "13" and info["classes"] > 2:
                violations += 1
            if which == "14" and not info["concurrence_ok"]:
                violations += 1
        else:
            raise ValueError("which must be one of 13, 14, strict")
        rows.append(row)
    return LemmaBatch(
        which=which,
        trials=trials,
        seed=seed,
        rows=tuple(rows),
        violations=violations,
        segments_checked=seg_checked,
        segments_flagged=seg_flagged,
        max_classes=max_classes,
        max_count=max_count,
    )


def run_moser(
    body: ConvexBody,
    cone: Cone,
    inner_cone: Cone,
    N_range: Sequence[int],
    spacing: float = 1.0,
    width: float = 10.0,
) -> list[MoserRow]:
    """Annulus/cone counts on the unit-spacing lattice, window sized to fit N_max."""
    n_max = max(N_range)
    R = width * (n_max + 1) * max_chebyshev_radius(body) + spacing
    ps = generate(GeneratorSpec(kind="lattice", R=R, spacing=spacing))
    return moser_count_check(ps, body, cone, inner_cone, N_range, width)


def _timestamp_line() -> str:
    return f"# generated {datetime.now(timezone.utc).isoformat()}"


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, Fraction):
        v = float(v)
    return repr(float(v))


def write_sweep_csv(rows: Sequence[ExperimentRow], path, timestamp: bool = True) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if timestamp:
            fh.write(_timestamp_line() + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["R", "n_points", "n_distances", "min_gap", "alpha_hat"])
        for r in rows:
            writer.writerow(
                [_fmt(r.R), _fmt(r.n_points), _fmt(r.n_distances), _fmt(r.min_gap), _fmt(r.alpha_hat)]
            )


def write_moser_csv(rows: Sequence[MoserRow], path, timestamp: bool = True) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if timestamp:
            fh.write(_timestamp_line() + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["N", "count", "bound", "met", "truncated"])
        for r in rows:
            writer.writerow(
                [_fmt(r.N), _fmt(r.count), _fmt(r.bound), _fmt(r.met), _fmt(r.truncated)]
            )


def write_jsonl(rows: Sequence[dict], path, timestamp: bool = True) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if timestamp:
            fh.write(json.dumps({"meta": {"generated": datetime.now(timezone.utc).isoformat()}}) + "\n")
        for row in rows:
            fh.write(json.dumps(row, separators=(",", ":")) + "\n")
