import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaugedist import (
    Annulus,
    Cone,
    Disc,
    GeneratorSpec,
    PBall,
    PointSet,
    annulus_cone_points,
    diamond,
    distance_lists_from_two_points,
    distance_set,
    gauge,
    generate,
    grid_distance_set,
    min_gap,
    moser_count_check,
    square,
    write_results_csv,
)

from oracles import brute_pairwise_values


def lattice_points(n):
    return np.array([[i, j] for i in range(n + 1) for j in range(n + 1)], dtype=float)


class TestDistanceSet:
    def test_square_body_small_grid(self):
        ds = distance_set(square(), lattice_points(2), exact=True)
        assert ds.values == (0, 1, 2)
        assert sum(ds.multiplicities) == 9 * 10 // 2

    def test_single_pair_disc(self):
        ds = distance_set(Disc(1.0), np.array([[0.0, 0.0], [3.0, 4.0]]))
        assert len(ds) == 2
        assert ds.values[0] == 0.0 and abs(ds.values[1] - 5.0) < 1e-12

    def test_single_point(self):
        ds = distance_set(square(), np.array([[2.0, 1.0]]))
        assert ds.values == (0.0,)
        assert ds.multiplicities == (1,)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            distance_set(square(), np.empty((0, 2)))

    def test_pball_exact_rejected(self):
        with pytest.raises(ValueError):
            distance_set(PBall(1.5, 1.0), lattice_points(1), exact=True)

    def test_matches_brute_force_oracle(self):
        pts = np.array([[0.0, 0.0], [1.5, 0.25], [-2.0, 1.0], [0.5, -3.0], [2.0, 2.0]])
        for body in (square(), diamond(), Disc(1.0), PBall(3.0, 1.0)):
            vals = brute_pairwise_values(lambda v: gauge(body, v), pts)
            ds = distance_set(body, pts, tol=1e-12)
            # every brute value is within tol of a clustered representative
            for v in vals:
                assert any(0 <= v - rep <= ds.tol + 1e-15 for rep in ds.values)
            assert sum(ds.multiplicities) == len(vals)

    def test_translation_invariance(self):
        pts = np.array([[0.0, 0.0], [1.0, 2.0], [-1.5, 0.5], [3.0, -1.0]])
        body = diamond()
        base = distance_set(body, pts, tol=1e-9)
        shifted = distance_set(body, pts + np.array([17.25, -3.5]), tol=1e-9)
        assert np.allclose(base.values, shifted.values, rtol=0, atol=1e-9)

    def test_scaling_law(self):
        pts = np.array([[0.0, 0.0], [1.0, 2.0], [-1.5, 0.5], [3.0, -1.0]])
        lam = 3.5
        body = square()
        base = distance_set(body, pts, tol=1e-12)
        scaled = distance_set(body, lam * pts, tol=1e-12)
        assert np.allclose(np.array(scaled.values), lam * np.array(base.values), rtol=1e-9)

    def test_square_body_integer_lattice_values_are_integers(self):
        ds = distance_set(square(), lattice_points(3), exact=True)
        assert all(isinstance(v, Fraction) and v.denominator == 1 for v in ds.values)

    def test_cluster_count_monotone_in_tol(self):
        rng = np.random.default_rng(5)
        pts = rng.uniform(-4, 4, size=(30, 2))
        body = Disc(1.0)
        counts = [len(distance_set(body, pts, tol=t)) for t in (0.0, 1e-6, 1e-3, 0.1, 1.0)]
        assert counts == sorted(counts, reverse=True)


class TestGridFastPath:
    @pytest.mark.parametrize("body", [square(), diamond(), Disc(1.0)])
    def test_grid_matches_pair_loop_exact(self, body):
        pts = lattice_points(3)
        slow = distance_set(body, pts, exact=True)
        fast = grid_distance_set(body, 4, 4, 1.0, exact=True)
        assert slow.values == fast.values
        assert slow.multiplicities == fast.multiplicities

    def test_grid_matches_pair_loop_float(self):
        body = PBall(1.5, 1.0)
        pts = lattice_points(3)
        slow = distance_set(body, pts, tol=1e-9)
        fast = grid_distance_set(body, 4, 4, 1.0, exact=False, tol=1e-9)
        assert np.allclose(slow.values, fast.values, rtol=0, atol=1e-9)
        assert slow.multiplicities == fast.multiplicities

    def test_rectangular_grid_spacing(self):
        ds = grid_distance_set(square(), 3, 2, 0.5, exact=True)
        assert ds.values == (0, Fraction(1, 2), 1)
        assert sum(ds.multiplicities) == 6 * 7 // 2


class TestMinGap:
    def test_simple(self):
        ds = grid_distance_set(square(), 3, 3, 1.0, exact=True)
        assert min_gap(ds) == 1

    def test_none_for_singleton(self):
        ds = distance_set(square(), np.array([[1.0, 1.0]]))
        assert min_gap(ds) is None

    def test_disc_small_grid_gap_oracle(self):
        # brute force on {0..4}^2: tightest pair is sqrt(18)-sqrt(17)
        ds = distance_set(Disc(1.0), lattice_points(4), exact=True)
        expected = brute_pairwise_values(
            lambda v: math.hypot(v[0], v[1]), lattice_points(4)
        )
        distinct = sorted(set(round(v, 9) for v in expected))
        gaps = [b - a for a, b in zip(distinct, distinct[1:])]
        assert abs(min_gap(ds) - min(gaps)) < 1e-9
        assert abs(min_gap(ds) - (math.sqrt(18) - math.sqrt(17))) < 1e-12

    def test_disc_grid_shows_sqrt50_sqrt49_gap(self):
        ds = distance_set(Disc(1.0), lattice_points(7), exact=True)
        gaps = {round(b - a, 12) for a, b in zip(ds.values, ds.values[1:])}
        assert round(math.sqrt(50) - 7.0, 12) in gaps

    @pytest.mark.parametrize("R", [5, 10, 20, 40])
    def test_square_lattice_gap_constant(self, R):
        side = 2 * R + 1
        ds = grid_distance_set(square(), side, side, 1.0, exact=True)
        assert min_gap(ds) == 1


class TestAnnulusCone:
    def test_invariants(self):
        with pytest.raises(ValueError):
            Annulus(-1)
        with pytest.raises(ValueError):
            Cone(1.0, 1.0)
        with pytest.raises(ValueError):
            Cone(0.0, 7.0)
        assert Annulus(2, width=10).inner == 20 and Annulus(2).outer == 30

    def test_first_quadrant_box_count(self):
        ps = generate(GeneratorSpec(kind="lattice", R=12.0))
        sub = annulus_cone_points(ps, square(), 0, Cone(0.0, math.pi / 2))
        assert len(sub) == 81
        assert np.all(sub.points[:, 0] >= 1) and np.all(sub.points[:, 1] >= 1)

    def test_empty_set(self):
        ps = PointSet(np.empty((0, 2)), 5.0)
        assert len(annulus_cone_points(ps, square(), 0, Cone(0.0, 1.0))) == 0

    def test_annulus_beyond_window(self):
        ps = generate(GeneratorSpec(kind="lattice", R=5.0))
        assert len(annulus_cone_points(ps, square(), 100, Cone(0.0, 1.0))) == 0

    def test_strict_boundaries(self):
        # gauge exactly 10 or angle exactly 0 are excluded
        ps = PointSet(np.array([[10.0, 0.0], [5.0, 0.0], [5.0, 5.0]]), 20.0)
        sub = annulus_cone_points(ps, square(), 0, Cone(0.0, math.pi / 2))
        assert {tuple(p) for p in sub.points} == {(5.0, 5.0)}

    def test_wrapping_cone(self):
        ps = PointSet(np.array([[5.0, 0.5], [5.0, -0.5], [-5.0, 0.0]]), 20.0)
        sub = annulus_cone_points(ps, Disc(1.0), 0, Cone(-math.pi / 4, math.pi / 4))
        assert len(sub) == 2


class TestDistanceLists:
    def test_two_points_at_gauge_one(self):
        sub = PointSet(np.array([[1.0, 0.0], [0.0, 1.0]]), 2.0)
        d, dprime = distance_lists_from_two_points((0, 0), (0, 0), sub, square())
        assert d == (1.0,) and dprime == (1.0,)

    def test_disjoint_base_points(self):
        sub = PointSet(np.array([[1.0, 0.0]]), 2.0)
        d, dprime = distance_lists_from_two_points((0, 0), (2, 0), sub, square())
        assert d == (1.0,) and dprime == (1.0,)

    def test_annulus_lists_are_short(self):
        # distances from +-(1,0) to annulus points take few distinct values:
        # they fall in an interval of width independent of N
        ps = generate(GeneratorSpec(kind="lattice", R=25.0))
        gauges = np.max(np.abs(ps.points), axis=1)
        sub = PointSet(ps.points[(gauges > 10) & (gauges < 20)], ps.R)
        d, dprime = distance_lists_from_two_points((1, 0), (-1, 0), sub, square())
        assert d == tuple(float(k) for k in range(10, 21))
        assert dprime == tuple(float(k) for k in range(10, 21))
        assert len(d) <= 25 and len(dprime) <= 25

    def test_empty_subset(self):
        sub = PointSet(np.empty((0, 2)), 1.0)
        assert distance_lists_from_two_points((0, 0), (1, 0), sub, square()) == ((), ())


class TestMoser:
    def test_lattice_counts_meet_bound(self):
        ps = generate(GeneratorSpec(kind="lattice", R=100.0))
        cone = Cone(0.0, math.pi / 2)
        inner = Cone(math.pi / 8, 3 * math.pi / 8)
        rows = moser_count_check(ps, square(), cone, inner, range(0, 6))
        by_n = {r.N: r for r in rows}
        assert by_n[5].count == 579  # frozen from direct enumeration
        assert all(r.met for r in rows if not r.truncated)
        assert by_n[0].met and by_n[0].bound == 0.0

    def test_window_truncation_flag(self):
        ps = generate(GeneratorSpec(kind="lattice", R=12.0))
        cone = Cone(0.0, math.pi / 2)
        inner = Cone(math.pi / 8, 3 * math.pi / 8)
        rows = moser_count_check(ps, square(), cone, inner, [0, 3])
        assert not rows[0].truncated
        assert rows[1].truncated  # annulus (30, 40) cannot fit in R = 12

    def test_empty_set_fails_bounds(self):
        ps = PointSet(np.empty((0, 2)), 1000.0)
        cone = Cone(0.0, math.pi / 2)
        inner = Cone(math.pi / 8, 3 * math.pi / 8)
        rows = moser_count_check(ps, square(), cone, inner, [1, 2])
        assert all(r.count == 0 and not r.met for r in rows)

    def test_inner_cone_must_be_strict(self):
        ps = generate(GeneratorSpec(kind="lattice", R=30.0))
        with pytest.raises(ValueError):
            moser_count_check(ps, square(), Cone(0, 1), Cone(0, 0.5), [1])


@settings(max_examples=25, deadline=None)
@given(
    dx=st.floats(-20, 20),
    dy=st.floats(-20, 20),
)
def test_distance_set_of_two_points_is_the_gauge(dx, dy):
    pts = np.array([[0.0, 0.0], [dx, dy]])
    body = diamond()
    ds = distance_set(body, pts, tol=0.0)
    expected = gauge(body, (dx, dy))
    if expected == 0.0:
        assert ds.values == (0.0,)
    else:
        assert len(ds) == 2 and ds.values[1] == expected


def test_results_csv(tmp_path):
    path = tmp_path / "r.csv"
    write_results_csv([(5.0, 121, 11, 1.0), (10.0, 441, 21, None)], path)
    text = path.read_text()
    assert text.splitlines()[0] == "R,n_points,n_distances,min_gap"
    assert text.splitlines()[2] == "10.0,441,21,"
