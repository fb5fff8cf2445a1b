"""Boundary construction, membership, and center-set plumbing."""

import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskpoly.errors import (
    CenterParameterOutOfRange,
    EmptyInput,
)
from diskpoly.geometry import (
    DEFAULT_TOL,
    Point,
    build_disk_polygon,
    center_parameter,
    centers_from_json,
    centers_to_json,
    contains_point,
    equilateral_centers,
)
from diskpoly.measures import area

from conftest import SQRT3, lens_centers, make_lens, make_triangle, random_instance


class TestBuild:
    def test_single_disk(self):
        poly = build_disk_polygon([Point(0.0, 0.0)])
        assert len(poly.sides) == 1
        assert poly.vertices == ()
        assert math.isclose(poly.sides[0].sweep, 2.0 * math.pi)
        assert poly.center_parameter == 0.0

    def test_lens_vertices(self):
        # Two unit circles at distance 1 meet at (0, +-sqrt(3)/2).
        poly = make_lens(1.0)
        assert len(poly.sides) == 2
        ys = sorted(v.y for v in poly.vertices)
        assert ys == pytest.approx([-SQRT3 / 2.0, SQRT3 / 2.0], abs=1e-12)
        assert all(abs(v.x) < 1e-12 for v in poly.vertices)

    def test_reuleaux_vertices_are_centers(self):
        poly = make_triangle(1.0)
        assert len(poly.vertices) == 3
        for v in poly.vertices:
            assert min(v.distance(c) for c in poly.centers) < 1e-12

    def test_sides_alternate_with_vertices(self):
        poly = make_triangle(1.3)
        n = len(poly.sides)
        for k in range(n):
            start = poly.sides[k].start_point
            prev_end = poly.sides[k - 1].end_point
            assert start.distance(poly.vertices[k]) < 1e-12
            assert prev_end.distance(poly.vertices[k]) < 1e-9

    def test_redundant_generator_pruned(self):
        # The lens region lies strictly inside the unit disk at the origin.
        poly = build_disk_polygon(lens_centers(1.0) + [Point(0.0, 0.0)])
        assert len(poly.centers) == 2
        # center_parameter still reports the original input spread
        assert poly.center_parameter == pytest.approx(1.0)

    def test_duplicate_centers_merged(self):
        poly = build_disk_polygon([Point(0.0, 0.0), Point(0.0, 0.0)])
        assert len(poly.centers) == 1

    def test_rebuild_from_pruned_set_identical(self):
        poly = build_disk_polygon(lens_centers(1.0) + [Point(0.1, 0.05)])
        rebuilt = build_disk_polygon(list(poly.centers))
        assert len(rebuilt.vertices) == len(poly.vertices)
        for v, w in zip(poly.vertices, rebuilt.vertices):
            assert v.distance(w) <= DEFAULT_TOL.eps_geom

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            build_disk_polygon([])

    def test_center_parameter_out_of_range(self):
        with pytest.raises(CenterParameterOutOfRange):
            build_disk_polygon([Point(0.0, 0.0), Point(SQRT3, 0.0)])

    def test_boundary_turning_totals_two_pi(self):
        # Sweeps plus exterior vertex turns must close up a convex curve.
        for poly in (make_lens(0.8), make_triangle(1.2), random_instance(1.4, 7, seed=3)):
            total = sum(s.sweep for s in poly.sides)
            n = len(poly.sides)
            for k in range(n):
                incoming = poly.sides[k - 1].end_angle + math.pi / 2.0
                outgoing = poly.sides[k].start_angle + math.pi / 2.0
                turn = (outgoing - incoming) % (2.0 * math.pi)
                assert 0.0 <= turn < math.pi
                total += turn
            assert total == pytest.approx(2.0 * math.pi, abs=1e-9)


class TestCenterParameter:
    def test_single_point(self):
        assert center_parameter([Point(2.0, -1.0)]) == 0.0

    def test_equilateral(self):
        assert center_parameter(equilateral_centers(1.2)) == pytest.approx(1.2)

    def test_square_diagonal(self):
        s = 0.7
        pts = [Point(0, 0), Point(s, 0), Point(s, s), Point(0, s)]
        assert center_parameter(pts) == pytest.approx(s * math.sqrt(2.0))


class TestContainsPoint:
    def test_unit_disk(self):
        poly = build_disk_polygon([Point(0.0, 0.0)])
        assert contains_point(poly, Point(0.0, 0.0)) == "inside"
        assert contains_point(poly, Point(1.0, 0.0)) == "boundary"
        assert contains_point(poly, Point(1.1, 0.0)) == "outside"

    def test_lens_point_outside(self):
        # (0.9, 0) is at distance 1.4 from the left center.
        poly = make_lens(1.0)
        assert contains_point(poly, Point(0.9, 0.0)) == "outside"
        assert contains_point(poly, Point(0.0, 0.0)) == "inside"


class TestJson:
    def test_round_trip(self, tmp_path):
        pts = equilateral_centers(1.1)
        text = centers_to_json(pts)
        doc = json.loads(text)
        assert doc["centers"][1] == [1.1, 0.0]
        back = centers_from_json(text)
        assert all(p.distance(q) == 0.0 for p, q in zip(pts, back))


@given(
    d=st.floats(min_value=0.4, max_value=1.7),
    n=st.integers(min_value=1, max_value=8),
    seed=st.integers(min_value=0, max_value=10_000),
)
@settings(max_examples=40, deadline=None)
def test_random_instances_satisfy_invariants(d, n, seed):
    poly = random_instance(d, n, seed)
    for v in poly.vertices:
        for c in poly.centers:
            assert v.distance(c) <= 1.0 + DEFAULT_TOL.eps_geom
    rebuilt = build_disk_polygon(list(poly.centers))
    assert len(rebuilt.sides) == len(poly.sides)
    for v, w in zip(poly.vertices, rebuilt.vertices):
        assert v.distance(w) <= DEFAULT_TOL.eps_geom


@given(
    d=st.floats(min_value=0.6, max_value=1.6),
    n=st.integers(min_value=2, max_value=7),
    seed=st.integers(min_value=0, max_value=10_000),
    extra_seed=st.integers(min_value=0, max_value=10_000),
)
@settings(max_examples=40, deadline=None)
def test_adding_generator_never_increases_area(d, n, seed, extra_seed):
    import numpy as np

    poly = random_instance(d, n, seed)
    rng = np.random.default_rng(extra_seed)
    base = poly.centers[0]
    for _ in range(50):
        cand = Point(base.x + rng.uniform(-0.5, 0.5), base.y + rng.uniform(-0.5, 0.5))
        if all(cand.distance(c) < SQRT3 for c in poly.centers):
            bigger = build_disk_polygon(list(poly.centers) + [cand])
            assert area(bigger) <= area(poly) + 1e-12
            return
