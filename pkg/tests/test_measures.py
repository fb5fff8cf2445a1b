"""Metric quantities: anchors against hand-derived values plus independent
oracles (Monte-Carlo area, dense boundary sampling for the diameter)."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskpoly.errors import EmptyInput
from diskpoly.geometry import Point, build_disk_polygon, contains_point
from diskpoly.measures import (
    area,
    circumradius,
    diameter,
    inradius,
    measure_report,
    minimal_enclosing_circle,
    minimal_width,
    minimal_width_sampled,
    monte_carlo_area,
    perimeter,
    support,
    support_batch,
)

from conftest import SQRT3, make_lens, make_triangle, random_instance

# Hand-derived lens values: vertices at distance 2*sqrt(1 - d^2/4), area
# 2*arccos(d/2) - (d/2)*sqrt(4 - d^2).
LENS1_AREA = 1.2283696986087567
LENS05_AREA = 2.152109225029709
TRI1_AREA = 0.5 * (math.pi - SQRT3)


class TestArea:
    def test_reuleaux_anchor(self):
        assert area(make_triangle(1.0)) == pytest.approx(TRI1_AREA, abs=1e-12)

    def test_single_disk(self):
        assert area(build_disk_polygon([Point(3.0, 4.0)])) == pytest.approx(math.pi)

    def test_lens(self):
        assert area(make_lens(1.0)) == pytest.approx(LENS1_AREA, abs=1e-12)
        assert area(make_lens(0.5)) == pytest.approx(LENS05_AREA, abs=1e-12)

    def test_triangle_against_decomposition_oracle(self):
        # Vertex triangle of side t = sqrt(3)*sqrt(1-d^2/4) - d/2 plus three
        # unit segments over chords of length t.
        for d in (1.0, 1.1, 1.3, 1.5):
            t = SQRT3 * math.sqrt(1.0 - d * d / 4.0) - 0.5 * d
            s = 2.0 * math.asin(0.5 * t)
            oracle = (SQRT3 / 4.0) * t * t + 1.5 * (s - math.sin(s))
            assert area(make_triangle(d)) == pytest.approx(oracle, abs=1e-12)


class TestPerimeter:
    def test_anchors(self):
        assert perimeter(make_triangle(1.0)) == pytest.approx(math.pi, abs=1e-12)
        assert perimeter(build_disk_polygon([Point(0, 0)])) == pytest.approx(2 * math.pi)
        assert perimeter(make_triangle(1.2)) == pytest.approx(
            2.0 * math.pi - 6.0 * math.asin(0.6), abs=1e-12
        )


class TestSupport:
    def test_unit_disk(self):
        poly = build_disk_polygon([Point(0.0, 0.0)])
        for theta in (0.0, 0.7, 2.0, -1.3):
            assert support(poly, theta) == pytest.approx(1.0)

    def test_lens_vertex_and_arc_contacts(self):
        poly = make_lens(1.0)
        assert support(poly, math.pi / 2.0) == pytest.approx(SQRT3 / 2.0, abs=1e-12)
        assert support(poly, 0.0) == pytest.approx(0.5, abs=1e-12)

    def test_batch_matches_scalar(self):
        poly = random_instance(1.3, 6, seed=11)
        thetas = np.linspace(0.0, 2.0 * math.pi, 97)
        batch = support_batch(poly, thetas)
        for th, h in zip(thetas, batch):
            assert support(poly, float(th)) == pytest.approx(float(h), abs=1e-12)

    @given(
        d=st.floats(min_value=0.6, max_value=1.6),
        n=st.integers(min_value=2, max_value=7),
        seed=st.integers(min_value=0, max_value=5_000),
        theta=st.floats(min_value=0.0, max_value=2.0 * math.pi),
    )
    @settings(max_examples=40, deadline=None)
    def test_support_convexity(self, d, n, seed, theta):
        poly = random_instance(d, n, seed)
        delta = 1e-3
        lhs = support(poly, theta - delta) + support(poly, theta + delta)
        assert lhs >= 2.0 * support(poly, theta) * math.cos(delta) - 1e-7

    def test_periodicity(self):
        poly = random_instance(1.1, 5, seed=2)
        for theta in (0.3, 2.2, 4.4):
            assert support(poly, theta) == pytest.approx(
                support(poly, theta + 2.0 * math.pi), abs=1e-12
            )


class TestWidth:
    def test_anchors(self):
        assert minimal_width(make_triangle(1.0))[0] == pytest.approx(1.0, abs=1e-12)
        assert minimal_width(make_lens(1.0))[0] == pytest.approx(1.0, abs=1e-12)
        # 1 - (sqrt(3)/2)*1.2 + sqrt(1 - 0.36) evaluates to 0.7607695154586737
        assert minimal_width(make_triangle(1.2))[0] == pytest.approx(
            0.7607695154586737, abs=1e-12
        )

    def test_single_disk_constant_two(self):
        poly = build_disk_polygon([Point(0.5, -0.5)])
        assert minimal_width(poly) == (2.0, 0.0)

    def test_sampled_route_agrees(self):
        for seed in range(5):
            poly = random_instance(1.4, 6, seed=seed)
            w_dual, _ = minimal_width(poly)
            w_sampled, _ = minimal_width_sampled(poly)
            assert abs(w_dual - w_sampled) < 1e-9


class TestDiameter:
    def test_anchors(self):
        assert diameter(build_disk_polygon([Point(0, 0)]))[0] == pytest.approx(2.0)
        d, (p, q) = diameter(make_lens(1.0))
        assert d == pytest.approx(SQRT3, abs=1e-12)
        assert abs(p.x) < 1e-9 and abs(q.x) < 1e-9  # the two lens vertices
        assert diameter(make_triangle(1.0))[0] == pytest.approx(1.0, abs=1e-12)

    def test_endpoints_on_boundary(self):
        for seed in range(6):
            poly = random_instance(1.2, 5, seed=seed)
            _, (p, q) = diameter(poly)
            assert contains_point(poly, p) == "boundary"
            assert contains_point(poly, q) == "boundary"

    def test_against_dense_sampling_oracle(self):
        # Brute-force pairwise distances over densely sampled boundary points.
        for seed in (1, 7):
            poly = random_instance(1.5, 5, seed=seed)
            pts = []
            for arc in poly.sides:
                ts = np.linspace(arc.start_angle, arc.end_angle, 400)
                pts.append(
                    np.stack(
                        [arc.center.x + np.cos(ts), arc.center.y + np.sin(ts)], axis=1
                    )
                )
            cloud = np.concatenate(pts)
            diff = cloud[:, None, :] - cloud[None, :, :]
            brute = float(np.sqrt((diff**2).sum(axis=2)).max())
            exact, _ = diameter(poly)
            assert exact >= brute - 1e-9
            assert exact == pytest.approx(brute, abs=1e-4)


class TestMinimalEnclosingCircle:
    def test_equilateral_jung_extremal(self):
        from diskpoly.geometry import equilateral_centers

        for d in (0.8, 1.0, 1.4):
            circ = minimal_enclosing_circle(equilateral_centers(d))
            assert circ.radius == pytest.approx(d / SQRT3, abs=1e-12)

    def test_degenerate_inputs(self):
        assert minimal_enclosing_circle([Point(1, 2)]).radius == 0.0
        circ = minimal_enclosing_circle([Point(0, 0), Point(1.2, 0)])
        assert circ.radius == pytest.approx(0.6)
        assert circ.center.x == pytest.approx(0.6)
        with pytest.raises(EmptyInput):
            minimal_enclosing_circle([])

    def test_square(self):
        s = 0.9
        circ = minimal_enclosing_circle(
            [Point(0, 0), Point(s, 0), Point(s, s), Point(0, s)]
        )
        assert circ.radius == pytest.approx(s / math.sqrt(2.0), abs=1e-12)

    def test_collinear(self):
        circ = minimal_enclosing_circle([Point(0, 0), Point(0.5, 0), Point(1.4, 0)])
        assert circ.radius == pytest.approx(0.7, abs=1e-12)

    def test_large_set_incremental_path(self):
        rng = np.random.default_rng(5)
        pts = [Point(float(x), float(y)) for x, y in rng.uniform(-0.5, 0.5, (30, 2))]
        circ = minimal_enclosing_circle(pts)
        assert all(circ.center.distance(p) <= circ.radius + 1e-9 for p in pts)
        # matches the exhaustive answer on a subset-independent recomputation
        brute = minimal_enclosing_circle(pts[:12])
        assert circ.radius >= brute.radius - 1e-9

    @given(seed=st.integers(min_value=0, max_value=5_000), n=st.integers(min_value=2, max_value=9))
    @settings(max_examples=40, deadline=None)
    def test_jung_bound(self, seed, n):
        rng = np.random.default_rng(seed)
        pts = [Point(float(x), float(y)) for x, y in rng.uniform(-0.6, 0.6, (n, 2))]
        spread = max(pts[i].distance(pts[j]) for i in range(n) for j in range(i + 1, n))
        circ = minimal_enclosing_circle(pts)
        assert circ.radius <= spread / SQRT3 + 1e-9


class TestRadii:
    def test_inradius_anchors(self):
        r, center = inradius(make_triangle(1.2))
        assert r == pytest.approx(1.0 - 1.2 / SQRT3, abs=1e-12)
        r1, c1 = inradius(build_disk_polygon([Point(2, 2)]))
        assert r1 == pytest.approx(1.0) and c1.distance(Point(2, 2)) < 1e-12
        r2, c2 = inradius(make_lens(1.0))
        assert r2 == pytest.approx(0.5, abs=1e-12)
        assert c2.distance(Point(0, 0)) < 1e-12

    def test_circumradius_anchors(self):
        assert circumradius(build_disk_polygon([Point(0, 0)]))[0] == pytest.approx(1.0)
        assert circumradius(make_triangle(1.0))[0] == pytest.approx(1 / SQRT3, abs=1e-12)
        assert circumradius(make_lens(1.0))[0] == pytest.approx(SQRT3 / 2.0, abs=1e-12)


class TestMonteCarlo:
    def test_unit_disk(self):
        est, se = monte_carlo_area(build_disk_polygon([Point(0, 0)]), 200_000, seed=1)
        assert abs(est - math.pi) <= 3.0 * se

    def test_reuleaux_and_lens(self):
        est, se = monte_carlo_area(make_triangle(1.0), 200_000, seed=2)
        assert abs(est - TRI1_AREA) <= 3.0 * se
        est, se = monte_carlo_area(make_lens(1.0), 200_000, seed=3)
        assert abs(est - LENS1_AREA) <= 3.0 * se

    def test_deterministic_for_seed(self):
        poly = make_triangle(1.1)
        assert monte_carlo_area(poly, 50_000, seed=9) == monte_carlo_area(poly, 50_000, seed=9)

    @given(
        d=st.floats(min_value=0.6, max_value=1.6),
        n=st.integers(min_value=1, max_value=7),
        seed=st.integers(min_value=0, max_value=3_000),
    )
    @settings(max_examples=15, deadline=None)
    def test_agrees_with_analytic(self, d, n, seed):
        poly = random_instance(d, n, seed)
        est, se = monte_carlo_area(poly, 100_000, seed=seed + 1)
        assert abs(est - area(poly)) <= 3.5 * max(se, 1e-12)


class TestMeasureReport:
    def test_json_keys_exact(self):
        report = measure_report(make_triangle(1.1))
        assert list(report.to_json_dict()) == [
            "area",
            "perimeter",
            "inradius",
            "circumradius",
            "minimal_width",
            "width_direction",
            "diameter",
            "degenerate",
        ]
        assert report.degenerate is False
        assert measure_report(make_lens(0.9)).degenerate is True

    @given(
        d=st.floats(min_value=0.6, max_value=1.6),
        n=st.integers(min_value=2, max_value=8),
        seed=st.integers(min_value=0, max_value=3_000),
    )
    @settings(max_examples=30, deadline=None)
    def test_value_chain(self, d, n, seed):
        poly = random_instance(d, n, seed)
        rep = measure_report(poly)
        assert 0.0 < rep.area <= math.pi + 1e-12
        assert 0.0 < rep.perimeter <= 2.0 * math.pi + 1e-12
        assert 0.0 < rep.inradius <= 1.0 + 1e-12
        assert 2.0 * rep.inradius <= rep.minimal_width + 1e-9
        assert rep.minimal_width <= rep.diameter + 1e-9
        assert rep.diameter <= 2.0 + 1e-12
