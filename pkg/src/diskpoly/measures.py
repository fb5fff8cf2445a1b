"""Metric quantities of disk-polygons.

Area and perimeter come from the exact arc decomposition; width is computed
two ways (support-function sampling and the dual-diameter identity) and
cross-asserted, with the dual route returned as authoritative; the diameter
is an exact maximization over closed-form candidate pairs; inradius and
circumradius reduce to minimal enclosing circles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CrossCheckError, EmptyInput
from .geometry import (
    DEFAULT_TOL,
    TWO_PI,
    Arc,
    Circle,
    DiskPolygon,
    Point,
    Tolerance,
    wrap_angle,
)

_WIDTH_SAMPLES = 2048
_REFINE_TOL = 1e-12  # radians, golden-section refinement target


@dataclass(frozen=True)
class MeasureReport:
    """All metric quantities of one disk-polygon."""

    area: float
    perimeter: float
    inradius: float
    circumradius: float
    minimal_width: float
    width_direction: float
    diameter: float
    diameter_endpoints: tuple[Point, Point]
    degenerate: bool  # fewer than three contributing generators

    def to_json_dict(self) -> dict:
        return {
            "area": self.area,
            "perimeter": self.perimeter,
            "inradius": self.inradius,
            "circumradius": self.circumradius,
            "minimal_width": self.minimal_width,
            "width_direction": self.width_direction,
            "diameter": self.diameter,
            "degenerate": self.degenerate,
        }


def area(poly: DiskPolygon) -> float:
    """Region area: shoelace over the vertex cycle plus one unit-circle segment
    per side.  Arcs of containing disks always bulge outward, so every segment
    contributes positively."""
    if not poly.vertices:
        return math.pi
    shoelace = 0.0
    verts = poly.vertices
    for k in range(len(verts)):
        p, q = verts[k], verts[(k + 1) % len(verts)]
        shoelace += p.x * q.y - q.x * p.y
    segments = sum(0.5 * (s.sweep - math.sin(s.sweep)) for s in poly.sides)
    return 0.5 * shoelace + segments


def perimeter(poly: DiskPolygon) -> float:
    """Sum of arc sweeps (unit radius: arc length equals sweep angle)."""
    return sum(s.sweep for s in poly.sides)


def support(poly: DiskPolygon, theta: float) -> float:
    """Support function h(theta) = max over the region of x . (cos theta, sin theta).

    A side contributes center . u + 1 when the contact point center + u lies on
    the arc; vertices contribute v . u directly.
    """
    ux, uy = math.cos(theta), math.sin(theta)
    best = -math.inf
    for arc in poly.sides:
        if arc.contains_angle(theta):
            best = max(best, arc.center.x * ux + arc.center.y * uy + 1.0)
    for v in poly.vertices:
        best = max(best, v.x * ux + v.y * uy)
    return best


def support_batch(poly: DiskPolygon, thetas: np.ndarray) -> np.ndarray:
    """Vectorized support function over an array of directions."""
    th = np.asarray(thetas, dtype=float)
    u = np.stack([np.cos(th), np.sin(th)])  # (2, K)
    centers = np.array([[c.x, c.y] for c in poly.centers])
    vals = centers @ u + 1.0  # (n, K)
    mids = np.array([s.mid_angle for s in poly.sides])
    halves = np.array([0.5 * s.sweep for s in poly.sides])
    off = np.abs((th[None, :] - mids[:, None] + math.pi) % TWO_PI - math.pi)
    vals = np.where(off <= halves[:, None] + 1e-12, vals, -np.inf)
    h = vals.max(axis=0)
    if poly.vertices:
        verts = np.array([[v.x, v.y] for v in poly.vertices])
        h = np.maximum(h, (verts @ u).max(axis=0))
    return h


def _width_at(poly: DiskPolygon, theta: float) -> float:
    return support(poly, theta) + support(poly, theta + math.pi)


def minimal_width_sampled(
    poly: DiskPolygon, samples: int = _WIDTH_SAMPLES
) -> tuple[float, float]:
    """Minimal width by dense direction sampling plus golden-section refinement.

    Width as a function of direction is piecewise smooth with few local minima
    for small generator counts, so a fine grid bracket followed by golden
    section to 1e-12 radians is reliable.
    """
    th = np.linspace(0.0, math.pi, samples, endpoint=False)
    widths = support_batch(poly, th) + support_batch(poly, th + math.pi)
    k = int(np.argmin(widths))
    step = math.pi / samples
    lo, hi = th[k] - step, th[k] + step
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = _width_at(poly, c), _width_at(poly, d)
    while b - a > _REFINE_TOL:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = _width_at(poly, c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = _width_at(poly, d)
    theta = 0.5 * (a + b)
    return _width_at(poly, theta), theta % math.pi


def minimal_width(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> tuple[float, float]:
    """Minimal width and its direction.

    For polygons with vertices the value 2 - diameter(dual) is authoritative
    (it is exact up to the diameter's closed-form candidates); the sampled
    estimate must agree within eps_check or CrossCheckError is raised.  A
    single disk has constant width 2.
    """
    sampled_w, sampled_theta = minimal_width_sampled(poly)
    if not poly.vertices:
        return 2.0, 0.0
    from .duality import dual  # deferred: duality imports this module

    diam, (p, q) = diameter(dual(poly))
    w = 2.0 - diam
    if abs(w - sampled_w) > tol.eps_check:
        raise CrossCheckError(
            f"width routes disagree: dual {w} vs sampled {sampled_w}"
        )
    theta = math.atan2(q.y - p.y, q.x - p.x) % math.pi
    return w, theta


def diameter(poly: DiskPolygon) -> tuple[float, tuple[Point, Point]]:
    """Largest distance between two points of the region, with its endpoints.

    Exact candidate maximization: vertex-vertex pairs; vertex-arc (far
    intersection of the ray vertex -> arc center, when it lands on the arc);
    arc-arc through both centers.  For two or more generators every diameter
    chord has at least one vertex endpoint, so the candidate set is complete.
    """
    if not poly.vertices:
        c = poly.centers[0]
        return 2.0, (Point(c.x - 1.0, c.y), Point(c.x + 1.0, c.y))

    best = 0.0
    pair = (poly.vertices[0], poly.vertices[0])
    verts = poly.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            dist = verts[i].distance(verts[j])
            if dist > best:
                best, pair = dist, (verts[i], verts[j])

    for v in verts:
        for arc in poly.sides:
            L = v.distance(arc.center)
            if L <= 1e-12:
                continue  # arc endpoints (vertices) already cover this case
            theta = math.atan2(arc.center.y - v.y, arc.center.x - v.x)
            if arc.contains_angle(theta):
                dist = L + 1.0
                if dist > best:
                    best, pair = dist, (v, arc.point_at(theta))

    # Chords through both arc centers pointing outward never satisfy the
    # angular admission test for distinct generators; kept for completeness.
    for i in range(len(poly.sides)):
        for j in range(i + 1, len(poly.sides)):
            ci, cj = poly.sides[i].center, poly.sides[j].center
            dist = ci.distance(cj)
            if dist <= 1e-12:
                continue
            ti = math.atan2(ci.y - cj.y, ci.x - cj.x)
            tj = ti + math.pi
            if poly.sides[i].contains_angle(ti) and poly.sides[j].contains_angle(tj):
                p, q = poly.sides[i].point_at(ti), poly.sides[j].point_at(tj)
                d_out = p.distance(q)
                if d_out > best:
                    best, pair = d_out, (p, q)
    return best, pair


def _circle_from_two(a: Point, b: Point) -> Circle:
    cx, cy = 0.5 * (a.x + b.x), 0.5 * (a.y + b.y)
    c = Point(cx, cy)
    return Circle(c, max(c.distance(a), c.distance(b)))


def _circumcircle(a: Point, b: Point, c: Point) -> Circle | None:
    ox = (min(a.x, b.x, c.x) + max(a.x, b.x, c.x)) / 2.0
    oy = (min(a.y, b.y, c.y) + max(a.y, b.y, c.y)) / 2.0
    ax, ay = a.x - ox, a.y - oy
    bx, by = b.x - ox, b.y - oy
    cx, cy = c.x - ox, c.y - oy
    det = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(det) < 1e-14:
        return None
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
              + (cx * cx + cy * cy) * (ay - by)) / det
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
              + (cx * cx + cy * cy) * (bx - ax)) / det
    center = Point(x, y)
    return Circle(center, max(center.distance(p) for p in (a, b, c)))


_CONTAIN_SLACK = 1e-12


def _contains_all(circle: Circle, points: list[Point]) -> bool:
    limit = circle.radius + _CONTAIN_SLACK
    return all(circle.center.distance(p) <= limit for p in points)


def minimal_enclosing_circle(points: list[Point] | tuple[Point, ...]) -> Circle:
    """Exact minimal enclosing circle of a point set.

    Exhaustive search over two/three-point support sets for n <= 12 (first
    candidate wins ties, so the result is deterministic in input order);
    seeded incremental construction beyond that.
    """
    pts = list(points)
    if not pts:
        raise EmptyInput("minimal_enclosing_circle of an empty set")
    if len(pts) == 1:
        return Circle(pts[0], 0.0)
    if len(pts) <= 12:
        best: Circle | None = None
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                cand = _circle_from_two(pts[i], pts[j])
                if (best is None or cand.radius < best.radius) and _contains_all(cand, pts):
                    best = cand
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                for k in range(j + 1, len(pts)):
                    cand = _circumcircle(pts[i], pts[j], pts[k])
                    if cand is None:
                        continue
                    if (best is None or cand.radius < best.radius) and _contains_all(cand, pts):
                        best = cand
        if best is None:
            raise EmptyInput("no enclosing circle found (degenerate input)")
        return best
    return _mec_incremental(pts)


def _mec_incremental(pts: list[Point]) -> Circle:
    rng = np.random.default_rng(0)
    order = list(rng.permutation(len(pts)))
    shuffled = [pts[i] for i in order]
    circle: Circle | None = None
    for i, p in enumerate(shuffled):
        if circle is not None and _contains_all_fast(circle, p):
            continue
        circle = Circle(p, 0.0)
        for j in range(i):
            q = shuffled[j]
            if _contains_all_fast(circle, q):
                continue
            circle = _circle_from_two(p, q)
            for k in range(j):
                r = shuffled[k]
                if _contains_all_fast(circle, r):
                    continue
                cc = _circumcircle(p, q, r)
                circle = cc if cc is not None else circle
    assert circle is not None
    return circle


def _contains_all_fast(circle: Circle, p: Point) -> bool:
    return circle.center.distance(p) <= circle.radius + _CONTAIN_SLACK


def inradius(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> tuple[float, Point]:
    """Inradius and incenter.

    The incircle is concentric with the minimal enclosing circle of the
    generator centers and has radius 1 minus its radius: every point within
    1 - R of the enclosing center is within 1 of every generator, and no
    larger disk fits.
    """
    mec = minimal_enclosing_circle(poly.centers)
    r = 1.0 - mec.radius
    deepest = max(mec.center.distance(c) for c in poly.centers)
    if deepest + r > 1.0 + tol.eps_geom:
        raise CrossCheckError("computed incircle leaves the region")
    return r, mec.center


def circumradius(poly: DiskPolygon) -> tuple[float, Point]:
    """Circumradius and circumcenter (minimal enclosing circle of the vertex set).

    Vertices are the extreme points of a disk-polygon with at least two
    generators; for a lens the two arc-axis extremes are also checked, and for
    a single disk the answer is its own circle.
    """
    if not poly.vertices:
        return 1.0, poly.centers[0]
    pts = list(poly.vertices)
    if len(poly.centers) == 2:
        pts.extend(s.point_at(s.mid_angle) for s in poly.sides)
    mec = minimal_enclosing_circle(pts)
    return mec.radius, mec.center


def _bounding_box(poly: DiskPolygon) -> tuple[float, float, float, float]:
    xs, ys = [], []
    for v in poly.vertices:
        xs.append(v.x)
        ys.append(v.y)
    for arc in poly.sides:
        xs.extend((arc.start_point.x, arc.end_point.x))
        ys.extend((arc.start_point.y, arc.end_point.y))
        for theta, axis in ((0.0, "x+"), (math.pi, "x-"), (0.5 * math.pi, "y+"), (-0.5 * math.pi, "y-")):
            if arc.contains_angle(theta):
                p = arc.point_at(theta)
                xs.append(p.x)
                ys.append(p.y)
    return min(xs), max(xs), min(ys), max(ys)


def monte_carlo_area(
    poly: DiskPolygon, sample_count: int, seed: int
) -> tuple[float, float]:
    """Rejection-sampling area estimate and its standard error.

    Samples uniformly in the bounding box of the vertex/arc extremes; the
    result is deterministic for a given seed.
    """
    x0, x1, y0, y1 = _bounding_box(poly)
    box_area = (x1 - x0) * (y1 - y0)
    centers = np.array([[c.x, c.y] for c in poly.centers])
    rng = np.random.default_rng(seed)
    hits = 0
    remaining = sample_count
    chunk = 250_000
    while remaining > 0:
        m = min(chunk, remaining)
        pts = rng.uniform((x0, y0), (x1, y1), size=(m, 2))
        d2 = ((pts[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        hits += int((d2.max(axis=1) <= 1.0).sum())
        remaining -= m
    p_hat = hits / sample_count
    est = box_area * p_hat
    se = box_area * math.sqrt(max(p_hat * (1.0 - p_hat), 0.0) / sample_count)
    return est, se


def measure_report(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> MeasureReport:
    """Assemble the full MeasureReport for one disk-polygon."""
    w, theta = minimal_width(poly, tol)
    diam, endpoints = diameter(poly)
    r, _ = inradius(poly, tol)
    big_r, _ = circumradius(poly)
    return MeasureReport(
        area=area(poly),
        perimeter=perimeter(poly),
        inradius=r,
        circumradius=big_r,
        minimal_width=w,
        width_direction=theta,
        diameter=diam,
        diameter_endpoints=endpoints,
        degenerate=len(poly.centers) <= 2,
    )
