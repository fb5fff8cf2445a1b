"""Planar primitives and boundary construction for intersections of unit disks.

A disk-polygon is the intersection of finitely many closed unit-radius disks
with non-empty interior.  Its boundary alternates vertices and unit-circle
arcs (sides), one side per contributing generator.  The kernel here computes,
for each generating circle, the angular interval of that circle lying inside
every other disk; the surviving intervals, sorted by outward-normal angle,
are exactly the sides in counterclockwise order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    CenterParameterOutOfRange,
    DegenerateIntersection,
    EmptyInput,
)

SQRT3 = math.sqrt(3.0)
TWO_PI = 2.0 * math.pi


def wrap_angle(theta: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    t = math.fmod(theta, TWO_PI)
    if t <= -math.pi:
        t += TWO_PI
    elif t > math.pi:
        t -= TWO_PI
    return t


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds.

    eps_geom: coincidence/incidence threshold for lengths (must be <= 1e-6).
    eps_angle: arcs with smaller sweep are treated as tangencies and pruned.
    eps_check: slack threshold for identity and inequality checks.
    """

    eps_geom: float = 1e-9
    eps_angle: float = 1e-9
    eps_check: float = 1e-7

    def __post_init__(self) -> None:
        if min(self.eps_geom, self.eps_angle, self.eps_check) <= 0.0:
            raise ValueError("all tolerances must be strictly positive")
        if self.eps_geom > 1e-6:
            raise ValueError("eps_geom must be <= 1e-6")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    """A location in the plane; the unit of length is the generating-disk radius."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def distance(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius >= 0.0):
            raise ValueError(f"invalid radius {self.radius}")


@dataclass(frozen=True)
class Arc:
    """Counterclockwise unit-circle arc about ``center``.

    Angles are absolute directions; the sweep is ``end_angle - start_angle``,
    in (0, 2*pi].  A full circle is stored as start -pi, end +pi.
    """

    center: Point
    start_angle: float
    end_angle: float

    def __post_init__(self) -> None:
        if not 0.0 < self.sweep <= TWO_PI + 1e-15:
            raise ValueError(f"arc sweep {self.sweep} outside (0, 2*pi]")

    @property
    def sweep(self) -> float:
        return self.end_angle - self.start_angle

    @property
    def mid_angle(self) -> float:
        return self.start_angle + 0.5 * self.sweep

    def point_at(self, theta: float) -> Point:
        return Point(self.center.x + math.cos(theta), self.center.y + math.sin(theta))

    @property
    def start_point(self) -> Point:
        return self.point_at(self.start_angle)

    @property
    def end_point(self) -> Point:
        return self.point_at(self.end_angle)

    def contains_angle(self, theta: float, slack: float = 1e-12) -> bool:
        """Whether direction ``theta`` falls inside the arc's angular span."""
        off = (theta - self.start_angle) % TWO_PI
        return off <= self.sweep + slack or off >= TWO_PI - slack


@dataclass(frozen=True)
class DiskPolygon:
    """Boundary decomposition of an intersection of unit disks.

    ``centers[k]`` generates ``sides[k]``; ``vertices[k]`` is the start point
    of ``sides[k]`` (empty for a single disk).  ``center_parameter`` is the
    maximum pairwise distance over the ORIGINAL input center set, before any
    pruning of non-contributing generators.
    """

    centers: tuple[Point, ...]
    vertices: tuple[Point, ...]
    sides: tuple[Arc, ...]
    center_parameter: float

    @property
    def n_generators(self) -> int:
        return len(self.centers)


def center_parameter(centers: list[Point] | tuple[Point, ...]) -> float:
    """Maximum pairwise Euclidean distance of a center set (0 for a single point)."""
    if not centers:
        raise EmptyInput("center_parameter of an empty set")
    best = 0.0
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            best = max(best, centers[i].distance(centers[j]))
    return best


def build_disk_polygon(
    centers: list[Point] | tuple[Point, ...], tol: Tolerance = DEFAULT_TOL
) -> DiskPolygon:
    """Construct the disk-polygon generated by unit disks at ``centers``.

    Non-contributing generators (no boundary arc, or arc sweep below
    ``tol.eps_angle``) are pruned; the reported center_parameter is still
    taken over the original input set.

    Raises EmptyInput, CenterParameterOutOfRange (pairwise distance >=
    sqrt(3)), or DegenerateIntersection.
    """
    if not centers:
        raise EmptyInput("build_disk_polygon needs at least one center")
    d0 = center_parameter(centers)
    if d0 >= SQRT3:
        raise CenterParameterOutOfRange(
            f"max pairwise center distance {d0} >= sqrt(3)"
        )
    return assemble_boundary(centers, d0, tol)


def assemble_boundary(
    centers: list[Point] | tuple[Point, ...],
    recorded_parameter: float,
    tol: Tolerance = DEFAULT_TOL,
) -> DiskPolygon:
    """Boundary kernel without the sqrt(3) family constraint.

    Dual polygons are generated from vertex sets whose spread may reach up to
    (but never equals) 2, so the kernel only requires every pairwise distance
    to stay below 2.  ``build_disk_polygon`` applies the stricter sqrt(3)
    precondition before delegating here.
    """
    uniq: list[Point] = []
    for p in centers:
        if all(p.distance(q) > tol.eps_geom for q in uniq):
            uniq.append(p)
    for i in range(len(uniq)):
        for j in range(i + 1, len(uniq)):
            if uniq[i].distance(uniq[j]) >= 2.0:
                raise DegenerateIntersection(
                    "two generators at distance >= 2: empty interior"
                )

    active = uniq
    while True:
        intervals = _surviving_intervals(active)
        keep = [
            (c, iv)
            for c, iv in zip(active, intervals)
            if iv is not None and 2.0 * iv[1] >= tol.eps_angle
        ]
        if not keep:
            raise DegenerateIntersection("pruning removed every generator")
        if len(keep) == len(active):
            break
        # Dropping a tangent generator can enlarge the remaining arcs, so
        # recompute against survivors until stable.
        active = [c for c, _ in keep]

    if len(keep) == 1:
        c = keep[0][0]
        side = Arc(c, -math.pi, math.pi)
        return DiskPolygon((c,), (), (side,), recorded_parameter)

    # Outward normals along a convex boundary rotate monotonically, so sorting
    # sides by their normal mid-angle yields counterclockwise boundary order.
    keep.sort(key=lambda item: wrap_angle(item[1][0]))
    sides = []
    for c, (mid, half) in keep:
        start = wrap_angle(mid - half)
        sides.append(Arc(c, start, start + 2.0 * half))
    ordered_centers = tuple(c for c, _ in keep)

    vertices = []
    n = len(sides)
    for k in range(n):
        prev_end = sides[k - 1].end_point
        cur_start = sides[k].start_point
        gap = prev_end.distance(cur_start)
        if gap > max(tol.eps_geom, 1e-12):
            raise DegenerateIntersection(
                f"boundary chain mismatch at vertex {k}: gap {gap}"
            )
        vertices.append(cur_start)

    poly = DiskPolygon(ordered_centers, tuple(vertices), tuple(sides), recorded_parameter)
    _validate_vertices(poly, tol)
    return poly


def _surviving_intervals(
    centers: list[Point],
) -> list[tuple[float, float] | None]:
    """Angular interval (mid, half-width) of each circle lying in all other disks.

    The portion of circle i inside disk j is the set of directions within
    acos(dist/2) of the direction toward center j; each such interval is a
    half-plane cut, so the intersection over j is a single interval (or empty,
    in which case the generator does not contribute).
    """
    out: list[tuple[float, float] | None] = []
    for i, ci in enumerate(centers):
        mid, half = 0.0, math.pi  # full circle
        alive = True
        for j, cj in enumerate(centers):
            if j == i:
                continue
            dist = ci.distance(cj)
            phi = math.atan2(cj.y - ci.y, cj.x - ci.x)
            a = math.acos(min(1.0, 0.5 * dist))
            if half == math.pi:
                mid, half = phi, a
                continue
            # Both half-widths are < pi/2 here, so the overlap can be taken on
            # the unwrapped line around mid.
            g = wrap_angle(phi - mid)
            lo = max(-half, g - a)
            hi = min(half, g + a)
            if hi <= lo:
                alive = False
                break
            mid, half = wrap_angle(mid + 0.5 * (lo + hi)), 0.5 * (hi - lo)
        out.append((mid, half) if alive else None)
    return out


def _validate_vertices(poly: DiskPolygon, tol: Tolerance) -> None:
    for v in poly.vertices:
        for c in poly.centers:
            if v.distance(c) > 1.0 + tol.eps_geom:
                raise DegenerateIntersection(
                    f"vertex ({v.x}, {v.y}) outside generator at ({c.x}, {c.y})"
                )


def contains_point(poly: DiskPolygon, p: Point, tol: Tolerance = DEFAULT_TOL) -> str:
    """Classify ``p`` against the region: 'inside', 'boundary', or 'outside'.

    Uses the maximum over generators of (distance to center - 1) against
    +-eps_geom.
    """
    depth = max(p.distance(c) for c in poly.centers) - 1.0
    if depth < -tol.eps_geom:
        return "inside"
    if depth > tol.eps_geom:
        return "outside"
    return "boundary"


def equilateral_centers(d: float, origin: Point = Point(0.0, 0.0)) -> list[Point]:
    """Vertices of an equilateral triangle of side ``d`` (generators of the
    regular disk-triangle)."""
    return [
        Point(origin.x, origin.y),
        Point(origin.x + d, origin.y),
        Point(origin.x + 0.5 * d, origin.y + 0.5 * SQRT3 * d),
    ]


def centers_to_json(centers: list[Point] | tuple[Point, ...]) -> str:
    """Serialize a center set as the canonical {'centers': [[x, y], ...]} document."""
    return json.dumps({"centers": [[p.x, p.y] for p in centers]})


def centers_from_json(text: str) -> list[Point]:
    doc = json.loads(text)
    return [Point(float(x), float(y)) for x, y in doc["centers"]]


def load_centers(path: str | Path) -> list[Point]:
    return centers_from_json(Path(path).read_text())


def dump_centers(centers: list[Point] | tuple[Point, ...], path: str | Path) -> None:
    Path(path).write_text(centers_to_json(centers) + "\n")
