"""Closed-form metric functions of the center parameter d.

The regular disk-triangle (three unit disks on an equilateral triangle of
side d, 1 <= d < sqrt(3)) minimizes inradius, width, and area over all
disk-polygons with center parameter d; for 0 < d < 1 the reference body is
the rounded Reuleaux domain (outer parallel domain of radius 1-d of a
Reuleaux triangle of width d).  Everything here is a pure scalar function,
accurate to about 1e-12 in plain double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AlphaOutOfRange,
    DOutOfRange,
    NumericalDomainViolation,
    ReachOutOfRange,
    XOutOfInterval,
)
from .geometry import SQRT3

_DOMAIN_SLACK = 1e-12
_ACOS_CLAMP = 1e-9


def _require_triangle_range(d: float) -> float:
    """Validate 1 <= d < sqrt(3), clamping float dust at the lower edge."""
    if d < 1.0 - _DOMAIN_SLACK or d >= SQRT3:
        raise DOutOfRange(f"d={d} outside [1, sqrt(3))")
    return max(d, 1.0)


def _require_unit_range(d: float) -> float:
    """Validate 0 < d < 1, clamping float dust at the upper edge."""
    if not (0.0 < d < 1.0 + _DOMAIN_SLACK):
        raise DOutOfRange(f"d={d} outside (0, 1)")
    return min(d, 1.0)


def disk_triangle_inradius(d: float) -> float:
    """Inradius of the regular disk-triangle: 1 - d/sqrt(3)."""
    d = _require_triangle_range(d)
    return 1.0 - d / SQRT3


def disk_triangle_width(d: float) -> float:
    """Minimal width of the regular disk-triangle.

    Evaluated as 1 - (sqrt(3)/2) d + sqrt(1 - d^2/4), the cancellation-free
    equivalent of 1 - (1/2) sqrt(4 + 2 d^2 - 2 sqrt(3) d sqrt(4 - d^2)); the
    radical form loses eight digits at d = 1 where its radicand vanishes.
    """
    d = _require_triangle_range(d)
    return 1.0 - 0.5 * SQRT3 * d + math.sqrt(1.0 - 0.25 * d * d)


def disk_triangle_area(d: float) -> float:
    """Area of the regular disk-triangle:
    3 arccos(d/2) + (sqrt(3)/4) d^2 - (3/4) d sqrt(4 - d^2) - pi/2."""
    d = _require_triangle_range(d)
    return (
        3.0 * math.acos(0.5 * d)
        + 0.25 * SQRT3 * d * d
        - 0.75 * d * math.sqrt(4.0 - d * d)
        - 0.5 * math.pi
    )


def disk_triangle_area_rejected_variant(d: float) -> float:
    """Area variant with a flat arccos(d) first term in place of 3 arccos(d/2).

    Negative on all of [1, sqrt(3)), so it cannot be an area; kept only as
    recorded evidence for preferring disk_triangle_area, whose value matches
    the geometric decomposition and Monte-Carlo oracles.
    """
    d = _require_triangle_range(d)
    return (
        1.5 * math.acos(min(1.0, d))
        + 0.25 * SQRT3 * d * d
        - 0.75 * d * math.sqrt(4.0 - d * d)
        - 0.5 * math.pi
    )


def disk_triangle_perimeter(d: float) -> float:
    """Perimeter of the regular disk-triangle: 2 pi - 6 arcsin(d/2)."""
    d = _require_triangle_range(d)
    return 2.0 * math.pi - 6.0 * math.asin(0.5 * d)


def disk_triangle_dual_diameter(d: float) -> float:
    """Diameter of the dual of the regular disk-triangle:
    1 + (sqrt(3)/2) d - sqrt(1 - d^2/4), which equals 2 - disk_triangle_width(d)."""
    d = _require_triangle_range(d)
    return 1.0 + 0.5 * SQRT3 * d - math.sqrt(1.0 - 0.25 * d * d)


def dual_chord_length(d: float, alpha: float) -> float:
    """Longest chord from an arc midpoint to the opposite vertex when the apex
    half-angle is alpha: d cos(alpha) - sqrt(1 - d^2 sin^2(alpha)) + 1.

    Nondecreasing on [0, pi/6]; at alpha = pi/6 it equals the dual diameter of
    the regular disk-triangle.
    """
    d = _require_triangle_range(d)
    if alpha < -_DOMAIN_SLACK or alpha > math.pi / 6.0 + _DOMAIN_SLACK:
        raise AlphaOutOfRange(f"alpha={alpha} outside [0, pi/6]")
    alpha = min(max(alpha, 0.0), math.pi / 6.0)
    s = d * math.sin(alpha)
    return d * math.cos(alpha) - math.sqrt(1.0 - s * s) + 1.0


def _clamped_acos(value: float) -> float:
    if value > 1.0:
        if value > 1.0 + _ACOS_CLAMP:
            raise NumericalDomainViolation(f"arccos argument {value} > 1")
        value = 1.0
    elif value < -1.0:
        if value < -1.0 - _ACOS_CLAMP:
            raise NumericalDomainViolation(f"arccos argument {value} < -1")
        value = -1.0
    return math.acos(value)


def incircle_caps_area_bound(d: float, x: float) -> float:
    """Area of an incircle of radius x plus three identical caps reaching to
    distance disk_triangle_width(d) - x from its center.

    Defined for x between disk_triangle_inradius(d) and half the width;
    increasing in x there, with equality to disk_triangle_area(d) at the lower
    endpoint.  Matches pi x^2 + 3 cap_area(x, width - x).
    """
    d = _require_triangle_range(d)
    lo = disk_triangle_inradius(d)
    hi = 0.5 * disk_triangle_width(d)
    if x < lo - 1e-9 or x > hi + 1e-9:
        raise XOutOfInterval(f"x={x} outside [{lo}, {hi}] for d={d}")
    y = 0.5 * SQRT3 * d - math.sqrt(1.0 - 0.25 * d * d)  # 1 - width(d)
    one_x = 1.0 - x
    a1 = (1.0 + 2.0 * one_x * y - y * y) / (2.0 * one_x)
    a2 = (1.0 - one_x * one_x - (one_x - y) ** 2) / (2.0 * one_x * (one_x - y))
    radicand = (3.0 - 2.0 * x - y) * (1.0 - 2.0 * x - y) * (1.0 - y * y)
    if radicand < -_ACOS_CLAMP:
        raise NumericalDomainViolation(f"negative radicand {radicand}")
    return (
        math.pi * x * x
        + 3.0 * _clamped_acos(a1)
        - 3.0 * x * x * _clamped_acos(a2)
        - 1.5 * math.sqrt(max(radicand, 0.0))
    )


def width_disk_area(d: float) -> float:
    """Area of the disk whose diameter is the disk-triangle width:
    (pi/4) width(d)^2.  Strictly exceeds disk_triangle_area(d) on [1, sqrt(3))."""
    w = disk_triangle_width(d)
    return 0.25 * math.pi * w * w


def _green_arc(cx: float, cy: float, r: float, a0: float, a1: float) -> float:
    """Signed area contribution of a directed circular arc (Green's theorem)."""
    return 0.5 * (
        cx * r * (math.sin(a1) - math.sin(a0))
        + cy * r * (math.cos(a0) - math.cos(a1))
        + r * r * (a1 - a0)
    )


def cap_area(x: float, reach: float) -> float:
    """Area of the cap added to a disk of radius x by forming the spindle hull
    with a point at distance ``reach`` from its center, then removing the disk.

    Built geometrically: two unit-circle flanks run tangent-continuously from
    the disk to the apex point, and the enclosed area is integrated along the
    directed boundary.  Serves as the independent oracle for
    incircle_caps_area_bound.
    """
    if not 0.0 < x < 1.0:
        raise ReachOutOfRange(f"disk radius x={x} outside (0, 1)")
    if not x < reach <= 2.0 - x:
        raise ReachOutOfRange(f"reach={reach} outside (x, 2 - x] for x={x}")
    # Flank circles: unit radius, tangent internally to the disk, through the
    # apex p = (reach, 0); centers at (a, +-b) with |center| = 1 - x.  The
    # factored radicand keeps b exact at both degenerate ends of the reach
    # interval, where (1-x)^2 - a^2 cancels catastrophically.
    a = (reach * reach + (1.0 - x) ** 2 - 1.0) / (2.0 * reach)
    b = math.sqrt(
        max((reach - x) * (reach + 2.0 - x) * (2.0 - x - reach) * (reach + x), 0.0)
    ) / (2.0 * reach)
    scale = -x / (1.0 - x)  # tangency point is the disk point opposite the flank center
    upper_t = (scale * a, -scale * b)
    lower_t = (scale * a, scale * b)

    def ccw(a0: float, a1: float) -> float:
        return (a1 - a0) % (2.0 * math.pi)

    # Lower flank (center above the axis) from lower tangency to the apex.
    c_up = (a, b)
    a0 = math.atan2(lower_t[1] - c_up[1], lower_t[0] - c_up[0])
    a1 = math.atan2(0.0 - c_up[1], reach - c_up[0])
    total = _green_arc(c_up[0], c_up[1], 1.0, a0, a0 + ccw(a0, a1))
    # Upper flank (center below the axis) from the apex to the upper tangency.
    c_dn = (a, -b)
    a0 = math.atan2(0.0 + b, reach - a)
    a1 = math.atan2(upper_t[1] + b, upper_t[0] - a)
    total += _green_arc(c_dn[0], c_dn[1], 1.0, a0, a0 + ccw(a0, a1))
    # Front of the disk, traversed clockwise from the upper to the lower tangency.
    phi = math.atan2(upper_t[1], upper_t[0])
    total += _green_arc(0.0, 0.0, x, phi, -phi)
    return total


def reuleaux_measures(w: float) -> tuple[float, float]:
    """(area, perimeter) of a Reuleaux triangle of width w:
    ((pi - sqrt(3))/2 w^2, pi w)."""
    if w <= 0.0:
        raise DOutOfRange(f"width {w} must be positive")
    return 0.5 * (math.pi - SQRT3) * w * w, math.pi * w


def outer_parallel_area(area: float, perimeter: float, rho: float) -> float:
    """Area of the outer parallel domain of radius rho of a convex domain:
    a + p rho + pi rho^2."""
    return area + perimeter * rho + math.pi * rho * rho


def rounded_reuleaux_measures(d: float) -> tuple[float, float]:
    """(area, perimeter) of the rounded Reuleaux domain for 0 < d < 1: the
    outer parallel domain of radius 1-d of a Reuleaux triangle of width d,
    a constant-width-(2-d) body with area (pi - sqrt(3))/2 d^2 - pi d + pi and
    perimeter pi (2 - d)."""
    d = _require_unit_range(d)
    return 0.5 * (math.pi - SQRT3) * d * d - math.pi * d + math.pi, math.pi * (2.0 - d)


@dataclass(frozen=True)
class TriangleProfile:
    """Closed-form metric profile of the extremal body at center parameter d."""

    d: float
    inradius: float
    minimal_width: float
    area: float
    perimeter: float
    dual_diameter: float

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "inradius": self.inradius,
            "minimal_width": self.minimal_width,
            "area": self.area,
            "perimeter": self.perimeter,
            "dual_diameter": self.dual_diameter,
        }


def extremal_profile(d: float) -> TriangleProfile:
    """Profile of the extremal body: the regular disk-triangle for d >= 1, the
    rounded Reuleaux domain for 0 < d < 1."""
    if d >= 1.0 - _DOMAIN_SLACK:
        return TriangleProfile(
            d=d,
            inradius=disk_triangle_inradius(d),
            minimal_width=disk_triangle_width(d),
            area=disk_triangle_area(d),
            perimeter=disk_triangle_perimeter(d),
            dual_diameter=disk_triangle_dual_diameter(d),
        )
    ring_area, ring_perimeter = rounded_reuleaux_measures(d)
    return TriangleProfile(
        d=d,
        inradius=1.0 - d / SQRT3,
        minimal_width=2.0 - d,
        area=ring_area,
        perimeter=ring_perimeter,
        dual_diameter=d,
    )
