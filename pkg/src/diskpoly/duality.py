"""Dual disk-polygons and spindle convex hulls.

The dual of a disk-polygon is generated by unit disks centered at its
vertices.  Applying the construction twice returns the original region, and
the dual of a polygon built on a point set is the spindle convex hull of that
set (the intersection of all unit disks containing it).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DiameterTooLarge, EmptyInput, NoVertices
from .geometry import (
    DEFAULT_TOL,
    SQRT3,
    DiskPolygon,
    Point,
    Tolerance,
    assemble_boundary,
    build_disk_polygon,
    center_parameter,
)
from .measures import support_batch


def dual(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> DiskPolygon:
    """The dual disk-polygon, generated by unit disks at the vertices.

    Vertex sets can spread beyond sqrt(3) (up to but never reaching 2), so the
    dual is built with the relaxed boundary kernel rather than
    build_disk_polygon.  A single disk has no vertices and no dual.
    """
    if not poly.vertices:
        raise NoVertices("dual of a single disk is undefined")
    verts = list(poly.vertices)
    return assemble_boundary(verts, center_parameter(verts), tol)


def involution_defect(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> float:
    """Symmetrized Hausdorff distance between the generator set of ``poly`` and
    of its double dual; at most eps_geom for any valid disk-polygon."""
    back = dual(dual(poly, tol), tol)
    a = poly.centers
    b = back.centers

    def one_sided(src, dst):
        return max(min(p.distance(q) for q in dst) for p in src)

    return max(one_sided(a, b), one_sided(b, a))


def spindle_hull(
    points: list[Point] | tuple[Point, ...], tol: Tolerance = DEFAULT_TOL
) -> DiskPolygon:
    """Spindle convex hull of a finite point set of diameter < sqrt(3).

    Computed via the double-dual route: the dual of the disk-polygon generated
    at the points is exactly the hull, and its vertices are a subset of the
    input points.  A single point degenerates (NoVertices).
    """
    if not points:
        raise EmptyInput("spindle_hull of an empty set")
    if len(points) > 1 and center_parameter(list(points)) >= SQRT3:
        raise DiameterTooLarge("spindle hull input has diameter >= sqrt(3)")
    return dual(build_disk_polygon(points, tol), tol)


def constant_width_defect(
    poly: DiskPolygon, samples: int = 360, tol: Tolerance = DEFAULT_TOL
) -> float:
    """Deviation of the Minkowski sum of a polygon and its dual from constant
    width 2, maximized over ``samples`` equally spaced directions."""
    dual_poly = dual(poly, tol)
    th = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    total = (
        support_batch(poly, th)
        + support_batch(poly, th + math.pi)
        + support_batch(dual_poly, th)
        + support_batch(dual_poly, th + math.pi)
    )
    return float(np.max(np.abs(total - 2.0)))
