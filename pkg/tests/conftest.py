"""Shared fixtures and instance builders for the test suite."""

import math

import pytest

from diskpoly.geometry import (
    DEFAULT_TOL,
    Point,
    build_disk_polygon,
    equilateral_centers,
)
from diskpoly.verification import GeneratorConfig, random_center_set

SQRT3 = math.sqrt(3.0)


@pytest.fixture
def tol():
    return DEFAULT_TOL


def lens_centers(d: float) -> list[Point]:
    return [Point(-0.5 * d, 0.0), Point(0.5 * d, 0.0)]


def make_lens(d: float):
    return build_disk_polygon(lens_centers(d))


def make_triangle(d: float):
    return build_disk_polygon(equilateral_centers(d))


def random_instance(d: float, n: int, seed: int, mode: str = "stretched"):
    cfg = GeneratorConfig(d=d, n_centers=n, seed=seed, spread_mode=mode)
    return build_disk_polygon(random_center_set(cfg))
