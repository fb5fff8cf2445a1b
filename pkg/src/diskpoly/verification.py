"""Random-instance generation, inequality/identity checkers, extremal search,
and the open-problem perimeter probe.

Every checker returns a CheckResult with a signed slack; for proven
statements a failure over valid instances is a bug in this package, never a
counterexample.  The perimeter floor, by contrast, is an open question: the
probe only reports evidence and flags would-be counterexamples for review.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import closed_forms as forms
from . import duality, measures
from .errors import DOutOfRange
from .geometry import (
    DEFAULT_TOL,
    SQRT3,
    DiskPolygon,
    Point,
    Tolerance,
    build_disk_polygon,
    center_parameter,
    centers_to_json,
    equilateral_centers,
)

_COOLING_STREAK = 10  # consecutive rejections before one cooling step


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one inequality or identity check.

    slack is lhs - rhs; an inequality passes when slack >= -eps_check (or > 0
    for strict checks), an identity when |slack| <= eps_check.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    passed: bool
    instance_digest: str
    equality: bool | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "pass": self.passed,
            "instance_digest": self.instance_digest,
        }
        if self.equality is not None:
            doc["equality"] = self.equality
        return doc


@dataclass(frozen=True)
class GeneratorConfig:
    """Random center-set generator settings.

    spread_mode 'ball' draws uniformly in a disk of radius d/2 (pairwise
    distances <= d by containment); 'stretched' additionally rescales about
    the centroid so the realized max pairwise distance equals d.
    """

    d: float
    n_centers: int
    seed: int
    spread_mode: str = "stretched"

    def __post_init__(self) -> None:
        if not 0.0 < self.d < SQRT3:
            raise DOutOfRange(f"d={self.d} outside (0, sqrt(3))")
        if self.n_centers < 1:
            raise ValueError("n_centers must be >= 1")
        if self.spread_mode not in ("ball", "stretched"):
            raise ValueError(f"unknown spread_mode {self.spread_mode!r}")


@dataclass(frozen=True)
class SearchConfig:
    """Multi-start perturbation-descent settings."""

    d: float
    n_centers: int
    restarts: int
    steps: int
    initial_step: float = 0.08
    cooling: float = 0.9
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 < self.d < SQRT3:
            raise DOutOfRange(f"d={self.d} outside (0, sqrt(3))")
        if min(self.n_centers, self.restarts, self.steps) < 1:
            raise ValueError("n_centers, restarts, and steps must be positive")
        if self.initial_step <= 0.0:
            raise ValueError("initial_step must be positive")
        if not 0.0 < self.cooling < 1.0:
            raise ValueError("cooling must lie in (0, 1)")


def instance_digest(centers: list[Point] | tuple[Point, ...]) -> str:
    return hashlib.sha256(centers_to_json(centers).encode()).hexdigest()[:12]


def random_center_set(cfg: GeneratorConfig) -> list[Point]:
    """Deterministic random center set with pairwise distances <= d."""
    rng = np.random.default_rng(cfg.seed)
    pts = _sample_in_disk(rng, cfg.n_centers, 0.5 * cfg.d)
    if cfg.spread_mode == "stretched" and cfg.n_centers >= 2:
        pts = _stretch_to(pts, cfg.d)
    return [Point(float(x), float(y)) for x, y in pts]


def _sample_in_disk(rng: np.random.Generator, n: int, radius: float) -> np.ndarray:
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    t = rng.uniform(0.0, 2.0 * math.pi, n)
    return np.stack([r * np.cos(t), r * np.sin(t)], axis=1)


def _as_points(pts: np.ndarray) -> list[Point]:
    return [Point(float(x), float(y)) for x, y in pts]


def _max_pairwise(pts: np.ndarray) -> float:
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt((diff**2).sum(axis=2)).max())


def _stretch_to(pts: np.ndarray, d: float) -> np.ndarray:
    """Rescale about the centroid so the max pairwise distance equals d.

    Uniform scaling preserves the configuration shape and cannot push any
    other pair past d.
    """
    spread = _max_pairwise(pts)
    if spread <= 0.0:
        return pts
    centroid = pts.mean(axis=0)
    return centroid + (pts - centroid) * (d / spread)


def _realized_d(poly: DiskPolygon) -> float:
    """Center parameter over the surviving generator set."""
    return center_parameter(poly.centers)


def check_inradius_floor(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> CheckResult:
    """inradius(D) >= inradius of the regular disk-triangle at the realized d."""
    d = _realized_d(poly)
    r, _ = measures.inradius(poly, tol)
    bound = forms.disk_triangle_inradius(d)
    slack = r - bound
    return CheckResult(
        "inradius_floor", r, bound, slack, slack >= -tol.eps_check, instance_digest(poly.centers)
    )


def check_width_floor(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> CheckResult:
    """minimal_width(D) >= width of the regular disk-triangle at the realized d."""
    d = _realized_d(poly)
    w, _ = measures.minimal_width(poly, tol)
    bound = forms.disk_triangle_width(d)
    slack = w - bound
    return CheckResult(
        "width_floor", w, bound, slack, slack >= -tol.eps_check, instance_digest(poly.centers)
    )


def check_area_floor(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> CheckResult:
    """area(D) >= area of the regular disk-triangle at the realized d.

    When the slack vanishes within eps_check the instance should be congruent
    to the extremal triangle; the congruence outcome is surfaced through the
    ``equality`` field without affecting the inequality verdict.
    """
    d = _realized_d(poly)
    a = measures.area(poly)
    bound = forms.disk_triangle_area(d)
    slack = a - bound
    equality: bool | None = None
    if abs(slack) <= tol.eps_check:
        equality = _congruent_to_triangle(poly, d, tol)
    return CheckResult(
        "area_floor",
        a,
        bound,
        slack,
        slack >= -tol.eps_check,
        instance_digest(poly.centers),
        equality=equality,
    )


def _congruent_to_triangle(poly: DiskPolygon, d: float, tol: Tolerance) -> bool:
    """Vertex-distance multiset comparison against the regular disk-triangle."""
    reference = build_disk_polygon(equilateral_centers(d), tol)
    mine = sorted(
        poly.vertices[i].distance(poly.vertices[j])
        for i in range(len(poly.vertices))
        for j in range(i + 1, len(poly.vertices))
    )
    ref = sorted(
        reference.vertices[i].distance(reference.vertices[j])
        for i in range(len(reference.vertices))
        for j in range(i + 1, len(reference.vertices))
    )
    if len(mine) != len(ref):
        return False
    return all(abs(a - b) <= 10.0 * tol.eps_geom for a, b in zip(mine, ref))


def check_parallel_area_floor(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> CheckResult:
    """area(D) strictly exceeds the rounded-Reuleaux area at the realized d < 1.

    The bound is best possible, so the slack may be small but never <= 0; no
    epsilon is added to the strict comparison.
    """
    d = _realized_d(poly)
    if not 0.0 < d < 1.0:
        raise DOutOfRange(f"realized d={d} outside (0, 1)")
    a = measures.area(poly)
    bound, _ = forms.rounded_reuleaux_measures(d)
    slack = a - bound
    return CheckResult(
        "parallel_area_floor", a, bound, slack, slack > 0.0, instance_digest(poly.centers)
    )


def check_identities(poly: DiskPolygon, tol: Tolerance = DEFAULT_TOL) -> list[CheckResult]:
    """The four structural identities/inequalities tying a polygon to its dual.

    - concentric radii: inradius(D) + circumradius(D*) = 1;
    - width/diameter sums: w(D) + diam(D*) = w(D*) + diam(D) = 2, with the
      width taken from support sampling so the check is independent of the
      dual route;
    - Minkowski constant width: sum of support widths of D and D* is 2 in
      every direction (360 sampled);
    - Jung bound: circumradius(D*) <= d/sqrt(3) with slack >= -1e-12.
    """
    digest = instance_digest(poly.centers)
    d = _realized_d(poly)
    dual_poly = duality.dual(poly, tol)

    r, _ = measures.inradius(poly, tol)
    big_r, _ = measures.circumradius(dual_poly)
    s1 = r + big_r - 1.0
    results = [
        CheckResult("concentric_radii_sum", r + big_r, 1.0, s1, abs(s1) <= tol.eps_check, digest)
    ]

    w_sampled, _ = measures.minimal_width_sampled(poly)
    diam_dual, _ = measures.diameter(dual_poly)
    w_dual_sampled, _ = measures.minimal_width_sampled(dual_poly)
    diam_primal, _ = measures.diameter(poly)
    sum_a = w_sampled + diam_dual
    sum_b = w_dual_sampled + diam_primal
    worst = sum_a if abs(sum_a - 2.0) >= abs(sum_b - 2.0) else sum_b
    s2 = worst - 2.0
    results.append(
        CheckResult("width_diameter_sum", worst, 2.0, s2, abs(s2) <= tol.eps_check, digest)
    )

    defect = duality.constant_width_defect(poly, 360, tol)
    results.append(
        CheckResult("minkowski_constant_width", defect, 0.0, defect, defect <= tol.eps_check, digest)
    )

    jung = d / SQRT3
    s4 = jung - big_r
    results.append(
        CheckResult("jung_circumradius_bound", big_r, jung, s4, s4 >= -1e-12, digest)
    )
    return results


def check_area_variant_rejected(tol: Tolerance = DEFAULT_TOL) -> CheckResult:
    """Recorded evidence that the flat-arccos area variant is not an area: it
    is negative at d = 1 while the adopted closed form matches the geometric
    oracle there."""
    variant = forms.disk_triangle_area_rejected_variant(1.0)
    adopted = forms.disk_triangle_area(1.0)
    reference = 0.5 * (math.pi - SQRT3)
    consistent = variant < 0.0 and abs(adopted - reference) <= tol.eps_check
    return CheckResult(
        "area_variant_rejected", variant, reference, variant - reference, consistent, "closed-form"
    )


@dataclass
class SearchResult:
    """Best instance found by a search run, with its improvement trace."""

    best: DiskPolygon
    best_value: float
    trace: list[tuple[int, float]]
    min_value_seen: float
    restart_best: list[float] = field(default_factory=list)


def _descend(
    cfg: SearchConfig,
    objective,
    tol: Tolerance,
) -> SearchResult:
    rng = np.random.default_rng(cfg.seed)
    best_poly: DiskPolygon | None = None
    best_value = math.inf
    min_seen = math.inf
    trace: list[tuple[int, float]] = []
    restart_best: list[float] = []
    step_counter = 0

    for _ in range(cfg.restarts):
        pts = _stretch_to(_sample_in_disk(rng, cfg.n_centers, 0.5 * cfg.d), cfg.d)
        poly = build_disk_polygon(_as_points(pts), tol)
        value = objective(poly)
        min_seen = min(min_seen, value)
        if value < best_value:
            best_poly, best_value = poly, value
            trace.append((step_counter, value))
        local_best = value
        step = cfg.initial_step
        rejects = 0
        for _ in range(cfg.steps):
            step_counter += 1
            cand = pts.copy()
            idx = int(rng.integers(cfg.n_centers))
            cand[idx] += rng.normal(0.0, step, 2)
            cand = _stretch_to(cand, cfg.d)
            cand_poly = build_disk_polygon(_as_points(cand), tol)
            cand_value = objective(cand_poly)
            min_seen = min(min_seen, cand_value)
            if cand_value < local_best:
                pts, local_best = cand, cand_value
                rejects = 0
                if cand_value < best_value:
                    best_poly, best_value = cand_poly, cand_value
                    trace.append((step_counter, cand_value))
            else:
                rejects += 1
                if rejects % _COOLING_STREAK == 0:
                    step *= cfg.cooling
        restart_best.append(local_best)

    assert best_poly is not None
    return SearchResult(best_poly, best_value, trace, min_seen, restart_best)


def local_search_min_area(cfg: SearchConfig, tol: Tolerance = DEFAULT_TOL) -> SearchResult:
    """Multi-start perturbation descent on area at fixed center parameter.

    Each step perturbs one center, rescales about the centroid to restore the
    max pairwise distance, and accepts only improvements, so the trace is
    non-increasing.  The area floor of the regular disk-triangle is certified:
    min_value_seen staying above it doubles as a continuous fuzz test.
    """
    if cfg.d < 1.0:
        raise DOutOfRange(f"area search needs d >= 1, got {cfg.d}")
    return _descend(cfg, measures.area, tol)


def perimeter_probe(
    d: float,
    cfg: SearchConfig,
    tol: Tolerance = DEFAULT_TOL,
    reference: float | None = None,
) -> dict:
    """Empirical probe of the open perimeter floor.

    Runs the same descent driver on perimeter and compares the minimum found
    against the conjectured reference (regular disk-triangle perimeter for
    d >= 1, rounded-Reuleaux perimeter below 1).  Any instance beating the
    reference by more than eps_check is recorded as a counterexample
    candidate; the result never asserts the conjecture either way.
    """
    if reference is None:
        if d >= 1.0:
            reference = forms.disk_triangle_perimeter(d)
        else:
            _, reference = forms.rounded_reuleaux_measures(d)

    counterexamples: list[dict] = []

    def objective(poly: DiskPolygon) -> float:
        p = measures.perimeter(poly)
        if p < reference - tol.eps_check and len(counterexamples) < 25:
            counterexamples.append(
                {
                    "perimeter": p,
                    "centers": [[c.x, c.y] for c in poly.centers],
                    "digest": instance_digest(poly.centers),
                }
            )
        return p

    result = _descend(cfg, objective, tol)
    return {
        "d": d,
        "reference_perimeter": reference,
        "min_perimeter_found": result.min_value_seen,
        "best_centers": [[c.x, c.y] for c in result.best.centers],
        "counterexample_candidates": counterexamples,
        "status": "open problem: empirical evidence only, no conclusion either way",
    }


def suite_instance(d: float, n_max: int, seed: int, index: int) -> DiskPolygon:
    """Deterministic instance #index of a suite: seeds are offset from the
    base seed and generator counts cycle over 2..n_max."""
    n = 2 + (index % max(n_max - 1, 1))
    cfg = GeneratorConfig(d=d, n_centers=n, seed=seed + index, spread_mode="stretched")
    return build_disk_polygon(random_center_set(cfg))


def run_suite(
    d: float,
    instances: int,
    seed: int = 0,
    n_max: int = 10,
    tol: Tolerance = DEFAULT_TOL,
) -> list[CheckResult]:
    """Identity and floor checks over random instances at center parameter d.

    For d >= 1 the floors are inradius/width/area against the regular
    disk-triangle; for d < 1 the strict rounded-Reuleaux area floor applies.
    """
    results: list[CheckResult] = []
    for i in range(instances):
        poly = suite_instance(d, n_max, seed, i)
        results.extend(check_identities(poly, tol))
        if d >= 1.0:
            results.append(check_inradius_floor(poly, tol))
            results.append(check_width_floor(poly, tol))
            results.append(check_area_floor(poly, tol))
        else:
            results.append(check_parallel_area_floor(poly, tol))
    return results


def summarize(results: list[CheckResult]) -> dict:
    """Per-check summary: {name: {count, pass_count, min_slack, argmin_digest}}.

    Results are merged in digest order so concurrent or reordered evaluation
    produces identical summaries.
    """
    by_name: dict[str, list[CheckResult]] = {}
    for r in sorted(results, key=lambda r: (r.name, r.instance_digest)):
        by_name.setdefault(r.name, []).append(r)
    summary = {}
    for name, group in sorted(by_name.items()):
        worst = min(group, key=lambda r: r.slack)
        summary[name] = {
            "count": len(group),
            "pass_count": sum(1 for r in group if r.passed),
            "min_slack": worst.slack,
            "argmin_digest": worst.instance_digest,
        }
    return summary


def results_to_json_lines(results: list[CheckResult]) -> str:
    return "\n".join(json.dumps(r.to_json_dict()) for r in results)
