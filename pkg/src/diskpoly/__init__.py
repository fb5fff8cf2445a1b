"""diskpoly: intersections of unit disks, their duals, measures, and the
numerical verification harness for their extremal inequalities."""

from .closed_forms import (
    TriangleProfile,
    cap_area,
    disk_triangle_area,
    disk_triangle_dual_diameter,
    disk_triangle_inradius,
    disk_triangle_perimeter,
    disk_triangle_width,
    dual_chord_length,
    extremal_profile,
    incircle_caps_area_bound,
    outer_parallel_area,
    reuleaux_measures,
    rounded_reuleaux_measures,
    width_disk_area,
)
from .duality import constant_width_defect, dual, involution_defect, spindle_hull
from .errors import DiskPolygonError
from .geometry import (
    DEFAULT_TOL,
    Arc,
    Circle,
    DiskPolygon,
    Point,
    Tolerance,
    build_disk_polygon,
    center_parameter,
    contains_point,
    equilateral_centers,
    load_centers,
)
from .measures import (
    MeasureReport,
    area,
    circumradius,
    diameter,
    inradius,
    measure_report,
    minimal_enclosing_circle,
    minimal_width,
    monte_carlo_area,
    perimeter,
    support,
)
from .verification import (
    CheckResult,
    GeneratorConfig,
    SearchConfig,
    check_area_floor,
    check_identities,
    check_inradius_floor,
    check_parallel_area_floor,
    check_width_floor,
    local_search_min_area,
    perimeter_probe,
    random_center_set,
    run_suite,
    summarize,
)

__version__ = "0.1.0"
