"""isokit: minimum-area isosceles containers of a triangle.

Constructs the nine special isosceles containers of a scalene triangle,
selects the minimum-area container(s) from the closed-form candidate set,
analyzes the extremal area ratios (the sqrt(2) and golden-ratio suprema and
the unique three-way-tie triangle), and cross-checks everything against a
brute-force supporting-line oracle.
"""

from .geo import (
    DEFAULT_TOLERANCES,
    CanonicalTriangle,
    DegenerateTriangle,
    GeometryError,
    NonFinite,
    NotScalene,
    Point,
    ShapeClass,
    Tolerances,
    Triangle,
    area,
    canonicalize,
    contains_point,
    contains_triangle,
    signed_area,
    support_line,
)
from .containers import (
    ContainerVariant,
    Kind,
    NearRightAngleWarning,
    SpecialContainer,
    all_special_containers,
    first_kind,
    second_kind,
    third_kind,
)
from .minimize import (
    SELF_CONTAINER,
    BracketFailure,
    ExtremalCurvePoint,
    InvalidRegime,
    InvalidSides,
    MinimizerResult,
    alpha_star,
    alpha_star_equation,
    eq1_residual,
    first_kind_ratio,
    minimum_isosceles_container,
    ratio_curves,
    t_star,
    triangle_at_crossing,
)
from .oracle import (
    DEFAULT_COARSE_STEP,
    DEFAULT_REFINE_ITERS,
    OracleResult,
    ShapeParams,
    UnboundedShape,
    VerificationReport,
    brute_force_min_isosceles,
    can_cover,
    min_triangle_for_shape,
    verify_triangle,
)
from .sampling import (
    sample_canonical_triangles,
    sample_scalene_angles,
    triangle_from_angles,
    triangle_from_sides,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_COARSE_STEP",
    "DEFAULT_REFINE_ITERS",
    "DEFAULT_TOLERANCES",
    "SELF_CONTAINER",
    "BracketFailure",
    "CanonicalTriangle",
    "ContainerVariant",
    "DegenerateTriangle",
    "ExtremalCurvePoint",
    "GeometryError",
    "InvalidRegime",
    "InvalidSides",
    "Kind",
    "MinimizerResult",
    "NearRightAngleWarning",
    "NonFinite",
    "NotScalene",
    "OracleResult",
    "Point",
    "ShapeClass",
    "ShapeParams",
    "SpecialContainer",
    "Tolerances",
    "Triangle",
    "UnboundedShape",
    "VerificationReport",
    "all_special_containers",
    "alpha_star",
    "alpha_star_equation",
    "area",
    "brute_force_min_isosceles",
    "can_cover",
    "canonicalize",
    "contains_point",
    "contains_triangle",
    "eq1_residual",
    "first_kind",
    "first_kind_ratio",
    "min_triangle_for_shape",
    "minimum_isosceles_container",
    "ratio_curves",
    "sample_canonical_triangles",
    "sample_scalene_angles",
    "second_kind",
    "signed_area",
    "support_line",
    "t_star",
    "third_kind",
    "triangle_at_crossing",
    "triangle_from_angles",
    "triangle_from_sides",
    "verify_triangle",
]
