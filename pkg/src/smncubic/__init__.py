"""Real-root structure of monic cubics x^3 + a x^2 + b x + c via the equilateral
triangle whose vertices project onto the roots."""
from .classifier import (
    DEFAULT_BOUNDARY_TOL,
    Bounds,
    Case,
    Classification,
    Interval,
    IsolationSet,
    Subcase,
    bounds,
    classify,
    isolation_intervals,
    lower_bound,
    upper_bound,
    upper_bound_kuniyeda,
    upper_bound_negcoeff,
)
from .core import (
    CriticalData,
    DegenerateTriangleError,
    DiscriminantInfo,
    DomainError,
    Envelope,
    MonicCubic,
    SmnTriangle,
    balanced_roots,
    critical_points,
    discriminant,
    envelope,
    evaluate,
    extreme_roots,
    rotation_angle,
    smn_triangle,
)
from .oracle import OracleResult, cardano_roots, cross_check, oracle_roots
from .refiner import (
    DEFAULT_TOL,
    BracketError,
    Root,
    RootReport,
    bisect,
    closed_form_b_boundary,
    newton_refine,
    solve,
)

__version__ = "0.1.0"
