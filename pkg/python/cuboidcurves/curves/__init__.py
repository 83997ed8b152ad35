from .conic import (
    ConicPoint,
    ConicSpec,
    LegendreForm,
    LegendreSolution,
    find_conic_point,
    holzer_bounds,
    legendre_criterion,
    legendre_solvable,
    normalize_conic,
    parameter_from_point,
    parametrize_conic,
    search_legendre,
    solve_legendre,
)
from .cubic import (
    CubicCurveSpec,
    LiftedPoint,
    MordellForm,
    SurfacePoint,
    alpha_from_surface_point,
    base_points,
    cubic_contains,
    find_surface_points,
    is_elliptic,
    lift_alpha,
    mordell_form,
    reduced_cubic_roots,
    rewritten_sextic_holds,
    sextic_coefficients,
    sextic_d,
    sextic_rational_roots,
    sextic_value,
)

__all__ = [
    "ConicPoint",
    "ConicSpec",
    "LegendreForm",
    "LegendreSolution",
    "find_conic_point",
    "holzer_bounds",
    "legendre_criterion",
    "legendre_solvable",
    "normalize_conic",
    "parameter_from_point",
    "parametrize_conic",
    "search_legendre",
    "solve_legendre",
    "CubicCurveSpec",
    "LiftedPoint",
    "MordellForm",
    "SurfacePoint",
    "alpha_from_surface_point",
    "base_points",
    "cubic_contains",
    "find_surface_points",
    "is_elliptic",
    "lift_alpha",
    "mordell_form",
    "reduced_cubic_roots",
    "rewritten_sextic_holds",
    "sextic_coefficients",
    "sextic_d",
    "sextic_rational_roots",
    "sextic_value",
]
