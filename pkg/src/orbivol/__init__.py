"""Lower bounds for volumes of locally symmetric orbifolds of non-compact type."""

from .bounds import BoundResult, Mode, bound_table, compute_bound
from .catalog import get_space, list_spaces
from .constants import c1_from_restricted_roots, classify_constants
from .curvature import max_curvature_poly, sectional_bound
from .geometry import ball_volume, log_gamma, sin_power_integral
from .logreal import LogReal
from .wang import solve_wang_radius, wang_f

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "LogReal",
    "Mode",
    "ball_volume",
    "bound_table",
    "c1_from_restricted_roots",
    "classify_constants",
    "compute_bound",
    "get_space",
    "list_spaces",
    "log_gamma",
    "max_curvature_poly",
    "sectional_bound",
    "sin_power_integral",
    "solve_wang_radius",
    "wang_f",
]
