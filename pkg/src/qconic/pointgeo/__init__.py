"""Point varieties, sigma charts and point counting in the projective plane."""
from .catalog import CATALOG, AMBIENT_ROWS, CatalogEntry, catalog, entry, sklyanin_form
from .geometry import (
    Report,
    algebra_sigma_order,
    intersect_line_component,
    point_variety_EA,
    sigma_order_bar,
    sklyanin_sigma,
    verify_FH,
    verify_graph,
    verify_iterates,
)
from .points import INFINITE, CurveComponent, PointP2, linear_form

__all__ = [
    "CATALOG", "AMBIENT_ROWS", "CatalogEntry", "catalog", "entry", "sklyanin_form", "Report",
    "algebra_sigma_order", "intersect_line_component", "point_variety_EA", "sigma_order_bar",
    "sklyanin_sigma", "verify_FH", "verify_graph", "verify_iterates", "INFINITE", "CurveComponent",
    "PointP2", "linear_form",
]
