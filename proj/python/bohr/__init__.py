"""Bohr radius computations for analytic and harmonic maps of the unit disc."""

from ._bohr import (
    BracketError,
    bohr_partial_sum,
    boundary_reach,
    closed_form_radius,
    domination_campaign,
    g_from_mobius,
    g_from_monomial,
    image_curve,
    majorant_value,
    map_coefficients,
    map_ids,
    radius_ids,
    radius_table,
    selfcheck,
    sharpness,
    solve_radius,
    verify,
)

__all__ = [
    "BracketError",
    "bohr_partial_sum",
    "boundary_reach",
    "closed_form_radius",
    "domination_campaign",
    "g_from_mobius",
    "g_from_monomial",
    "image_curve",
    "majorant_value",
    "map_coefficients",
    "map_ids",
    "radius_ids",
    "radius_table",
    "selfcheck",
    "sharpness",
    "solve_radius",
    "verify",
]
