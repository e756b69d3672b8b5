"""N-dimensional cross product (doublewedge) algebra.

Thin Python layer over the C++ core: vectors are lists of floats,
bivectors and matrices are row-major nested lists.
"""

from ._core import (
    DimensionError,
    NumericalError,
    ScenarioParseError,
    angular_momentum,
    apply,
    contraction,
    cross3,
    curl,
    doublewedge,
    faraday_residual,
    gram_volume,
    hypervolume,
    inertia_matrix,
    lorentz_force,
    perpendicular_component,
    power,
    rigid_angular_momentum,
    rigid_velocity,
    rotate,
    rotation_generator,
    rotation_matrix,
    run_scenario,
    three_index_product,
    to_axial,
    to_bivector,
    torque,
    transform,
    verify_identities,
)

__all__ = [
    "DimensionError",
    "NumericalError",
    "ScenarioParseError",
    "angular_momentum",
    "apply",
    "contraction",
    "cross3",
    "curl",
    "doublewedge",
    "faraday_residual",
    "gram_volume",
    "hypervolume",
    "inertia_matrix",
    "lorentz_force",
    "perpendicular_component",
    "power",
    "rigid_angular_momentum",
    "rigid_velocity",
    "rotate",
    "rotation_generator",
    "rotation_matrix",
    "run_scenario",
    "three_index_product",
    "to_axial",
    "to_bivector",
    "torque",
    "transform",
    "verify_identities",
]
