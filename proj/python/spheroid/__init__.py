"""Quantum spectra on a sphere and on the near-sphere spheroid.

Thin Python surface over the C++ core: surface parameters, free-particle
and oscillator spectra, first-order flattening shifts, the finite-volume
grid oracle, and the JSON self-check suites.
"""

from ._core import (
    Coupling,
    LevelAggregate,
    LevelRow,
    LevelTable,
    QuadratureSpec,
    Sheet,
    SurfaceParams,
    TangentPoint,
    ConvergenceError,
    ResolutionError,
    free,
    geometry,
    numerics,
    oracle,
    osc,
    specfun,
    suite_names,
    validate_json,
)

__all__ = [
    "Coupling",
    "LevelAggregate",
    "LevelRow",
    "LevelTable",
    "QuadratureSpec",
    "Sheet",
    "SurfaceParams",
    "TangentPoint",
    "ConvergenceError",
    "ResolutionError",
    "free",
    "geometry",
    "numerics",
    "oracle",
    "osc",
    "specfun",
    "suite_names",
    "validate_json",
]

__version__ = "0.1.0"
