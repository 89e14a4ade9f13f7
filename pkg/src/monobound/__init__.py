"""Entanglement measures and parameterized monogamy lower bounds."""
from .errors import (
    ConfigError,
    DegenerateInputError,
    InvalidInputError,
    MonogamyError,
    NotPSDError,
    PreconditionError,
    StateFileError,
)
from .ineq import BoundParams, alpha_min, optimal_m
from .measures import MeasureKind, measure
from .qstate import AcinParams, PureState, acin_state, random_pure_state

__all__ = [
    "AcinParams",
    "BoundParams",
    "ConfigError",
    "DegenerateInputError",
    "InvalidInputError",
    "MeasureKind",
    "MonogamyError",
    "NotPSDError",
    "PreconditionError",
    "PureState",
    "StateFileError",
    "acin_state",
    "alpha_min",
    "measure",
    "optimal_m",
    "random_pure_state",
]
__version__ = "0.1.0"
