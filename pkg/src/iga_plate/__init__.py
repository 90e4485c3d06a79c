"""Isogeometric solvers for laminated Kirchhoff plates with interlaminar stress recovery."""

from .collocation import POLICIES
from .config import CaseConfig, ConfigError, parse_config
from .materials import TABLE1, Lamina, Layup, cross_ply_layup
from .solution import SolutionField, SolverError
from .splines import DiscreteSpace

__version__ = "0.1.0"

__all__ = [
    "POLICIES",
    "CaseConfig",
    "ConfigError",
    "parse_config",
    "TABLE1",
    "Lamina",
    "Layup",
    "cross_ply_layup",
    "SolutionField",
    "SolverError",
    "DiscreteSpace",
]
