"""Types shared by the plate solvers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .splines import DiscreteSpace, surface_eval

__all__ = ["SolverError", "SolutionField", "SineLoad", "boundary_ring", "free_indices"]


class SolverError(RuntimeError):
    """Raised when a discrete system cannot be factorized or solved."""


@dataclass(frozen=True)
class SineLoad:
    """Transverse load ``q = sigma0 sin(pi x1 / L1) sin(pi x2 / L2)``.

    The load acts along ``+x3`` so that a positive amplitude deflects the
    plate upward.
    """

    sigma0: float
    L1: float
    L2: float

    def __call__(self, x1, x2):
        return self.sigma0 * np.sin(np.pi * np.asarray(x1) / self.L1) * np.sin(np.pi * np.asarray(x2) / self.L2)

    @classmethod
    def for_space(cls, space: DiscreteSpace, sigma0: float) -> "SineLoad":
        return cls(float(sigma0), space.L1, space.L2)


@dataclass(frozen=True)
class SolutionField:
    """Deflection control coefficients over a discrete space.

    Attributes
    ----------
    space : DiscreteSpace
    coeffs : ndarray, shape (m1, m2)
    diagnostics : dict
        Solver-specific residuals and flags.
    """

    space: DiscreteSpace
    coeffs: np.ndarray
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != self.space.shape:
            raise ValueError(f"coefficient shape {c.shape} does not match {self.space.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def eval(self, x1: float, x2: float, max_total_order: int = 4) -> dict[tuple[int, int], float]:
        return surface_eval(self.space, self.coeffs, (x1, x2), max_total_order)

    def deflection(self, x1: float, x2: float) -> float:
        return self.eval(x1, x2, 0)[(0, 0)]


def boundary_ring(shape: tuple[int, int]) -> np.ndarray:
    """Flat row-major indices of the outermost coefficient ring."""
    m1, m2 = shape
    mask = np.zeros(shape, dtype=bool)
    mask[0, :] = mask[-1, :] = mask[:, 0] = mask[:, -1] = True
    return np.flatnonzero(mask)


def free_indices(shape: tuple[int, int]) -> np.ndarray:
    mask = np.ones(shape, dtype=bool)
    mask[0, :] = mask[-1, :] = mask[:, 0] = mask[:, -1] = False
    return np.flatnonzero(mask)
