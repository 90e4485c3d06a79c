"""Equilibrium-based recovery of through-thickness stresses.

In-plane stresses follow from the deflection curvatures ply by ply.  The
transverse components are integrated from the bottom face with the
composite trapezoidal rule:

``s13 = -int (s11,1 + s12,2 + b1)``, ``s23 = -int (s12,1 + s22,2 + b2)``,
``s33 = int int (s11,11 + s22,22 + 2 s12,12 + b1,1 + b2,2) - int b3``.

For stacks that are not mid-plane symmetric the curvature also induces
mid-plane strains.  With ``coupling=True`` they are taken as
``e0 = A^-1 B kappa`` so that the membrane resultant vanishes; for symmetric
stacks ``B = 0`` and the correction is inert.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .materials import Layup, in_plane_ply_matrix
from .solution import SolutionField

__all__ = [
    "ThicknessGrid",
    "DeflectionJet",
    "BodyForce",
    "StressProfile",
    "build_thickness_grid",
    "deflection_jet",
    "ply_matrices",
    "membrane_coupling",
    "in_plane_profile",
    "in_plane_derivative_profiles",
    "recover_out_of_plane",
    "recover_profile",
    "COMPONENTS",
]

COMPONENTS = ("s11", "s22", "s12", "s13", "s23", "s33")


@dataclass(frozen=True)
class ThicknessGrid:
    """Per-ply nodes concatenated bottom to top.

    Interface coordinates appear twice, once for each adjacent ply, so that
    ``z`` is nondecreasing and ``ply[i]`` identifies the owning ply.
    """

    z: np.ndarray
    ply: np.ndarray
    thickness: float

    def __post_init__(self) -> None:
        if np.any(np.diff(self.z) < 0):
            raise ValueError("grid nodes must be nondecreasing")
        if len(self.z) != len(self.ply):
            raise ValueError("node and ply arrays differ in length")

    @property
    def n_plies(self) -> int:
        return int(self.ply.max()) + 1

    def index_of(self, x3: float, side: str = "upper") -> int:
        """Node index at ``x3``; at interfaces pick the lower or upper ply."""
        hits = np.flatnonzero(np.abs(self.z - x3) <= 1e-12 * max(self.thickness, 1.0))
        if not len(hits):
            raise KeyError(f"x3 = {x3} is not a grid node")
        return int(hits[-1] if side == "upper" else hits[0])


def build_thickness_grid(layup: Layup, nodes_per_ply: int = 20, extra: Sequence[float] = ()) -> ThicknessGrid:
    """Uniform nodes per ply plus optional extra sampling coordinates.

    Parameters
    ----------
    layup : Layup
    nodes_per_ply : int
        Uniform nodes per ply including both ply faces (>= 2).
    extra : sequence of float
        Coordinates inserted into the owning ply so that values there are
        integrated rather than interpolated.
    """
    if nodes_per_ply < 2:
        raise ValueError("nodes_per_ply must be >= 2")
    zi = layup.interfaces
    t = layup.thickness
    for x in extra:
        if not -t / 2 <= x <= t / 2:
            raise ValueError(f"x3 = {x} outside the laminate")
    zs, ps = [], []
    for k in range(len(layup)):
        zk = np.linspace(zi[k], zi[k + 1], nodes_per_ply)
        add = [x for x in extra if zi[k] < x < zi[k + 1]]
        if add:
            zk = np.unique(np.concatenate([zk, add]))
        zs.append(zk)
        ps.append(np.full(len(zk), k))
    return ThicknessGrid(np.concatenate(zs), np.concatenate(ps), t)


@dataclass(frozen=True)
class DeflectionJet:
    """Physical partial derivatives of ``w`` at one point, orders 2 to 4."""

    partials: dict
    point: tuple[float, float] = (0.0, 0.0)

    def __call__(self, a: int, b: int) -> float:
        return float(self.partials.get((a, b), 0.0))

    def kappa(self, a: int = 0, b: int = 0) -> np.ndarray:
        """``(w,11, w,22, 2 w,12)`` differentiated ``a`` times in x1, ``b`` in x2."""
        return np.array([self(2 + a, b), self(a, 2 + b), 2.0 * self(1 + a, 1 + b)])

    def scaled(self, lam: float) -> "DeflectionJet":
        return replace(self, partials={k: lam * v for k, v in self.partials.items()})

    @classmethod
    def from_function(cls, func: Callable[[int, int], float], point=(0.0, 0.0)) -> "DeflectionJet":
        """Build from ``func(a, b)`` returning the ``(a, b)`` partial."""
        return cls({(a, b): float(func(a, b)) for n in range(2, 5) for a in range(n + 1) for b in [n - a]}, point)


def deflection_jet(field: SolutionField, point: tuple[float, float]) -> DeflectionJet:
    """Jet of a discrete field; the space must be C4 with degree >= 5."""
    if not field.space.supports_recovery():
        raise ValueError("recovery needs degree >= 5 and C4 continuity in both directions")
    vals = field.eval(*point, 4)
    return DeflectionJet({k: v for k, v in vals.items() if sum(k) >= 2}, tuple(map(float, point)))


@dataclass(frozen=True)
class BodyForce:
    """Body force components as functions of ``x3``; ``None`` means zero.

    ``div`` is the in-plane divergence ``b1,1 + b2,2``.
    """

    b1: Optional[Callable] = None
    b2: Optional[Callable] = None
    b3: Optional[Callable] = None
    div: Optional[Callable] = None

    @staticmethod
    def _eval(f, z):
        return np.zeros_like(z) if f is None else np.broadcast_to(np.asarray(f(z), dtype=float), z.shape)


@dataclass(frozen=True)
class StressProfile:
    """Six stress components over a thickness grid at one in-plane point."""

    point: tuple[float, float]
    grid: ThicknessGrid
    s11: np.ndarray
    s22: np.ndarray
    s12: np.ndarray
    s13: np.ndarray
    s23: np.ndarray
    s33: np.ndarray
    normalized: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    def component(self, name: str) -> np.ndarray:
        if name not in COMPONENTS:
            raise KeyError(name)
        return getattr(self, name)

    def value(self, name: str, x3: float, side: str = "upper") -> float:
        """Component at ``x3``; exact at nodes, linear between them."""
        try:
            return float(self.component(name)[self.grid.index_of(x3, side)])
        except KeyError:
            return float(np.interp(x3, self.grid.z, self.component(name)))

    def scaled(self, factors: dict[str, float], normalized: bool) -> "StressProfile":
        kw = {c: self.component(c) * factors[c] for c in COMPONENTS}
        return replace(self, normalized=normalized, **kw)


def ply_matrices(layup: Layup, mode: str = "reduced") -> np.ndarray:
    """Stack of in-plane ply matrices, shape ``(N, 3, 3)``."""
    return np.stack([in_plane_ply_matrix(layup.stiffness(k), mode) for k in range(len(layup))])


def membrane_coupling(layup: Layup, mode: str = "reduced") -> np.ndarray:
    """Matrix ``A^-1 B`` giving the mid-plane strain per unit curvature."""
    Q = ply_matrices(layup, mode)
    zi = layup.interfaces
    dz = np.diff(zi)
    dz2 = np.diff(zi**2) / 2
    A = np.einsum("k,kij->ij", dz, Q)
    B = np.einsum("k,kij->ij", dz2, Q)
    return np.linalg.solve(A, B)


def _stress_derivative(jet: DeflectionJet, layup: Layup, grid: ThicknessGrid, a: int, b: int,
                       mode: str, coupling: bool) -> np.ndarray:
    """``(s11, s22, s12)`` differentiated ``(a, b)`` times, shape ``(n, 3)``."""
    if grid.n_plies != len(layup):
        raise ValueError("thickness grid does not match the layup")
    Q = ply_matrices(layup, mode)
    k = jet.kappa(a, b)
    e0 = membrane_coupling(layup, mode) @ k if coupling else np.zeros(3)
    strain = e0[None, :] - grid.z[:, None] * k[None, :]
    return np.einsum("nij,nj->ni", Q[grid.ply], strain)


def in_plane_profile(jet: DeflectionJet, layup: Layup, grid: ThicknessGrid, mode: str = "reduced",
                     coupling: bool = True) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``s11, s22, s12`` at every grid node (two-sided at interfaces)."""
    s = _stress_derivative(jet, layup, grid, 0, 0, mode, coupling)
    return s[:, 0], s[:, 1], s[:, 2]


def in_plane_derivative_profiles(jet: DeflectionJet, layup: Layup, grid: ThicknessGrid, mode: str = "reduced",
                                 coupling: bool = True) -> dict[str, np.ndarray]:
    """First and second in-plane derivatives of the in-plane stresses.

    Keys are ``"s11,1"``, ``"s12,12"`` and so on, for every component and
    every derivative of order 1 or 2.
    """
    names = ("s11", "s22", "s12")
    labels = {(1, 0): "1", (0, 1): "2", (2, 0): "11", (1, 1): "12", (0, 2): "22"}
    out = {}
    for (a, b), lab in labels.items():
        s = _stress_derivative(jet, layup, grid, a, b, mode, coupling)
        for i, n in enumerate(names):
            out[f"{n},{lab}"] = s[:, i]
    return out


def recover_out_of_plane(jet: DeflectionJet, layup: Layup, grid: ThicknessGrid, mode: str = "reduced",
                         coupling: bool = True, body_force: BodyForce | None = None):
    """Integrate equilibrium from the traction-free bottom face.

    Returns
    -------
    s13, s23, s33 : ndarray
        Continuous profiles; exactly zero at ``x3 = -t/2``.
    """
    d = in_plane_derivative_profiles(jet, layup, grid, mode, coupling)
    z = grid.z
    bf = body_force or BodyForce()
    g13 = d["s11,1"] + d["s12,2"] + bf._eval(bf.b1, z)
    g23 = d["s12,1"] + d["s22,2"] + bf._eval(bf.b2, z)
    h = d["s11,11"] + d["s22,22"] + 2.0 * d["s12,12"] + bf._eval(bf.div, z)
    # zero-width segments at duplicated interface nodes contribute nothing
    s13 = -cumulative_trapezoid(g13, z, initial=0.0)
    s23 = -cumulative_trapezoid(g23, z, initial=0.0)
    inner = cumulative_trapezoid(h, z, initial=0.0)
    s33 = cumulative_trapezoid(inner, z, initial=0.0) - cumulative_trapezoid(bf._eval(bf.b3, z), z, initial=0.0)
    return s13, s23, s33


def recover_profile(jet: DeflectionJet, layup: Layup, grid: ThicknessGrid, mode: str = "reduced",
                    coupling: bool = True, body_force: BodyForce | None = None) -> StressProfile:
    """All six components at the jet's point."""
    s11, s22, s12 = in_plane_profile(jet, layup, grid, mode, coupling)
    s13, s23, s33 = recover_out_of_plane(jet, layup, grid, mode, coupling, body_force)
    return StressProfile(jet.point, grid, s11, s22, s12, s13, s23, s33,
                         meta={"mode": mode, "coupling": coupling})
