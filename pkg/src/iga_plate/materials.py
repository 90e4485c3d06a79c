"""Orthotropic plies, cross-ply stacks and homogenized bending stiffness.

Voigt ordering is ``(11, 22, 33, 23, 13, 12)`` throughout; in-plane 3x3
matrices act on ``(e11, e22, gamma12)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

__all__ = [
    "Lamina",
    "Layup",
    "TABLE1",
    "stiffness_from_engineering",
    "rotate90",
    "homogenize",
    "bending_stiffness",
    "in_plane_ply_matrix",
    "cross_ply_layup",
    "effective_rigidity",
]

_SWAP = np.array([1, 0, 2, 4, 3, 5])
_PLANE = np.array([0, 1, 5])


@dataclass(frozen=True)
class Lamina:
    """Single orthotropic ply described by engineering constants.

    Moduli share one stress unit; ``thickness`` uses the model length unit.
    ``orientation`` is 0 or 90 degrees about the plate normal.
    """

    E1: float
    E2: float
    E3: float
    G23: float
    G13: float
    G12: float
    nu23: float
    nu13: float
    nu12: float
    orientation: int = 0
    thickness: float = 1.0

    def __post_init__(self) -> None:
        moduli = dict(E1=self.E1, E2=self.E2, E3=self.E3, G23=self.G23, G13=self.G13, G12=self.G12)
        bad = [k for k, v in moduli.items() if not v > 0]
        if bad:
            raise ValueError(f"moduli must be positive: {', '.join(bad)}")
        if self.orientation not in (0, 90):
            raise ValueError(f"orientation must be 0 or 90, got {self.orientation}")
        if not self.thickness > 0:
            raise ValueError("ply thickness must be positive")

    def rotated(self, orientation: int) -> "Lamina":
        return replace(self, orientation=orientation)

    def with_thickness(self, thickness: float) -> "Lamina":
        return replace(self, thickness=thickness)

    def compliance(self) -> np.ndarray:
        """Material-axis 6x6 compliance."""
        S = np.zeros((6, 6))
        S[0, 0], S[1, 1], S[2, 2] = 1 / self.E1, 1 / self.E2, 1 / self.E3
        S[0, 1] = S[1, 0] = -self.nu12 / self.E1
        S[0, 2] = S[2, 0] = -self.nu13 / self.E1
        S[1, 2] = S[2, 1] = -self.nu23 / self.E2
        S[3, 3], S[4, 4], S[5, 5] = 1 / self.G23, 1 / self.G13, 1 / self.G12
        return S

    @property
    def stiffness(self) -> np.ndarray:
        """6x6 stiffness in plate axes, orientation applied."""
        C = stiffness_from_engineering(self)
        return rotate90(C) if self.orientation == 90 else C


# benchmark ply, 0 degrees, unit thickness
TABLE1 = Lamina(E1=25000.0, E2=1000.0, E3=1000.0, G23=200.0, G13=500.0, G12=500.0,
                nu23=0.25, nu13=0.25, nu12=0.25)


def stiffness_from_engineering(lamina: Lamina) -> np.ndarray:
    """Invert the engineering-constant compliance of a ply (material axes).

    Raises
    ------
    ValueError
        If the compliance is not positive definite.
    """
    S = lamina.compliance()
    eig = np.linalg.eigvalsh(S)
    if eig.min() <= 0:
        raise ValueError(f"compliance not positive definite (smallest eigenvalue {eig.min():.3e} <= 0)")
    C = np.linalg.inv(S)
    C = 0.5 * (C + C.T)
    # orthotropic sparsity is exact
    mask = np.zeros((6, 6), dtype=bool)
    mask[:3, :3] = True
    mask[np.diag_indices(6)] = True
    C[~mask] = 0.0
    return C


def rotate90(C: np.ndarray) -> np.ndarray:
    """Rotate an orthotropic stiffness by 90 degrees about x3 (swap axes 1, 2)."""
    C = np.asarray(C)
    return C[np.ix_(_SWAP, _SWAP)].copy()


@dataclass(frozen=True)
class Layup:
    """Ply stack ordered bottom to top, mid-plane at ``x3 = 0``."""

    plies: tuple[Lamina, ...]
    _stiff: tuple[np.ndarray, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        plies = tuple(self.plies)
        if not plies:
            raise ValueError("layup must contain at least one ply")
        object.__setattr__(self, "plies", plies)
        object.__setattr__(self, "_stiff", tuple(p.stiffness for p in plies))

    def __len__(self) -> int:
        return len(self.plies)

    @property
    def thicknesses(self) -> np.ndarray:
        return np.array([p.thickness for p in self.plies])

    @property
    def thickness(self) -> float:
        return float(self.thicknesses.sum())

    @property
    def fractions(self) -> np.ndarray:
        t = self.thicknesses
        return t / t.sum()

    @property
    def interfaces(self) -> np.ndarray:
        """``N + 1`` ply boundary coordinates from ``-t/2`` to ``t/2``."""
        t = self.thicknesses
        z = np.concatenate([[0.0], np.cumsum(t)]) - t.sum() / 2
        z[0], z[-1] = -t.sum() / 2, t.sum() / 2
        return z

    def stiffness(self, k: int) -> np.ndarray:
        """Plate-axis 6x6 stiffness of ply ``k`` (0 = bottom)."""
        return self._stiff[k]

    def is_symmetric(self) -> bool:
        n = len(self.plies)
        return all(self.plies[k].orientation == self.plies[n - 1 - k].orientation
                   and np.isclose(self.plies[k].thickness, self.plies[n - 1 - k].thickness)
                   and np.allclose(self._stiff[k], self._stiff[n - 1 - k])
                   for k in range(n // 2))


def cross_ply_layup(n_layers: int, material: Lamina = TABLE1, ply_thickness: float = 1.0) -> Layup:
    """Alternating 90/0 stack starting with 90 degrees at the bottom."""
    if n_layers < 1:
        raise ValueError("n_layers must be >= 1")
    base = material.with_thickness(ply_thickness)
    return Layup(tuple(base.rotated(90 if k % 2 == 0 else 0) for k in range(n_layers)))


def homogenize(layup: Layup) -> dict[str, float]:
    """Equivalent single-layer in-plane constants with interface correction.

    ``C_ab = sum_k f_k C_ab^k + sum_{k>=2} (C_a3^k - Cbar_a3) f_k (C_b3^1 - C_b3^k) / C_33^k``
    with ``Cbar_a3 = sum_k f_k C_a3^k`` and a volume-averaged ``C_66``.

    Returns
    -------
    dict
        Keys ``C11, C12, C22, C66, C13, C23``.
    """
    f = layup.fractions
    Cs = [layup.stiffness(k) for k in range(len(layup))]
    avg = sum(fk * C for fk, C in zip(f, Cs))
    ca3 = avg[[0, 1], 2]
    out = {}
    for a, b in ((0, 0), (0, 1), (1, 1)):
        corr = 0.0
        for k in range(1, len(Cs)):
            Ck = Cs[k]
            corr += (Ck[a, 2] - ca3[a]) * f[k] * (Cs[0][b, 2] - Ck[b, 2]) / Ck[2, 2]
        out[f"C{a + 1}{b + 1}"] = float(avg[a, b] + corr)
    out["C66"] = float(avg[5, 5])
    out["C13"] = float(ca3[0])
    out["C23"] = float(ca3[1])
    return out


def bending_stiffness(cbar: dict[str, float], t: float) -> np.ndarray:
    """``D = t^3/12 * C`` as the 3x3 matrix on ``(k11, k22, 2 k12)``."""
    if not t > 0:
        raise ValueError("thickness must be positive")
    s = t**3 / 12.0
    return s * np.array([[cbar["C11"], cbar["C12"], 0.0],
                         [cbar["C12"], cbar["C22"], 0.0],
                         [0.0, 0.0, cbar["C66"]]])


def effective_rigidity(D: np.ndarray) -> float:
    """``D11 + 2 (D12 + 2 D66) + D22``."""
    return float(D[0, 0] + 2 * (D[0, 1] + 2 * D[2, 2]) + D[1, 1])


def in_plane_ply_matrix(C: np.ndarray | Lamina, mode: str = "reduced") -> np.ndarray:
    """3x3 ply matrix mapping ``(e11, e22, gamma12)`` to ``(s11, s22, s12)``.

    Parameters
    ----------
    C : ndarray or Lamina
        Plate-axis 6x6 stiffness, or a lamina whose rotated stiffness is used.
    mode : {"raw", "reduced"}
        ``raw`` takes the in-plane block of ``C``; ``reduced`` condenses out
        ``s33 = 0`` (plane stress).
    """
    if isinstance(C, Lamina):
        C = C.stiffness
    C = np.asarray(C)
    Q = C[np.ix_(_PLANE, _PLANE)].copy()
    if mode == "raw":
        return Q
    if mode != "reduced":
        raise ValueError(f"unknown ply-matrix mode {mode!r}")
    if not C[2, 2] > 0:
        raise ValueError("C33 must be positive")
    c3 = C[[0, 1], 2]
    Q[:2, :2] -= np.outer(c3, c3) / C[2, 2]
    return Q
