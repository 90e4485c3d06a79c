"""Strong-form collocation at Greville points.

Interior rows collocate the fourth-order bending equation, edge rows the
normal bending moment.  The boundary deflection is imposed exactly by
removing the outer ring of control coefficients.

Policies
--------
``lsq-moment``
    PDE rows at every interior point and moment rows at every edge point
    (corners excluded); overdetermined, solved in least squares.
``pde-only``
    PDE rows at interior points only; square.  The edge moment is reported
    as a diagnostic but not imposed.
``moment-replace``
    Moment rows at every edge point replace the PDE rows at the interior
    points adjacent to the boundary (ring 1); PDE rows elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .solution import SineLoad, SolutionField, SolverError, free_indices
from .splines import DiscreteSpace, basis_table, greville_points

__all__ = [
    "POLICIES",
    "CollocationGrid",
    "CollocationSystem",
    "build_grid",
    "pde_row",
    "moment_row",
    "assemble",
    "solve",
    "solve_plate",
]

POLICIES = ("lsq-moment", "pde-only", "moment-replace")

INTERIOR, EDGE, CORNER = "interior", "edge", "corner"


@dataclass(frozen=True)
class CollocationGrid:
    """Greville points mapped to the plate, with a kind and normal per point.

    Attributes
    ----------
    points : ndarray, shape (m1, m2, 2)
    kinds : ndarray of str, shape (m1, m2)
    normals : ndarray, shape (m1, m2, 2)
        Outward unit normal at edge points, zero elsewhere.
    """

    points: np.ndarray
    kinds: np.ndarray
    normals: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.kinds.shape

    def count(self, kind: str) -> int:
        return int((self.kinds == kind).sum())


@dataclass(frozen=True)
class CollocationSystem:
    """Rows over the free coefficients, with per-row metadata."""

    space: DiscreteSpace
    A: np.ndarray
    b: np.ndarray
    free: np.ndarray
    row_kinds: np.ndarray
    row_points: np.ndarray
    policy: str
    omega: float
    normalized: bool

    @property
    def is_square(self) -> bool:
        return self.A.shape[0] == self.A.shape[1]


def build_grid(space: DiscreteSpace) -> CollocationGrid:
    g1 = greville_points(space.kv1)
    g2 = greville_points(space.kv2)
    m1, m2 = len(g1), len(g2)
    pts = np.stack(np.meshgrid(g1 * space.L1, g2 * space.L2, indexing="ij"), axis=-1)
    on1 = np.isin(np.arange(m1), [0, m1 - 1])
    on2 = np.isin(np.arange(m2), [0, m2 - 1])
    kinds = np.full((m1, m2), INTERIOR, dtype=object)
    normals = np.zeros((m1, m2, 2))
    for i in range(m1):
        for j in range(m2):
            if on1[i] and on2[j]:
                kinds[i, j] = CORNER
            elif on1[i]:
                kinds[i, j] = EDGE
                normals[i, j] = (-1.0 if i == 0 else 1.0, 0.0)
            elif on2[j]:
                kinds[i, j] = EDGE
                normals[i, j] = (0.0, -1.0 if j == 0 else 1.0)
    return CollocationGrid(pts, kinds, normals)


def _on_boundary(space: DiscreteSpace, tau) -> bool:
    u, v = space.to_parametric(*tau)
    return u in (0.0, 1.0) or v in (0.0, 1.0)


def pde_row(space: DiscreteSpace, D: np.ndarray, tau) -> np.ndarray:
    """Row ``r`` with ``r . w = -(D11 w,1111 + 2 (D12 + 2 D66) w,1122 + D22 w,2222)``."""
    if _on_boundary(space, tau):
        raise ValueError(f"PDE row requested at boundary point {tuple(tau)}")
    tab = basis_table(space, tau, 4)
    D = np.asarray(D)
    return -(D[0, 0] * tab.row(4, 0) + 2 * (D[0, 1] + 2 * D[2, 2]) * tab.row(2, 2) + D[1, 1] * tab.row(0, 4))


def moment_row(space: DiscreteSpace, D: np.ndarray, tau, n) -> np.ndarray:
    """Row ``r`` with ``r . w = -M_nn``, where ``M = -D kappa``."""
    n1, n2 = map(float, n)
    if not ((abs(n1) == 1 and n2 == 0) or (n1 == 0 and abs(n2) == 1)):
        raise ValueError("normal must be axis-aligned and of unit length")
    u, v = space.to_parametric(*tau)
    if (u in (0.0, 1.0)) and (v in (0.0, 1.0)):
        raise ValueError(f"moment row requested at corner {tuple(tau)}")
    if not ((n1 != 0 and u in (0.0, 1.0)) or (n2 != 0 and v in (0.0, 1.0))):
        raise ValueError(f"point {tuple(tau)} is not on an edge with normal {n}")
    D = np.asarray(D)
    tab = basis_table(space, tau, 2)
    w11, w22, w12 = tab.row(2, 0), tab.row(0, 2), tab.row(1, 1)
    return ((D[0, 0] * w11 + D[0, 1] * w22) * n1 * n1
            + (D[0, 1] * w11 + D[1, 1] * w22) * n2 * n2
            + 4 * D[2, 2] * w12 * n1 * n2)


def assemble(space: DiscreteSpace, D: np.ndarray, load: SineLoad, policy: str = "lsq-moment",
             omega: float = 1.0, normalize: bool = True) -> CollocationSystem:
    """Build the collocation rows for one policy.

    Boundary rows come first, then interior rows, each in grid order.  The
    right-hand side of PDE rows is ``-q`` because the load acts along
    ``+x3``; moment rows have a zero right-hand side.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown collocation policy {policy!r}; choose from {', '.join(POLICIES)}")
    if not omega > 0:
        raise ValueError("moment-row weight must be positive")
    m1, m2 = space.shape
    if policy == "moment-replace" and min(m1, m2) < 5:
        raise ValueError("moment-replace needs at least 5 control points per direction")
    grid = build_grid(space)
    free = free_indices(space.shape)
    rows, rhs, kinds, pts = [], [], [], []
    if policy != "pde-only":
        for i in range(m1):
            for j in range(m2):
                if grid.kinds[i, j] == EDGE:
                    tau = grid.points[i, j]
                    rows.append(omega * moment_row(space, D, tau, grid.normals[i, j]))
                    rhs.append(0.0)
                    kinds.append("moment")
                    pts.append(tau)
    for i in range(m1):
        for j in range(m2):
            if grid.kinds[i, j] != INTERIOR:
                continue
            if policy == "moment-replace" and (i in (1, m1 - 2) or j in (1, m2 - 2)):
                continue
            tau = grid.points[i, j]
            rows.append(pde_row(space, D, tau))
            rhs.append(-float(load(*tau)))
            kinds.append("pde")
            pts.append(tau)
    A = np.array(rows)[:, free]
    b = np.array(rhs)
    if normalize:
        s = np.abs(A).max(axis=1)
        s[s == 0] = 1.0
        A = A / s[:, None]
        b = b / s
    return CollocationSystem(space, A, b, free, np.array(kinds), np.array(pts), policy, float(omega), normalize)


def _deficient_column(A: np.ndarray, tol: float) -> int:
    _, R, piv = linalg.qr(A, mode="economic", pivoting=True)
    d = np.abs(np.diag(R))
    bad = np.flatnonzero(d <= tol * d[0])
    return int(piv[bad[0]]) if len(bad) else int(piv[-1])


def _boundary_moment_residual(field: SolutionField, D: np.ndarray) -> float:
    """Largest edge |M_nn| relative to the largest interior moment."""
    space = field.space
    grid = build_grid(space)
    c = field.coeffs.ravel()
    edge, inner = [0.0], [0.0]
    for i in range(space.m1):
        for j in range(space.m2):
            tau = grid.points[i, j]
            if grid.kinds[i, j] == EDGE:
                edge.append(abs(moment_row(space, D, tau, grid.normals[i, j]) @ c))
            elif grid.kinds[i, j] == INTERIOR:
                tab = basis_table(space, tau, 2)
                k = np.array([tab.row(2, 0) @ c, tab.row(0, 2) @ c, 2 * tab.row(1, 1) @ c])
                inner.append(float(np.abs(np.asarray(D) @ k).max()))
    scale = max(inner)
    return max(edge) / scale if scale > 0 else max(edge)


def solve(system: CollocationSystem, D: np.ndarray | None = None) -> SolutionField:
    """LU for square systems, orthogonal least squares otherwise.

    Raises
    ------
    SolverError
        On rank deficiency (with the deficient free-column index) or an
        inaccurate square solve.
    """
    A, b = system.A, system.b
    n = A.shape[1]
    if A.shape[0] < n:
        raise SolverError(f"collocation: {A.shape[0]} rows for {n} unknowns")
    sv = linalg.svdvals(A)
    tol = max(A.shape) * np.finfo(float).eps * sv[0]
    rank = int((sv > tol).sum())
    if rank < n:
        col = _deficient_column(A, 1e3 * tol / sv[0])
        raise SolverError(f"collocation: rank {rank} < {n}; deficient column {col}")
    if system.is_square:
        lu = linalg.lu_factor(A)
        x = linalg.lu_solve(lu, b)
        res = float(np.linalg.norm(A @ x - b))
        if res > 1e-10 * max(float(np.linalg.norm(b)), 1.0) and np.linalg.norm(b) > 0:
            raise SolverError(f"collocation: LU residual {res:.3e} exceeds tolerance")
    else:
        x, *_ = linalg.lstsq(A, b, lapack_driver="gelsd")
    r = A @ x - b
    pde = system.row_kinds == "pde"
    bn = float(np.abs(b).max()) or 1.0
    m1, m2 = system.space.shape
    full = np.zeros(m1 * m2)
    full[system.free] = x
    field = SolutionField(system.space, full.reshape(m1, m2))
    diagnostics = {
        "policy": system.policy,
        "rows": int(A.shape[0]),
        "unknowns": int(n),
        "pde_residual": float(np.abs(r[pde]).max() / bn) if pde.any() else 0.0,
        "moment_residual": float(np.abs(r[~pde]).max() / bn) if (~pde).any() else 0.0,
        "condition_estimate": float(sv[0] / sv[-1]),
    }
    if D is not None:
        diagnostics["edge_moment_ratio"] = _boundary_moment_residual(field, D)
    return SolutionField(system.space, field.coeffs, diagnostics)


def solve_plate(space: DiscreteSpace, D: np.ndarray, sigma0: float, policy: str = "lsq-moment",
                omega: float = 1.0, normalize: bool = True) -> SolutionField:
    """Assemble and solve the collocation system for the sine load."""
    system = assemble(space, D, SineLoad.for_space(space, sigma0), policy, omega, normalize)
    return solve(system, D)
