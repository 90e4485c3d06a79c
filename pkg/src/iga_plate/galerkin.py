"""Galerkin discretization of the Kirchhoff bending problem.

The stiffness is ``K = sum_e int B^T D B`` with curvature rows
``(w,11, w,22, 2 w,12)``; simply supported edges are imposed by removing the
boundary ring of control coefficients, which leaves the moment condition
natural.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .solution import SineLoad, SolutionField, SolverError, boundary_ring, free_indices
from .splines import DiscreteSpace, KnotVector, basis_functions

__all__ = [
    "AssembledSystem",
    "ReducedSystem",
    "assemble_stiffness",
    "load_vector",
    "assemble",
    "impose_simply_supported",
    "solve",
    "solve_plate",
]


@dataclass(frozen=True)
class AssembledSystem:
    """Full-net stiffness, load and constrained (ring-0) indices."""

    space: DiscreteSpace
    K: np.ndarray
    f: np.ndarray
    constrained: np.ndarray


@dataclass(frozen=True)
class ReducedSystem:
    """System restricted to free coefficients."""

    space: DiscreteSpace
    K: np.ndarray
    f: np.ndarray
    free: np.ndarray


def _element_tables(kv: KnotVector, n_gauss: int, order: int):
    """Per-element Gauss points, weights and univariate basis derivatives.

    Returns a list of ``(first, weights, ders)`` with ``ders`` of shape
    ``(n_gauss, order + 1, p + 1)`` in parametric coordinates.
    """
    xg, wg = np.polynomial.legendre.leggauss(n_gauss)
    bp = kv.breakpoints
    out = []
    for a, b in zip(bp[:-1], bp[1:]):
        u = 0.5 * (b - a) * xg + 0.5 * (a + b)
        rows = [basis_functions(kv, float(ui), order) for ui in u]
        first = rows[0][0]
        if any(r[0] != first for r in rows):
            raise AssertionError("Gauss points of one element map to different spans")
        out.append((first, 0.5 * (b - a) * wg, np.stack([r[1] for r in rows])))
    return out


def assemble_stiffness(space: DiscreteSpace, D: np.ndarray, n_gauss: tuple[int, int] | None = None) -> np.ndarray:
    """Dense bending stiffness over the full control net (row-major, i2 fastest).

    Parameters
    ----------
    space : DiscreteSpace
        Must be at least C1.
    D : ndarray, shape (3, 3)
        Bending stiffness on ``(k11, k22, 2 k12)``.
    n_gauss : tuple of int, optional
        Gauss points per element and direction; defaults to ``(p+1, q+1)``.
    """
    if space.continuity() < 1:
        raise ValueError("bending stiffness needs a C1 space (continuity >= 1)")
    D = np.asarray(D, dtype=float)
    p1, p2 = space.degrees
    g1, g2 = n_gauss or (p1 + 1, p2 + 1)
    L1, L2 = space.L1, space.L2
    m1, m2 = space.shape
    K = np.zeros((m1 * m2, m1 * m2))
    t1 = _element_tables(space.kv1, g1, 2)
    t2 = _element_tables(space.kv2, g2, 2)
    jac = L1 * L2
    for f1, w1, d1 in t1:
        # physical derivatives along x1: N, N', N''
        N1 = d1 * (L1 ** -np.arange(3))[None, :, None]
        for f2, w2, d2 in t2:
            N2 = d2 * (L2 ** -np.arange(3))[None, :, None]
            # B[g1, g2, row, i, j]
            B = np.stack([
                np.einsum("gi,hj->ghij", N1[:, 2], N2[:, 0]),
                np.einsum("gi,hj->ghij", N1[:, 0], N2[:, 2]),
                2.0 * np.einsum("gi,hj->ghij", N1[:, 1], N2[:, 1]),
            ], axis=2)
            B = B.reshape(len(w1) * len(w2), 3, -1)
            W = (np.outer(w1, w2) * jac).ravel()
            DB = np.einsum("rs,gsb->grb", D, B) * W[:, None, None]
            Ke = B.reshape(-1, B.shape[-1]).T @ DB.reshape(-1, B.shape[-1])
            i1 = np.arange(f1, f1 + p1 + 1)
            i2 = np.arange(f2, f2 + p2 + 1)
            idx = (i1[:, None] * m2 + i2[None, :]).ravel()
            K[np.ix_(idx, idx)] += Ke
    return 0.5 * (K + K.T)


def load_vector(space: DiscreteSpace, load: SineLoad, n_gauss: tuple[int, int] | None = None) -> np.ndarray:
    """Consistent load ``f_i = int q B_i`` by element-wise Gauss quadrature."""
    p1, p2 = space.degrees
    g1, g2 = n_gauss or (p1 + 1, p2 + 1)
    L1, L2 = space.L1, space.L2
    m1, m2 = space.shape
    f = np.zeros(m1 * m2)
    xg1, _ = np.polynomial.legendre.leggauss(g1)
    xg2, _ = np.polynomial.legendre.leggauss(g2)
    t1 = _element_tables(space.kv1, g1, 0)
    t2 = _element_tables(space.kv2, g2, 0)
    bp1, bp2 = space.kv1.breakpoints, space.kv2.breakpoints
    for e1, (f1, w1, d1) in enumerate(t1):
        x1 = L1 * (0.5 * (bp1[e1 + 1] - bp1[e1]) * xg1 + 0.5 * (bp1[e1] + bp1[e1 + 1]))
        for e2, (f2, w2, d2) in enumerate(t2):
            x2 = L2 * (0.5 * (bp2[e2 + 1] - bp2[e2]) * xg2 + 0.5 * (bp2[e2] + bp2[e2 + 1]))
            q = load(x1[:, None], x2[None, :]) * np.outer(w1, w2) * L1 * L2
            fe = np.einsum("gh,gi,hj->ij", q, d1[:, 0], d2[:, 0])
            i1 = np.arange(f1, f1 + p1 + 1)
            i2 = np.arange(f2, f2 + p2 + 1)
            f[(i1[:, None] * m2 + i2[None, :]).ravel()] += fe.ravel()
    return f


def assemble(space: DiscreteSpace, D: np.ndarray, load: SineLoad) -> AssembledSystem:
    return AssembledSystem(space, assemble_stiffness(space, D), load_vector(space, load),
                           boundary_ring(space.shape))


def impose_simply_supported(system: AssembledSystem) -> ReducedSystem:
    """Fix the boundary ring to zero and drop its rows and columns."""
    free = free_indices(system.space.shape)
    return ReducedSystem(system.space, system.K[np.ix_(free, free)], system.f[free], free)


def solve(reduced: ReducedSystem) -> SolutionField:
    """Cholesky solve; boundary zeros are re-inserted.

    Raises
    ------
    SolverError
        If the reduced stiffness is not positive definite or the residual
        exceeds ``1e-10 ||f||``.
    """
    try:
        c, low = linalg.cho_factor(reduced.K)
    except linalg.LinAlgError as exc:
        raise SolverError(f"galerkin: reduced stiffness is not positive definite ({exc})") from exc
    x = linalg.cho_solve((c, low), reduced.f)
    res = float(np.linalg.norm(reduced.K @ x - reduced.f))
    fn = float(np.linalg.norm(reduced.f))
    if res > 1e-10 * max(fn, np.finfo(float).tiny) and fn > 0:
        raise SolverError(f"galerkin: residual {res:.3e} exceeds tolerance (||f|| = {fn:.3e})")
    m1, m2 = reduced.space.shape
    full = np.zeros(m1 * m2)
    full[reduced.free] = x
    diag = np.diag(c)
    diagnostics = {
        "residual": res / fn if fn > 0 else 0.0,
        "condition_estimate": float((diag.max() / diag.min()) ** 2),
        "unknowns": int(len(x)),
    }
    return SolutionField(reduced.space, full.reshape(m1, m2), diagnostics)


def solve_plate(space: DiscreteSpace, D: np.ndarray, sigma0: float) -> SolutionField:
    """Assemble, impose simply supported edges and solve."""
    return solve(impose_simply_supported(assemble(space, D, SineLoad.for_space(space, sigma0))))
