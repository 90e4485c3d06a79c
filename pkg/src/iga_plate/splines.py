"""B-spline kernels for a rectangular plate mid-plane.

Univariate bases are evaluated with the Cox-de Boor recursion together with
the standard degree-reduction formula for derivatives.  Bivariate quantities
are tensor products over the unit square, mapped affinely onto
``[0, L1] x [0, L2]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

__all__ = [
    "KnotVector",
    "DiscreteSpace",
    "BasisTable",
    "make_open_knot_vector",
    "find_span",
    "basis_functions",
    "greville_points",
    "basis_table",
    "surface_eval",
    "interpolate_at_greville",
]

MAX_ORDER = 4


@dataclass(frozen=True)
class KnotVector:
    """Open, nondecreasing knot vector on ``[0, 1]``.

    Parameters
    ----------
    values : tuple of Fraction
        Knot values stored exactly.
    degree : int
        Polynomial degree ``p``.
    """

    values: tuple[Fraction, ...]
    degree: int

    def __post_init__(self) -> None:
        p = self.degree
        v = tuple(Fraction(x) for x in self.values)
        object.__setattr__(self, "values", v)
        if p < 0:
            raise ValueError(f"degree must be nonnegative, got {p}")
        if any(b < a for a, b in zip(v, v[1:])):
            raise ValueError("knot values must be nondecreasing")
        if len(v) < 2 * (p + 1):
            raise ValueError("too few knots for an open knot vector")
        if v[0] != 0 or v[-1] != 1:
            raise ValueError("knot vector must span [0, 1]")
        if v.count(v[0]) != p + 1 or v.count(v[-1]) != p + 1:
            raise ValueError("end knots must be repeated exactly degree+1 times")

    @property
    def n_basis(self) -> int:
        return len(self.values) - self.degree - 1

    @cached_property
    def array(self) -> np.ndarray:
        return np.array([float(x) for x in self.values])

    @cached_property
    def breakpoints(self) -> np.ndarray:
        """Distinct knot values."""
        return np.array(sorted({float(x) for x in self.values}))

    @property
    def n_elements(self) -> int:
        return len(self.breakpoints) - 1

    def interior_continuity(self) -> int:
        """Minimum continuity order over interior knots (``p`` if none)."""
        p = self.degree
        interior = [x for x in set(self.values) if 0 < x < 1]
        if not interior:
            return p
        return min(p - self.values.count(x) for x in interior)


def make_open_knot_vector(degree: int, elements: int) -> KnotVector:
    """Uniform open knot vector with maximal interior smoothness.

    Examples
    --------
    >>> kv = make_open_knot_vector(2, 2)
    >>> [float(x) for x in kv.values]
    [0.0, 0.0, 0.0, 0.5, 1.0, 1.0, 1.0]
    >>> kv.n_basis
    4
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if elements < 1:
        raise ValueError(f"elements must be >= 1, got {elements}")
    inner = [Fraction(k, elements) for k in range(1, elements)]
    vals = [Fraction(0)] * (degree + 1) + inner + [Fraction(1)] * (degree + 1)
    return KnotVector(tuple(vals), degree)


def find_span(kv: KnotVector, u: float) -> int:
    """Knot span index ``i`` with ``knots[i] <= u < knots[i+1]``.

    Right limits are used at interior knots; ``u = 1`` maps to the last
    nonempty span.
    """
    p, m = kv.degree, kv.n_basis
    if not 0.0 <= u <= 1.0:
        raise ValueError(f"parameter {u!r} outside [0, 1]")
    if u >= 1.0:
        return m - 1
    span = int(np.searchsorted(kv.array, u, side="right")) - 1
    return min(max(span, p), m - 1)


def basis_functions(kv: KnotVector, u: float, max_order: int = 0) -> tuple[int, np.ndarray]:
    """Nonzero basis functions and their parametric derivatives at ``u``.

    Parameters
    ----------
    kv : KnotVector
    u : float
        Parameter in ``[0, 1]``.
    max_order : int
        Highest derivative order; orders above the degree are zero.

    Returns
    -------
    first : int
        Global index of the first supported function.
    ders : ndarray, shape (max_order + 1, p + 1)
        ``ders[k, j]`` is the k-th derivative of function ``first + j``.
    """
    if max_order < 0:
        raise ValueError("max_order must be nonnegative")
    p = kv.degree
    U = kv.array
    span = find_span(kv, u)
    n = max_order

    ndu = np.zeros((p + 1, p + 1))
    left = np.zeros(p + 1)
    right = np.zeros(p + 1)
    ndu[0, 0] = 1.0
    for j in range(1, p + 1):
        left[j] = u - U[span + 1 - j]
        right[j] = U[span + j] - u
        saved = 0.0
        for r in range(j):
            # lower triangle stores knot differences
            ndu[j, r] = right[r + 1] + left[j - r]
            temp = ndu[r, j - 1] / ndu[j, r]
            ndu[r, j] = saved + right[r + 1] * temp
            saved = left[j - r] * temp
        ndu[j, j] = saved

    ders = np.zeros((n + 1, p + 1))
    ders[0] = ndu[:, p]
    a = np.zeros((2, p + 1))
    for r in range(p + 1):
        s1, s2 = 0, 1
        a[0, 0] = 1.0
        for k in range(1, min(n, p) + 1):
            d = 0.0
            rk, pk = r - k, p - k
            if r >= k:
                a[s2, 0] = a[s1, 0] / ndu[pk + 1, rk]
                d = a[s2, 0] * ndu[rk, pk]
            j1 = 1 if rk >= -1 else -rk
            j2 = k - 1 if r - 1 <= pk else p - r
            for j in range(j1, j2 + 1):
                a[s2, j] = (a[s1, j] - a[s1, j - 1]) / ndu[pk + 1, rk + j]
                d += a[s2, j] * ndu[rk + j, pk]
            if r <= pk:
                a[s2, k] = -a[s1, k - 1] / ndu[pk + 1, r]
                d += a[s2, k] * ndu[r, pk]
            ders[k, r] = d
            s1, s2 = s2, s1
    fac = p
    for k in range(1, min(n, p) + 1):
        ders[k] *= fac
        fac *= p - k
    return span - p, ders


def greville_points(kv: KnotVector) -> np.ndarray:
    """Knot averages ``mean(knots[i+1 : i+p+1])`` for every basis function."""
    p = kv.degree
    v = kv.values
    if p == 0:
        return np.array([float((v[i] + v[i + 1]) / 2) for i in range(kv.n_basis)])
    return np.array([float(sum(v[i + 1 : i + p + 1]) / p) for i in range(kv.n_basis)])


@dataclass(frozen=True)
class DiscreteSpace:
    """Tensor-product spline space on the rectangle ``[0, L1] x [0, L2]``."""

    kv1: KnotVector
    kv2: KnotVector
    L1: float
    L2: float

    def __post_init__(self) -> None:
        if not (self.L1 > 0 and self.L2 > 0):
            raise ValueError("edge lengths must be positive")

    @classmethod
    def uniform(cls, p: int, m: int, L: float, q: int | None = None, m2: int | None = None,
                L2: float | None = None) -> "DiscreteSpace":
        """Square-style space with ``m`` functions of degree ``p`` per direction."""
        q = p if q is None else q
        m2 = m if m2 is None else m2
        return cls(make_open_knot_vector(p, m - p), make_open_knot_vector(q, m2 - q),
                   float(L), float(L if L2 is None else L2))

    @property
    def m1(self) -> int:
        return self.kv1.n_basis

    @property
    def m2(self) -> int:
        return self.kv2.n_basis

    @property
    def shape(self) -> tuple[int, int]:
        return self.m1, self.m2

    @property
    def degrees(self) -> tuple[int, int]:
        return self.kv1.degree, self.kv2.degree

    def continuity(self) -> int:
        return min(self.kv1.interior_continuity(), self.kv2.interior_continuity())

    def supports_recovery(self) -> bool:
        """True when fourth derivatives are continuous (degree >= 5, C4)."""
        return min(self.degrees) >= 5 and self.continuity() >= 4

    def to_parametric(self, x1: float, x2: float) -> tuple[float, float]:
        tol = 1e-12
        u, v = x1 / self.L1, x2 / self.L2
        if not (-tol <= u <= 1 + tol and -tol <= v <= 1 + tol):
            raise ValueError(f"point ({x1}, {x2}) outside the plate")
        return min(max(u, 0.0), 1.0), min(max(v, 0.0), 1.0)


@dataclass(frozen=True)
class BasisTable:
    """Supported bivariate functions and physical derivatives at one point.

    Attributes
    ----------
    first1, first2 : int
        Index of the first supported function per direction.
    ders1, ders2 : ndarray
        Univariate physical derivatives, shape ``(n + 1, p + 1)``.
    shape : tuple of int
        Control-net dimensions ``(m1, m2)``.
    """

    first1: int
    first2: int
    ders1: np.ndarray
    ders2: np.ndarray
    shape: tuple[int, int]

    @property
    def max_order(self) -> int:
        return min(self.ders1.shape[0], self.ders2.shape[0]) - 1

    def local(self, a: int, b: int) -> np.ndarray:
        """``d^(a+b) B / dx1^a dx2^b`` for supported functions, ``(p+1, q+1)``."""
        if a + b > self.max_order:
            raise ValueError(f"order {a + b} exceeds table order {self.max_order}")
        return np.outer(self.ders1[a], self.ders2[b])

    @property
    def indices(self) -> np.ndarray:
        """Flat row-major (i2 fastest) indices matching ``local(...).ravel()``."""
        i1 = np.arange(self.first1, self.first1 + self.ders1.shape[1])
        i2 = np.arange(self.first2, self.first2 + self.ders2.shape[1])
        return (i1[:, None] * self.shape[1] + i2[None, :]).ravel()

    def row(self, a: int, b: int) -> np.ndarray:
        """Dense row over the full control net."""
        r = np.zeros(self.shape[0] * self.shape[1])
        r[self.indices] = self.local(a, b).ravel()
        return r


def basis_table(space: DiscreteSpace, point: tuple[float, float], max_order: int = MAX_ORDER) -> BasisTable:
    """Evaluate all mixed partials up to ``max_order`` at a physical point."""
    if not 0 <= max_order <= MAX_ORDER:
        raise ValueError(f"max_order must lie in [0, {MAX_ORDER}]")
    u, v = space.to_parametric(*point)
    f1, d1 = basis_functions(space.kv1, u, max_order)
    f2, d2 = basis_functions(space.kv2, v, max_order)
    s1 = space.L1 ** -np.arange(max_order + 1)
    s2 = space.L2 ** -np.arange(max_order + 1)
    return BasisTable(f1, f2, d1 * s1[:, None], d2 * s2[:, None], space.shape)


def surface_eval(space: DiscreteSpace, coeffs: np.ndarray, point: tuple[float, float],
                 max_total_order: int = MAX_ORDER) -> dict[tuple[int, int], float]:
    """Field value and physical partial derivatives at ``point``.

    Returns
    -------
    dict
        Maps ``(a, b)`` to ``d^(a+b) w / dx1^a dx2^b`` for ``a + b <= max_total_order``.
    """
    c = np.asarray(coeffs, dtype=float)
    if c.shape != space.shape:
        raise ValueError(f"coefficient shape {c.shape} does not match {space.shape}")
    tab = basis_table(space, point, max_total_order)
    p1, p2 = space.degrees
    block = c[tab.first1 : tab.first1 + p1 + 1, tab.first2 : tab.first2 + p2 + 1]
    # (a, i) x (i, j) x (b, j)
    vals = tab.ders1 @ block @ tab.ders2.T
    return {(a, b): float(vals[a, b])
            for a in range(max_total_order + 1) for b in range(max_total_order + 1 - a)}


def interpolate_at_greville(space: DiscreteSpace, func) -> np.ndarray:
    """Coefficients whose spline interpolates ``func(x1, x2)`` at Greville points."""
    g1 = greville_points(space.kv1)
    g2 = greville_points(space.kv2)
    A1 = _collocation_matrix(space.kv1, g1)
    A2 = _collocation_matrix(space.kv2, g2)
    X1, X2 = np.meshgrid(g1 * space.L1, g2 * space.L2, indexing="ij")
    F = np.vectorize(func, otypes=[float])(X1, X2)
    return np.linalg.solve(A2, np.linalg.solve(A1, F).T).T


def _collocation_matrix(kv: KnotVector, pts: np.ndarray) -> np.ndarray:
    A = np.zeros((len(pts), kv.n_basis))
    for r, u in enumerate(pts):
        first, d = basis_functions(kv, float(u), 0)
        A[r, first : first + kv.degree + 1] = d[0]
    return A
