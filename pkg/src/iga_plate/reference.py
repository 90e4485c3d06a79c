"""Closed-form Navier field, stress normalization, error metrics and fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import trapezoid

from . import fixtures
from .materials import effective_rigidity
from .recovery import COMPONENTS, DeflectionJet, StressProfile

__all__ = [
    "NavierField",
    "navier_solution",
    "SHEAR_SCALINGS",
    "normalization_factors",
    "normalize",
    "denormalize",
    "l2_thickness_error",
    "pointwise_diff",
    "FixtureRecord",
    "FixtureTable",
    "published_fixtures",
    "TABLE_POINTS",
]

# shear scaled by sigma0*S ("thickness") or by sigma0 alone ("table")
SHEAR_SCALINGS = ("thickness", "table")

# sampling points of the published tables, as (x1/L, x2/L, x3/t)
TABLE_POINTS = ((0.0, 0.5, 0.0), (0.0, 0.5, 0.25), (0.25, 0.25, 0.0),
                (0.25, 0.25, 0.25), (0.5, 0.0, 0.0), (0.5, 0.0, 0.25))


@dataclass(frozen=True)
class NavierField:
    """``w = W sin(pi x1 / L1) sin(pi x2 / L2)``."""

    W: float
    L1: float
    L2: float

    def partial(self, a: int, b: int, x1, x2):
        k1, k2 = np.pi / self.L1, np.pi / self.L2
        return (self.W * k1**a * k2**b
                * np.sin(k1 * np.asarray(x1) + a * np.pi / 2)
                * np.sin(k2 * np.asarray(x2) + b * np.pi / 2))

    def __call__(self, x1, x2):
        return self.partial(0, 0, x1, x2)

    def jet(self, x1: float, x2: float) -> DeflectionJet:
        return DeflectionJet.from_function(lambda a, b: self.partial(a, b, x1, x2), (float(x1), float(x2)))

    def moment(self, D: np.ndarray, x1, x2) -> tuple:
        """``M = -D kappa`` as ``(M11, M22, M12)``."""
        k = np.stack([self.partial(2, 0, x1, x2), self.partial(0, 2, x1, x2), 2 * self.partial(1, 1, x1, x2)])
        M = -np.tensordot(np.asarray(D), k, axes=1)
        return M[0], M[1], M[2]


def navier_solution(D: np.ndarray, L: float, sigma0: float, L2: float | None = None) -> NavierField:
    """Single-harmonic solution of ``D11 w,1111 + 2(D12+2D66) w,1122 + D22 w,2222 = q``.

    For a square plate ``W = sigma0 L^4 / (pi^4 D_eff)``; the load acts along
    ``+x3``.
    """
    L2 = L if L2 is None else L2
    if not (L > 0 and L2 > 0):
        raise ValueError("edge lengths must be positive")
    D = np.asarray(D)
    k1, k2 = np.pi / L, np.pi / L2
    denom = D[0, 0] * k1**4 + 2 * (D[0, 1] + 2 * D[2, 2]) * k1**2 * k2**2 + D[1, 1] * k2**4
    if not denom > 0:
        raise ValueError("effective rigidity must be positive")
    if L == L2:
        # same value; keeps the square-plate closed form visible
        denom = effective_rigidity(D) * k1**4
    return NavierField(sigma0 / denom, float(L), float(L2))


def normalization_factors(S: float, sigma0: float, shear: str = "thickness") -> dict[str, float]:
    """Multipliers turning raw stresses into normalized ones."""
    if not S > 0:
        raise ValueError("S must be positive")
    if sigma0 == 0:
        raise ValueError("sigma0 must be nonzero to normalize")
    if shear not in SHEAR_SCALINGS:
        raise ValueError(f"unknown shear scaling {shear!r}")
    tau = 1.0 / (sigma0 * S) if shear == "thickness" else 1.0 / sigma0
    plane = 1.0 / (sigma0 * S**2)
    return {"s11": plane, "s22": plane, "s12": plane, "s13": tau, "s23": tau, "s33": 1.0 / sigma0}


def normalize(profile: StressProfile, S: float, sigma0: float, shear: str = "thickness") -> StressProfile:
    """Dimensionless stresses.

    In-plane components are divided by ``sigma0 S^2`` and ``s33`` by
    ``sigma0``.  Transverse shear is divided by ``sigma0 S`` (``thickness``)
    or by ``sigma0`` (``table``, the scaling of the published tables).
    """
    if profile.normalized:
        raise ValueError("profile is already normalized")
    return profile.scaled(normalization_factors(S, sigma0, shear), True)


def denormalize(profile: StressProfile, S: float, sigma0: float, shear: str = "thickness") -> StressProfile:
    if not profile.normalized:
        raise ValueError("profile is not normalized")
    f = normalization_factors(S, sigma0, shear)
    return profile.scaled({c: 1.0 / v for c, v in f.items()}, False)


def l2_thickness_error(recovered: StressProfile, analytic: StressProfile) -> dict[str, float | None]:
    """Relative L2 error over the thickness, in percent.

    ``None`` marks components whose reference is identically zero.
    """
    if recovered.grid.z.shape != analytic.grid.z.shape or not np.allclose(recovered.grid.z, analytic.grid.z):
        raise ValueError("profiles live on different thickness grids")
    z = recovered.grid.z
    dens = {c: trapezoid(analytic.component(c) ** 2, z) for c in COMPONENTS}
    # a reference at roundoff level relative to the others counts as zero
    floor = 1e-24 * max(dens.values())
    out = {}
    for c in COMPONENTS:
        a = analytic.component(c)
        den = dens[c]
        if not den > floor:
            out[c] = None
            continue
        out[c] = float(100.0 * np.sqrt(trapezoid((recovered.component(c) - a) ** 2, z) / den))
    return out


def pointwise_diff(analytic: float, recovered: float, scale: float = 1.0) -> tuple[float, bool]:
    """Difference in percent, relative unless the reference vanishes.

    Returns
    -------
    delta : float
        ``100 |a - r| / |a|``, or ``100 |a - r|`` (starred) when
        ``|a| < 1e-12 scale``.
    starred : bool
    """
    a, r = float(analytic), float(recovered)
    if abs(a) < 1e-12 * abs(scale):
        return 100.0 * abs(a - r), True
    return 100.0 * abs(a - r) / abs(a), False


@dataclass(frozen=True)
class FixtureRecord:
    """One printed table row.

    ``deltas`` is ``None`` for reference rows.
    """

    layers: int
    S: int
    point: tuple[float, float, float]
    method: str
    values: dict
    deltas: dict | None
    starred: dict | None

    @property
    def table(self) -> str:
        x1, x2, x3 = self.point
        return f"{self.layers} layers, x=({_frac(x1, 'L')},{_frac(x2, 'L')},{_frac(x3, 'h')})"


def _frac(v: float, sym: str) -> str:
    return {0.0: "0", 0.25: f"{sym}/4", 0.5: f"{sym}/2"}.get(v, f"{v}{sym}")


class FixtureTable:
    """Read-only lookup over the embedded records."""

    def __init__(self, records: tuple[FixtureRecord, ...]):
        self._records = records
        self._index = {(r.layers, r.S, r.point, r.method): r for r in records}

    def __iter__(self):
        return iter(self._records)

    def __len__(self) -> int:
        return len(self._records)

    def get(self, layers: int, S: float, point, method: str) -> FixtureRecord | None:
        key = (int(layers), int(S) if float(S).is_integer() else S, tuple(round(float(c), 4) for c in point), method)
        return self._index.get(key)

    def select(self, **kw) -> list[FixtureRecord]:
        return [r for r in self._records if all(getattr(r, k) == v for k, v in kw.items())]


@lru_cache(maxsize=1)
def published_fixtures() -> FixtureTable:
    """Embedded published values (no I/O)."""
    recs = []
    for line in fixtures.RAW.strip().splitlines():
        tok = line.split()
        layers, S = int(tok[0]), int(tok[1])
        point = tuple(round(float(c), 4) for c in tok[2:5])
        method = tok[5]
        vals = dict(zip(("s13", "s23", "s33"), map(float, tok[6:9])))
        if tok[9] == "-":
            deltas = starred = None
        else:
            deltas = {c: float(d.rstrip("*")) for c, d in zip(("s13", "s23", "s33"), tok[9:12])}
            starred = {c: d.endswith("*") for c, d in zip(("s13", "s23", "s33"), tok[9:12])}
        recs.append(FixtureRecord(layers, S, point, method, vals, deltas, starred))
    return FixtureTable(tuple(recs))
