"""Case configuration: flat ``key=value`` documents with ``#`` comments.

Several pairs may share a line (``solver=collocation policy=pde-only``).
Unknown keys and invalid values are collected and reported together.
"""

from __future__ import annotations

import math
import re
from dataclasses import asdict, dataclass, field, fields, replace

from .collocation import POLICIES
from .materials import TABLE1, Lamina, Layup, cross_ply_layup, stiffness_from_engineering
from .reference import SHEAR_SCALINGS, TABLE_POINTS

__all__ = ["ConfigError", "CaseConfig", "parse_config", "load_config", "default_points"]


class ConfigError(ValueError):
    """Validation failure; ``errors`` lists every problem found."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


def default_points() -> tuple[tuple[float, float, float], ...]:
    """Quarter-length in-plane grid at mid-plane plus the six table points."""
    q = (0.0, 0.25, 0.5, 0.75, 1.0)
    pts = [(a, b, 0.0) for a in q for b in q]
    pts += [p for p in TABLE_POINTS if p not in pts]
    return tuple(pts)


@dataclass(frozen=True)
class CaseConfig:
    """One benchmark case; points are fractions ``(x1/L, x2/L, x3/t)``."""

    layers: int = 11
    pattern: str = "90/0"
    E1: float = TABLE1.E1
    E2: float = TABLE1.E2
    E3: float = TABLE1.E3
    G12: float = TABLE1.G12
    G13: float = TABLE1.G13
    G23: float = TABLE1.G23
    nu12: float = TABLE1.nu12
    nu13: float = TABLE1.nu13
    nu23: float = TABLE1.nu23
    ply_thickness: float = 1.0
    S: float = 20.0
    sigma0: float = 1.0
    p: int = 6
    q: int = 6
    m1: int = 7
    m2: int = 7
    solver: str = "galerkin"
    policy: str = "lsq-moment"
    omega: float = 1.0
    row_normalization: bool = True
    ply_matrix: str = "reduced"
    membrane_coupling: bool = True
    nodes_per_ply: int = 20
    recovery: bool = True
    shear_scaling: str = "table"
    points: tuple = field(default_factory=default_points)
    sweep_S: tuple = (20.0, 30.0, 40.0, 50.0)
    sweep_m: tuple = (7, 14, 21)
    sweep_omega: tuple = (1.0,)
    sweep_points: tuple = ((0.0, 0.5), (0.25, 0.25), (0.5, 0.0))
    output_dir: str = "results"
    jobs: int = 1

    # derived quantities
    @property
    def material(self) -> Lamina:
        return Lamina(self.E1, self.E2, self.E3, self.G23, self.G13, self.G12,
                      self.nu23, self.nu13, self.nu12, 0, self.ply_thickness)

    def layup(self) -> Layup:
        lay = cross_ply_layup(self.layers, self.material, self.ply_thickness)
        if self.pattern == "0/90":
            lay = Layup(tuple(p.rotated(90 - p.orientation) for p in lay.plies))
        return lay

    @property
    def thickness(self) -> float:
        return self.layers * self.ply_thickness

    @property
    def length(self) -> float:
        return self.S * self.thickness

    def with_(self, **kw) -> "CaseConfig":
        cfg = replace(self, **kw)
        validate(cfg)
        return cfg

    def echo(self) -> dict:
        d = asdict(self)
        for k in ("points", "sweep_S", "sweep_m", "sweep_omega", "sweep_points"):
            d[k] = [list(v) if isinstance(v, tuple) else v for v in d[k]]
        return d


_FIELDS = {f.name: f for f in fields(CaseConfig)}
_INTS = {"layers", "p", "q", "m1", "m2", "nodes_per_ply", "jobs"}
_BOOLS = {"row_normalization", "membrane_coupling", "recovery"}
_STRS = {"pattern", "solver", "policy", "ply_matrix", "shear_scaling", "output_dir"}
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _tokens(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = re.sub(r"\s*=\s*", "=", raw.split("#", 1)[0]).strip()
        if not line:
            continue
        # a value may contain spaces after ';' or ',' (point lists)
        parts, cur = [], ""
        for tok in line.split():
            if "=" in tok and cur:
                parts.append(cur)
                cur = tok
            else:
                cur = f"{cur} {tok}".strip()
        if cur:
            parts.append(cur)
        for part in parts:
            yield n, part


def _parse_points(val: str, dim: int) -> tuple:
    pts = []
    for chunk in val.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coords = tuple(float(c) for c in chunk.split(","))
        if len(coords) != dim:
            raise ValueError(f"expected {dim} coordinates per point, got {chunk!r}")
        pts.append(coords)
    if not pts:
        raise ValueError("empty point list")
    return tuple(pts)


def _convert(key: str, val: str):
    if key in _INTS:
        return int(val)
    if key in _BOOLS:
        v = val.lower()
        if v in _TRUE:
            return True
        if v in _FALSE:
            return False
        raise ValueError(f"expected a boolean, got {val!r}")
    if key in _STRS:
        return val
    if key == "points":
        return default_points() if val == "default" else _parse_points(val, 3)
    if key == "sweep_points":
        return _parse_points(val, 2)
    if key == "sweep_m":
        return tuple(int(v) for v in val.split(","))
    if key in ("sweep_S", "sweep_omega"):
        return tuple(float(v) for v in val.split(","))
    x = float(val)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {val!r}")
    return x


def validate(cfg: CaseConfig) -> None:
    """Raise ``ConfigError`` listing every violated constraint."""
    e = []
    if cfg.layers < 1:
        e.append("layers must be >= 1")
    if cfg.pattern not in ("90/0", "0/90"):
        e.append(f"pattern must be 90/0 or 0/90, got {cfg.pattern!r}")
    for k in ("ply_thickness", "S"):
        if not getattr(cfg, k) > 0:
            e.append(f"{k} must be positive")
    if cfg.solver not in ("galerkin", "collocation"):
        e.append(f"solver must be galerkin or collocation, got {cfg.solver!r}")
    if cfg.policy not in POLICIES:
        e.append(f"policy must be one of {', '.join(POLICIES)}, got {cfg.policy!r}")
    if not cfg.omega > 0:
        e.append("omega must be positive")
    if cfg.ply_matrix not in ("raw", "reduced"):
        e.append(f"ply_matrix must be raw or reduced, got {cfg.ply_matrix!r}")
    if cfg.shear_scaling not in SHEAR_SCALINGS:
        e.append(f"shear_scaling must be one of {', '.join(SHEAR_SCALINGS)}")
    if cfg.nodes_per_ply < 2:
        e.append("nodes_per_ply must be >= 2")
    if cfg.jobs < 1:
        e.append("jobs must be >= 1")
    for d, (deg, m) in enumerate(((cfg.p, cfg.m1), (cfg.q, cfg.m2)), 1):
        if deg < 2:
            e.append(f"degree {deg} in direction {d} gives no C1 space (need >= 2)")
        if m < deg + 1:
            e.append(f"m{d} = {m} must be >= degree + 1 = {deg + 1}")
    if cfg.recovery and min(cfg.p, cfg.q) < 5:
        e.append(f"recovery needs C4 continuity: degrees p = {cfg.p}, q = {cfg.q} must be >= 5")
    if cfg.solver == "collocation":
        if min(cfg.p, cfg.q) < 4:
            e.append("collocation needs degree >= 4 for fourth derivatives")
        if cfg.policy == "moment-replace" and min(cfg.m1, cfg.m2) < 5:
            e.append("moment-replace needs m1, m2 >= 5")
    for pt in cfg.points:
        if not all(0.0 <= c <= 1.0 for c in pt[:2]) or not -0.5 <= pt[2] <= 0.5:
            e.append(f"point {pt} outside the plate (x1/L, x2/L in [0,1], x3/t in [-1/2,1/2])")
    for pt in cfg.sweep_points:
        if not all(0.0 <= c <= 1.0 for c in pt):
            e.append(f"sweep point {pt} outside the plate")
    if any(not s > 0 for s in cfg.sweep_S):
        e.append("sweep_S entries must be positive")
    if any(m < max(cfg.p, cfg.q) + 1 for m in cfg.sweep_m):
        e.append("sweep_m entries must be >= degree + 1")
    if any(not w > 0 for w in cfg.sweep_omega):
        e.append("sweep_omega entries must be positive")
    try:
        cfg.layup()
    except ValueError as exc:
        e.append(f"material: {exc}")
    else:
        try:
            stiffness_from_engineering(cfg.material)
        except ValueError as exc:
            e.append(f"material: {exc}")
    if e:
        raise ConfigError(e)


def parse_config(text: str) -> CaseConfig:
    """Parse and validate a configuration document; defaults fill the gaps."""
    values, errors = {}, []
    for n, part in _tokens(text):
        if "=" not in part:
            errors.append(f"line {n}: expected key=value, got {part!r}")
            continue
        key, val = (s.strip() for s in part.split("=", 1))
        if key not in _FIELDS:
            errors.append(f"line {n}: unknown key {key!r}")
            continue
        try:
            values[key] = _convert(key, val)
        except ValueError as exc:
            errors.append(f"line {n}: {key}: {exc}")
    if "q" not in values and "p" in values:
        values["q"] = values["p"]
    if "m2" not in values and "m1" in values:
        values["m2"] = values["m1"]
    try:
        cfg = CaseConfig(**values)
        validate(cfg)
    except ConfigError as exc:
        errors += exc.errors
    if errors:
        raise ConfigError(errors)
    return cfg


def load_config(path) -> CaseConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
