"""Hyperbolic volumes of truncated prism orthoschemes (n = 3, 4, 5) and of
the characteristic polytopes that sit in their midplane."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NonHyperbolicError, NotCompactError, UnsupportedSymbolError
from .quadrature import gauss_legendre
from .schlafli import SymbolLike, as_symbol
from .special import lob, zeta3

__all__ = [
    "OrthoschemeAngles",
    "QuadratureConfig",
    "theta",
    "vol3_orthoscheme",
    "vol3_orthoscheme_p_limit",
    "vol2_base_triangle",
    "vol4_prism_orthoscheme",
    "vol5_prism_orthoscheme",
    "vol5_integrand",
    "beta",
    "base_volume",
    "prism_volume",
    "VOL4_BASE_5333",
]

_HALF_PI = 0.5 * math.pi
_ANGLE_SLACK = 1e-15

VOL4_CLOSED_FORMS = {
    (3, 5, 3, 3): 41 * math.pi ** 2 / 10800,
    (5, 3, 4, 3): 17 * math.pi ** 2 / 4320,
}

# Volume of the compact 4-orthoscheme [5,3,3,3], the cover-face
# characteristic simplex of both admissible 5D prism tilings.
VOL4_BASE_5333 = math.pi ** 2 / 10800

# [5,3,3,3,t] -> lower limit of the Schlafli integral
_VOL5_LOWER_LIMIT = {
    (5, 3, 3, 3, 3): math.pi / 3,
    (5, 3, 3, 3, 4): math.pi / 4,
}


class OrthoschemeAngles(NamedTuple):
    """Essential dihedral angles of a 3D complete orthoscheme, in radians."""

    a01: float
    a12: float
    a23: float

    @classmethod
    def from_params(cls, p, q, r):
        return cls(math.pi / p, math.pi / q, math.pi / r)


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    max_subdivisions: int = 60
    nodes_per_panel: int = 15

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.nodes_per_panel < 5:
            raise ValueError("nodes_per_panel must be at least 5")
        if self.max_subdivisions < 0:
            raise ValueError("max_subdivisions must be non-negative")


def _check_angles(a01, a12, a23):
    for name, a in (("a01", a01), ("a12", a12), ("a23", a23)):
        if not (0.0 <= a <= _HALF_PI + _ANGLE_SLACK):
            raise NotCompactError(f"{name} = {a!r} outside [0, pi/2]")
    if a12 == 0.0 or a23 == 0.0:
        raise NotCompactError("only a01 may vanish (p -> infinity limit)")


def theta(a01: float, a12: float, a23: float) -> float:
    """Auxiliary angle in [0, pi/2) of the 3D orthoscheme volume formula."""
    _check_angles(a01, a12, a23)
    disc = math.cos(a12) ** 2 - (math.sin(a01) * math.sin(a23)) ** 2
    if disc < 0.0:
        if disc < -1e-14:
            raise NotCompactError(f"discriminant {disc:.3e} < 0")
        disc = 0.0
    den = math.cos(a01) * math.cos(a23)
    if not den > 0.0:
        raise NotCompactError("cos(a01) * cos(a23) must be positive")
    return math.atan(math.sqrt(disc) / den)


def vol3_orthoscheme(a01: float, a12: float, a23: float) -> float:
    """Volume of a 3D complete orthoscheme from its essential angles
    (Kellerhals' formula in Lobachevsky functions)."""
    t = theta(a01, a12, a23)
    return 0.25 * (
        lob(a01 + t)
        - lob(a01 - t)
        + lob(_HALF_PI + a12 - t)
        + lob(_HALF_PI - a12 - t)
        + lob(a23 + t)
        - lob(a23 - t)
        + 2.0 * lob(_HALF_PI - t)
    )


def vol3_orthoscheme_p_limit(q: float, r: float) -> float:
    """Limit of the [p, q, r] orthoscheme volume as p -> infinity."""
    return vol3_orthoscheme(0.0, math.pi / q, math.pi / r)


def vol2_base_triangle(p: float, q: float) -> float:
    """Area of the characteristic triangle of the plane honeycomb [p, q]
    (angles pi/p, pi/q, pi/2), by angle defect."""
    defect = _HALF_PI - math.pi / p - math.pi / q
    if not defect > 0.0:
        raise NonHyperbolicError(f"[{p},{q}] is not a hyperbolic tiling (defect {defect:.3g})")
    return defect


def _integer_key(symbol):
    if not symbol.is_integral:
        return None
    return tuple(int(k) for k in symbol.params)


def vol4_prism_orthoscheme(symbol: SymbolLike) -> float:
    symbol = as_symbol(symbol)
    key = _integer_key(symbol)
    if key not in VOL4_CLOSED_FORMS:
        raise UnsupportedSymbolError(f"no 4D prism orthoscheme volume for {symbol}")
    return VOL4_CLOSED_FORMS[key]


def beta(t: float) -> float:
    """Third angle of the [5, 3, beta(t)] face along the Schlafli integral."""
    return math.atan(math.sqrt(2.0 - 1.0 / math.tan(t) ** 2))


def vol5_integrand(t: float) -> float:
    return vol3_orthoscheme(math.pi / 5, math.pi / 3, beta(t))


def vol5_prism_orthoscheme(symbol: SymbolLike, cfg: QuadratureConfig | None = None) -> float:
    """5D prism orthoscheme volume from the Schlafli differential:
    ``1/4 * int_{lower}^{2pi/5} Vol3([5, 3, beta(t)]) dt + zeta(3)/3200``."""
    symbol = as_symbol(symbol)
    cfg = cfg or QuadratureConfig()
    key = _integer_key(symbol)
    if key not in _VOL5_LOWER_LIMIT:
        raise UnsupportedSymbolError(f"no 5D prism orthoscheme volume for {symbol}")
    integral = gauss_legendre(
        vol5_integrand,
        _VOL5_LOWER_LIMIT[key],
        2 * math.pi / 5,
        # the integral is scaled by 1/4 afterwards
        abs_tol=4.0 * cfg.abs_tol,
        max_subdivisions=cfg.max_subdivisions,
        nodes=cfg.nodes_per_panel,
    )
    return 0.25 * integral + zeta3() / 3200


def prism_volume(symbol: SymbolLike, cfg: QuadratureConfig | None = None) -> float:
    """Volume of the truncated orthoscheme S for any supported symbol."""
    symbol = as_symbol(symbol)
    if symbol.dim == 3:
        p, q, r = symbol.params
        if math.isinf(p):
            return vol3_orthoscheme_p_limit(q, r)
        return vol3_orthoscheme(*OrthoschemeAngles.from_params(p, q, r))
    if symbol.dim == 4:
        return vol4_prism_orthoscheme(symbol)
    return vol5_prism_orthoscheme(symbol, cfg)


def base_volume(symbol: SymbolLike) -> float:
    """(n-1)-volume of the characteristic polytope in the midplane."""
    symbol = as_symbol(symbol)
    k = symbol.params
    if symbol.dim == 3:
        return vol2_base_triangle(k[0], k[1])
    if symbol.dim == 4:
        return vol3_orthoscheme(*OrthoschemeAngles.from_params(k[0], k[1], k[2]))
    if _integer_key(symbol) in _VOL5_LOWER_LIMIT:
        return VOL4_BASE_5333
    raise UnsupportedSymbolError(f"no base polytope volume for {symbol}")
