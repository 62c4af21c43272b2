"""Least dense hyperball coverings: hyperball piece volumes, densities,
p -> infinity limits and continuous-p sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

from .errors import DomainError, InvalidTilingError
from .schlafli import CoxeterSymbol, SymbolLike, as_symbol, covering_height, family_threshold, validate_tiling
from .volume import QuadratureConfig, base_volume, prism_volume

__all__ = [
    "CoveringResult",
    "SweepRow",
    "hyperball_piece_volume",
    "covering_density",
    "limit_p_infinity",
    "sweep",
]


@dataclass(frozen=True)
class CoveringResult:
    symbol: CoxeterSymbol
    h: float
    vol_S: float
    vol_H: float
    delta_min: float


@dataclass(frozen=True)
class SweepRow:
    p: float
    h: float
    vol_S: float
    vol_H: float
    delta_min: float


def hyperball_piece_volume(n: int, base_vol: float, h: float, k: float = 1.0) -> float:
    """Volume of the hyperball piece of height ``h`` over a base polytope of
    (n-1)-volume ``base_vol`` in a space of curvature ``-1/k**2``."""
    if base_vol < 0 or h < 0 or not k > 0:
        raise ValueError("need base_vol >= 0, h >= 0 and k > 0")
    if n == 3:
        return 0.25 * base_vol * (k * math.sinh(2 * h / k) + 2 * h)
    if n == 4:
        return base_vol * k * (2.0 / 3.0 * math.sinh(3 * h / k) + 6 * math.sinh(h / k)) / 8
    if n == 5:
        return base_vol * (k * (0.5 * math.sinh(4 * h / k) + 4 * math.sinh(2 * h / k)) + 6 * h) / 16
    raise ValueError(f"hyperball pieces are only defined for n in 3..5, got {n}")


def covering_density(
    symbol: SymbolLike,
    cfg: Optional[QuadratureConfig] = None,
    k: float = 1.0,
) -> CoveringResult:
    """Covering height, volumes and least covering density of a prism tiling.

    Lengths and volumes are reported in a space of curvature ``-1/k**2``;
    the density does not depend on ``k``.
    """
    symbol = as_symbol(symbol)
    record = validate_tiling(symbol)
    if not record.valid:
        raise InvalidTilingError(symbol, record.reason)
    if not k > 0:
        raise ValueError("k must be positive")
    n = symbol.dim
    h = covering_height(symbol) * k
    vol_s = prism_volume(symbol, cfg) * k ** n
    base = base_volume(symbol) * k ** (n - 1)
    vol_h = hyperball_piece_volume(n, base, h, k)
    return CoveringResult(symbol=symbol, h=h, vol_S=vol_s, vol_H=vol_h, delta_min=vol_h / vol_s)


def limit_p_infinity(q: float, r: float, k: float = 1.0) -> CoveringResult:
    """The p -> infinity limit of the [p, q, r] family, evaluated exactly
    (pi/p -> 0) rather than at a large finite p."""
    if family_threshold(q, r) is None:
        raise DomainError(f"[p,{q:g},{r:g}] is not a prism tiling family")
    return covering_density(CoxeterSymbol((math.inf, q, r)), k=k)


def sweep(q: float, r: float, p_min: float, p_max: float, step: float) -> List[SweepRow]:
    """Rows at p = p_min, p_min + step, ... <= p_max (ascending)."""
    threshold = family_threshold(q, r)
    if threshold is None:
        raise DomainError(f"[p,{q:g},{r:g}] is not a prism tiling family")
    if not p_min > threshold:
        raise DomainError(f"p_min = {p_min:g} must exceed {threshold} for [p,{q:g},{r:g}]")
    if not step > 0:
        raise ValueError("step must be positive")
    if p_max < p_min:
        return []
    # absorb float error so an exact endpoint is kept
    count = int(math.floor((p_max - p_min) / step + 1e-9)) + 1
    rows = []
    for i in range(count):
        p = p_min + i * step
        res = covering_density(CoxeterSymbol((p, q, r)))
        rows.append(SweepRow(p=p, h=res.h, vol_S=res.vol_S, vol_H=res.vol_H, delta_min=res.delta_min))
    return rows
