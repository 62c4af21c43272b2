"""Coxeter-Schlafli symbols of prism tilings, their Gram matrices and the
minimal covering height of the associated hyperballs."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError, InvalidSymbolError, SingularMatrixError

__all__ = [
    "CoxeterSymbol",
    "TilingRecord",
    "as_symbol",
    "parse_symbol",
    "build_gram",
    "invert_gram",
    "covering_height",
    "family_threshold",
    "validate_tiling",
    "H3_FAMILIES",
    "SINGULAR_DET",
]

SINGULAR_DET = 1e-12

# (q, r) -> p must be strictly greater than this
H3_FAMILIES = {
    (3, 3): 6,
    (3, 4): 6,
    (3, 5): 6,
    (4, 3): 4,
    (5, 3): 3,
}

_H4_VALID = {(3, 5, 3, 3), (5, 3, 4, 3)}
_H4_CUBE = {(4, 3, 3, 5)}
_H5_VALID = {(5, 3, 3, 3, 3), (5, 3, 3, 3, 4)}
_H5_ASYMPTOTIC = {(5, 3, 3, 4, 3)}

REASONS = ("ok", "below-p-threshold", "totally-asymptotic", "cube-honeycomb", "unknown-family")


def _fmt_param(k: float) -> str:
    if math.isinf(k):
        return "inf"
    if float(k).is_integer():
        return str(int(k))
    return repr(float(k))


@dataclass(frozen=True)
class CoxeterSymbol:
    """Ordered tiling parameters ``[k1, ..., kn]``; dihedral angles are pi/ki.

    ``k1`` may be real (continuous sweeps) or ``inf`` (the p -> infinity
    limit, where the angle pi/k1 becomes 0).
    """

    params: tuple

    def __post_init__(self):
        try:
            params = tuple(float(k) for k in self.params)
        except (TypeError, ValueError) as exc:
            raise InvalidSymbolError(f"non-numeric symbol entries: {self.params!r}") from exc
        if not 3 <= len(params) <= 5:
            raise InvalidSymbolError(f"symbol must have 3 to 5 entries, got {len(params)}")
        for k in params:
            if math.isnan(k) or k < 2:
                raise InvalidSymbolError(f"symbol entries must be >= 2, got {k!r}")
        object.__setattr__(self, "params", params)

    @property
    def dim(self) -> int:
        return len(self.params)

    @property
    def is_integral(self) -> bool:
        return all(math.isfinite(k) and k.is_integer() for k in self.params)

    def angles(self) -> tuple:
        return tuple(math.pi / k for k in self.params)

    def __len__(self):
        return len(self.params)

    def __iter__(self):
        return iter(self.params)

    def __getitem__(self, i):
        return self.params[i]

    def __str__(self):
        return "[" + ",".join(_fmt_param(k) for k in self.params) + "]"


SymbolLike = Union[CoxeterSymbol, Sequence[float], str]


def parse_symbol(text: str) -> CoxeterSymbol:
    """Parse text such as ``"[7,3,3]"`` or ``"7.5, 3, 3"``."""
    body = text.strip()
    m = re.fullmatch(r"\[?\s*(.*?)\s*\]?", body)
    parts = [s.strip() for s in m.group(1).split(",")] if m else []
    if not parts or any(not s for s in parts):
        raise InvalidSymbolError(f"cannot parse symbol {text!r}")
    try:
        values = [float(s) for s in parts]
    except ValueError as exc:
        raise InvalidSymbolError(f"cannot parse symbol {text!r}") from exc
    return CoxeterSymbol(tuple(values))


def as_symbol(symbol: SymbolLike) -> CoxeterSymbol:
    if isinstance(symbol, CoxeterSymbol):
        return symbol
    if isinstance(symbol, str):
        return parse_symbol(symbol)
    return CoxeterSymbol(tuple(symbol))


def build_gram(symbol: SymbolLike) -> np.ndarray:
    """Coxeter-Schlafli matrix of the orthoscheme: unit diagonal and
    ``-cos(pi/k_{i+1})`` on the first off-diagonals."""
    symbol = as_symbol(symbol)
    n = symbol.dim
    g = np.eye(n + 1)
    for i, k in enumerate(symbol.params):
        # right angles are kept exactly orthogonal
        c = 0.0 if k == 2 else -math.cos(math.pi / k)
        g[i, i + 1] = g[i + 1, i] = c
    g.flags.writeable = False
    return g


def invert_gram(g: np.ndarray) -> np.ndarray:
    """Invert a (small) Gram matrix by Gauss-Jordan elimination with
    partial pivoting.

    Raises SingularMatrixError when ``|det g| < 1e-12``.
    """
    a = np.array(g, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    size = a.shape[0]
    inv = np.eye(size)
    det = 1.0
    for col in range(size):
        pivot = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot, col] == 0.0:
            raise SingularMatrixError("matrix is singular")
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            inv[[col, pivot]] = inv[[pivot, col]]
            det = -det
        piv = a[col, col]
        det *= piv
        a[col] /= piv
        inv[col] /= piv
        for row in range(size):
            if row != col:
                factor = a[row, col]
                if factor != 0.0:
                    a[row] -= factor * a[col]
                    inv[row] -= factor * inv[col]
    if abs(det) < SINGULAR_DET:
        raise SingularMatrixError(f"|det| = {abs(det):.3e} is below {SINGULAR_DET:g}")
    inv = 0.5 * (inv + inv.T)
    inv.flags.writeable = False
    return inv


def covering_height(symbol: SymbolLike) -> float:
    """Distance from the midplane to the farthest cover-face vertex.

    ``cosh h = sqrt((h00 hnn - h0n^2) / (h00 hnn))`` where ``h_ij`` is the
    inverse Gram matrix.
    """
    symbol = as_symbol(symbol)
    n = symbol.dim
    h = invert_gram(build_gram(symbol))
    h00, hnn, h0n = h[0, 0], h[n, n], h[0, n]
    # hnn -> 0 puts the outer vertex A_n on the absolute
    if abs(hnn) < SINGULAR_DET or abs(h00) < SINGULAR_DET:
        raise DomainError(f"{symbol}: principal vertex lies on the absolute")
    ratio = (h00 * hnn - h0n * h0n) / (h00 * hnn)
    if not ratio > 1.0:
        raise DomainError(
            f"{symbol}: cosh^2 h = {ratio:.6g} <= 1, no simply truncated orthoscheme"
        )
    return math.acosh(math.sqrt(ratio))


@dataclass(frozen=True)
class TilingRecord:
    symbol: CoxeterSymbol
    valid: bool
    reason: str
    vertex_figure: tuple
    cover_face: tuple


def family_threshold(q: float, r: float) -> Optional[int]:
    """Lower bound on p for the H^3 family [p, q, r], or None."""
    return H3_FAMILIES.get((q, r))


def _classify(symbol: CoxeterSymbol) -> str:
    params = symbol.params
    if symbol.dim == 3:
        threshold = family_threshold(params[1], params[2])
        if threshold is None:
            return "unknown-family"
        return "ok" if params[0] > threshold else "below-p-threshold"
    if not symbol.is_integral:
        return "unknown-family"
    key = tuple(int(k) for k in params)
    if symbol.dim == 4:
        if key in _H4_VALID:
            return "ok"
        if key in _H4_CUBE:
            return "cube-honeycomb"
        return "unknown-family"
    if key in _H5_VALID:
        return "ok"
    if key in _H5_ASYMPTOTIC:
        return "totally-asymptotic"
    return "unknown-family"


def validate_tiling(symbol: Union[SymbolLike, Iterable[float]]) -> TilingRecord:
    """Classify a symbol against the regular prism tiling catalog.

    Never raises: malformed input gives ``valid=False`` with reason
    ``unknown-family``.
    """
    try:
        sym = as_symbol(symbol)
    except InvalidSymbolError:
        raw = tuple(symbol) if not isinstance(symbol, str) else (symbol,)
        return TilingRecord(symbol=raw, valid=False, reason="unknown-family",
                            vertex_figure=raw[1:], cover_face=raw[:-1])
    reason = _classify(sym)
    return TilingRecord(
        symbol=sym,
        valid=reason == "ok",
        reason=reason,
        vertex_figure=sym.params[1:],
        cover_face=sym.params[:-1],
    )
