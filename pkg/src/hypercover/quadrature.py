"""Globally adaptive Gauss-Legendre quadrature on a finite interval."""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import QuadratureError


@lru_cache(maxsize=None)
def _rule(nodes: int):
    x, w = np.polynomial.legendre.leggauss(nodes)
    return tuple(map(float, x)), tuple(map(float, w))


def _panel(f, lo, hi, x, w):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    return half * sum(wi * f(mid + half * xi) for xi, wi in zip(x, w))


def gauss_legendre(
    f: Callable[[float], float],
    a: float,
    b: float,
    abs_tol: float = 1e-10,
    max_subdivisions: int = 60,
    nodes: int = 15,
) -> float:
    """Integrate ``f`` over ``[a, b]``.

    Each panel is compared with the sum over its two halves; the panel with
    the largest discrepancy is bisected until the summed discrepancy drops
    below ``abs_tol``.  Raises QuadratureError if that needs more than
    ``max_subdivisions`` bisections.
    """
    if a == b:
        return 0.0
    x, w = _rule(nodes)

    def refine(lo, hi, whole):
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid, x, w)
        right = _panel(f, mid, hi, x, w)
        return (-abs(whole - (left + right)), lo, hi, left, right)

    heap = [refine(a, b, _panel(f, a, b, x, w))]
    splits = 0
    while True:
        err = -sum(item[0] for item in heap)
        if err <= abs_tol:
            return sum(item[3] + item[4] for item in heap)
        if splits >= max_subdivisions:
            raise QuadratureError(
                f"error estimate {err:.3e} above {abs_tol:g} after {splits} subdivisions"
            )
        _, lo, hi, left, right = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        heapq.heappush(heap, refine(lo, mid, left))
        heapq.heappush(heap, refine(mid, hi, right))
        splits += 1
