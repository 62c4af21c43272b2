"""Lobachevsky function and Apery's constant.

The Lobachevsky function is evaluated through the Clausen function,
``L(x) = Cl2(2x) / 2``, using the Bernoulli-number expansion

    Cl2(t) = t - t*log(t) + sum_{k>=1} |B_2k| t^(2k+1) / (2k (2k+1)!)

which converges for ``|t| < 2*pi``.  After reducing ``x`` to ``[0, pi/2]``
the argument ``t = 2x`` lies in ``[0, pi]`` and successive terms shrink at
least by a factor of four.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = ["LobachevskyEvaluator", "lob", "zeta3", "clausen2"]

_HALF_PI = 0.5 * math.pi


@lru_cache(maxsize=None)
def _bernoulli_even(count: int) -> tuple[Fraction, ...]:
    """Exact Bernoulli numbers B_0 .. B_{2*count}."""
    size = 2 * count + 1
    b = [Fraction(0)] * size
    b[0] = Fraction(1)
    for m in range(1, size):
        b[m] = -sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1)
    return tuple(b)


@lru_cache(maxsize=None)
def _clausen_coefficients(max_terms: int) -> tuple[float, ...]:
    b = _bernoulli_even(max_terms)
    return tuple(
        float(abs(b[2 * k]) / (2 * k * math.factorial(2 * k + 1)))
        for k in range(1, max_terms + 1)
    )


@dataclass(frozen=True)
class LobachevskyEvaluator:
    """Callable evaluator for the Lobachevsky function.

    ``tolerance`` is an absolute target for the truncated series tail and
    ``max_terms`` caps the number of series terms.
    """

    tolerance: float = 1e-13
    max_terms: int = 64

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_terms < 64:
            raise ValueError("max_terms must be at least 64")

    def clausen2(self, t: float) -> float:
        """Cl2(t) for ``0 <= t <= pi``."""
        if t == 0.0:
            return 0.0
        coeffs = _clausen_coefficients(self.max_terms)
        t2 = t * t
        power = t * t2
        total = 0.0
        # terms shrink geometrically, so a term below tol/10 bounds the tail
        cutoff = 0.1 * self.tolerance
        for c in coeffs:
            term = c * power
            total += term
            if term < cutoff:
                break
            power *= t2
        return t - t * math.log(t) + total

    def __call__(self, x: float) -> float:
        if not math.isfinite(x):
            raise ValueError(f"Lobachevsky function needs a finite argument, got {x!r}")
        if x < 0.0:
            return -self(-x)
        x = math.fmod(x, math.pi)
        if x > _HALF_PI:
            return -0.5 * self.clausen2(2.0 * (math.pi - x))
        return 0.5 * self.clausen2(2.0 * x)


_default = LobachevskyEvaluator()


def lob(x: float) -> float:
    """Lobachevsky function ``-int_0^x log|2 sin t| dt`` (odd, pi-periodic)."""
    return _default(x)


def clausen2(t: float) -> float:
    """Clausen function Cl2 for any finite real ``t``."""
    return 2.0 * _default(0.5 * t)


@lru_cache(maxsize=1)
def zeta3() -> float:
    """Apery's constant zeta(3).

    Uses the central binomial series
    ``zeta(3) = 5/2 * sum (-1)^(n+1) / (n^3 C(2n, n))`` summed exactly in
    rationals, so the only error is the final rounding.
    """
    total = Fraction(0)
    for n in range(1, 40):
        total += Fraction((-1) ** (n + 1), n ** 3 * math.comb(2 * n, n))
    return float(Fraction(5, 2) * total)
