"""The curves E_k: Y^2 - k*X*Y = X^3 - (k^2 + 5).

Integral points on E_k are exactly the solutions (x, y, z) = (X, Y, k)
of the fruit equation, so a bounded integral-point search is another
desk-scale check of the no-solution result. Rational arithmetic is
exact (``fractions.Fraction``); no floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Optional

__all__ = [
    "RationalPoint",
    "e5_to_minimal",
    "integral_points_Ek",
    "is_on_Ek",
    "is_on_e5_minimal",
    "minimal_to_e5",
    "negate_iso",
    "on_weierstrass",
]


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> RationalPoint:
        return cls(Fraction(x), Fraction(y))


def on_weierstrass(a: tuple[int, int, int, int, int], P: RationalPoint) -> bool:
    """Y^2 + a1*XY + a3*Y = X^3 + a2*X^2 + a4*X + a6 at ``P``."""
    a1, a2, a3, a4, a6 = a
    x, y = Fraction(P.x), Fraction(P.y)
    return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6


def is_on_Ek(k: int, P: RationalPoint) -> bool:
    return on_weierstrass((-k, 0, 0, 0, -(k * k + 5)), P)


def is_on_e5_minimal(P: RationalPoint) -> bool:
    """Membership in y^2 + xy = x^3 - 13x - 13."""
    return on_weierstrass((1, 0, 0, -13, -13), P)


def integral_points_Ek(
    k: int, x_bound: int, *, _constant: Optional[int] = None
) -> list[tuple[int, int]]:
    """Integral points of E_k with |X| <= x_bound, sorted.

    For each X the curve is the monic quadratic Y^2 - kX*Y - (X^3 + a6) = 0,
    solved through its discriminant k^2 X^2 + 4(X^3 + a6). ``_constant``
    overrides a6 = -(k^2 + 5) for positive-control tests.
    """
    if x_bound < 0:
        raise ValueError("x_bound must be non-negative")
    a6 = -(k * k + 5) if _constant is None else _constant
    points = []
    for X in range(-x_bound, x_bound + 1):
        disc = k * k * X * X + 4 * (X**3 + a6)
        if disc < 0:
            continue
        s = math.isqrt(disc)
        if s * s != disc or (k * X + s) % 2:
            continue
        for Y in {(k * X - s) // 2, (k * X + s) // 2}:
            points.append((X, Y))
    return sorted(points)


def negate_iso(P: RationalPoint) -> RationalPoint:
    """(x, y) -> (x, -y), taking E_k to E_{-k}."""
    return RationalPoint(P.x, -P.y)


def e5_to_minimal(P: RationalPoint) -> RationalPoint:
    """E_5 -> y^2 + xy = x^3 - 13x - 13 via (x, y) -> (x + 2, 2x - y - 1)."""
    return RationalPoint(P.x + 2, 2 * P.x - P.y - 1)


def minimal_to_e5(P: RationalPoint) -> RationalPoint:
    return RationalPoint(P.x - 2, 2 * P.x - P.y - 5)
