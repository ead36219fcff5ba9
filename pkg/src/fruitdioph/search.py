"""Exhaustive box searches for y^2 - x*y*z + z^2 = x^3 + c.

c = -5 is the fruit equation. For fixed (x, z) the equation is a monic
quadratic in y, so the default path solves it with an exact integer
square root instead of scanning y. The naive triple loop is kept as a
cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

__all__ = [
    "BoxTooLarge",
    "SearchBox",
    "Solution",
    "search_eq1",
    "search_general",
]

MAX_VOLUME = 10**9
FRUIT_CONSTANT = -5


class BoxTooLarge(ValueError):
    pass


def _check_range(rng: tuple[int, int], name: str) -> tuple[int, int]:
    lo, hi = rng
    if lo > hi:
        raise ValueError(f"{name} is empty: [{lo}, {hi}]")
    return lo, hi


def _width(rng: tuple[int, int]) -> int:
    return rng[1] - rng[0] + 1


@dataclass(frozen=True)
class SearchBox:
    """Inclusive integer intervals for x, y and z."""

    x_range: tuple[int, int]
    y_range: tuple[int, int]
    z_range: tuple[int, int]

    def __post_init__(self):
        for name in ("x_range", "y_range", "z_range"):
            _check_range(getattr(self, name), name)
        if self.volume > MAX_VOLUME:
            raise BoxTooLarge(f"box volume {self.volume} exceeds {MAX_VOLUME}")

    @classmethod
    def cube(cls, bound: int) -> SearchBox:
        if bound < 0:
            raise ValueError("bound must be non-negative")
        r = (-bound, bound)
        return cls(r, r, r)

    @property
    def volume(self) -> int:
        return _width(self.x_range) * _width(self.y_range) * _width(self.z_range)


def fruit_value(x: int, y: int, z: int, c: int = FRUIT_CONSTANT) -> int:
    """Residual y^2 - x*y*z + z^2 - x^3 - c (zero at solutions)."""
    return y * y - x * y * z + z * z - x**3 - c


@dataclass(frozen=True, order=True)
class Solution:
    x: int
    y: int
    z: int
    c: int = FRUIT_CONSTANT

    def __post_init__(self):
        if fruit_value(self.x, self.y, self.z, self.c):
            raise ValueError(f"({self.x}, {self.y}, {self.z}) does not solve the equation for c={self.c}")


def _roots_in(b: int, c0: int, lo: int, hi: int) -> Iterator[int]:
    """Integer roots of y^2 - b*y + c0 = 0 lying in [lo, hi], ascending."""
    disc = b * b - 4 * c0
    if disc < 0:
        return
    s = math.isqrt(disc)
    if s * s != disc or (b + s) % 2:
        return
    for y in sorted({(b - s) // 2, (b + s) // 2}):
        if lo <= y <= hi:
            yield y


def _solve_in_y(x: int, z: int, c: int, y_range: tuple[int, int]) -> Iterator[int]:
    return _roots_in(x * z, z * z - x**3 - c, *y_range)


def search_general(c: int, box: SearchBox, *, method: str = "quadratic") -> list[Solution]:
    """All solutions inside ``box``, in lexicographic (x, y, z) order."""
    if method == "quadratic":
        found = [
            (x, y, z)
            for x in range(box.x_range[0], box.x_range[1] + 1)
            for z in range(box.z_range[0], box.z_range[1] + 1)
            for y in _solve_in_y(x, z, c, box.y_range)
        ]
    elif method == "naive":
        found = [
            (x, y, z)
            for x in range(box.x_range[0], box.x_range[1] + 1)
            for y in range(box.y_range[0], box.y_range[1] + 1)
            for z in range(box.z_range[0], box.z_range[1] + 1)
            if fruit_value(x, y, z, c) == 0
        ]
    else:
        raise ValueError(f"unknown method {method!r}")
    return [Solution(x, y, z, c) for x, y, z in sorted(found)]


def search_eq1(
    k: int,
    y_range: tuple[int, int],
    z_range: tuple[int, int],
    *,
    _rhs: Optional[int] = None,
) -> list[tuple[int, int]]:
    """All (y, z) in the box with y^2 - k*y*z + z^2 = k^3 - 5.

    ``_rhs`` replaces k^3 - 5; it exists for positive-control tests only.
    """
    y_range = _check_range(y_range, "y_range")
    z_range = _check_range(z_range, "z_range")
    if _width(y_range) * _width(z_range) > MAX_VOLUME:
        raise BoxTooLarge("search area exceeds the volume guard")
    rhs = k**3 - 5 if _rhs is None else _rhs
    return sorted(
        (y, z)
        for z in range(z_range[0], z_range[1] + 1)
        for y in _roots_in(k * z, z * z - rhs, *y_range)
    )
