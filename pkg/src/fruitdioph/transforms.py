"""Completing-the-square substitutions for y^2 - k*y*z + z^2 = k^3 - 5.

Even k = 2d gives u^2 - (d^2 - 1) z^2 = 8d^3 - 5 with u = y - d*z.
Odd k forces z even; with z = 2v and u = y - k*v it gives
u^2 - (k^2 - 4) v^2 = k^3 - 5. For k = 12r + 5 and u = 3w the odd
form divides through by 3 (see ``eq4_form``).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Eq4Form",
    "PellForm",
    "eq1_to_eq3",
    "eq3_to_eq1",
    "eq4_form",
    "fruit_form",
    "pell_even",
    "pell_odd",
]


@dataclass(frozen=True)
class PellForm:
    """The equation ``u^2 - D*v^2 = N``."""

    D: int
    N: int

    def lhs(self, u: int, v: int) -> int:
        return u * u - self.D * v * v


@dataclass(frozen=True)
class Eq4Form:
    """``3w^2 - quad*v^2 = rhs`` for k = 12r + 5."""

    r: int
    quad: int
    rhs: int

    @property
    def k(self) -> int:
        return 12 * self.r + 5


def fruit_form(k: int, y: int, z: int) -> int:
    """Left side of the fixed-x equation: y^2 - k*y*z + z^2."""
    return y * y - k * y * z + z * z


def pell_even(k: int) -> PellForm:
    if k % 2:
        raise ValueError(f"pell_even needs even k, got {k}")
    d = k // 2
    return PellForm(d * d - 1, 8 * d**3 - 5)


def pell_odd(k: int) -> PellForm:
    if k % 2 == 0:
        raise ValueError(f"pell_odd needs odd k, got {k}")
    return PellForm(k * k - 4, k**3 - 5)


def eq1_to_eq3(k: int, y: int, z: int) -> tuple[int, int]:
    """(y, z) -> (u, v) with v = z/2, u = y - v*k.

    u^2 - (k^2 - 4) v^2 equals y^2 - k*y*z + z^2 for every input, not
    only at solutions.
    """
    if k % 2 == 0:
        raise ValueError(f"k must be odd, got {k}")
    if z % 2:
        raise ValueError(f"z must be even, got {z}")
    v = z // 2
    return y - v * k, v


def eq3_to_eq1(k: int, u: int, v: int) -> tuple[int, int]:
    """Inverse of ``eq1_to_eq3``: (u, v) -> (u + v*k, 2v)."""
    return u + v * k, 2 * v


def eq4_form(r: int) -> Eq4Form:
    # ((12r+5)^3 - 5) / 3 and ((12r+5)^2 - 4) / 3, expanded
    return Eq4Form(
        r=r,
        quad=(4 * r + 1) * (12 * r + 7),
        rhs=576 * r**3 + 720 * r**2 + 300 * r + 40,
    )
