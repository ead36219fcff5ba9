"""Integer utilities: residues, Legendre symbols, primality and factorization.

Everything here works on plain Python ints, so magnitudes are unbounded.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "jacobi",
    "legendre",
    "mod_canon",
    "squares_mod",
]

TRIAL_DIVISION_BOUND = 10**6
RANDOM_ROUNDS = 32

# Strong-probable-prime bases that are deterministic below 3.3 * 10**24.
_FIXED_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def mod_canon(a: int, m: int) -> int:
    """Least non-negative residue of ``a`` modulo ``m``."""
    if m <= 0:
        raise ValueError(f"modulus must be positive, got {m}")
    return a % m


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd positive n, by reciprocity."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    acc = 1
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                acc = -acc
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            acc = -acc
        a %= n
    return acc if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p.

    Evaluated through the Jacobi recursion, so a correct answer here
    exercises quadratic reciprocity and both supplementary laws.
    """
    if p <= 2 or not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, got {p}")
    return jacobi(a, p)


def _sprp(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, *, rounds: int = RANDOM_ROUNDS, seed: int = 0) -> bool:
    """Primality of ``|n|``.

    Deterministic below 2**64 (fixed bases). Above that, ``rounds`` extra
    strong-probable-prime tests run with bases drawn from
    ``random.Random(seed)``, so repeated calls give the same answer.
    """
    n = abs(n)
    if n < 2:
        return False
    for p in _FIXED_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_sprp(n, b, d, s) for b in _FIXED_BASES):
        return False
    if n < 2**64:
        return True
    rng = random.Random(seed)
    return all(_sprp(n, rng.randrange(2, n - 1), d, s) for _ in range(rounds))


@lru_cache(maxsize=1)
def _small_primes(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@dataclass(frozen=True)
class Factorization:
    """``sign * prod(p**e for p, e in factors)``, primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


def _brent(n: int) -> int:
    """A nontrivial factor of the odd composite ``n`` (Pollard rho, Brent variant)."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Exact factorization of a nonzero integer.

    Trial division by primes below ``TRIAL_DIVISION_BOUND``, then rho
    splitting of whatever cofactor is left.
    """
    if n == 0:
        raise ValueError("0 has no factorization")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    for p in _small_primes(TRIAL_DIVISION_BOUND):
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1:
        if n < TRIAL_DIVISION_BOUND**2:
            found[n] = found.get(n, 0) + 1
        else:
            _split(n, found)
    return Factorization(sign, tuple(sorted(found.items())))


def squares_mod(m: int) -> frozenset[int]:
    """All values ``t*t mod m``."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    return frozenset(t * t % m for t in range(m))
