import math

import pytest
from hypothesis import given, strategies as st

from fruitdioph.arith import (
    Factorization,
    factorize,
    is_prime,
    jacobi,
    legendre,
    mod_canon,
    squares_mod,
)


def trial_division_is_prime(n):
    n = abs(n)
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def primes_upto(n):
    return [p for p in range(2, n + 1) if trial_division_is_prime(p)]


def brute_legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in {t * t % p for t in range(1, p)} else -1


@pytest.mark.parametrize("a, m, expected", [(7, 12, 7), (-3, 12, 9), (-19, 36, 17), (0, 1, 0)])
def test_mod_canon(a, m, expected):
    assert mod_canon(a, m) == expected


@pytest.mark.parametrize("m", [0, -4])
def test_mod_canon_rejects_nonpositive(m):
    with pytest.raises(ValueError):
        mod_canon(3, m)


@given(st.integers(), st.integers(min_value=1, max_value=10**30))
def test_mod_canon_property(a, m):
    r = mod_canon(a, m)
    assert 0 <= r < m and (a - r) % m == 0


@pytest.mark.parametrize("a, p, expected", [(3, 7, -1), (3, 11, 1), (0, 5, 0), (1, 13, 1)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, p) == expected
    assert brute_legendre(a, p) == expected


@pytest.mark.parametrize("p", [2, 1, 0, -7, 9, 15])
def test_legendre_domain(p):
    with pytest.raises(ValueError):
        legendre(3, p)


def test_legendre_matches_square_sets():
    for p in primes_upto(2000)[1:]:
        squares = {t * t % p for t in range(1, p)}
        for a in range(p):
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre(a, p) == expected, (a, p)


def test_legendre_power_map_oracle_on_large_primes():
    for p in (10007, 65537, 2**61 - 1, 2**89 - 1):
        for a in (2, 3, 5, 6, 10, 12345, p - 1):
            euler = pow(a, (p - 1) // 2, p)
            assert legendre(a, p) == (-1 if euler == p - 1 else euler)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4).map(lambda n: 2 * n + 1))
def test_jacobi_multiplicative_in_numerator(a, n):
    assert jacobi(a * a, n) in (0, 1)
    assert jacobi(a, n) == jacobi(a + n, n)


@pytest.mark.parametrize("n, expected", [(7, True), (1, False), (0, False), (-7, True),
                                         (2, True), (-1, False), (561, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_just_below_2_64():
    # frozen from an exhaustive C trial division over all odd d <= 2**32
    assert is_prime(2**64 - 59)
    assert not is_prime(2**64 - 59 - 2)


def test_is_prime_agrees_with_sieve_to_10_6():
    bound = 10**6
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    for n in range(bound + 1):
        assert is_prime(n) == bool(sieve[n])
        if n % 997 == 0:
            assert is_prime(-n) == bool(sieve[n])


def test_is_prime_large_and_seeded():
    mersenne = 2**127 - 1
    assert is_prime(mersenne)
    assert is_prime(mersenne, seed=12345, rounds=4)
    assert not is_prime(mersenne * (2**61 - 1))
    # composite above 2**64, exercising the randomized rounds
    assert not is_prime(3825123056546413051 * 1000003)


@pytest.mark.parametrize("n, expected", [
    (55, Factorization(1, ((5, 1), (11, 1)))),
    (-5, Factorization(-1, ((5, 1),))),
    (1, Factorization(1, ())),
    (-1, Factorization(-1, ())),
    (2**10 * 3**4, Factorization(1, ((2, 10), (3, 4)))),
])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


def test_factorize_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_multiply_back():
    n = 8 * 57**3 - 5
    f = factorize(n)
    assert f.value() == n == 1481539
    assert all(is_prime(p) for p in f.primes())


def test_factorize_rho_path():
    p, q = 1000000007, 998244353  # both above the trial-division bound
    n = -(p * q * q * 13)
    f = factorize(n)
    assert f == Factorization(-1, ((13, 1), (q, 2), (p, 1)))


@given(st.integers(-10**15, 10**15).filter(bool))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert f.value() == n
    primes = f.primes()
    assert primes == sorted(set(primes))
    assert all(is_prime(p) and e > 0 for p, e in f.factors)


@pytest.mark.parametrize("m, expected", [(8, {0, 1, 4}), (4, {0, 1}), (3, {0, 1}),
                                         (2, {0, 1}), (12, {0, 1, 4, 9})])
def test_squares_mod(m, expected):
    assert squares_mod(m) == expected


def test_squares_mod_domain():
    with pytest.raises(ValueError):
        squares_mod(1)
