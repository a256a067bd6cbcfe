from math import gcd

import pytest
from hypothesis import given, strategies as st

from januarials.errors import DomainError, ZeroInverse
from januarials.fieldcore import (
    PrimeModulus,
    euler_phi,
    factorize,
    field_inverse,
    is_prime,
    sqrt_mod_p,
)

F31 = PrimeModulus(31)
SMALL_PRIMES = [5, 7, 11, 13, 17, 29, 31, 37, 41, 97, 193, 257, 65537]


def test_inverse_examples():
    assert field_inverse(F31(8)) == 4
    assert field_inverse(F31(1)) == 1
    assert field_inverse(F31(30)) == 30


def test_inverse_of_zero():
    with pytest.raises(ZeroInverse):
        field_inverse(F31(0))


@given(st.sampled_from(SMALL_PRIMES), st.integers(min_value=1))
def test_inverse_is_an_involution(p, n):
    mod = PrimeModulus(p)
    x = mod(n)
    if x == 0:
        return
    assert field_inverse(field_inverse(x)) == x
    assert x * field_inverse(x) == 1


def test_sqrt_examples():
    assert tuple(map(int, sqrt_mod_p(F31(2)))) == (8, 23)
    assert tuple(map(int, sqrt_mod_p(F31(0)))) == (0, 0)
    assert sqrt_mod_p(F31(3)) is None
    assert all(s * s % 31 != 3 for s in range(31))


@pytest.mark.parametrize("p", SMALL_PRIMES[:-1])
def test_sqrt_exhaustive(p):
    mod = PrimeModulus(p)
    squares = {s * s % p for s in range(p)}
    have = 0
    for x in range(p):
        roots = sqrt_mod_p(mod(x))
        assert (roots is not None) == (x in squares)
        if roots is not None:
            s, t = roots
            assert s * s == x and int(s) <= int(t) and int(s) + int(t) in (0, p)
            have += x != 0
    assert have == (p - 1) // 2


@given(st.integers(min_value=0, max_value=65536))
def test_sqrt_large_prime(x):
    # 65537 = 1 mod 2^16 exercises the full Tonelli-Shanks loop
    roots = sqrt_mod_p(PrimeModulus(65537)(x))
    if roots is not None:
        assert roots[0] * roots[0] == x


def test_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(16) == 8
    assert euler_phi(15) == sum(1 for m in range(1, 16) if gcd(m, 15) == 1) == 8


def test_phi_matches_gcd_count():
    for n in range(1, 10_001):
        assert euler_phi(n) == sum(1 for m in range(1, n + 1) if gcd(m, n) == 1), n


def test_factorize_examples():
    assert factorize(16).factors == ((2, 4),)
    assert factorize(60).factors == ((2, 2), (3, 1), (5, 1))
    assert factorize(16).maximal_divisors() == [8]
    with pytest.raises(DomainError):
        factorize(1)


@given(st.integers(min_value=2, max_value=10**7))
def test_factorize_reconstructs(n):
    fac = factorize(n)
    assert fac.value() == n
    assert list(fac.primes) == sorted(set(fac.primes))
    assert all(is_prime(q) and r >= 1 for q, r in fac.factors)


def test_is_prime_matches_trial_division():
    def trial(n):
        return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))

    assert all(is_prime(n) == trial(n) for n in range(20_000))
    assert is_prime(2**61 - 1) and not is_prime(3215031751)


@pytest.mark.parametrize("bad", [2, 3, 4, 9, 15, 1, 0, -7])
def test_modulus_rejects(bad):
    with pytest.raises(DomainError, match="odd prime > 3"):
        PrimeModulus(bad)


def test_field_element_arithmetic():
    a, b = F31(10), F31(25)
    assert a + b == 4 and a - b == 16 and a * b == 2 and -a == 21
    assert a / b * b == a
    assert a**2 == 7 and a**-1 == field_inverse(a)
    with pytest.raises(DomainError):
        a + PrimeModulus(7)(1)
