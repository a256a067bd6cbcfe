"""Prime-field arithmetic and the bits of elementary number theory the rest
of the package leans on.

Everything here is exact integer arithmetic. ``FieldElement`` is the public
value type; hot loops elsewhere work on raw ints already reduced mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Optional, Union

from .errors import DomainError, ZeroInverse

# Deterministic for every n < 3.3e24, which covers all 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, order=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or p <= 3 or p % 2 == 0 or not is_prime(p):
            raise DomainError("p must be an odd prime > 3")

    def __int__(self):
        return self.p

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    @property
    def k(self) -> int:
        """Order of xy forced on a januarial over this field."""
        return (self.p + 1) // 2


ModulusLike = Union[int, PrimeModulus]


def as_modulus(p: ModulusLike) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            object.__setattr__(self, "value", self.value % self.modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise DomainError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _new(self, v: int) -> "FieldElement":
        return FieldElement(v % self.p, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, n: int):
        if n < 0:
            return field_inverse(self) ** (-n)
        return self._new(pow(self.value, n, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * field_inverse(self._new(o))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.p))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __lt__(self, other):
        return self.value < int(other)

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def field_inverse(x: FieldElement) -> FieldElement:
    if x.value == 0:
        raise ZeroInverse(f"0 has no inverse mod {x.p}")
    return FieldElement(pow(x.value, -1, x.p), x.modulus)


def legendre(a: int, p: int) -> int:
    """Euler's criterion: 1, -1, or 0."""
    ls = pow(a % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def sqrt_int(a: int, p: int) -> Optional[int]:
    """Smaller square root of ``a`` mod odd prime ``p`` (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        x = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while legendre(z, p) != -1:
            z += 1
        m, c, t, x = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, x = t * c % p, x * b % p
    return min(x, p - x)


def sqrt_mod_p(x: FieldElement) -> Optional[tuple[FieldElement, FieldElement]]:
    """Both square roots of ``x``, smaller first; ``None`` for a non-residue."""
    s = sqrt_int(x.value, x.p)
    if s is None:
        return None
    return FieldElement(s, x.modulus), FieldElement((x.p - s) % x.p, x.modulus)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def value(self) -> int:
        return prod(q**r for q, r in self.factors)

    def maximal_divisors(self) -> list[int]:
        """n/q for each prime q dividing n."""
        return [self.n // q for q in self.primes]


def factorize(n: int) -> Factorization:
    if n < 2:
        raise DomainError(f"cannot factorize {n}")
    m, out, d = n, [], 2
    while d * d <= m:
        if m % d == 0:
            r = 0
            while m % d == 0:
                m //= d
                r += 1
            out.append((d, r))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def euler_phi(n: int) -> int:
    """Totient by inclusion-exclusion over the distinct prime divisors:
    n - sum n/p_i + sum n/(p_i p_j) - ...
    """
    if n < 1:
        raise DomainError("euler_phi needs n >= 1")
    if n == 1:
        return 1
    primes = factorize(n).primes
    total = 0
    for size in range(len(primes) + 1):
        sign = -1 if size % 2 else 1
        total += sign * sum(n // prod(c) for c in combinations(primes, size))
    return total


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))
