"""The polynomials g_k(theta) and the januarial theta values they cut out.

Writing r = tr(XY) and D = det(XY), Cayley-Hamilton gives

    (XY)^k = U_{k-1} XY - D U_{k-2} I,
    U_n = sum_j (-1)^j C(n-j, j) r^(n-2j) D^j,

so (XY)^k is scalar exactly when U_{k-1} = 0. Putting r^2 = theta D (and
dropping one factor of r when k is even) leaves a polynomial in theta with
coefficients (-1)^j C(k-1-j, j) in descending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, SplittingError
from .fieldcore import FieldElement, ModulusLike, PrimeModulus, as_modulus, euler_phi, factorize


def gk_degree(k: int) -> int:
    return (k - 1) // 2


@dataclass(frozen=True)
class GkPolynomial:
    k: int
    coefficients: tuple[int, ...]  # descending; index 0 is the leading term

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def reduce(self, p: int) -> tuple[int, ...]:
        return tuple(c % p for c in self.coefficients)

    def evaluate(self, theta: int, p: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = (acc * theta + c) % p
        return acc

    def display(self, var: str = "θ") -> str:
        """Descending form, e.g. ``θ^2 - 2θ + 5``; unit coefficients elided."""
        terms = []
        for j, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = self.degree - j
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + var + (f"^{power}" if power > 1 else "")
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) or "0"


def gk_coefficients(k: int) -> GkPolynomial:
    if k < 1:
        raise DomainError("k must be >= 1")
    coeffs = tuple((-1) ** j * comb(k - 1 - j, j) for j in range(gk_degree(k) + 1))
    return GkPolynomial(k, coeffs)


def gk_coefficients_mod(k: int, p: int) -> tuple[int, ...]:
    """Same coefficients built from factorials mod p; needs k - 1 < p."""
    if k - 1 >= p:
        raise DomainError(f"k - 1 = {k - 1} must be below p = {p}")
    fact = [1] * k
    for n in range(1, k):
        fact[n] = fact[n - 1] * n % p
    out = []
    for j in range(gk_degree(k) + 1):
        n = k - 1 - j
        c = fact[n] * pow(fact[j] * fact[n - j], -1, p) % p
        out.append(c if j % 2 == 0 else (-c) % p)
    return tuple(out)


@dataclass(frozen=True)
class ThetaSet:
    p: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(set(self.values))))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, theta):
        return int(theta) in self.values

    def as_set(self) -> set[int]:
        return set(self.values)

    def elements(self) -> list[FieldElement]:
        mod = PrimeModulus(self.p)
        return [mod(v) for v in self.values]


def find_roots(poly: GkPolynomial, p: ModulusLike) -> ThetaSet:
    """Every theta in F_p with g_k(theta) = 0, by scanning all residues."""
    p = int(p)
    if poly.degree >= p:
        raise DomainError("degree must be below p")
    coeffs = poly.reduce(p)
    roots = []
    for t in range(p):
        acc = 0
        for c in coeffs:
            acc = (acc * t + c) % p
        if acc == 0:
            roots.append(t)
    return ThetaSet(p, poly.k, tuple(roots))


def roots_of_gk(k: int, p: int) -> ThetaSet:
    return find_roots(gk_coefficients(k), p)


def check_splitting(k: int, p: int) -> ThetaSet:
    """Roots of g_k, raising if it fails to split into distinct roots."""
    roots = roots_of_gk(k, p)
    if len(roots) != gk_degree(k):
        raise SplittingError(
            f"g_{k} has {len(roots)} roots mod {p}, expected {gk_degree(k)}")
    return roots


def januarial_thetas(p: ModulusLike) -> ThetaSet:
    """Roots of g_k for k = (p+1)/2 that are not roots of any g_{k/q}, q prime."""
    mod = as_modulus(p)
    k = mod.k
    roots = check_splitting(k, mod.p).as_set()
    for sub in factorize(k).maximal_divisors():
        roots -= roots_of_gk(sub, mod.p).as_set()
    return ThetaSet(mod.p, k, tuple(roots))


def expected_count(k: int) -> int:
    """phi(k)/2, the number of januarials with xy of order k."""
    if k < 1:
        raise DomainError("k must be positive")
    half = Fraction(euler_phi(k), 2)
    if half.denominator != 1:
        raise DomainError(f"phi({k})/2 = {half} is not an integer")
    return int(half)
