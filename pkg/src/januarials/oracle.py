"""Brute-force cross-checks on small groups.

Nothing here goes through g_k: classes are found by enumerating PGL(2, q)
and conjugating, orbits by composing permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .construct import Check, VerificationReport, solve_generators
from .errors import DomainError, NotFound, SizeLimit
from .fieldcore import ModulusLike, as_modulus, euler_phi
from .gk import ThetaSet, januarial_thetas
from .pgl2 import (
    Mat,
    compose,
    cycles,
    enumerate_pgl,
    mat_mul,
    order_int,
    permutation_of,
    theta_int,
    canonical,
)

BUDGET = 64


def _check_budget(q: int, force: bool):
    if q > BUDGET and not force:
        raise SizeLimit(f"q = {q} exceeds the enumeration budget {BUDGET}; pass force=True")


@lru_cache(maxsize=8)
def _group_orders(q: int) -> dict[Mat, int]:
    return {m: order_int(m, q) for m in enumerate_pgl(q)}


def elements_of_order(q: ModulusLike, n: int, force: bool = False) -> list[Mat]:
    q = int(as_modulus(q))
    _check_budget(q, force)
    return [m for m, o in _group_orders(q).items() if o == n]


def _inverse(m: Mat, q: int) -> Mat:
    a, b, c, d = m
    return canonical((d, -b, -c, a), q)


def conjugacy_classes(q: ModulusLike, n: int, force: bool = False) -> list[frozenset[Mat]]:
    """Conjugacy classes of elements of order n, by explicit conjugation."""
    q = int(as_modulus(q))
    pool = set(elements_of_order(q, n, force))
    group = list(_group_orders(q))
    classes = []
    while pool:
        g = min(pool)
        cls = frozenset(canonical(mat_mul(mat_mul(h, g, q), _inverse(h, q), q), q) for h in group)
        pool -= cls
        classes.append(cls)
    return classes


@dataclass(frozen=True)
class ClassCensus:
    q: int
    n: int
    class_count: int
    class_invariants: frozenset[int]


def count_classes_of_order(q: ModulusLike, n: int, force: bool = False) -> ClassCensus:
    """Count classes of order-n elements by bucketing on tr^2/det."""
    q = int(as_modulus(q))
    buckets = {theta_int(m, q) for m in elements_of_order(q, n, force)}
    return ClassCensus(q, n, len(buckets), frozenset(buckets))


def cyclic_orbit_check(q: ModulusLike, force: bool = False) -> VerificationReport:
    q = int(as_modulus(q))
    k = (q + 1) // 2
    zs = elements_of_order(q, k, force)
    if not zs:
        raise NotFound(f"no element of order {k} in PGL(2, {q})")
    z = zs[0]
    orbits = cycles(permutation_of(z, q))
    sizes = sorted(len(o) for o in orbits)
    return VerificationReport([
        Check(f"<z> has two orbits on PL(F_{q})", len(orbits) == 2, f"sizes {sizes}"),
        Check(f"both orbits have size {k}", sizes == [k, k]),
    ])


def brute_force_thetas(p: ModulusLike, l: int, force: bool = False) -> ThetaSet:
    """theta(x, y) over all pairs of orders (2, l) whose product splits PL(F_p)
    into two orbits of size (p+1)/2.

    Conjugating a pair preserves theta and orbit shape, so y runs over one
    representative per conjugacy class while x runs over every involution.
    """
    p = int(as_modulus(p))
    if l < 2:
        raise DomainError("l must be >= 2")
    k = (p + 1) // 2
    involutions = [(m, permutation_of(m, p)) for m in elements_of_order(p, 2, force)]
    found = set()
    for cls in conjugacy_classes(p, l, force):
        y = min(cls)
        yperm = permutation_of(y, p)
        for x, xperm in involutions:
            orbits = cycles(compose(xperm, yperm))
            if len(orbits) == 2 and all(len(o) == k for o in orbits):
                xy = mat_mul(y, x, p)
                if order_int(xy, p) == k:
                    found.add(theta_int(mat_mul(x, y, p), p))
    return ThetaSet(p, k, tuple(found))


def verify_all(p: ModulusLike, l: int, force: bool = False) -> VerificationReport:
    """Every oracle check for one (p, l), plus analytic/oracle agreement."""
    mod = as_modulus(p)
    _check_budget(mod.p, force)
    k = mod.k
    predicted = euler_phi(k) // 2
    checks = []

    census = count_classes_of_order(mod, k, force)
    checks.append(Check(f"classes of order {k} = phi({k})/2 = {predicted}",
                        census.class_count == predicted, f"got {census.class_count}"))
    checks.extend(cyclic_orbit_check(mod, force).checks)

    analytic = januarial_thetas(mod)
    checks.append(Check(f"|januarial thetas| = {predicted}", len(analytic) == predicted,
                        " ".join(map(str, analytic))))
    checks.append(Check("class invariants = januarial thetas",
                        census.class_invariants == analytic.as_set()))
    brute = brute_force_thetas(mod, l, force)
    checks.append(Check(f"brute-force thetas (l={l}) = januarial thetas",
                        brute.as_set() == analytic.as_set(),
                        "brute " + " ".join(map(str, brute))))

    from .diagram import build_diagram, is_januarial

    for theta in analytic:
        d = build_diagram(solve_generators(mod, l, theta))
        checks.append(Check(f"theta={theta} builds a januarial", is_januarial(d)))
    return VerificationReport(checks)
