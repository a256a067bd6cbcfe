import random

import pytest
from hypothesis import given, settings, strategies as st

from januarials.errors import DomainError, NoOrderLElement
from januarials.fieldcore import PrimeModulus
from januarials.pgl2 import (
    PglElement,
    apply_lft,
    compose,
    cycles,
    enumerate_pgl,
    find_order_trace,
    lft_permutation,
    perm_order,
    pgl_order,
    theta_invariant,
)

P = 31
INF = P
X = PglElement.from_rows([[3, 30], [10, -3]], P)
Y = PglElement.from_rows([[0, 42], [14, 8]], P)
I = PglElement.identity(P)


def random_element(rng, p):
    while True:
        m = tuple(rng.randrange(p) for _ in range(4))
        if (m[0] * m[3] - m[1] * m[2]) % p:
            return PglElement(m, p)


elements = st.builds(
    lambda p, seed: random_element(random.Random(seed), p),
    st.sampled_from([5, 7, 11, 13, 31, 61]), st.integers(0, 2**32))


def test_apply_examples():
    assert apply_lft(X, 0) == 21
    assert apply_lft(I, INF) == INF
    assert apply_lft(Y, 0) == 13


def test_apply_at_pole_and_infinity():
    # y: z -> 42/(14z+8); pole at z = -8/14
    assert apply_lft(Y, INF) == 0
    pole = (-8 * pow(14, -1, P)) % P
    assert apply_lft(Y, pole) == INF
    with pytest.raises(DomainError):
        apply_lft(Y, P + 1)


def test_canonical_form():
    assert X.entries[0] == 1
    assert PglElement((0, 5, 3, 2), 7).entries[1] == 1
    assert PglElement((2, 4, 6, 10), 31) == PglElement((1, 2, 3, 5), 31)
    with pytest.raises(DomainError):
        PglElement((1, 2, 2, 4), 31)


def test_example_x_permutation():
    cyc = [c for c in cycles(lft_permutation(X))]
    assert all(len(c) == 2 for c in cyc) and len(cyc) == 16
    assert [0, 21] in cyc and [22, INF] in cyc and [17, 30] in cyc


def test_identity_permutation():
    assert lft_permutation(I) == tuple(range(P + 1))


def test_xy_convention():
    """x then y as permutations is the matrix product Y @ X."""
    xy = compose(lft_permutation(X), lft_permutation(Y))
    assert xy == lft_permutation(Y @ X)
    orbit = next(c for c in cycles(xy) if 0 in c)
    assert orbit[:4] == [0, 18, 16, 5]
    assert sorted(len(c) for c in cycles(xy)) == [16, 16]


def test_orders():
    assert pgl_order(I) == 1
    assert pgl_order(Y) == 4
    assert pgl_order(X @ Y) == 16 == pgl_order(Y @ X)
    assert pgl_order(X) == 2


def test_theta_examples():
    assert theta_invariant(X, Y) == 7
    m = PglElement((2, 7, 5, 1), P)
    assert theta_invariant(m, m.inverse()) == 4
    C = PglElement((1, 1, 0, 1), P)
    Ci = C.inverse()
    assert theta_invariant(C @ X @ Ci, C @ Y @ Ci) == 7


@pytest.mark.parametrize("p", [5, 7, 11, 31, 61])
def test_theta_conjugation_invariance(p):
    rng = random.Random(p)
    x, y = random_element(rng, p), random_element(rng, p)
    t = theta_invariant(x, y)
    for _ in range(100):
        c = random_element(rng, p)
        ci = c.inverse()
        assert theta_invariant(c @ x @ ci, c @ y @ ci) == t


def test_find_order_trace_examples():
    assert find_order_trace(31, 4) == 8
    assert find_order_trace(31, 2) == 0
    assert find_order_trace(31, 3) == 1
    assert find_order_trace(31, 31) == 2
    with pytest.raises(NoOrderLElement):
        find_order_trace(11, 4)  # 4 divides neither (p-1)/2 nor (p+1)/2
    with pytest.raises(NoOrderLElement):
        find_order_trace(31, 7)


@settings(max_examples=200)
@given(elements, st.integers(0, 2**32))
def test_action_is_homomorphism(m, seed):
    n = random_element(random.Random(seed), m.p)
    assert lft_permutation(m @ n) == compose(lft_permutation(n), lft_permutation(m))


@settings(max_examples=200)
@given(elements)
def test_permutation_order_matches(m):
    perm = lft_permutation(m)
    n = pgl_order(m)
    assert perm_order(perm) == n


@settings(max_examples=200)
@given(elements)
def test_at_most_two_fixed_points(m):
    fixed = sum(1 for i, j in enumerate(lft_permutation(m)) if i == j)
    if m.is_identity():
        assert fixed == m.p + 1
    else:
        assert fixed <= 2


@pytest.mark.parametrize("p", [5, 7, 11])
def test_enumerate_pgl_size(p):
    elems = list(enumerate_pgl(p))
    assert len(elems) == len(set(elems)) == p**3 - p
    assert all(PglElement(m, p).entries == m for m in elems)


@settings(max_examples=100)
@given(elements, st.integers(-5, 40))
def test_power_matches_repeated_product(m, n):
    out = PglElement.identity(m.p)
    base = m if n >= 0 else m.inverse()
    for _ in range(abs(n)):
        out = out @ base
    assert m**n == out


def test_modulus_accessor():
    assert X.modulus == PrimeModulus(31)
    assert X.trace() == 0
