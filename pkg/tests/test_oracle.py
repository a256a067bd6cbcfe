import pytest

from januarials.errors import SizeLimit
from januarials.fieldcore import euler_phi
from januarials.gk import januarial_thetas
from januarials.pgl2 import theta_int
from januarials.oracle import (
    brute_force_thetas,
    conjugacy_classes,
    count_classes_of_order,
    cyclic_orbit_check,
    elements_of_order,
    verify_all,
)


def test_class_counts():
    assert count_classes_of_order(7, 4).class_count == 1 == euler_phi(4) // 2
    assert count_classes_of_order(11, 6).class_count == 1 == euler_phi(6) // 2
    c = count_classes_of_order(31, 16)
    assert c.class_count == 4 and c.class_invariants == {7, 16, 19, 28}


def test_involution_count():
    # p^2 involutions in PGL(2, p): p(p+1)/2 split plus p(p-1)/2 nonsplit
    for p in (5, 7, 11):
        assert len(elements_of_order(p, 2)) == p * p


@pytest.mark.parametrize("q", [5, 7, 11])
def test_theta_buckets_match_conjugation(q):
    for n in range(3, q + 2):
        true = conjugacy_classes(q, n)
        census = count_classes_of_order(q, n)
        assert len(true) == census.class_count, n
        # every class sits in exactly one bucket
        assert all(len({theta_int(m, q) for m in cls}) == 1 for cls in true)


def test_involution_classes_share_a_bucket():
    # the one order where tr^2/det does not separate classes
    assert len(conjugacy_classes(7, 2)) == 2
    assert count_classes_of_order(7, 2).class_count == 1


@pytest.mark.parametrize("q,k", [(31, 16), (5, 3), (7, 4)])
def test_cyclic_orbits(q, k):
    report = cyclic_orbit_check(q)
    assert report.ok, str(report)
    assert f"[{k}, {k}]" in str(report)


@pytest.mark.parametrize("p,l,expected", [
    (31, 4, {7, 16, 19, 28}),
    (5, 3, {1}),
    (7, 3, {2}),
])
def test_brute_force_examples(p, l, expected):
    assert brute_force_thetas(p, l).as_set() == expected


@pytest.mark.parametrize("p,l", [(11, 3), (11, 5), (13, 3), (13, 4), (17, 4), (19, 3)])
def test_brute_force_agrees(p, l):
    assert brute_force_thetas(p, l).as_set() == januarial_thetas(p).as_set()


def test_size_limit():
    with pytest.raises(SizeLimit):
        count_classes_of_order(97, 49)
    with pytest.raises(SizeLimit):
        verify_all(97, 3)


def test_verify_all_passes():
    report = verify_all(13, 3)
    assert report.ok, str(report)
    assert len(report.checks) == 6 + 3
