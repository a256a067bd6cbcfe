import pytest

from januarials.construct import example_pair
from januarials.errors import NoOrderLElement
from januarials.fieldcore import divisors, is_prime
from januarials.pgl2 import find_order_trace

PRIMES_TO_199 = [p for p in range(5, 200) if is_prime(p)]


def candidate_ls(p, lmax=None):
    """l >= 3 dividing p - 1 or p + 1, or l = p, that a det-1 y can realise."""
    cands = sorted({d for d in divisors(p - 1) + divisors(p + 1) if d >= 3} | {p})
    if lmax is not None:
        cands = [l for l in cands if l <= lmax]
    out = []
    for l in cands:
        try:
            find_order_trace(p, l)
        except NoOrderLElement:
            continue
        out.append(l)
    return out


@pytest.fixture(scope="session")
def example():
    return example_pair()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
