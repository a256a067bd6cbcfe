"""Januarials from Hecke-group quotients acting on PL(F_p)."""

from .construct import GeneratorPair, solve_generators, verify_pair
from .diagram import (
    CosetDiagram,
    build_diagram,
    genus_breakdown,
    genus_fixedpoint,
    genus_higman,
    genus_januarial,
    is_januarial,
)
from .fieldcore import PrimeModulus, euler_phi, factorize
from .gk import expected_count, gk_coefficients, januarial_thetas
from .pgl2 import PglElement, pgl_order, theta_invariant

__all__ = [
    "CosetDiagram",
    "GeneratorPair",
    "PglElement",
    "PrimeModulus",
    "build_diagram",
    "euler_phi",
    "expected_count",
    "factorize",
    "genus_breakdown",
    "genus_fixedpoint",
    "genus_higman",
    "genus_januarial",
    "gk_coefficients",
    "is_januarial",
    "januarial_thetas",
    "pgl_order",
    "solve_generators",
    "theta_invariant",
    "verify_pair",
]
