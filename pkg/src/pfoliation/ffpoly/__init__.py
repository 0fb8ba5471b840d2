"""Exact sparse polynomial arithmetic over Z, Q, F_p and GF(p^k)."""

from .algorithms import (
    HomogenizationResult,
    NotDivisible,
    PFactorResult,
    dehomogenize,
    divides,
    exact_div,
    homogenize,
    is_pth_power,
    p_factor_test,
    partial_derivative,
    poly_arith,
    poly_gcd,
    reduce_mod_p,
)
from .parse import ParseError, parse_poly, print_poly
from .poly import MINUS_INFINITY, Poly, graded_part, monomial_gcd, strip_monomial, total_degree
from .rings import (
    GF,
    QQ,
    ZZ,
    ExtensionField,
    IntegerRing,
    PrimeField,
    RationalField,
    Ring,
    RingError,
    RingMismatch,
    ring_from_tag,
)
