"""Shared random generators and sympy oracles for the test suites."""

import random

import sympy

from pfoliation.ffpoly import GF, ZZ, Poly
from pfoliation.ffpoly.rings import ExtensionField, IntegerRing, PrimeField

SX, SY, SZ = sympy.symbols("x y z")
SYMS = (SX, SY, SZ)


def random_coeff(rng: random.Random, ring):
    if isinstance(ring, IntegerRing):
        return rng.randint(-9, 9)
    if isinstance(ring, (PrimeField, ExtensionField)):
        return rng.choice(list(ring.elements()))
    return ring(rng.randint(-9, 9)) / ring(rng.randint(1, 5))


def random_poly(rng: random.Random, ring=ZZ, degree=4, nterms=5, nvars=2) -> Poly:
    terms = {}
    for _ in range(nterms):
        parts = [rng.randint(0, degree) for _ in range(nvars)]
        while sum(parts) > degree:
            parts[rng.randrange(nvars)] -= 1
            parts = [max(0, p) for p in parts]
        terms[tuple(parts)] = random_coeff(rng, ring)
    return Poly(terms, ring, nvars)


def to_sympy(f: Poly):
    """Integer or prime-field polynomial as a sympy expression (lifted to Z)."""
    expr = 0
    for exp, c in f.items():
        mono = 1
        for s, e in zip(SYMS, exp):
            mono *= s**e
        expr += int(c) * mono
    return sympy.expand(expr)


def sympy_poly(f: Poly):
    gens = SYMS[: f.nvars]
    if isinstance(f.ring, PrimeField):
        return sympy.Poly(to_sympy(f), *gens, modulus=f.ring.p)
    return sympy.Poly(to_sympy(f), *gens, domain="ZZ")


def from_sympy(expr, ring=ZZ, nvars=2) -> Poly:
    p = sympy.Poly(expr, *SYMS[:nvars])
    return Poly({tuple(m): ring(int(c)) for m, c in p.terms()}, ring, nvars)


F2, F3, F5 = GF(2), GF(3), GF(5)
