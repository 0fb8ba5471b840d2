"""Sparse multivariate polynomials.

A :class:`Poly` is a map from exponent tuples to nonzero coefficients over
one of the rings in :mod:`pfoliation.ffpoly.rings`.  Instances are treated
as immutable: every operation returns a new polynomial.  Terms are printed
and compared in graded lexicographic order with ``x > y > z``.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from .rings import ZZ, Ring, RingMismatch, embed

VARIABLES = ("x", "y", "z")

#: Degree of the zero polynomial.  Kept as ``-inf`` so ``max``/``+`` stay total.
MINUS_INFINITY = -math.inf


def grlex_key(exp: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(exp), exp)


class Poly:
    __slots__ = ("ring", "nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], object], ring: Ring = ZZ, nvars: int = 2, *, _clean=False):
        if not 1 <= nvars <= 3:
            raise ValueError("arity must be 1, 2 or 3")
        self.ring = ring
        self.nvars = nvars
        if _clean:
            self._terms = dict(terms)
        else:
            cleaned = {}
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars or any(e < 0 for e in exp):
                    raise ValueError("bad exponent vector %r for arity %d" % (exp, nvars))
                c = ring(c)
                if not ring.is_zero(c):
                    cleaned[exp] = c
            self._terms = cleaned
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring = ZZ, nvars: int = 2) -> "Poly":
        return cls({}, ring, nvars, _clean=True)

    @classmethod
    def constant(cls, c, ring: Ring = ZZ, nvars: int = 2) -> "Poly":
        return cls({(0,) * nvars: c}, ring, nvars)

    @classmethod
    def monomial(cls, exp: Iterable[int], c=1, ring: Ring = ZZ) -> "Poly":
        exp = tuple(exp)
        return cls({exp: c}, ring, len(exp))

    @classmethod
    def gen(cls, i: int, ring: Ring = ZZ, nvars: int = 2) -> "Poly":
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): ring.one}, ring, nvars, _clean=True)

    @classmethod
    def gens(cls, ring: Ring = ZZ, nvars: int = 2) -> tuple["Poly", ...]:
        return tuple(cls.gen(i, ring, nvars) for i in range(nvars))

    # -- basic access -----------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], object]:
        """Copy of the term map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: tuple[int, ...]):
        return self._terms.get(tuple(exp), self.ring.zero)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._terms, key=grlex_key, reverse=True)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return [(e, self._terms[e]) for e in self.support()]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def constant_value(self):
        return self._terms.get((0,) * self.nvars, self.ring.zero)

    def total_degree(self):
        """Total degree; ``MINUS_INFINITY`` for the zero polynomial."""
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: int):
        if not self._terms:
            return MINUS_INFINITY
        return max(e[var] for e in self._terms)

    def min_degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return min(sum(e) for e in self._terms)

    def leading_term(self) -> tuple[tuple[int, ...], object]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def leading_coeff(self):
        return self.leading_term()[1]

    def graded_part(self, degree: int) -> "Poly":
        return Poly({e: c for e, c in self._terms.items() if sum(e) == degree}, self.ring, self.nvars, _clean=True)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # -- ring plumbing ----------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatch("ring mismatch: %s vs %s" % (self.ring, other.ring))
        if self.nvars != other.nvars:
            raise RingMismatch("arity mismatch: %d vs %d" % (self.nvars, other.nvars))

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, int):
            return Poly.constant(other, self.ring, self.nvars)
        return NotImplemented

    def change_ring(self, ring: Ring) -> "Poly":
        """Image under the natural map into ``ring`` (Z -> F_p, F_p -> F_{p^k}, ...)."""
        if ring == self.ring:
            return self
        return Poly({e: embed(c, self.ring, ring) for e, c in self._terms.items()}, ring, self.nvars)

    def with_nvars(self, nvars: int) -> "Poly":
        """Pad (or drop unused trailing) variables."""
        if nvars == self.nvars:
            return self
        terms = {}
        for e, c in self._terms.items():
            if nvars < self.nvars:
                if any(e[nvars:]):
                    raise ValueError("polynomial uses a dropped variable")
                terms[e[:nvars]] = c
            else:
                terms[e + (0,) * (nvars - self.nvars)] = c
        return Poly(terms, self.ring, nvars, _clean=True)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        neg = self.ring.neg
        return Poly({e: neg(c) for e, c in self._terms.items()}, self.ring, self.nvars, _clean=True)

    def __pos__(self):
        return self

    def _addsub(self, other, sign):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ring = self.ring
        op = ring.add if sign > 0 else ring.sub
        terms = dict(self._terms)
        for e, c in other._terms.items():
            if e in terms:
                s = op(terms[e], c)
                if ring.is_zero(s):
                    del terms[e]
                else:
                    terms[e] = s
            else:
                terms[e] = c if sign > 0 else ring.neg(c)
        return Poly(terms, ring, self.nvars, _clean=True)

    def __add__(self, other):
        return self._addsub(other, 1)

    def __radd__(self, other):
        return self._addsub(other, 1)

    def __sub__(self, other):
        return self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ring = self.ring
        add, mul, is_zero = ring.add, ring.mul, ring.is_zero
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = mul(c1, c2)
                if e in terms:
                    terms[e] = add(terms[e], c)
                else:
                    terms[e] = c
        return Poly({e: c for e, c in terms.items() if not is_zero(c)}, ring, self.nvars, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative exponent")
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            return Poly({tuple(a * n for a in e): self.ring.pow(c, n)}, self.ring, self.nvars)
        result = Poly.constant(1, self.ring, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        mul, is_zero = self.ring.mul, self.ring.is_zero
        return Poly({e: mul(v, c) for e, v in self._terms.items() if not is_zero(mul(v, c))}, self.ring, self.nvars, _clean=True)

    def mul_monomial(self, exp: tuple[int, ...], c=None) -> "Poly":
        terms = {tuple(a + b for a, b in zip(e, exp)): v for e, v in self._terms.items()}
        p = Poly(terms, self.ring, self.nvars, _clean=True)
        return p if c is None else p.scale(c)

    def monic(self) -> "Poly":
        """Scale so the graded-lex leading coefficient is 1 (fields only)."""
        if not self._terms:
            return self
        return self.scale(self.ring.inv(self.leading_coeff()))

    # -- calculus and evaluation -----------------------------------------

    def diff(self, var: int) -> "Poly":
        """Formal partial derivative with respect to variable ``var``."""
        if not 0 <= var < self.nvars:
            raise ValueError("variable index %d out of range" % var)
        ring = self.ring
        terms = {}
        for e, c in self._terms.items():
            k = e[var]
            if k == 0:
                continue
            c = ring.mul(c, ring(k))
            if not ring.is_zero(c):
                terms[e[:var] + (k - 1,) + e[var + 1:]] = c
        return Poly(terms, ring, self.nvars, _clean=True)

    def __call__(self, *point):
        """Evaluate at a point whose coordinates are elements of ``self.ring``."""
        if len(point) != self.nvars:
            raise ValueError("expected %d coordinates" % self.nvars)
        ring = self.ring
        total = ring.zero
        for e, c in self._terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term = ring.mul(term, ring.pow(v, k))
            total = ring.add(total, term)
        return total

    def compose(self, images: list["Poly"]) -> "Poly":
        """Substitute polynomial ``images[i]`` for variable ``i``."""
        if len(images) != self.nvars:
            raise ValueError("expected %d images" % self.nvars)
        target = images[0]
        result = Poly.zero(target.ring, target.nvars)
        cache: dict = {}
        for e, c in self._terms.items():
            term = Poly.constant(c, target.ring, target.nvars)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    term = term * cache[key]
            result = result + term
        return result

    def translate(self, shift: tuple) -> "Poly":
        """``f(x + a, y + b, ...)`` for ring elements ``shift``."""
        gens = Poly.gens(self.ring, self.nvars)
        return self.compose([g + Poly.constant(a, self.ring, self.nvars) for g, a in zip(gens, shift)])

    # -- comparison and printing -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.ring, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        from .parse import print_poly

        return print_poly(self)

    def __repr__(self):
        return "Poly(%r, %s)" % (str(self), self.ring)


def monomial_gcd(f: Poly) -> tuple[int, ...]:
    """Exponent of the largest monomial dividing ``f``."""
    if f.is_zero():
        return (0,) * f.nvars
    return tuple(min(e[i] for e in f._terms) for i in range(f.nvars))


def strip_monomial(f: Poly) -> tuple[tuple[int, ...], Poly]:
    """Split ``f = x^a y^b * g`` with ``g`` divisible by no variable."""
    m = monomial_gcd(f)
    if not any(m):
        return m, f
    terms = {tuple(a - b for a, b in zip(e, m)): c for e, c in f.items()}
    return m, Poly(terms, f.ring, f.nvars, _clean=True)


def total_degree(f: Poly):
    return f.total_degree()


def graded_part(f: Poly, degree: int) -> Poly:
    return f.graded_part(degree)
