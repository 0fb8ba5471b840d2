"""Coefficient rings: the integers, the rationals, prime fields and small
extension fields GF(p^k).

Elements are plain Python values so polynomials can keep them in dicts:

* ``Z``      -- ``int``
* ``Q``      -- ``fractions.Fraction``
* ``F_p``    -- ``int`` in ``range(p)``
* ``F_{p^k}`` -- ``tuple`` of ``k`` ints, the coefficients (low degree first)
  of a residue modulo the defining polynomial; the generator prints as ``t``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator


class RingError(ValueError):
    pass


class RingMismatch(TypeError):
    """Raised when two operands live over different coefficient rings."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# Defining polynomials, low degree first. These are the Conway polynomials.
MODULUS_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
}


class Ring:
    """Common interface of the coefficient rings."""

    name: str
    characteristic: int
    is_field: bool = False
    is_finite: bool = False

    zero: object
    one: object

    def __call__(self, value):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def exact_quotient(self, a, b):
        """``a / b`` if it exists in the ring, else ``None``."""
        if self.is_zero(b):
            raise ZeroDivisionError("division by zero in %s" % self.name)
        return self.div(a, b)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class IntegerRing(Ring):
    name: str = field(default="Z", init=False)
    characteristic: int = field(default=0, init=False)

    zero = 0
    one = 1

    def __call__(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise RingError("%s is not an integer" % value)
            return value.numerator
        if not isinstance(value, int):
            raise RingError("cannot convert %r to an integer" % (value,))
        return value

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a in (1, -1):
            return a
        raise RingError("%d is not a unit in Z" % a)

    def exact_quotient(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Z")
        q, r = divmod(a, b)
        return q if r == 0 else None

    def format(self, a) -> str:
        return str(a)

    def is_negative(self, a) -> bool:
        return a < 0


@dataclass(frozen=True)
class RationalField(Ring):
    name: str = field(default="Q", init=False)
    characteristic: int = field(default=0, init=False)
    is_field: bool = field(default=True, init=False)

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def format(self, a) -> str:
        return str(a)

    def is_negative(self, a) -> bool:
        return a < 0


@dataclass(frozen=True)
class PrimeField(Ring):
    p: int
    name: str = field(init=False)
    characteristic: int = field(init=False)
    is_field: bool = field(default=True, init=False)
    is_finite: bool = field(default=True, init=False)

    zero = 0
    one = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingError("characteristic %d is not prime" % self.p)
        object.__setattr__(self, "name", "F%d" % self.p)
        object.__setattr__(self, "characteristic", self.p)

    @property
    def k(self) -> int:
        return 1

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if not isinstance(value, int):
            raise RingError("cannot convert %r into %s" % (value, self.name))
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in %s" % self.name)
        return pow(a, -1, self.p)

    def pow(self, a, n):
        return pow(a, n, self.p) if n >= 0 else pow(self.inv(a), -n, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def format(self, a) -> str:
        return str(a)

    def is_negative(self, a) -> bool:
        return False

    def lift(self, a) -> int:
        """Canonical integer representative."""
        return a


def _poly_mod(coeffs: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """Reduce ``coeffs`` (low first) modulo a monic ``modulus`` over F_p."""
    k = len(modulus) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, k - 1, -1):
        c = coeffs[i] % p
        if c:
            for j in range(k + 1):
                coeffs[i - k + j] = (coeffs[i - k + j] - c * modulus[j]) % p
    coeffs = [c % p for c in coeffs[:k]]
    return coeffs + [0] * (k - len(coeffs))


def is_irreducible_modulus(modulus: tuple[int, ...], p: int) -> bool:
    """Exhaustive factor test: no monic factor of degree <= k/2 over F_p."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p != 1:
        return False
    for deg in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            divisor = tuple(tail) + (1,)
            if not any(_poly_mod(list(modulus), divisor, p)):
                return False
    return True


@dataclass(frozen=True)
class ExtensionField(Ring):
    p: int
    k: int
    modulus: tuple[int, ...]
    name: str = field(init=False)
    characteristic: int = field(init=False)
    is_field: bool = field(default=True, init=False)
    is_finite: bool = field(default=True, init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingError("characteristic %d is not prime" % self.p)
        modulus = tuple(c % self.p for c in self.modulus)
        if len(modulus) != self.k + 1:
            raise RingError("modulus must have degree %d" % self.k)
        if not is_irreducible_modulus(modulus, self.p):
            raise RingError("modulus %r is reducible over F%d" % (modulus, self.p))
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "name", "F%d^%d" % (self.p, self.k))
        object.__setattr__(self, "characteristic", self.p)

    @property
    def order(self) -> int:
        return self.p**self.k

    @cached_property
    def zero(self):
        return (0,) * self.k

    @cached_property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    @cached_property
    def generator(self):
        return (0, 1) + (0,) * (self.k - 2)

    def __call__(self, value):
        if isinstance(value, tuple):
            if len(value) != self.k:
                raise RingError("expected %d coordinates" % self.k)
            return tuple(c % self.p for c in value)
        if isinstance(value, Fraction):
            value = value.numerator * pow(value.denominator, -1, self.p)
        if not isinstance(value, int):
            raise RingError("cannot convert %r into %s" % (value, self.name))
        return (value % self.p,) + (0,) * (self.k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(_poly_mod(prod, self.modulus, self.p))

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("division by zero in %s" % self.name)
        return Ring.pow(self, a, self.order - 2)

    def elements(self) -> Iterator[tuple[int, ...]]:
        for digits in itertools.product(range(self.p), repeat=self.k):
            yield tuple(reversed(digits))

    def index(self, a) -> int:
        """Base-p integer encoding; for p = 2 addition becomes XOR."""
        return sum(c * self.p**i for i, c in enumerate(a))

    def format(self, a) -> str:
        parts = []
        for i in range(self.k - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append("%d*%s" % (c, mono))
        return " + ".join(parts) if parts else "0"

    def is_negative(self, a) -> bool:
        return False


ZZ = IntegerRing()
QQ = RationalField()


def GF(p: int, k: int = 1, modulus: tuple[int, ...] | None = None) -> Ring:
    """The field with ``p**k`` elements.

    Extension fields use the built-in table for p in {2, 3}, k <= 4; other
    sizes need an explicit ``modulus`` (coefficients low degree first).
    """
    if k < 1:
        raise RingError("extension degree must be >= 1")
    if k == 1:
        return PrimeField(p)
    if modulus is None:
        try:
            modulus = MODULUS_TABLE[(p, k)]
        except KeyError:
            raise RingError("no tabled modulus for GF(%d^%d); supply one" % (p, k)) from None
    return ExtensionField(p, k, tuple(modulus))


def ring_from_tag(tag: str) -> Ring:
    """Parse ``"Z"``, ``"Q"``, ``"F5"`` or ``"F2^3"``."""
    tag = tag.strip()
    if tag in ("Z", "ZZ"):
        return ZZ
    if tag in ("Q", "QQ"):
        return QQ
    if tag.startswith("F"):
        body = tag[1:]
        try:
            if "^" in body:
                p, k = body.split("^")
                return GF(int(p), int(k))
            return GF(int(body))
        except ValueError as exc:
            raise RingError("bad ring tag %r: %s" % (tag, exc)) from None
    raise RingError("unknown ring tag %r" % tag)


def base_field(ring: Ring) -> Ring:
    """Prime subfield of a finite field (the ring itself otherwise)."""
    if isinstance(ring, ExtensionField):
        return PrimeField(ring.p)
    return ring


def embed(value, source: Ring, target: Ring):
    """Map an element along the inclusions Z -> Q, Z -> F_p -> F_{p^k}."""
    if source == target:
        return value
    if isinstance(source, (IntegerRing, PrimeField)):
        return target(value)
    if isinstance(source, RationalField) and target.characteristic == 0:
        return target(value)
    raise RingMismatch("no embedding %s -> %s" % (source.name, target.name))
