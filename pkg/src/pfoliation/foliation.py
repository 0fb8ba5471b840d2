"""Plane vector fields ``v = A d/dx + B d/dy`` in positive characteristic.

Everything here works on the affine chart ``z = 1`` of the projective
plane.  The p-th power of a derivation is computed with the same recurrence
as the classic Singular ``pcampo`` procedure, and the p-divisor is the
affine polynomial ``v ^ v^p / (d/dx ^ d/dy)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ffpoly import GF, NotDivisible, Poly, PrimeField, RingMismatch, exact_div, poly_gcd
from .ffpoly.rings import QQ, ExtensionField, IntegerRing


class SingularityError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneVectorField:
    A: Poly
    B: Poly

    def __post_init__(self):
        if self.A.ring != self.B.ring:
            raise RingMismatch("A over %s but B over %s" % (self.A.ring, self.B.ring))
        if self.A.nvars != 2 or self.B.nvars != 2:
            raise ValueError("vector field components must be polynomials in x, y")
        if self.A.is_zero() and self.B.is_zero():
            raise ValueError("zero vector field")

    @property
    def ring(self):
        return self.A.ring

    def change_ring(self, ring) -> "PlaneVectorField":
        return PlaneVectorField(self.A.change_ring(ring), self.B.change_ring(ring))

    def reduce(self, p: int) -> "PlaneVectorField":
        """Reduction modulo ``p`` (raises if both components vanish)."""
        return self.change_ring(GF(p))

    def __call__(self, f: Poly) -> Poly:
        return derive(self, f)

    def __str__(self):
        return "(%s)*d/dx + (%s)*d/dy" % (self.A, self.B)


def derive(v: PlaneVectorField, f: Poly) -> Poly:
    """``v(f) = A f_x + B f_y``."""
    v.A._check(f)
    return v.A * f.diff(0) + v.B * f.diff(1)


def _check_char(v: PlaneVectorField, p: int | None) -> int:
    char = v.ring.characteristic
    if char == 0:
        raise RingMismatch("p-th powers need a field of positive characteristic, got %s" % v.ring)
    if p is not None and p != char:
        raise RingMismatch("p = %d but the field has characteristic %d" % (p, char))
    return char


def p_power(v: PlaneVectorField, p: int | None = None) -> tuple[Poly, Poly]:
    """Components ``(v^p(x), v^p(y))`` of the p-th power of ``v``.

    ``AA_1 = A``, ``AA_{i+1} = v(AA_i)`` and likewise for ``B``; the result is
    ``(AA_p, BB_p)``.  It may be the zero pair, so a tuple is returned rather
    than a :class:`PlaneVectorField`.
    """
    p = _check_char(v, p)
    aa, bb = v.A, v.B
    for _ in range(p - 1):
        aa = derive(v, aa)
        bb = derive(v, bb)
    return aa, bb


def wedge(v, w) -> Poly:
    """Coefficient of ``d/dx ^ d/dy`` in ``v ^ w``; accepts fields or pairs."""
    a1, b1 = (v.A, v.B) if isinstance(v, PlaneVectorField) else v
    a2, b2 = (w.A, w.B) if isinstance(w, PlaneVectorField) else w
    return a1 * b2 - b1 * a2


# -- degree and the line at infinity ------------------------------------------


@dataclass(frozen=True)
class DegreeReport:
    top_degree: int
    degree: int
    linf_invariant: bool
    witness: Poly

    def to_dict(self):
        return {
            "top_degree": self.top_degree,
            "degree": self.degree,
            "linf_invariant": self.linf_invariant,
            "witness": str(self.witness),
        }


def degree_and_linf(v: PlaneVectorField) -> DegreeReport:
    """Foliation degree on P^2 and invariance of ``{z = 0}``.

    With ``e`` the top degree of ``(A, B)``, the extension has degree ``e`` and
    leaves the line at infinity invariant iff ``x B_e - y A_e != 0``;
    otherwise it has degree ``e - 1`` and the line is not invariant.
    """
    e = int(max(v.A.total_degree(), v.B.total_degree()))
    x, y = Poly.gens(v.ring)
    witness = x * v.B.graded_part(e) - y * v.A.graded_part(e)
    invariant = not witness.is_zero()
    return DegreeReport(e, e if invariant else e - 1, invariant, witness)


# -- the p-divisor ------------------------------------------------------------


@dataclass
class PDivisorResult:
    f: Poly
    p: int
    degree: int
    p_power: tuple[Poly, Poly]
    degree_report: DegreeReport
    components: list[tuple[Poly, int]] = field(default_factory=list)

    @property
    def p_closed(self) -> bool:
        return self.f.is_zero()

    @property
    def affine_degree(self):
        return self.f.total_degree()

    @property
    def expected_degree(self) -> int:
        """``p(d - 1) + d + 2``, the degree of the p-divisor on P^2."""
        return self.p * (self.degree - 1) + self.degree + 2

    @property
    def z_multiplicity(self):
        """Expected degree minus affine degree; negative means the data disagree."""
        if self.p_closed:
            return None
        return self.expected_degree - self.affine_degree

    @property
    def degree_consistent(self) -> bool:
        return self.p_closed or self.z_multiplicity >= 0

    def cofactor(self) -> Poly:
        rest = self.f
        for comp, mult in self.components:
            rest = exact_div(rest, comp**mult)
        return rest

    def to_dict(self) -> dict:
        return {
            "divisor": str(self.f),
            "p": self.p,
            "p_closed": self.p_closed,
            "affine_degree": None if self.p_closed else self.affine_degree,
            "foliation_degree": self.degree,
            "expected_degree": self.expected_degree,
            "z_multiplicity": self.z_multiplicity,
            "linf_invariant": self.degree_report.linf_invariant,
            "components": [[str(c), m] for c, m in self.components],
            "p_power": [str(self.p_power[0]), str(self.p_power[1])],
        }


def p_divisor(v: PlaneVectorField) -> PDivisorResult:
    p = _check_char(v, None)
    vp = p_power(v, p)
    f = wedge(v, vp)
    report = degree_and_linf(v)
    return PDivisorResult(f, p, report.degree, vp, report)


def is_p_closed(v: PlaneVectorField) -> bool:
    return p_divisor(v).p_closed


def is_invariant_curve(v: PlaneVectorField, F: Poly) -> bool:
    """``{F = 0}`` is invariant iff ``F`` divides ``v(F)``."""
    if F.is_constant():
        raise ValueError("invariance needs a nonconstant polynomial")
    try:
        exact_div(derive(v, F), F)
    except NotDivisible:
        return False
    return True


# -- singular points and first jets -------------------------------------------


def singular_points_over(v: PlaneVectorField, k: int = 1) -> list[tuple]:
    """All common zeros of ``A`` and ``B`` in ``GF(p^k)^2``, in enumeration order."""
    ring = v.ring
    if not isinstance(ring, PrimeField):
        raise RingMismatch("singular point search needs a prime field, got %s" % ring)
    target = GF(ring.p, k)
    w = v.change_ring(target)
    elements = list(target.elements())
    return [(a, b) for a, b in itertools.product(elements, repeat=2)
            if target.is_zero(w.A(a, b)) and target.is_zero(w.B(a, b))]


@dataclass(frozen=True)
class JetReport:
    point: tuple
    order: int
    dicritical: bool
    witness: Poly

    def point_str(self) -> str:
        ring = self.witness.ring
        return "(%s)" % ", ".join(ring.format(c) for c in self.point)

    def to_dict(self):
        return {
            "point": [self.witness.ring.format(c) for c in self.point],
            "order": self.order,
            "dicritical": self.dicritical,
            "witness": str(self.witness),
        }


def _point_ring(v: PlaneVectorField, point):
    ring = v.ring
    coords = list(point)
    if any(isinstance(c, tuple) for c in coords):
        k = len(next(c for c in coords if isinstance(c, tuple)))
        if not isinstance(ring, (PrimeField, ExtensionField)):
            raise RingMismatch("extension-field point for a field over %s" % ring)
        target = GF(ring.characteristic, k)
    elif isinstance(ring, IntegerRing):
        target = QQ
    else:
        target = ring
    return target, tuple(target(c) for c in coords)


def first_jet_dicritical_at(v: PlaneVectorField, point) -> JetReport:
    """First-jet dicriticality test at a singular point.

    After moving the point to the origin, the local 1-form is
    ``B dx - A dy``; with ``m`` its order, the point is dicritical when the
    order-``m`` part is a multiple of ``y dx - x dy``, i.e. when
    ``x B_m - y A_m = 0``.
    """
    ring, point = _point_ring(v, point)
    w = v.change_ring(ring)
    if not (ring.is_zero(w.A(*point)) and ring.is_zero(w.B(*point))):
        raise SingularityError("%r is not a singular point" % (point,))
    A, B = w.A.translate(point), w.B.translate(point)
    m = int(min(A.min_degree(), B.min_degree()))
    x, y = Poly.gens(ring)
    witness = x * B.graded_part(m) - y * A.graded_part(m)
    return JetReport(tuple(point), m, witness.is_zero(), witness)


# -- good reduction -----------------------------------------------------------


@dataclass(frozen=True)
class GoodReduction:
    good: bool
    reason: str

    def __bool__(self):
        return self.good


def good_reduction_at(v: PlaneVectorField, p: int) -> GoodReduction:
    """Operational good-reduction test at ``p`` for a field over Z.

    Good when ``gcd(A mod p, B mod p)`` is constant (no curve of
    singularities appears) and the degree / line-at-infinity data agree
    over Q and over F_p.
    """
    if not isinstance(v.ring, IntegerRing):
        raise RingMismatch("good reduction is defined for fields over Z")
    A, B = v.A.change_ring(GF(p)), v.B.change_ring(GF(p))
    if A.is_zero() and B.is_zero():
        raise ValueError("both components vanish modulo %d" % p)
    g = poly_gcd(A, B)
    if not g.is_constant():
        return GoodReduction(False, "common factor %s modulo %d" % (g, p))
    over_q = degree_and_linf(v.change_ring(QQ))
    over_p = degree_and_linf(PlaneVectorField(A, B))
    if over_q.degree != over_p.degree:
        return GoodReduction(False, "degree drops from %d to %d" % (over_q.degree, over_p.degree))
    if over_q.linf_invariant != over_p.linf_invariant:
        return GoodReduction(False, "invariance of the line at infinity changes")
    return GoodReduction(True, "gcd(A, B) = 1 and degree %d preserved modulo %d" % (over_q.degree, p))


__all__ = [
    "PlaneVectorField",
    "PDivisorResult",
    "DegreeReport",
    "JetReport",
    "GoodReduction",
    "SingularityError",
    "derive",
    "p_power",
    "wedge",
    "p_divisor",
    "is_p_closed",
    "is_invariant_curve",
    "degree_and_linf",
    "first_jet_dicritical_at",
    "singular_points_over",
    "good_reduction_at",
]
