"""Families of plane foliations with closed-form 2-divisors.

* ``Jouanolou(d)``:         (x y^d - 1) d/dx - (x^d - y^(d+1)) d/dy
* ``Claudia(d, a, b, c)``:  y^f(d) d/dx + (x + a y^g(d) + b y^h(d) + c y^s(d)) d/dy
* ``FamilyF(e, a, b, c)``:  (a x^e y - c y^2) d/dx + (a x^2 y^(e-1) + b x) d/dy
* ``FamilyG(d, u, a, b, c)``: (u + x y^d) d/dx + (a + b x + c x^(d-1) + y^(d+1)) d/dy

with f(d) = d^2 + d + 1, g(d) = (d + 1)/2, h(d) = (d^2 + d + 2)/2 and
s(d) = d^2 + (d + 3)/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ffpoly import GF, ZZ, Poly, Ring, strip_monomial
from .foliation import PlaneVectorField, is_invariant_curve, p_divisor
from .newton import certify_irreducible, newton_polytope

F2 = GF(2)


class FamilyConstraintError(ValueError):
    pass


def f_exp(d: int) -> int:
    return d * d + d + 1


def g_exp(d: int) -> int:
    return (d + 1) // 2


def h_exp(d: int) -> int:
    return (d * d + d + 2) // 2


def s_exp(d: int) -> int:
    return d * d + (d + 3) // 2


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    KINDS = {"jouanolou": 1, "claudia": 4, "family_f": 4, "family_g": 5}

    def __post_init__(self):
        if self.family not in self.KINDS:
            raise FamilyConstraintError("unknown family %r" % self.family)
        if len(self.params) != self.KINDS[self.family]:
            raise FamilyConstraintError("%s takes %d parameters" % (self.family, self.KINDS[self.family]))
        d = self.params[0]
        if self.family == "jouanolou":
            if d < 1:
                raise FamilyConstraintError("Jouanolou degree must be >= 1")
        elif self.family == "claudia":
            _, a, b, c = self.params
            if d <= 1 or d % 2 == 0:
                raise FamilyConstraintError("Claudia family needs odd d > 1")
            if (a * b * c) % 2 == 0:
                raise FamilyConstraintError("Claudia family needs abc odd")
        elif self.family == "family_f":
            _, a, b, c = self.params
            if d < 6:
                raise FamilyConstraintError("FamilyF needs e >= 6")
            if (a * b * c) % 2 == 0:
                raise FamilyConstraintError("FamilyF needs abc odd")
        else:
            _, u, a, b, c = self.params
            if d < 5 or d % 2 == 0:
                raise FamilyConstraintError("FamilyG needs odd d >= 5")
            if (u * a * b * c) % 2 == 0:
                raise FamilyConstraintError("FamilyG needs abcu odd")

    @classmethod
    def jouanolou(cls, d):
        return cls("jouanolou", (d,))

    @classmethod
    def claudia(cls, d, a=1, b=1, c=1):
        return cls("claudia", (d, a, b, c))

    @classmethod
    def family_f(cls, e, a=1, b=1, c=1):
        return cls("family_f", (e, a, b, c))

    @classmethod
    def family_g(cls, d, u=1, a=1, b=1, c=1):
        return cls("family_g", (d, u, a, b, c))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """``"jouanolou:3"``, ``"claudia:3,1,1,1"``, ``"family_g:5,1,1,1,1"``, ..."""
        name, _, args = text.partition(":")
        name = name.strip().lower().replace("-", "_")
        try:
            params = tuple(int(a) for a in args.split(",") if a.strip())
        except ValueError:
            raise FamilyConstraintError("bad parameters in %r" % text) from None
        return cls(name, params)

    @property
    def d(self) -> int:
        return self.params[0]

    def __str__(self):
        return "%s:%s" % (self.family, ",".join(map(str, self.params)))


def _xy(ring: Ring):
    return Poly.gens(ring)


def make_field(spec: FamilySpec, ring: Ring = ZZ) -> PlaneVectorField:
    x, y = _xy(ring)
    one = Poly.constant(1, ring)
    d = spec.d
    if spec.family == "jouanolou":
        return PlaneVectorField(x * y**d - one, -(x**d - y ** (d + 1)))
    if spec.family == "claudia":
        _, a, b, c = spec.params
        B = x + a * y ** g_exp(d) + b * y ** h_exp(d) + c * y ** s_exp(d)
        return PlaneVectorField(y ** f_exp(d), B)
    if spec.family == "family_f":
        _, a, b, c = spec.params
        return PlaneVectorField(a * x**d * y - c * y**2, a * x**2 * y ** (d - 1) + b * x)
    _, u, a, b, c = spec.params
    return PlaneVectorField(u * one + x * y**d, a * one + b * x + c * x ** (d - 1) + y ** (d + 1))


def expected_divisor(spec: FamilySpec) -> Poly:
    """Closed-form affine 2-divisor over F_2 (integer coefficients reduced)."""
    x, y = _xy(F2)
    d = spec.d
    if spec.family == "claudia":
        _, a, b, c = spec.params
        g, h, s, f = g_exp(d), h_exp(d), s_exp(d), f_exp(d)
        B = x + a * y**g + b * y**h + c * y**s
        cof = y ** (f + 1) + B * (a * g * y**g + b * h * y**h + c * s * y**s) + B**2
        return y ** (f - 1) * cof
    if spec.family == "family_g":
        _, u, a, b, c = spec.params
        f1 = (c**2 * x ** (2 * d - 1) * y ** (d - 1) + c * x**d * y ** (2 * d) + u * c * x ** (d - 1) * y**d
              + b**2 * x**3 * y ** (d - 1) + a * x * y ** (2 * d - 1))
        f2 = u * b * x * y**d + a**2 * x * y ** (d - 1) + u * y ** (2 * d + 1) + u * a * y**d + u**2 * b * Poly.constant(1, F2)
        return f1 + f2
    if spec.family == "family_f":
        _, a, b, c = spec.params
        if d % 2 == 0:
            return (a**2 * b * x ** (2 * d) * y**2 + a**2 * b * x ** (d + 3) * y ** (d - 1) + a * b**2 * x ** (d + 2)
                    + a**2 * c * x**4 * y ** (2 * d - 1) + a * b * c * x**3 * y**d + b * c**2 * y**4)
        return (a**3 * x ** (2 * d + 1) * y ** (d + 1) + a**3 * x ** (d + 4) * y ** (2 * d - 2) + a * b**2 * x ** (d + 2)
                + a**2 * c * x ** (d + 1) * y ** (d + 2) + a * b * c * x**d * y**3 + b * c**2 * y**4)
    raise FamilyConstraintError("no closed-form 2-divisor for %s" % spec.family)


def expected_vertices(spec: FamilySpec) -> list[tuple[int, int]] | None:
    """Vertex labels of the Newton polygon figures, where drawn."""
    d = spec.d
    if spec.family == "family_g":
        return [(0, 0), (0, 2 * d + 1), (d, 2 * d), (2 * d - 1, d - 1)]
    if spec.family == "family_f":
        if d % 2 == 0:
            return [(0, 4), (4, 2 * d - 1), (2 * d, 2), (d + 2, 0)]
        return [(0, 4), (d + 4, 2 * d - 2), (2 * d + 1, d + 1), (d + 2, 0)]
    return None


def expected_cofactor_degree(spec: FamilySpec) -> int | None:
    """Degree claimed for the non-monomial part of the Claudia 2-divisor."""
    if spec.family == "claudia":
        return 2 * spec.d**2 + spec.d + 3
    return None


@dataclass
class FamilyVerification:
    spec: FamilySpec
    divisor: Poly
    expected: Poly | None
    matches_closed_form: bool | None
    not_p_closed: bool
    stripped_monomial: tuple[int, ...]
    cofactor: Poly
    verdict: object
    hull: list[tuple[int, int]]
    expected_hull: list[tuple[int, int]] | None
    hull_matches: bool | None
    z_multiplicity: int | None
    degree: int
    linf_invariant: bool
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        checks = [self.not_p_closed, self.verdict.irreducible]
        if self.matches_closed_form is not None:
            checks.append(self.matches_closed_form)
        if self.hull_matches is not None:
            checks.append(self.hull_matches)
        return all(checks)

    def to_dict(self) -> dict:
        return {
            "spec": str(self.spec),
            "divisor": str(self.divisor),
            "expected": None if self.expected is None else str(self.expected),
            "matches_closed_form": self.matches_closed_form,
            "not_2_closed": self.not_p_closed,
            "stripped_monomial": list(self.stripped_monomial),
            "cofactor": str(self.cofactor),
            "cofactor_degree": self.cofactor.total_degree(),
            "irreducibility": self.verdict.to_dict(),
            "hull": [list(v) for v in self.hull],
            "expected_hull": None if self.expected_hull is None else [list(v) for v in self.expected_hull],
            "hull_matches": self.hull_matches,
            "foliation_degree": self.degree,
            "linf_invariant": self.linf_invariant,
            "z_multiplicity": self.z_multiplicity,
            "notes": self.notes,
            "ok": self.ok,
        }


def _same_up_to_scalar(f: Poly, g: Poly) -> bool:
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return f.monic() == g.monic()


def verify_family_theorem(spec: FamilySpec, backend: str = "polytope") -> FamilyVerification:
    """Recompute the 2-divisor of ``spec`` and compare with the closed forms."""
    v = make_field(spec, F2)
    res = p_divisor(v)
    expected = None if spec.family == "jouanolou" else expected_divisor(spec)
    matches = None if expected is None else _same_up_to_scalar(res.f, expected)
    notes = []
    if res.p_closed:
        mono, cof = (0, 0), res.f
        verdict = None
    else:
        mono, cof = strip_monomial(res.f)
        verdict = certify_irreducible(cof, backend) if cof.total_degree() >= 1 else None
    hull = list(newton_polytope(cof).vertices) if not cof.is_zero() else []
    exp_hull = expected_vertices(spec)
    hull_ok = None if exp_hull is None else set(exp_hull) == set(hull)
    want = expected_cofactor_degree(spec)
    if want is not None and not res.p_closed and cof.total_degree() != want:
        notes.append("cofactor degree %d, closed form claims %d" % (cof.total_degree(), want))
    if spec.family == "claudia" and is_invariant_curve(v, Poly.gen(1, F2)):
        notes.append("y = 0 is invariant")
    return FamilyVerification(
        spec=spec,
        divisor=res.f,
        expected=expected,
        matches_closed_form=matches,
        not_p_closed=not res.p_closed,
        stripped_monomial=mono,
        cofactor=cof,
        verdict=verdict,
        hull=hull,
        expected_hull=exp_hull,
        hull_matches=hull_ok,
        z_multiplicity=res.z_multiplicity,
        degree=res.degree,
        linf_invariant=res.degree_report.linf_invariant,
        notes=notes,
    )


DEFAULT_GRID = [
    FamilySpec.claudia(3, 1, 1, 1),
    FamilySpec.claudia(3, 1, 3, 1),
    FamilySpec.claudia(5, 1, 1, 1),
    FamilySpec.claudia(5, 1, 3, 1),
    FamilySpec.family_g(5, 1, 1, 1, 1),
    FamilySpec.family_g(7, 1, 1, 1, 1),
    FamilySpec.family_g(5, 3, 1, 1, 1),
    FamilySpec.family_f(6, 1, 1, 1),
    FamilySpec.family_f(7, 1, 1, 1),
    FamilySpec.family_f(8, 1, 1, 1),
    FamilySpec.family_f(9, 1, 1, 1),
    FamilySpec.family_f(6, 3, 1, 1),
]


def carnicer_bound(d: int) -> int:
    """Largest possible degree of an invariant curve through no dicritical point."""
    if d < 0:
        raise ValueError("foliation degree must be >= 0")
    return d + 2
