import pytest
import sympy

from helpers import F2, SX, SY, sympy_poly

from pfoliation.families import (
    DEFAULT_GRID,
    FamilyConstraintError,
    FamilySpec,
    carnicer_bound,
    expected_cofactor_degree,
    expected_divisor,
    expected_vertices,
    f_exp,
    g_exp,
    h_exp,
    make_field,
    s_exp,
    verify_family_theorem,
)
from pfoliation.ffpoly import ZZ, parse_poly
from pfoliation.foliation import degree_and_linf, is_invariant_curve, p_divisor
from pfoliation.newton import certify_irreducible


def poly(text, ring=F2):
    return parse_poly(text, ring, 2)


def sympy_divisor(A, B):
    """Independent 2-divisor: A*v(B) - B*v(A) expanded by sympy, mod 2."""
    A, B = sympy.sympify(A), sympy.sympify(B)

    def D(h):
        return sympy.expand(A * sympy.diff(h, SX) + B * sympy.diff(h, SY))

    return sympy.Poly(A * D(B) - B * D(A), SX, SY, modulus=2)


# -- specs -----------------------------------------------------------------


def test_exponents():
    assert (f_exp(3), g_exp(3), h_exp(3), s_exp(3)) == (13, 2, 7, 12)
    for d in range(3, 40, 2):
        assert 2 * g_exp(d) == d + 1
        assert 2 * h_exp(d) == d * d + d + 2
        assert 2 * (s_exp(d) - d * d) == d + 3


@pytest.mark.parametrize("text", ["claudia:4,1,1,1", "claudia:1,1,1,1", "claudia:3,2,1,1",
                                  "family_f:5,1,1,1", "family_f:6,1,2,1", "family_g:6,1,1,1,1",
                                  "family_g:3,1,1,1,1", "family_g:5,2,1,1,1", "jouanolou:0",
                                  "claudia:3,1", "mystery:3", "claudia:x"])
def test_constraints(text):
    with pytest.raises(FamilyConstraintError):
        FamilySpec.parse(text)


def test_parse_spec():
    assert FamilySpec.parse("family-g:5,1,1,1,1") == FamilySpec.family_g(5)
    assert str(FamilySpec.claudia(3, 1, 3, 1)) == "claudia:3,1,3,1"


# -- fields ------------------------------------------------------------------


def test_make_field_examples():
    v = make_field(FamilySpec.jouanolou(3))
    assert v.A == poly("x*y^3 - 1", ZZ) and v.B == poly("-(x^3 - y^4)", ZZ)
    v = make_field(FamilySpec.claudia(3), F2)
    assert v.A == poly("y^13") and v.B == poly("x + y^2 + y^7 + y^12")
    v = make_field(FamilySpec.family_g(5))
    assert v.A == poly("1 + x*y^5", ZZ) and v.B == poly("1 + x + x^4 + y^6", ZZ)
    v = make_field(FamilySpec.family_f(6, 3, 1, 1))
    assert v.A == poly("3*x^6*y - y^2", ZZ) and v.B == poly("3*x^2*y^5 + x", ZZ)


# -- closed forms ---------------------------------------------------------------


def test_expected_divisor_transcriptions():
    B = poly("x + y^2 + y^7 + y^12")
    y = poly("y")
    assert expected_divisor(FamilySpec.claudia(3)) == y**12 * (y**14 + B * y**7 + B * B)
    assert expected_divisor(FamilySpec.family_g(5)) == poly(
        "x^9*y^4 + x^5*y^10 + x^4*y^5 + x^3*y^4 + x*y^9 + x*y^5 + x*y^4 + y^11 + y^5 + 1")
    assert expected_divisor(FamilySpec.family_f(6)) == poly("x^12*y^2 + x^9*y^5 + x^8 + x^4*y^11 + x^3*y^6 + y^4")
    assert expected_divisor(FamilySpec.family_f(7)) == poly("x^15*y^8 + x^11*y^12 + x^9 + x^8*y^9 + x^7*y^3 + y^4")
    with pytest.raises(FamilyConstraintError):
        expected_divisor(FamilySpec.jouanolou(3))


@pytest.mark.parametrize("spec", DEFAULT_GRID, ids=str)
def test_divisor_matches_sympy(spec):
    v = make_field(spec, ZZ)
    want = sympy_divisor(str(v.A).replace("^", "**"), str(v.B).replace("^", "**"))
    assert sympy_poly(p_divisor(v.reduce(2)).f) == want


@pytest.mark.parametrize("spec", [s for s in DEFAULT_GRID if s.family in ("claudia", "family_f")], ids=str)
def test_closed_forms_hold(spec):
    assert verify_family_theorem(spec).matches_closed_form


@pytest.mark.parametrize("d", [5, 7, 9])
def test_family_g_erratum(d):
    # the computed divisor carries x*y^(2d) where the closed form has x*y^(2d-1)
    spec = FamilySpec.family_g(d)
    got = p_divisor(make_field(spec, F2)).f
    x, y = poly("x"), poly("y")
    assert got - expected_divisor(spec) == x * y ** (2 * d) + x * y ** (2 * d - 1)
    res = verify_family_theorem(spec)
    assert not res.matches_closed_form
    assert res.hull_matches and res.verdict.status == "IrreducibleByPolytope"


@pytest.mark.parametrize("spec", [s for s in DEFAULT_GRID if s.family != "claudia"], ids=str)
def test_hulls_and_polytope_certificates(spec):
    res = verify_family_theorem(spec)
    assert res.hull_matches
    assert res.verdict.status == "IrreducibleByPolytope"
    assert set(expected_vertices(spec)) == set(res.hull)


# -- Claudia family --------------------------------------------------------------


@pytest.mark.parametrize("spec", [s for s in DEFAULT_GRID if s.family == "claudia"], ids=str)
def test_claudia_structure(spec):
    d = spec.d
    v = make_field(spec, F2)
    res = verify_family_theorem(spec)
    assert res.stripped_monomial == (0, f_exp(d) - 1)
    assert not is_invariant_curve(v, poly("y"))
    rep = degree_and_linf(make_field(spec))
    assert (rep.degree, rep.linf_invariant) == (f_exp(d), True)


def test_claudia_d3_cofactor_degree_and_polygon():
    res = verify_family_theorem(FamilySpec.claudia(3))
    assert res.cofactor.total_degree() == expected_cofactor_degree(FamilySpec.claudia(3)) == 24
    assert res.verdict.status == "Inconclusive"
    assert certify_irreducible(res.cofactor, "auto").status == "IrreducibleBySummandSearch"


def test_claudia_d5_cofactor_reducible():
    res = verify_family_theorem(FamilySpec.claudia(5))
    assert res.cofactor.total_degree() == 45 != expected_cofactor_degree(FamilySpec.claudia(5))
    h1, h2 = poly("x + y^3 + y^16"), poly("x + y^16 + y^29")
    assert h1 * h2 == res.cofactor
    assert certify_irreducible(res.cofactor, "auto").status == "Reducible"


# -- degree bookkeeping -----------------------------------------------------------


@pytest.mark.parametrize("d", [5, 7])
def test_family_g_degrees(d):
    res = p_divisor(make_field(FamilySpec.family_g(d), F2))
    assert (res.degree, res.degree_report.linf_invariant) == (d, False)
    assert res.affine_degree == 3 * d


@pytest.mark.parametrize("e", [6, 7, 8, 9])
def test_family_f_degrees(e):
    res = p_divisor(make_field(FamilySpec.family_f(e), F2))
    assert (res.degree, res.degree_report.linf_invariant) == (e + 1, True)
    assert res.affine_degree + res.z_multiplicity == 3 * (e + 1)
    assert res.z_multiplicity > 0


def test_carnicer_bound():
    assert carnicer_bound(3) == 5
    assert carnicer_bound(1) == 3
    assert carnicer_bound(f_exp(3)) == 15
    with pytest.raises(ValueError):
        carnicer_bound(-1)


def test_verification_serializes():
    data = verify_family_theorem(FamilySpec.family_f(6)).to_dict()
    assert data["ok"] and data["irreducibility"]["status"] == "IrreducibleByPolytope"
    assert data["expected"] == data["divisor"]
