import itertools
import random
from fractions import Fraction

import pytest
import sympy

from helpers import F2, F3, F5, from_sympy, random_poly, sympy_poly, to_sympy

from pfoliation.ffpoly import (
    GF,
    MINUS_INFINITY,
    QQ,
    ZZ,
    NotDivisible,
    ParseError,
    Poly,
    RingError,
    RingMismatch,
    dehomogenize,
    divides,
    exact_div,
    homogenize,
    is_pth_power,
    p_factor_test,
    parse_poly,
    poly_arith,
    poly_gcd,
    print_poly,
    reduce_mod_p,
    ring_from_tag,
    strip_monomial,
)
from pfoliation.ffpoly.rings import MODULUS_TABLE, ExtensionField, is_irreducible_modulus


# -- rings -------------------------------------------------------------------


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_field_axioms_exhaustive(p, k):
    R = GF(p, k)
    elems = list(R.elements())
    assert len(elems) == p**k
    for a in elems:
        assert R.add(a, R.neg(a)) == R.zero
        if not R.is_zero(a):
            assert R.mul(a, R.inv(a)) == R.one
            # Fermat: a^(q-1) = 1
            assert R.pow(a, p**k - 1) == R.one
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
        assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))


def test_modulus_table_irreducible():
    for (p, k), m in MODULUS_TABLE.items():
        assert is_irreducible_modulus(m, p)


def test_reducible_modulus_rejected():
    # t^2 + 1 = (t + 1)^2 over F_2
    with pytest.raises(RingError):
        ExtensionField(2, 2, (1, 0, 1))


def test_gf4_multiplicative_group_cyclic():
    R = GF(2, 2)
    t = R.generator
    assert {R.format(R.pow(t, i)) for i in range(3)} == {"1", "t", "t + 1"}


def test_ring_tags():
    assert ring_from_tag("Z") is ZZ
    assert ring_from_tag("Q") is QQ
    assert ring_from_tag("F5") == GF(5)
    assert ring_from_tag("F2^3") == GF(2, 3)
    with pytest.raises(RingError):
        ring_from_tag("F4")


def test_nonprime_characteristic_rejected():
    with pytest.raises(RingError):
        GF(6)


# -- parsing and printing --------------------------------------------------


def test_parse_examples():
    x, y = Poly.gens(ZZ)
    assert parse_poly("x*y^3 - 1") == x * y**3 - 1
    assert parse_poly("-(x^3 - y^4)") == -(x**3 - y**4)
    assert parse_poly("2*x*(y+1)^2") == 2 * x * (y + 1) ** 2
    assert parse_poly("x + z").nvars == 3


def test_parse_reduces_over_field():
    assert parse_poly("3*x + 2", F2) == parse_poly("x", F2)


def test_parse_generator_over_extension():
    R = GF(2, 2)
    f = parse_poly("(t+1)*x + t", R)
    assert f.coeff((1, 0)) == R.add(R.generator, R.one)


@pytest.mark.parametrize("text", ["x+", "x^", "2**x", "(x", "x y", "w", "x^-1", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text)


def test_print_canonical_order():
    f = parse_poly("x^2 + y^7 + x^3*y^3 + x^7*y^2", F2)
    assert print_poly(f) == "x^7*y^2 + y^7 + x^3*y^3 + x^2"
    assert print_poly(parse_poly("1 - 3*x")) == "-3*x + 1"
    assert print_poly(Poly.zero(ZZ)) == "0"


@pytest.mark.parametrize("ring", [ZZ, QQ, F2, F3, GF(2, 3)])
def test_print_parse_roundtrip(ring):
    rng = random.Random(11)
    for _ in range(100):
        f = random_poly(rng, ring, degree=6, nterms=rng.randint(0, 6), nvars=rng.choice([2, 3]))
        assert parse_poly(print_poly(f), ring, f.nvars) == f


# -- arithmetic against sympy ------------------------------------------------


@pytest.mark.parametrize("ring", [ZZ, F2, F3, F5])
def test_arithmetic_matches_sympy(ring):
    rng = random.Random(23)
    for _ in range(100):
        f = random_poly(rng, ring, degree=5, nterms=5)
        g = random_poly(rng, ring, degree=5, nterms=5)
        for op, sop in (("add", lambda a, b: a + b), ("sub", lambda a, b: a - b), ("mul", lambda a, b: a * b)):
            got = poly_arith(op, f, g)
            want = sop(sympy_poly(f), sympy_poly(g))
            assert sympy_poly(got) == want
        assert sympy_poly(f ** 3) == sympy_poly(f) ** 3


def test_derivative_matches_sympy():
    rng = random.Random(5)
    for _ in range(100):
        f = random_poly(rng, ZZ, degree=6, nterms=6)
        assert to_sympy(f.diff(0)) == sympy.diff(to_sympy(f), "x")
        assert to_sympy(f.diff(1)) == sympy.diff(to_sympy(f), "y")


def test_frobenius_char_p():
    rng = random.Random(3)
    for p in (2, 3):
        R = GF(p)
        for _ in range(100):
            f, g = random_poly(rng, R), random_poly(rng, R)
            assert (f + g) ** p == f**p + g**p


def test_degrees():
    assert Poly.zero(ZZ).total_degree() == MINUS_INFINITY
    f = parse_poly("x^3*y + y^2 + 1")
    assert f.total_degree() == 4
    assert f.degree_in(1) == 2
    assert f.leading_term() == ((3, 1), 1)


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        parse_poly("x") ** -1


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        parse_poly("x", F2) + parse_poly("x", F3)


def test_rational_coefficients():
    f = parse_poly("x", QQ).scale(Fraction(1, 3))
    assert f.coeff((1, 0)) == Fraction(1, 3)


# -- division and gcd ----------------------------------------------------------


@pytest.mark.parametrize("ring", [ZZ, F2, F3])
def test_exact_div_roundtrip(ring):
    rng = random.Random(31)
    for _ in range(100):
        f = random_poly(rng, ring, degree=4, nterms=4)
        g = random_poly(rng, ring, degree=4, nterms=4)
        if g.is_zero():
            continue
        assert exact_div(f * g, g) == f


def test_exact_div_rejects_matches_sympy():
    rng = random.Random(37)
    for _ in range(100):
        f = random_poly(rng, F2, degree=5, nterms=5)
        g = random_poly(rng, F2, degree=3, nterms=3)
        if g.is_zero() or f.is_zero():
            continue
        _, r = sympy.div(sympy_poly(f), sympy_poly(g))
        # divisibility in F_2[x, y] is independent of the monomial order
        assert divides(g, f) == r.is_zero


def test_exact_div_over_z_needs_coefficient_divisibility():
    with pytest.raises(NotDivisible):
        exact_div(parse_poly("x + 1"), parse_poly("2*x + 2"))
    assert exact_div(parse_poly("2*x + 2"), parse_poly("x + 1")) == parse_poly("2")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(parse_poly("x"), Poly.zero(ZZ))


@pytest.mark.parametrize("ring", [F2, F3, F5])
def test_gcd_matches_sympy(ring):
    rng = random.Random(41)
    for _ in range(100):
        h = random_poly(rng, ring, degree=2, nterms=3)
        f = random_poly(rng, ring, degree=3, nterms=3) * h
        g = random_poly(rng, ring, degree=3, nterms=3) * h
        if f.is_zero() and g.is_zero():
            continue
        got = poly_gcd(f, g)
        want = sympy.gcd(sympy_poly(f), sympy_poly(g))
        assert sympy_poly(got).monic() == want.monic() if not want.is_zero else got.is_zero()


def test_gcd_rejects_integers():
    with pytest.raises(RingMismatch):
        poly_gcd(parse_poly("x"), parse_poly("y"))


# -- p-th powers and p-factors --------------------------------------------------


def test_is_pth_power():
    f = parse_poly("x^2*y^4 + y^2 + 1", F2)
    assert is_pth_power(f) == parse_poly("x*y^2 + y + 1", F2)
    assert is_pth_power(parse_poly("x*y + 1", F2)) is None


def test_p_factor_squares_and_odd_degree():
    rng = random.Random(43)
    checked = 0
    while checked < 100:
        g = random_poly(rng, ZZ, degree=3, nterms=4)
        if g.is_constant() or reduce_mod_p(g, 2).is_zero():
            continue
        assert p_factor_test(g * g, 2).is_p_factor
        odd = random_poly(rng, ZZ, degree=5, nterms=4)
        if odd.total_degree() in (1, 3, 5):
            assert not p_factor_test(odd, 2).is_p_factor
        checked += 1


def test_p_factor_examples():
    assert p_factor_test(parse_poly("x^2 + 2*x*y + 3*y^2"), 2).is_p_factor
    res = p_factor_test(parse_poly("x^2 + x*y + y^2"), 2)
    assert not res and res.reason == "reduction is squarefree"
    with pytest.raises(ValueError):
        p_factor_test(parse_poly("2*x^2 + 4*y^2"), 2)


def test_homogenize_roundtrip():
    rng = random.Random(47)
    for _ in range(100):
        f = random_poly(rng, F3, degree=5, nterms=5)
        if f.is_zero():
            continue
        h = homogenize(f, int(f.total_degree()) + 2)
        assert h.poly.is_homogeneous()
        assert h.z_shift == 2
        assert dehomogenize(h.poly) == f


def test_strip_monomial():
    exp, g = strip_monomial(parse_poly("x^2*y^3 + x^3*y^5"))
    assert exp == (2, 3)
    assert g == parse_poly("1 + x*y^2")


def test_evaluation_matches_sympy():
    rng = random.Random(53)
    for _ in range(100):
        f = random_poly(rng, ZZ, degree=4, nterms=4)
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        assert f(a, b) == to_sympy(f).subs({"x": a, "y": b})


def test_translate_matches_compose():
    rng = random.Random(59)
    x, y = Poly.gens(F5)
    for _ in range(100):
        f = random_poly(rng, F5)
        a, b = rng.randrange(5), rng.randrange(5)
        assert f.translate((a, b)) == f.compose([x + a, y + b])


def test_sympy_roundtrip_helper():
    f = parse_poly("x^3 - 2*y + 7")
    assert from_sympy(to_sympy(f)) == f


def test_gf_elements_enumeration_order():
    R = GF(2, 2)
    assert [R.index(a) for a in R.elements()] == list(range(4))
    assert all(R.add(a, b) == next(itertools.islice(R.elements(), R.index(a) ^ R.index(b), None))
               for a in R.elements() for b in R.elements())
