"""Division, gcd, p-th roots and reduction modulo p."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly
from .rings import GF, IntegerRing, PrimeField, RingMismatch


class NotDivisible(ArithmeticError):
    pass


def poly_arith(op: str, f: Poly, g) -> Poly:
    """Dispatch ``add``/``sub``/``mul``/``pow`` (``g`` is an int for pow)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "pow":
        return f**g
    raise ValueError("unknown operation %r" % op)


def partial_derivative(f: Poly, var: int) -> Poly:
    return f.diff(var)


def exact_div(f: Poly, g: Poly) -> Poly:
    """Return ``q`` with ``f == q * g`` or raise :class:`NotDivisible`.

    Leading terms are cancelled in lex order, i.e. ``f`` and ``g`` are read as
    polynomials in ``x`` over the fraction field of the remaining variables;
    a step whose leading monomial (or, over Z, coefficient) does not divide
    means no polynomial quotient exists.
    """
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ring = f.ring
    if f.is_zero():
        return f
    g_items = list(g.items())
    lead_exp = max(g._terms)
    lead_c = g._terms[lead_exp]
    inv = ring.inv(lead_c) if ring.is_field else None
    # every quotient exponent is bounded by deg_v f - deg_v g in each variable
    bounds = [max(e[v] for e in f._terms) - max(e[v] for e in g._terms) for v in range(f.nvars)]
    total_bound = f.total_degree() - g.total_degree()
    rem = dict(f._terms)
    quot = {}
    add, mul, sub, is_zero = ring.add, ring.mul, ring.sub, ring.is_zero
    while rem:
        exp = max(rem)
        shift = tuple(a - b for a, b in zip(exp, lead_exp))
        if any(s < 0 or s > b for s, b in zip(shift, bounds)) or sum(shift) > total_bound:
            raise NotDivisible("leading monomial not divisible")
        c = rem[exp]
        if inv is not None:
            q = mul(c, inv)
        else:
            q = ring.exact_quotient(c, lead_c)
            if q is None:
                raise NotDivisible("leading coefficient not divisible")
        quot[shift] = q
        for e, gc in g_items:
            key = tuple(a + b for a, b in zip(e, shift))
            v = sub(rem.get(key, ring.zero), mul(q, gc))
            if is_zero(v):
                rem.pop(key, None)
            else:
                rem[key] = v
    return Poly(quot, ring, f.nvars, _clean=True)


def divides(g: Poly, f: Poly) -> bool:
    try:
        exact_div(f, g)
    except NotDivisible:
        return False
    return True


# -- gcd ------------------------------------------------------------------


def _coeffs_in(f: Poly, var: int) -> dict[int, Poly]:
    """Coefficients of ``f`` viewed as a polynomial in ``var``."""
    out: dict[int, dict] = {}
    for e, c in f.items():
        rest = e[:var] + (0,) + e[var + 1:]
        out.setdefault(e[var], {})[rest] = c
    return {k: Poly(t, f.ring, f.nvars, _clean=True) for k, t in out.items()}


def _deg(f: Poly, var: int) -> int:
    return max(e[var] for e in f._terms)


def _prem(a: Poly, b: Poly, var: int) -> Poly:
    """Pseudo-remainder of ``a`` by ``b`` in ``var`` (denominators cleared)."""
    db = _deg(b, var)
    lc_b = _coeffs_in(b, var)[db]
    r = a
    while not r.is_zero() and _deg(r, var) >= db:
        dr = _deg(r, var)
        lc_r = _coeffs_in(r, var)[dr]
        shift = [0] * r.nvars
        shift[var] = dr - db
        r = lc_b * r - (lc_r * b).mul_monomial(tuple(shift))
    return r


def _content(f: Poly, var: int, others: tuple[int, ...]) -> Poly:
    g = Poly.zero(f.ring, f.nvars)
    for c in _coeffs_in(f, var).values():
        g = _gcd(g, c, others)
        if g.is_constant():
            break
    return g


def _gcd(f: Poly, g: Poly, variables: tuple[int, ...]) -> Poly:
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    used = [v for v in variables if any(e[v] for e in f._terms) or any(e[v] for e in g._terms)]
    if not used:
        return Poly.constant(1, f.ring, f.nvars)
    var = used[0]
    others = tuple(v for v in variables if v != var)
    if not any(e[var] for e in f._terms):
        return _gcd(f, _content(g, var, others), others)
    if not any(e[var] for e in g._terms):
        return _gcd(_content(f, var, others), g, others)
    cf, cg = _content(f, var, others), _content(g, var, others)
    a, b = exact_div(f, cf), exact_div(g, cg)
    if _deg(a, var) < _deg(b, var):
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b, var)
        if r.is_zero():
            a = b
            break
        if not any(e[var] for e in r._terms):
            a = Poly.constant(1, f.ring, f.nvars)
            break
        a, b = b, exact_div(r, _content(r, var, others))
    h = exact_div(a, _content(a, var, others))
    return (_gcd(cf, cg, others) * h).monic()


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over a field, via primitive pseudo-remainder sequences."""
    f._check(g)
    if not f.ring.is_field:
        raise RingMismatch("gcd needs field coefficients, got %s" % f.ring)
    return _gcd(f, g, tuple(range(f.nvars)))


# -- reduction and p-th powers ---------------------------------------------


def reduce_mod_p(f: Poly, p: int) -> Poly:
    if not isinstance(f.ring, IntegerRing):
        raise RingMismatch("reduce_mod_p expects integer coefficients")
    return f.change_ring(GF(p))


def is_pth_power(f: Poly) -> Poly | None:
    """The ``g`` with ``f == g**p`` over a prime field, or ``None``.

    Over F_p every coefficient is its own p-th root, so ``f`` is a p-th
    power exactly when all exponents are divisible by p.
    """
    if not isinstance(f.ring, PrimeField):
        raise RingMismatch("is_pth_power expects prime-field coefficients")
    p = f.ring.p
    root = {}
    for e, c in f.items():
        if any(k % p for k in e):
            return None
        root[tuple(k // p for k in e)] = c
    return Poly(root, f.ring, f.nvars, _clean=True)


@dataclass(frozen=True)
class PFactorResult:
    is_p_factor: bool
    reason: str
    root: Poly | None = None

    def __bool__(self):
        return self.is_p_factor


def p_factor_test(F: Poly, p: int) -> PFactorResult:
    """Is the projective curve of ``F`` (over Z) ``p`` times a divisor mod p?

    The curve is the closure of ``{F = 0}``, of degree ``deg F``; its
    reduction is cut out by the degree-``deg F`` homogenization of
    ``F mod p``, which is a p-th power times a unit exactly when ``p``
    divides that degree and every affine exponent.
    """
    if F.is_zero():
        raise ValueError("zero polynomial")
    deg = F.total_degree()
    if deg % p:
        return PFactorResult(False, "degree %d not divisible by %d" % (deg, p))
    f = reduce_mod_p(F, p)
    if f.is_zero():
        raise ValueError("polynomial vanishes modulo %d (degenerate input)" % p)
    f = f.monic()
    root = is_pth_power(f)
    if root is not None:
        return PFactorResult(True, "reduction is a %d-th power" % p, root)
    if f.nvars >= 2 and poly_gcd(poly_gcd(f, f.diff(0)), f.diff(1)).is_constant():
        return PFactorResult(False, "reduction is squarefree")
    return PFactorResult(False, "reduction is not a %d-th power" % p)


# -- homogenization -----------------------------------------------------------


@dataclass(frozen=True)
class HomogenizationResult:
    poly: Poly
    z_shift: int


def homogenize(f: Poly, degree: int | None = None) -> HomogenizationResult:
    """Homogenize a polynomial in ``(x, y)`` with the new variable ``z``."""
    if f.nvars != 2:
        raise ValueError("homogenize expects a polynomial in x, y")
    d = 0 if f.is_zero() else f.total_degree()
    if degree is None:
        degree = d
    if degree < d:
        raise ValueError("target degree %d below total degree %d" % (degree, d))
    terms = {(a, b, degree - a - b): c for (a, b), c in f.items()}
    return HomogenizationResult(Poly(terms, f.ring, 3, _clean=True), degree - d)


def dehomogenize(F: Poly) -> Poly:
    """Set ``z = 1``."""
    if F.nvars != 3:
        raise ValueError("dehomogenize expects a polynomial in x, y, z")
    out: dict = {}
    ring = F.ring
    for (a, b, _), c in F.items():
        key = (a, b)
        out[key] = ring.add(out[key], c) if key in out else c
    return Poly({e: c for e, c in out.items() if not ring.is_zero(c)}, ring, 2, _clean=True)


__all__ = [
    "NotDivisible",
    "PFactorResult",
    "HomogenizationResult",
    "poly_arith",
    "partial_derivative",
    "exact_div",
    "divides",
    "poly_gcd",
    "reduce_mod_p",
    "is_pth_power",
    "p_factor_test",
    "homogenize",
    "dehomogenize",
]
