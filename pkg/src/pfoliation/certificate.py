"""Non-algebraicity certificate via reduction modulo 2.

A foliation of degree ``d > 1`` over Z with no dicritical singularity, good
reduction at 2 and an irreducible 2-divisor has no invariant algebraic
curve: any invariant curve has degree at most ``d + 2`` (Carnicer) yet
would have to contain a component of the 2-divisor.  Components of the
divisor that are lines ``x = 0``, ``y = 0`` or the line at infinity are
split off first and checked for invariance individually.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .families import carnicer_bound
from .ffpoly import IntegerRing, Poly, strip_monomial
from .foliation import (
    PlaneVectorField,
    degree_and_linf,
    first_jet_dicritical_at,
    good_reduction_at,
    is_invariant_curve,
    p_divisor,
    singular_points_over,
)
from .newton import certify_irreducible, newton_polytope, primitive_edge_vectors

PROVED = "Proved"
ASSUMED = "Assumed"
EVIDENCE = "Evidence"
FAILED = "Failed"

NO_ALGEBRAIC_SOLUTIONS = "NoAlgebraicSolutions"
ONLY_LINE_AT_INFINITY = "UniqueInvariantCurveLineAtInfinity"
CONDITIONAL = "ConditionalOnDicriticality"
NOT_ESTABLISHED = "NotEstablished"

# strongest first
CONCLUSION_ORDER = [NO_ALGEBRAIC_SOLUTIONS, ONLY_LINE_AT_INFINITY, CONDITIONAL, NOT_ESTABLISHED]
STATUS_ORDER = [PROVED, ASSUMED, EVIDENCE, FAILED]

HYPOTHESES = ("integer_coefficients", "nondicritical", "good_reduction_at_2", "irreducible_2_divisor")


@dataclass
class Hypothesis:
    name: str
    status: str
    evidence: str

    def to_dict(self):
        return {"name": self.name, "status": self.status, "evidence": self.evidence}


@dataclass
class CertificateReport:
    hypotheses: list[Hypothesis]
    degrees: dict
    conclusion: str
    evidence: list[str] = field(default_factory=list)
    components: list[dict] = field(default_factory=list)

    def status(self, name: str) -> str:
        return next(h.status for h in self.hypotheses if h.name == name)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "degrees": self.degrees,
            "conclusion": self.conclusion,
            "components": self.components,
            "evidence": self.evidence,
        }


def conclude(statuses: dict[str, str], inequality_holds: bool, linf_invariant: bool,
             invariant_components: bool = False) -> str:
    """Combine hypothesis statuses into a conclusion.

    Monotone: making any status weaker (later in ``STATUS_ORDER``) or the
    inequality false never yields a stronger conclusion.
    """
    if any(s == FAILED for s in statuses.values()) or not inequality_holds or invariant_components:
        return NOT_ESTABLISHED
    if any(s == EVIDENCE for n, s in statuses.items() if n != "nondicritical"):
        return NOT_ESTABLISHED
    if statuses["nondicritical"] == EVIDENCE:
        return CONDITIONAL
    return ONLY_LINE_AT_INFINITY if linf_invariant else NO_ALGEBRAIC_SOLUTIONS


def _orbit_status(g: Poly, bound: int) -> tuple[str, str]:
    """Status of hypothesis (4) when ``g`` is only known irreducible over F_2.

    Over the algebraic closure ``g`` splits into one Frobenius orbit of
    ``k`` factors sharing a Newton polygon, so ``Newt(g) = k Newt(h)``.  If
    every such ``k > 1`` leaves factors of degree at most ``bound`` the
    certificate cannot exclude them.
    """
    edges = primitive_edge_vectors(newton_polytope(g))
    m = 0
    for _, mult in edges:
        m = gcd(m, mult)
    n = int(g.total_degree())
    small = [k for k in range(2, m + 1) if m % k == 0 and n // k <= bound]
    if small:
        return EVIDENCE, ("irreducible over F_2 only; Newt = %d x smaller polygon, so it may split over "
                          "GF(2^%d) into factors of degree %d <= %d" % (small[0], small[0], n // small[0], bound))
    return PROVED, ("irreducible over F_2; any splitting over an extension gives factors of degree > %d" % bound)


def _dicriticality(v2: PlaneVectorField, assertion: bool | None, max_k: int) -> Hypothesis:
    if assertion is True:
        return Hypothesis("nondicritical", ASSUMED, "nondicriticality asserted by the caller")
    if assertion is False:
        return Hypothesis("nondicritical", FAILED, "caller states the foliation is dicritical")
    # GF(2^k) for k = max_k and max_k - 1 contain every smaller field up to 2^max_k
    ks = sorted({k for k in (max_k - 1, max_k) if k >= 1})
    counts = []
    for k in ks:
        points = singular_points_over(v2, k)
        counts.append("%d over GF(2^%d)" % (len(points), k))
        for pt in points:
            jet = first_jet_dicritical_at(v2, pt)
            if jet.dicritical:
                return Hypothesis("nondicritical", FAILED,
                                  "first jet at %s over GF(2^%d) is radial" % (jet.point_str(), k))
    return Hypothesis("nondicritical", EVIDENCE,
                      "singular points: %s; no radial first jet (finite-field evidence only)" % ", ".join(counts))


def theorem_main_certificate(v: PlaneVectorField, nondicritical: bool | None = None,
                             backend: str = "auto", max_k: int = 4) -> CertificateReport:
    evidence: list[str] = []
    hyps: dict[str, Hypothesis] = {}

    if isinstance(v.ring, IntegerRing):
        hyps["integer_coefficients"] = Hypothesis("integer_coefficients", PROVED, "coefficients in Z")
    else:
        hyps["integer_coefficients"] = Hypothesis("integer_coefficients", FAILED, "coefficients in %s" % v.ring)
        return CertificateReport([hyps["integer_coefficients"]], {}, NOT_ESTABLISHED, ["field must be over Z"])

    report = degree_and_linf(v)
    d = report.degree
    try:
        good = good_reduction_at(v, 2)
        hyps["good_reduction_at_2"] = Hypothesis("good_reduction_at_2", PROVED if good else FAILED, good.reason)
    except ValueError as exc:
        hyps["good_reduction_at_2"] = Hypothesis("good_reduction_at_2", FAILED, str(exc))
        return CertificateReport(list(hyps.values()), {"foliation_degree": d}, NOT_ESTABLISHED, [str(exc)])

    v2 = v.reduce(2)
    res = p_divisor(v2)
    components = []
    cof_degree = None
    invariant_components = False
    if res.p_closed:
        hyps["irreducible_2_divisor"] = Hypothesis("irreducible_2_divisor", FAILED, "reduction is 2-closed")
    else:
        mono, cof = strip_monomial(res.f)
        for var, mult in enumerate(mono):
            if mult:
                line = Poly.gen(var, v2.ring)
                inv = is_invariant_curve(v2, line)
                invariant_components |= inv
                components.append({"curve": "%s = 0" % "xy"[var], "multiplicity": mult, "invariant": inv})
        z_mult = res.z_multiplicity
        if z_mult:
            components.append({"curve": "z = 0", "multiplicity": z_mult, "invariant": report.linf_invariant})
        cof_degree = cof.total_degree()
        if cof.is_constant():
            hyps["irreducible_2_divisor"] = Hypothesis(
                "irreducible_2_divisor", FAILED, "2-divisor has no component besides coordinate lines")
        else:
            verdict = certify_irreducible(cof, backend)
            components.append({"curve": "%s = 0" % cof, "multiplicity": 1, "irreducibility": verdict.status})
            if verdict.status == "IrreducibleByPolytope":
                status = PROVED
            elif verdict.irreducible:
                status, note = _orbit_status(cof, carnicer_bound(d))
                evidence.append(note)
            elif verdict.status == "Reducible":
                status = FAILED
            else:
                status = EVIDENCE
            hyps["irreducible_2_divisor"] = Hypothesis(
                "irreducible_2_divisor", status,
                "%s: %s" % (verdict.status, verdict.reason or verdict.witness or "degree %d" % cof_degree))
        if invariant_components:
            evidence.append("an affine coordinate line in the 2-divisor is invariant")
    hyps["nondicritical"] = _dicriticality(v2, nondicritical, max_k)

    bound = carnicer_bound(d)
    divisor_degree = 3 * d
    inequality = divisor_degree > bound and (cof_degree is None or cof_degree > bound)
    degrees = {
        "foliation_degree": d,
        "carnicer_bound": bound,
        "divisor_degree": divisor_degree,
        "affine_divisor_degree": None if res.p_closed else res.affine_degree,
        "z_multiplicity": res.z_multiplicity,
        "component_degree": cof_degree,
        "linf_invariant": report.linf_invariant,
        "inequality_holds": inequality,
    }
    if d <= 1:
        evidence.append("degree %d: Carnicer bound does not separate" % d)
    statuses = {name: h.status for name, h in hyps.items()}
    conclusion = conclude(statuses, inequality, report.linf_invariant, invariant_components)
    if conclusion == ONLY_LINE_AT_INFINITY:
        evidence.append("line at infinity is invariant; every other invariant curve is excluded")
    ordered = [hyps[name] for name in HYPOTHESES]
    return CertificateReport(ordered, degrees, conclusion, evidence, components)
