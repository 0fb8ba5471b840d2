"""Newton polygons, Minkowski indecomposability and irreducibility checks.

A polynomial whose Newton polygon is not a Minkowski sum of two lattice
polygons, each with more than one point, is irreducible over every
extension of its coefficient field.  Decomposability of a lattice polygon
is decided on its primitive edge multiset: the polygon splits exactly when
some proper, nonempty sub-multiset of primitive edge vectors sums to zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .ffpoly import GF, NotDivisible, Poly, exact_div, strip_monomial
from .ffpoly.poly import grlex_key
from .ffpoly.rings import PrimeField

Point = tuple[int, int]

DEFAULT_SEARCH_BOUND = 4
# about 2^21 candidates: degree 5 over F_2
MAX_SEARCH_CANDIDATES = 1 << 21
MAX_SUMMAND_CHOICES = 4096
BACKENDS = ("polytope", "factor_search", "both", "summand_search", "auto")


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[Point]:
    """Monotone chain; counterclockwise from the lexicographically least point,
    collinear points dropped."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) > 1 else hull[:1]


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple[Point, ...]

    @classmethod
    def from_points(cls, points) -> "LatticePolytope":
        pts = list(points)
        if not pts:
            raise ValueError("empty point set")
        return cls(tuple(convex_hull(pts)))

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def edges(self) -> list[Point]:
        n = len(self.vertices)
        if n == 1:
            return []
        return [(self.vertices[(i + 1) % n][0] - self.vertices[i][0],
                 self.vertices[(i + 1) % n][1] - self.vertices[i][1]) for i in range(n)]

    def primitive_edges(self) -> list[tuple[Point, int]]:
        """``(primitive direction, lattice length)`` for each edge, in cycle order."""
        out = []
        for dx, dy in self.edges():
            g = gcd(dx, dy)
            out.append(((dx // g, dy // g), g))
        return out

    def contains(self, pt: Point) -> bool:
        vs = self.vertices
        if len(vs) == 1:
            return pt == vs[0]
        if len(vs) == 2:
            a, b = vs
            return (_cross(a, b, pt) == 0
                    and min(a[0], b[0]) <= pt[0] <= max(a[0], b[0])
                    and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]))
        return all(_cross(vs[i], vs[(i + 1) % len(vs)], pt) >= 0 for i in range(len(vs)))

    def lattice_points(self) -> list[Point]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return [(a, b) for a in range(min(xs), max(xs) + 1) for b in range(min(ys), max(ys) + 1)
                if self.contains((a, b))]

    def translate(self, shift: Point) -> "LatticePolytope":
        return LatticePolytope(tuple((a + shift[0], b + shift[1]) for a, b in self.vertices))

    def to_json(self) -> list[list[int]]:
        return [list(v) for v in self.vertices]


def newton_polytope(f: Poly) -> LatticePolytope:
    if f.nvars != 2:
        raise ValueError("Newton polygons are built for polynomials in x, y")
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    return LatticePolytope.from_points(e for e, _ in f.items())


def primitive_edge_vectors(P: LatticePolytope) -> list[tuple[Point, int]]:
    if P.is_point:
        raise ValueError("a point has no edges")
    return P.primitive_edges()


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    return LatticePolytope.from_points(
        (a[0] + b[0], a[1] + b[1]) for a in P.vertices for b in Q.vertices)


def _zero_sum_choice(edges: list[tuple[Point, int]]) -> list[int] | None:
    """Multiplicities ``c_i`` in ``[0, m_i]``, neither all zero nor all full,
    with ``sum c_i w_i = 0``; ``None`` if there are none.

    Dynamic programming over reachable partial sums; each state records
    whether something was taken and whether something was left out.
    """
    states: dict[tuple[int, int, bool, bool], tuple] = {(0, 0, False, False): ()}
    for (wx, wy), m in edges:
        nxt: dict = {}
        for (sx, sy, took, left), path in states.items():
            for c in range(m + 1):
                key = (sx + c * wx, sy + c * wy, took or c > 0, left or c < m)
                if key not in nxt:
                    nxt[key] = path + (c,)
        states = nxt
    for (sx, sy, took, left), path in states.items():
        if sx == 0 and sy == 0 and took and left:
            return list(path)
    return None


def is_indecomposable(P: LatticePolytope) -> bool:
    if P.is_point:
        raise ValueError("a point has no edges")
    return _zero_sum_choice(P.primitive_edges()) is None


def decomposition_witness(P: LatticePolytope) -> list[tuple[Point, int]] | None:
    """A proper zero-sum sub-multiset of primitive edges, if one exists."""
    edges = P.primitive_edges()
    choice = _zero_sum_choice(edges)
    if choice is None:
        return None
    return [(w, c) for (w, _), c in zip(edges, choice) if c]


def verify_polytope_figure(expected_vertices, f: Poly) -> bool:
    return set(map(tuple, expected_vertices)) == set(newton_polytope(f).vertices)


# -- irreducibility ---------------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str
    stripped_monomial: tuple[int, ...]
    polynomial: Poly
    bound: int | None = None
    witness: Poly | None = None
    reason: str = ""
    details: dict = field(default_factory=dict, compare=False)

    IRREDUCIBLE_BY_POLYTOPE = "IrreducibleByPolytope"
    IRREDUCIBLE_BY_FACTOR_SEARCH = "IrreducibleByFactorSearch"
    IRREDUCIBLE_BY_SUMMAND_SEARCH = "IrreducibleBySummandSearch"
    REDUCIBLE = "Reducible"
    INCONCLUSIVE = "Inconclusive"

    @property
    def irreducible(self) -> bool:
        return self.status.startswith("Irreducible")

    def to_dict(self) -> dict:
        out = {"status": self.status, "stripped_monomial": list(self.stripped_monomial),
               "polynomial": str(self.polynomial)}
        if self.bound is not None:
            out["bound"] = self.bound
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.reason:
            out["reason"] = self.reason
        return out


def _candidate_monomials(degree: int) -> list[tuple[int, int]]:
    mons = [(a, t - a) for t in range(degree + 1) for a in range(t, -1, -1)]
    return sorted(mons, key=grlex_key)


def factor_search(f: Poly, bound: int, max_candidates: int = MAX_SEARCH_CANDIDATES) -> tuple[Poly | None, bool]:
    """Look for a factor of total degree ``1..min(bound, deg f // 2)``.

    Returns ``(factor or None, complete)``; ``complete`` says every degree up
    to ``deg f // 2`` was covered.  Candidates are monic in graded-lex order,
    divisible by neither variable (``f`` is assumed stripped of monomials) and
    tried by degree, then by bitmask over the graded-lex sorted monomials, so
    the witness returned is deterministic.  A candidate must be nonzero at
    every point where ``f`` is nonzero; over F_2 that filter runs over all of
    GF(16)^2 in numpy before any exact division.
    """
    ring = f.ring
    if not ring.is_finite:
        raise ValueError("factor search needs a finite coefficient field")
    half = int(f.total_degree()) // 2
    top = min(bound, half)
    mons = _candidate_monomials(top)
    if ring.order ** (len(mons) - 1) > max_candidates:
        raise ValueError("factor search bound %d exceeds the candidate ceiling" % bound)
    if isinstance(ring, PrimeField) and ring.p == 2:
        found = _search_gf2(f, mons, top)
    else:
        found = _search_generic(f, mons, top)
    return found, top >= half


def _divides_poly(h: Poly, f: Poly) -> bool:
    try:
        exact_div(f, h)
    except NotDivisible:
        return False
    return True


_CHUNK_BITS = 15


def _search_gf2(f: Poly, mons, top: int) -> Poly | None:
    ring = f.ring
    ext = GF(2, 4)
    points = list(itertools.product(list(ext.elements()), repeat=2))
    fext = f.change_ring(ext)
    f_nonzero = np.array([not ext.is_zero(fext(*pt)) for pt in points])
    # monomial values at the points as 4-bit ints, so field addition is XOR
    table = np.array([[ext.index(ext.mul(ext.pow(u, a), ext.pow(w, b))) for u, w in points]
                      for a, b in mons], dtype=np.uint8).reshape(len(mons), len(points))
    degs = np.array([sum(m) for m in mons])
    no_x = np.array([m[0] == 0 for m in mons])
    no_y = np.array([m[1] == 0 for m in mons])
    for t in range(1, top + 1):
        width = sum(1 for m in mons if sum(m) <= t)
        low = min(width, _CHUNK_BITS)
        low_vals = np.zeros((1 << low, len(points)), dtype=np.uint8)
        for i in range(low):
            low_vals[1 << i: 2 << i] = low_vals[: 1 << i] ^ table[i]
        low_masks = np.arange(1 << low, dtype=np.int64)
        low_bits = ((low_masks[:, None] >> np.arange(low)) & 1).astype(bool)
        for high in range(1 << (width - low)):
            high_idx = [low + i for i in range(width - low) if high >> i & 1]
            high_val = np.bitwise_xor.reduce(table[high_idx], axis=0) if high_idx else 0
            vals = low_vals ^ high_val
            bits = np.concatenate([low_bits, np.broadcast_to(
                np.array([(high >> i) & 1 for i in range(width - low)], dtype=bool),
                (1 << low, width - low))], axis=1)
            top_deg = np.where(bits.any(axis=1), np.where(bits, degs[:width], -1).max(axis=1), -1)
            ok = top_deg == t
            ok &= (bits & no_x[:width]).any(axis=1)
            ok &= (bits & no_y[:width]).any(axis=1)
            ok &= ~((vals == 0) & f_nonzero).any(axis=1)
            for mask in np.nonzero(ok)[0]:
                full = int(mask) | (high << low)
                h = Poly({mons[i]: 1 for i in range(width) if full >> i & 1}, ring, 2, _clean=True)
                if _divides_poly(h, f):
                    return h
    return None


def _search_generic(f: Poly, mons, top: int) -> Poly | None:
    ring = f.ring
    elements = list(ring.elements())
    points = list(itertools.product(elements, repeat=2))
    nonzero_at = [pt for pt in points if not ring.is_zero(f(*pt))]
    for t in range(1, top + 1):
        usable = [m for m in mons if sum(m) <= t]
        for lead in [m for m in usable if sum(m) == t]:
            rest = [m for m in usable if grlex_key(m) < grlex_key(lead)]
            for coeffs in itertools.product(elements, repeat=len(rest)):
                terms = {lead: ring.one}
                terms.update({m: c for m, c in zip(rest, coeffs) if not ring.is_zero(c)})
                if all(m[0] for m in terms) or all(m[1] for m in terms):
                    continue
                h = Poly(terms, ring, 2, _clean=True)
                if any(ring.is_zero(h(*pt)) for pt in nonzero_at):
                    continue
                if _divides_poly(h, f):
                    return h
    return None


def zero_sum_choices(edges: list[tuple[Point, int]], limit: int = MAX_SUMMAND_CHOICES):
    """Every proper nonempty zero-sum choice of multiplicities, or ``None``
    when there are more than ``limit`` of them."""
    found: list[tuple[int, ...]] = []

    def walk(i, sx, sy, path):
        if i == len(edges):
            if sx == 0 and sy == 0 and any(path) and any(c < m for c, (_, m) in zip(path, edges)):
                found.append(tuple(path))
                if len(found) > limit:
                    raise OverflowError
            return
        (wx, wy), m = edges[i]
        # the remaining edges can only move the sum within their own span
        for c in range(m + 1):
            walk(i + 1, sx + c * wx, sy + c * wy, path + [c])

    total = 1
    for _, m in edges:
        total *= m + 1
    if total > limit * 64:
        return None
    try:
        walk(0, 0, 0, [])
    except OverflowError:
        return None
    return found


def polygon_from_edges(edges: list[tuple[Point, int]]) -> LatticePolytope:
    """Lattice polygon with the given cyclic edge sequence, moved so that its
    minimum x and minimum y are both 0."""
    pts = [(0, 0)]
    for (wx, wy), m in edges:
        if m:
            x, y = pts[-1]
            pts.append((x + m * wx, y + m * wy))
    mx = min(p[0] for p in pts)
    my = min(p[1] for p in pts)
    return LatticePolytope.from_points((a - mx, b - my) for a, b in pts)


def summand_search(f: Poly, max_candidates: int = MAX_SEARCH_CANDIDATES) -> tuple[Poly | None, bool]:
    """Exhaustive factor search guided by Minkowski summands.

    If ``f = h k`` with neither factor constant (``f`` divisible by no
    variable), ``Newt(h)`` is a proper summand of ``Newt(f)`` touching both
    axes, so it is one of the polygons built from a zero-sum choice of
    primitive edges.  For every such pair of complementary summands the one
    with fewer lattice points is searched: all coefficient vectors on its
    lattice points, nonzero on its vertices and monic.  Returns
    ``(factor or None, complete)``; ``complete`` is False when a ceiling was
    hit.  A ``None, True`` answer proves irreducibility over the coefficient
    field only (not over its extensions).
    """
    ring = f.ring
    if not ring.is_finite:
        raise ValueError("summand search needs a finite coefficient field")
    P = newton_polytope(f)
    if P.is_point:
        return None, True
    edges = P.primitive_edges()
    choices = zero_sum_choices(edges)
    if choices is None:
        return None, False
    q = ring.order
    elements = list(ring.elements())
    nonzero = [c for c in elements if not ring.is_zero(c)]
    seen = set()
    plans = []
    for choice in choices:
        comp = tuple(m - c for c, (_, m) in zip(choice, edges))
        if comp in seen:
            continue
        seen.add(choice)
        A = polygon_from_edges([(w, c) for (w, _), c in zip(edges, choice)])
        B = polygon_from_edges([(w, c) for (w, _), c in zip(edges, comp)])
        Q = min((A, B), key=lambda poly: (len(poly.lattice_points()), poly.vertices))
        pts = Q.lattice_points()
        cost = (q - 1) ** (len(Q.vertices) - 1) * q ** (len(pts) - len(Q.vertices))
        plans.append((cost, Q, pts))
    if sum(c for c, _, _ in plans) > max_candidates:
        return None, False
    nonzero_at = []
    if q <= 16:
        nonzero_at = [pt for pt in itertools.product(elements, repeat=2) if not ring.is_zero(f(*pt))]
    for _, Q, pts in sorted(plans, key=lambda plan: (plan[0], plan[1].vertices)):
        verts = sorted(Q.vertices, key=grlex_key, reverse=True)
        lead, other_verts = verts[0], verts[1:]
        inner = [pt for pt in pts if pt not in Q.vertices]
        for vc in itertools.product(nonzero, repeat=len(other_verts)):
            for ic in itertools.product(elements, repeat=len(inner)):
                terms = {lead: ring.one}
                terms.update(zip(other_verts, vc))
                terms.update((m, c) for m, c in zip(inner, ic) if not ring.is_zero(c))
                h = Poly(terms, ring, 2, _clean=True)
                if any(ring.is_zero(h(*pt)) for pt in nonzero_at):
                    continue
                if _divides_poly(h, f):
                    return h, True
    return None, True


def certify_irreducible(f: Poly, backend: str = "both", bound: int = DEFAULT_SEARCH_BOUND) -> IrreducibilityVerdict:
    """Irreducibility verdict for the non-monomial part of ``f``.

    ``backend`` is one of

    * ``"polytope"``: Newton polygon indecomposability only;
    * ``"factor_search"``: degree-bounded factor search only;
    * ``"both"``: the polytope answer wins when it certifies, and the factor
      search still runs (its verdict lands in ``details``) so the two can be
      compared;
    * ``"summand_search"``: exhaustive search over Minkowski summands;
    * ``"auto"``: polytope, then summand search, then factor search.

    Search verdicts prove irreducibility over the coefficient field only;
    the polytope verdict holds over every extension.
    """
    if backend not in BACKENDS:
        raise ValueError("unknown backend %r" % backend)
    if f.total_degree() < 1:
        raise ValueError("irreducibility is only meaningful for nonconstant polynomials")
    mono, g = strip_monomial(f)
    if g.is_constant():
        return IrreducibilityVerdict("Inconclusive", mono, g, reason="polynomial is a monomial")
    g = g.monic() if g.ring.is_field else g
    details: dict = {}
    poly_verdict = None
    if backend in ("polytope", "both", "auto"):
        P = newton_polytope(g)
        witness = decomposition_witness(P)
        details["polytope"] = {"vertices": P.to_json(), "indecomposable": witness is None}
        if witness is None:
            poly_verdict = IrreducibilityVerdict("IrreducibleByPolytope", mono, g, details=details)
        else:
            details["polytope"]["summand_edges"] = [[list(w), c] for w, c in witness]
    if backend == "polytope" or (backend == "auto" and poly_verdict is not None):
        if poly_verdict is not None:
            return poly_verdict
        return IrreducibilityVerdict("Inconclusive", mono, g, reason="Newton polygon is decomposable", details=details)
    if not g.ring.is_finite:
        if poly_verdict is not None:
            return poly_verdict
        if backend == "auto":
            return IrreducibilityVerdict("Inconclusive", mono, g, reason="Newton polygon is decomposable",
                                         details=details)
        raise ValueError("factor search needs a finite coefficient field")
    if backend in ("summand_search", "auto"):
        factor, complete = summand_search(g)
        details["summand_search"] = "Reducible" if factor is not None else ("complete" if complete else "ceiling hit")
        if factor is not None:
            return IrreducibilityVerdict("Reducible", mono, g, witness=factor, details=details)
        if complete:
            return IrreducibilityVerdict("IrreducibleBySummandSearch", mono, g, details=details,
                                         reason="no factor over %s" % g.ring)
        if backend == "summand_search":
            return IrreducibilityVerdict("Inconclusive", mono, g, reason="summand search ceiling hit",
                                         details=details)
    try:
        factor, complete = factor_search(g, bound)
    except ValueError as exc:
        if backend != "auto":
            raise
        return IrreducibilityVerdict("Inconclusive", mono, g, bound=bound, reason=str(exc), details=details)
    if factor is not None:
        details["factor_search"] = "Reducible"
        if poly_verdict is not None:
            raise AssertionError("polytope certificate contradicted by factor %s" % factor)
        return IrreducibilityVerdict("Reducible", mono, g, bound=bound, witness=factor, details=details)
    details["factor_search"] = "complete" if complete else "no factor up to degree %d" % min(bound, int(g.total_degree()) // 2)
    if poly_verdict is not None:
        return poly_verdict
    if complete:
        return IrreducibilityVerdict("IrreducibleByFactorSearch", mono, g, bound=bound, details=details)
    return IrreducibilityVerdict("Inconclusive", mono, g, bound=bound,
                                 reason="no factor of degree <= %d; bound exhausted" % bound, details=details)
