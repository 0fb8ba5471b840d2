"""Command-line interface: ``pfoliation <command> ...``.

Exit codes: 0 computed, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .certificate import theorem_main_certificate
from .families import DEFAULT_GRID, FamilyConstraintError, FamilySpec, make_field, verify_family_theorem
from .ffpoly import ZZ, GF, ParseError, RingError, RingMismatch, parse_poly, print_poly, ring_from_tag
from .foliation import PlaneVectorField, is_invariant_curve, p_divisor, p_power
from .newton import BACKENDS, certify_irreducible, newton_polytope

SCHEMA = 1
EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        print("\n".join(lines))


def _ring(tag: str | None, p: int | None = None):
    if tag is None:
        return GF(p) if p else ZZ
    ring = ring_from_tag(tag)
    if p is not None and ring.characteristic not in (0, p):
        raise InputError("--ring %s does not have characteristic %d" % (tag, p))
    return ring


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got %r" % text) from None


def _family_from_args(args) -> FamilySpec | None:
    if args.jouanolou is not None:
        return FamilySpec.jouanolou(args.jouanolou)
    if args.claudia is not None:
        return FamilySpec("claudia", args.claudia)
    if args.family_f is not None:
        return FamilySpec("family_f", args.family_f)
    if args.family_g is not None:
        return FamilySpec("family_g", args.family_g)
    return None


def _field_from_args(args, ring) -> PlaneVectorField:
    spec = _family_from_args(args)
    if spec is not None:
        if args.A is not None or args.B is not None:
            raise InputError("give either a family shortcut or --A/--B, not both")
        return make_field(spec, ring)
    if args.A is None or args.B is None:
        raise InputError("a vector field needs --A and --B (or a family shortcut)")
    return PlaneVectorField(parse_poly(args.A, ring, 2), parse_poly(args.B, ring, 2))


def _char_p_field(args) -> PlaneVectorField:
    ring = _ring(args.ring, args.p)
    v = _field_from_args(args, ring)
    if ring.characteristic == 0:
        v = v.reduce(args.p)
    return v


def cmd_pcampo(args) -> int:
    v = _char_p_field(args)
    aa, bb = p_power(v)
    p = v.ring.characteristic
    _emit(args, {"p": p, "ring": str(v.ring), "vp_x": print_poly(aa), "vp_y": print_poly(bb)},
          ["v^%d(x) = %s" % (p, print_poly(aa)), "v^%d(y) = %s" % (p, print_poly(bb))])
    return EXIT_OK


def cmd_pdiv(args) -> int:
    v = _char_p_field(args)
    res = p_divisor(v)
    lines = [print_poly(res.f),
             "degree: %s" % ("-inf" if res.p_closed else res.affine_degree),
             "p-closed: %s" % str(res.p_closed).lower()]
    _emit(args, {"ring": str(v.ring), **res.to_dict()}, lines)
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.ring not in (None, "Z"):
        raise InputError("the certificate needs a vector field over Z")
    v = _field_from_args(args, ZZ)
    try:
        report = theorem_main_certificate(v, True if args.assert_nondicritical else None, backend=args.backend)
    except AssertionError as exc:
        print("verification mismatch: %s" % exc, file=sys.stderr)
        return EXIT_MISMATCH
    data = report.to_dict()
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        lines = ["conclusion: %s" % report.conclusion]
        lines += ["(%d) %s: %s (%s)" % (i + 1, h.name, h.status, h.evidence) for i, h in enumerate(report.hypotheses)]
        lines += ["%s: %s" % kv for kv in report.degrees.items()]
        lines += ["note: %s" % e for e in report.evidence]
        print("\n".join(lines))
    return EXIT_OK


def _verify_one(spec: FamilySpec) -> dict:
    return verify_family_theorem(spec).to_dict()


def _parse_grid(text: str) -> list[FamilySpec]:
    if text == "default":
        return list(DEFAULT_GRID)
    return [FamilySpec.parse(item) for item in text.replace(";", " ").split()]


def cmd_family_verify(args) -> int:
    specs = _parse_grid(args.grid)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, specs))
    else:
        results = [_verify_one(s) for s in specs]
    lines = []
    for r in results:
        lines.append("%s %s closed_form=%s hull=%s irreducibility=%s"
                     % ("OK  " if r["ok"] else "FAIL", r["spec"], r["matches_closed_form"],
                        r["hull_matches"], r["irreducibility"]["status"] if r["irreducibility"] else None))
        lines += ["     note: %s" % n for n in r["notes"]]
    _emit(args, {"results": results}, lines)
    return EXIT_OK if all(r["ok"] for r in results) else EXIT_MISMATCH


def cmd_newton(args) -> int:
    ring = _ring(args.ring)
    f = parse_poly(args.poly, ring, 2)
    if f.is_zero():
        raise InputError("the zero polynomial has no Newton polygon")
    P = newton_polytope(f)
    payload = {"polynomial": print_poly(f), "vertices": P.to_json(),
               "primitive_edges": [[list(w), m] for w, m in P.primitive_edges()] if not P.is_point else []}
    lines = ["vertices: %s" % " ".join("(%d,%d)" % v for v in P.vertices)]
    if args.certify:
        verdict = certify_irreducible(f, args.backend)
        payload["irreducibility"] = verdict.to_dict()
        lines.append("irreducibility: %s" % verdict.status)
        if verdict.witness is not None:
            lines.append("factor: %s" % print_poly(verdict.witness))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_invariance(args) -> int:
    ring = _ring(args.ring)
    v = PlaneVectorField(parse_poly(args.A, ring, 2), parse_poly(args.B, ring, 2))
    F = parse_poly(args.F, ring, 2)
    inv = is_invariant_curve(v, F)
    _emit(args, {"F": print_poly(F), "invariant": inv}, ["invariant: %s" % str(inv).lower()])
    return EXIT_OK


def _add_field_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--A", help="first component, e.g. 'x*y^3 - 1'")
    p.add_argument("--B", help="second component")
    fam = p.add_mutually_exclusive_group()
    fam.add_argument("--jouanolou", type=int, metavar="D")
    fam.add_argument("--claudia", type=_int_list, metavar="D,A,B,C")
    fam.add_argument("--family-f", type=_int_list, metavar="E,A,B,C")
    fam.add_argument("--family-g", type=_int_list, metavar="D,U,A,B,C")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--ring", help="coefficient ring: Z, Q, F<p> or F<p>^<k>")

    parser = argparse.ArgumentParser(prog="pfoliation", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, text in (("pcampo", cmd_pcampo, "p-th power of a vector field"),
                             ("pdiv", cmd_pdiv, "p-divisor of a vector field")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--p", type=int, required=True)
        _add_field_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("certify", parents=[common], help="non-algebraicity certificate via reduction mod 2")
    _add_field_flags(p)
    p.add_argument("--assert-nondicritical", action="store_true")
    p.add_argument("--backend", choices=BACKENDS, default="auto")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("family-verify", parents=[common], help="recompute family 2-divisors")
    p.add_argument("--grid", default="default", help="'default' or specs like 'claudia:3,1,1,1 family_g:5,1,1,1,1'")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_family_verify)

    p = sub.add_parser("newton", parents=[common], help="Newton polygon and irreducibility")
    p.add_argument("--poly", required=True)
    p.add_argument("--certify", action="store_true")
    p.add_argument("--backend", choices=BACKENDS, default="both")
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("invariance", parents=[common], help="is {F = 0} invariant?")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--F", required=True)
    p.set_defaults(func=cmd_invariance)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "p", None) is not None and args.p < 2:
        print("error: --p must be a prime", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, ParseError, FamilyConstraintError, RingError, RingMismatch, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
