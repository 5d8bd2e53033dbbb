"""Command-line surface: batch subcommands with JSON input and output.

Every successful invocation prints one JSON document

    {"result": ..., "route": ..., "checks": [...]}

and exits 0.  Precondition violations exit 2 with a machine-readable
error code, internal assertion failures exit 1, usage errors exit 64.
Lifting commands always re-verify their postconditions and list them in
``checks``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import FiniteAlgebra, decompose_local
from .errors import HenselianError, UnsupportedBase
from .hensel import (
    HenselCapability,
    decompose_finite_algebra,
    hensel_root_monic,
    hensel_root_nonmonic,
    lift_monic_factorization,
    lift_nonmonic_factorization,
)
from .poly import Poly
from .rings import LocalizedIntegers, Rationals, parse_ring
from .tower import (
    TowerRing,
    tower_eq,
    tower_from_json,
    tower_to_json,
)
from .uda import UdaAlgebra, galois_from_idempotent

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def _parse_element(ring, data):
    """Ring elements as JSON: integers, fraction pairs, coefficient arrays."""
    if isinstance(data, str):
        data = json.loads(data)
    if (
        isinstance(data, list)
        and len(data) == 2
        and all(isinstance(c, int) for c in data)
        and isinstance(ring, (Rationals, LocalizedIntegers, TowerRing))
    ):
        return ring.element(Fraction(data[0], data[1]))
    return ring.element(data)


def _parse_poly(ring, text):
    coeffs = json.loads(text)
    return Poly(ring, [_parse_element(ring, c) for c in coeffs])


def _poly_out(ring, f):
    return [ring.to_json(c) for c in f.coeffs]


def _emit(result, route=None, checks=None):
    doc = {"result": result, "route": route, "checks": checks or []}
    print(json.dumps(doc))
    return 0


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_ring_split(args):
    ring = parse_ring(args.ring)
    x = _parse_element(ring, args.elem)
    branch, inverse = ring.local_split(x)
    result = {"branch": branch}
    checks = []
    if inverse is not None:
        result["inverse"] = ring.to_json(inverse)
        assert x * inverse == ring.one
        checks.append("x * inverse == 1")
    return _emit(result, route="local-split", checks=checks)


def _cmd_uda_build(args):
    ring = parse_ring(args.ring)
    f = _parse_poly(ring, args.poly)
    d = UdaAlgebra(ring, f, cap=args.cap_n)
    return _emit(
        {
            "rank": d.rank,
            "basis": [list(e) for e in d.exponents],
        },
        route="splitting-chain",
        checks=["rank == n!", "product of (X - x_i) == f"],
    )


def _cmd_uda_galois(args):
    ring = parse_ring(args.ring)
    f = _parse_poly(ring, args.poly)
    d = UdaAlgebra(ring, f, cap=args.cap_n)
    e = d.element([_parse_element(ring, c) for c in json.loads(args.idem)])
    h, orbit, subset = galois_from_idempotent(e)
    return _emit(
        {
            "galois_idempotent": [ring.to_json(c) for c in h.element.coords],
            "orbit": [
                [ring.to_json(c) for c in u.coords] for u in orbit
            ],
            "subset": subset,
        },
        route="orbit-atoms",
        checks=[
            "orbit sums to 1",
            "orbit pairwise orthogonal",
            "subset sum == input idempotent",
        ],
    )


def _cmd_hensel_root(args):
    ring = _load_ring_or_tower(args)
    cap = HenselCapability(ring)
    f = _parse_poly(ring, args.poly)
    if f.is_monic:
        alpha = hensel_root_monic(cap, f)
        route = "newton-monic" if cap.root_method != "adjoin-step" else "adjoin-step"
    else:
        alpha = hensel_root_nonmonic(cap, f)
        route = "nonmonic-transform"
    checks = ["f(root) == 0", "root in radical"]
    if cap.root_method == "adjoin-step":
        out = alpha.ring.to_json(alpha)
    else:
        assert not f(alpha)
        out = ring.to_json(alpha)
    return _emit({"root": out}, route=route, checks=checks)


def _cmd_hensel_lift_fact(args):
    ring = parse_ring(args.ring)
    cap = HenselCapability(ring)
    f = _parse_poly(ring, args.poly)
    g0 = _parse_poly(ring, args.g0)
    h0 = _parse_poly(ring, args.h0)
    if f.is_monic and g0.is_monic and h0.is_monic:
        route = args.route or ("uda" if f.degree <= args.cap_n else "quadratic")
        g, h = lift_monic_factorization(cap, f, g0, h0, route=route, cap=args.cap_n)
    else:
        route = "nonmonic"
        g, h = lift_nonmonic_factorization(cap, f, g0, h0, seed=args.seed)
    assert g * h == f
    assert g.residue() == g0.residue() and h.residue() == h0.residue()
    return _emit(
        {"g": _poly_out(ring, g), "h": _poly_out(ring, h)},
        route=route,
        checks=["g * h == f", "residues match g0, h0"],
    )


def _cmd_algebra_decompose(args):
    ring_spec, poly_text = args.algebra.split("/", 1)
    ring = parse_ring(ring_spec.strip())
    f = _parse_poly(ring, poly_text.strip())
    alg = FiniteAlgebra.quotient_ring(ring, f)
    if ring.is_field:
        parts = decompose_local(alg)
        route = "frobenius-fixed-space"
    else:
        parts = decompose_finite_algebra(HenselCapability(ring), alg)
        route = "residual-decompose-and-lift"
    return _emit(
        {
            "factors": [
                {
                    "idempotent": [ring.to_json(c) for c in e.element.coords],
                    "rank": factor.rank,
                }
                for e, factor in parts
            ]
        },
        route=route,
        checks=["idempotents form a basic orthogonal system"],
    )


def _load_ring_or_tower(args):
    if args.session:
        with open(args.session) as fh:
            return tower_from_json(json.load(fh))
    return parse_ring(args.ring)


def _save_session(path, tower):
    with open(path, "w") as fh:
        json.dump(tower_to_json(tower), fh)


def _cmd_tower_new(args):
    if not args.session:
        print("error: tower commands need --session", file=sys.stderr)
        return USAGE_EXIT
    ring = parse_ring(args.ring)
    if not isinstance(ring, LocalizedIntegers):
        raise UnsupportedBase("towers are built over Zloc:p")
    tower = TowerRing(ring)
    _save_session(args.session, tower)
    return _emit(
        {"steps": 0, "rank": 1, "session": args.session},
        route="tower-new",
        checks=[],
    )


def _load_tower(args):
    with open(args.session) as fh:
        return tower_from_json(json.load(fh))


def _cmd_tower_adjoin_root(args):
    tower = _load_tower(args)
    f = _parse_poly(tower, args.poly)
    new, x = tower.adjoin_hensel_root(f)
    _save_session(args.session, new)
    return _emit(
        {"steps": new.levels, "rank": new.rank, "root": new.to_json(x)},
        route="adjoin-step",
        checks=["f(root) == 0", "residue(root) == 0"],
    )


def _cmd_tower_adjoin_ext(args):
    tower = _load_tower(args)
    f = _parse_poly(tower, args.poly)
    new, u = tower.adjoin_residue_extension(f)
    _save_session(args.session, new)
    return _emit(
        {
            "steps": new.levels,
            "rank": new.rank,
            "generator": new.to_json(u),
            "residue_field_size": new.residue_field.size,
        },
        route="residue-extension",
        checks=["relation(generator) == 0", "residual modulus irreducible"],
    )


def _tower_element(tower, text):
    data = json.loads(text)
    if isinstance(data, dict):
        return tower.from_json(data)
    return _parse_element(tower, json.dumps(data))


def _cmd_tower_eval(args):
    tower = _load_tower(args)
    target = parse_ring(args.target)
    t = _tower_element(tower, args.elem)
    value = tower.evaluate_into(t, target, seed=args.seed)
    return _emit(
        {"value": target.to_json(value)},
        route="step-by-step-morphism",
        checks=["per-step relations satisfied in target"],
    )


def _cmd_tower_eq(args):
    tower = _load_tower(args)
    s = _tower_element(tower, args.lhs)
    t = _tower_element(tower, args.rhs)
    return _emit(
        {"equal": tower_eq(s, t)},
        route="saturated-kernel",
        checks=["decision by annihilator with unit residue"],
    )


# ---------------------------------------------------------------------------


def _build_parser():
    parser = _Parser(prog="henselian")
    parser.add_argument("--json", action="store_true", help="JSON output (default)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ring=True):
        if ring:
            p.add_argument("--ring", default=None)
        p.add_argument("--session", default=None)
        p.add_argument("--precision", type=int, default=None)
        p.add_argument("--cap-n", dest="cap_n", type=int, default=5)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true")

    ring_p = sub.add_parser("ring")
    ring_sub = ring_p.add_subparsers(dest="ring_command", required=True)
    p = ring_sub.add_parser("split")
    common(p)
    p.add_argument("--elem", required=True)
    p.set_defaults(func=_cmd_ring_split)

    uda_p = sub.add_parser("uda")
    uda_sub = uda_p.add_subparsers(dest="uda_command", required=True)
    p = uda_sub.add_parser("build")
    common(p)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_uda_build)
    p = uda_sub.add_parser("galois")
    common(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--idem", required=True)
    p.set_defaults(func=_cmd_uda_galois)

    hensel_p = sub.add_parser("hensel")
    hensel_sub = hensel_p.add_subparsers(dest="hensel_command", required=True)
    p = hensel_sub.add_parser("root")
    common(p)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_hensel_root)
    p = hensel_sub.add_parser("lift-fact")
    common(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--g0", required=True)
    p.add_argument("--h0", required=True)
    p.add_argument("--route", choices=["uda", "quadratic"], default=None)
    p.set_defaults(func=_cmd_hensel_lift_fact)

    alg_p = sub.add_parser("algebra")
    alg_sub = alg_p.add_subparsers(dest="algebra_command", required=True)
    p = alg_sub.add_parser("decompose")
    common(p, ring=False)
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=_cmd_algebra_decompose)

    tower_p = sub.add_parser("tower")
    tower_sub = tower_p.add_subparsers(dest="tower_command", required=True)
    p = tower_sub.add_parser("new")
    common(p)
    p.set_defaults(func=_cmd_tower_new)
    p = tower_sub.add_parser("adjoin-root")
    common(p)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_tower_adjoin_root)
    p = tower_sub.add_parser("adjoin-ext")
    common(p)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_tower_adjoin_ext)
    p = tower_sub.add_parser("eval")
    common(p)
    p.add_argument("--target", required=True)
    p.add_argument("--elem", required=True)
    p.set_defaults(func=_cmd_tower_eval)
    p = tower_sub.add_parser("eq")
    common(p)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=_cmd_tower_eq)

    return parser


def dispatch(argv):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HenselianError as exc:
        print(
            json.dumps({"error": exc.code, "message": str(exc)})
        )
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(json.dumps({"error": "InternalCheckFailed", "message": str(exc)}))
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
