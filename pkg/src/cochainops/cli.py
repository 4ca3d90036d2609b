"""Command-line front end.

Inputs are JSON, inline or via @file paths; outputs are JSON on stdout.
Exit codes: 0 success, 1 malformed input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import barratt_eccles as be
from . import ealgebras as ea
from . import hochschild as hh
from . import interval_cut as ic
from . import simplicial as sim
from . import surjections as sj
from . import table_reduction as tre
from . import verify as verify_mod
from .formal import FormalSum
from .serialize import (
    algebra_from_json,
    cochain_from_json,
    cochain_to_json,
    decode_esimplex,
    decode_operad_element,
    decode_surjection,
    encode_esimplex,
    encode_surjection,
    formal_sum_to_json,
    hochschild_cochain_from_json,
    hochschild_cochain_to_json,
    model_from_json,
)


def _load(text):
    if text.startswith("@"):
        with open(text[1:]) as handle:
            return json.load(handle)
    return json.loads(text)


def _emit(obj, args):
    print(json.dumps(obj, indent=2 if not getattr(args, "compact", False) else None, sort_keys=True))


def _element_sum(obj, char):
    basis = decode_operad_element(obj)
    return FormalSum.single(basis, 1, char), basis


def cmd_e_diff(args):
    simplex = decode_esimplex(_load(args.input))
    out = be.differential_basis(simplex, args.char)
    _emit(formal_sum_to_json(out, encode_esimplex), args)


def cmd_e_compose(args):
    u = decode_esimplex(_load(args.u))
    v = decode_esimplex(_load(args.v))
    out = be.compose_partial_basis(u, args.slot, v, args.char)
    _emit(formal_sum_to_json(out, encode_esimplex), args)


def cmd_e_diagonal(args):
    simplex = decode_esimplex(_load(args.input))
    out = be.diagonal_basis(simplex, args.char)
    _emit(formal_sum_to_json(
        out, lambda pair: [encode_esimplex(pair[0]), encode_esimplex(pair[1])]
    ), args)


def cmd_x_diff(args):
    seq = decode_surjection(_load(args.input))
    out = sj.differential_basis(seq, args.char)
    _emit(formal_sum_to_json(out, encode_surjection), args)


def cmd_x_compose(args):
    u = _load(args.u)
    v = _load(args.v)
    out = sj.compose_partial_basis(
        decode_surjection(u), args.slot, decode_surjection(v),
        u.get("arity"), v.get("arity"), args.char,
    )
    _emit(formal_sum_to_json(out, encode_surjection), args)


def cmd_tr(args):
    simplex = decode_esimplex(_load(args.input))
    out = tre.tr_basis(simplex, args.char)
    _emit(formal_sum_to_json(out, encode_surjection), args)


def cmd_section(args):
    seq = decode_surjection(_load(args.input))
    _emit(encode_esimplex(tre.section(seq)), args)


def cmd_complexity(args):
    obj = _load(args.input)
    element = decode_operad_element(obj)
    if ic.is_esimplex(element):
        _emit({"complexity": be.complexity(element)}, args)
    else:
        _emit({"complexity": sj.complexity(element, obj.get("arity"))}, args)


def cmd_cell(args):
    obj = _load(args.input)
    element = decode_operad_element(obj["element"])
    sigma = tuple(obj["sigma"])
    mu = {(pair[0], pair[1]): pair[2] for pair in obj["mu"]}
    if ic.is_esimplex(element):
        member = be.cell_member(element, mu, sigma)
    else:
        member = sj.cell_member(element, mu, sigma, obj["element"].get("arity"))
    _emit({"member": member}, args)


def cmd_aw(args):
    obj = _load(args.input)
    seq = decode_surjection(obj["surjection"])
    model = model_from_json(obj["model"])
    simplex = tuple(obj["simplex"])
    out = ic.aw_apply(seq, simplex, model, args.char, obj["surjection"].get("arity"))
    _emit(formal_sum_to_json(out, lambda t: [list(x) for x in t]), args)


def _cochain_inputs(obj, char):
    model = model_from_json(obj["model"])
    reduced = obj.get("reduced", False)
    cochains = [cochain_from_json(model, c, reduced) for c in obj["cochains"]]
    for c in cochains:
        c.char = char
    return model, cochains


def cmd_cup(args):
    obj = _load(args.input)
    model, (f, g) = _cochain_inputs(obj, args.char)
    _emit(cochain_to_json(ic.cup(f, g, model)), args)


def cmd_cupi(args):
    obj = _load(args.input)
    model, (f, g) = _cochain_inputs(obj, args.char)
    _emit(cochain_to_json(ic.cup_i(f, g, args.i, model)), args)


def cmd_sq(args):
    obj = _load(args.input)
    if args.char not in (0, 2):
        raise ValueError("Steenrod squares need --char 2")
    model, (f,) = _cochain_inputs(obj, 2)
    _emit(cochain_to_json(ic.steenrod_square(args.k, f, model)), args)


def cmd_homology(args):
    obj = _load(args.input)
    model = model_from_json(obj)
    ranks = sim.homology_ranks(model, args.char, reduced=obj.get("reduced", False))
    _emit({"characteristic": args.char, "betti": list(ranks)}, args)


def cmd_sphere_eval(args):
    simplex = decode_esimplex(_load(args.input))
    value = ea.sphere_eval(args.n, simplex, args.char)
    _emit({"n": args.n, "coefficient": value}, args)


def cmd_cone_eval(args):
    obj = _load(args.input)
    simplex = decode_esimplex(obj["element"])
    coeff, label = ea.cone_eval(simplex, tuple(obj["pattern"]), args.char)
    _emit({"coefficient": coeff, "generator": label}, args)


def cmd_path_object(args):
    obj = _load(args.input)
    kind = obj.get("algebra", "ground")
    if kind == "ground":
        A = ea.GroundAlgebra(args.char)
    elif kind == "circle":
        A = ea.CochainAlgebra(sim.SphereModel(1), args.char, reduced=True)
    elif kind == "projective-plane":
        A = ea.CochainAlgebra(sim.projective_plane(), args.char)
    else:
        A = ea.CochainAlgebra(model_from_json(obj["model"]), args.char,
                              reduced=obj.get("reduced", False))
    po = ea.PathObject(A)
    table = {}
    for a in A.basis():
        v = po.section(a)
        table[str(a)] = {
            "section": sorted((str(k), c) for k, c in v.items()),
            "d0": sorted((str(k), c) for k, c in po.face(0, v).items()),
            "d1": sorted((str(k), c) for k, c in po.face(1, v).items()),
        }
    _emit({
        "base-degrees": A.degrees(),
        "path-degrees": po.algebra.degrees(),
        "section-table": table,
        "quasi-iso": verify_mod.section_is_quasi_iso(po, args.char),
    }, args)


def _hochschild_inputs(args, count):
    obj = _load(args.input)
    algebra = algebra_from_json(obj["algebra"], args.char)
    cochains = [hochschild_cochain_from_json(algebra, c) for c in obj["cochains"]]
    if len(cochains) < count:
        raise ValueError("expected at least %d cochains" % count)
    return algebra, cochains


def cmd_hh_diff(args):
    _algebra, (f, *_rest) = _hochschild_inputs(args, 1)
    _emit(hochschild_cochain_to_json(hh.differential(f)), args)


def cmd_hh_cup(args):
    _algebra, (f, g, *_rest) = _hochschild_inputs(args, 2)
    _emit(hochschild_cochain_to_json(hh.cup(f, g)), args)


def cmd_hh_brace(args):
    _algebra, cochains = _hochschild_inputs(args, 2)
    _emit(hochschild_cochain_to_json(hh.brace(cochains[0], *cochains[1:])), args)


def cmd_hh_bracket(args):
    _algebra, (f, g, *_rest) = _hochschild_inputs(args, 2)
    _emit(hochschild_cochain_to_json(hh.gerstenhaber_bracket(f, g)), args)


def cmd_verify(args):
    names = verify_mod.suite_names() if args.suite == "all" else [args.suite]
    failed = False
    report = []
    for name in names:
        checks = verify_mod.run(name, args.seed, max_arity=args.max_arity, max_degree=args.max_degree)
        ok = all(c.passed for c in checks)
        failed = failed or not ok
        if args.json:
            report.append({
                "suite": name,
                "seed": args.seed,
                "passed": ok,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
            })
        else:
            print("%-5s %s (seed %d, %d checks)" % ("PASS" if ok else "FAIL", name, args.seed, len(checks)))
            for c in checks:
                if not c.passed or args.verbose:
                    print("   %s" % c)
    if args.json:
        print(json.dumps(report, indent=2))
    return 2 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cochainops",
        description="Operadic structure on simplicial and Hochschild cochains.",
    )
    parser.add_argument("--char", type=int, default=0, help="coefficient characteristic (0 or a prime)")
    parser.add_argument("--compact", action="store_true", help="single-line JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **arguments):
        p = sub.add_parser(name)
        for arg_name, kwargs in arguments.items():
            p.add_argument(arg_name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    add("e-diff", cmd_e_diff, input={})
    p = sub.add_parser("e-compose")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--slot", type=int, required=True)
    p.set_defaults(fn=cmd_e_compose)
    add("e-diagonal", cmd_e_diagonal, input={})
    add("x-diff", cmd_x_diff, input={})
    p = sub.add_parser("x-compose")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--slot", type=int, required=True)
    p.set_defaults(fn=cmd_x_compose)
    add("tr", cmd_tr, input={})
    add("section", cmd_section, input={})
    add("complexity", cmd_complexity, input={})
    add("cell", cmd_cell, input={})
    add("aw", cmd_aw, input={})
    add("cup", cmd_cup, input={})
    p = sub.add_parser("cupi")
    p.add_argument("input")
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(fn=cmd_cupi)
    p = sub.add_parser("sq")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_sq)
    add("homology", cmd_homology, input={})
    p = sub.add_parser("sphere-eval")
    p.add_argument("input")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(fn=cmd_sphere_eval)
    add("cone-eval", cmd_cone_eval, input={})
    add("path-object", cmd_path_object, input={})
    add("hh-diff", cmd_hh_diff, input={})
    add("hh-cup", cmd_hh_cup, input={})
    add("hh-brace", cmd_hh_brace, input={})
    add("hh-bracket", cmd_hh_bracket, input={})
    p = sub.add_parser("verify")
    p.add_argument("suite", choices=verify_mod.suite_names() + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--max-arity", type=int, default=None,
                   help="cap the exhaustive enumeration arities (quick runs)")
    p.add_argument("--max-degree", type=int, default=None,
                   help="cap the exhaustive enumeration degrees (quick runs)")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.fn(args)
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return result or 0


if __name__ == "__main__":
    sys.exit(main())
