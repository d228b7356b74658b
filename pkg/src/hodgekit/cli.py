"""Batch CLI: every module behind a subcommand with JSON input and output.

Exit codes: 0 success, 1 precondition or schema violation (the payload
carries a machine-readable reason), 2 internal invariant breach.  Seeds
are mandatory for randomized verbs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InternalInvariantError, PreconditionError
from . import jsonio
from . import linalg
from .birkhoff import splitting_type
from . import rees as rees_mod
from . import twistor as tw
from . import lambda_family as lf
from . import jump_loci as jl
from . import gm_action as gm
from . import langton as lg
from .selftest import run_selftest

RANDOMIZED = {("jumploci", "scan"), ("selftest", None)}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise PreconditionError(message)


def _payload(args):
    if args.inline is not None:
        try:
            return json.loads(args.inline)
        except json.JSONDecodeError as ex:
            raise PreconditionError(f"inline JSON does not parse: {ex}")
    if args.input is not None:
        try:
            with open(args.input) as fh:
                return json.load(fh)
        except OSError as ex:
            raise PreconditionError(f"cannot read input: {ex}")
        except json.JSONDecodeError as ex:
            raise PreconditionError(f"input JSON does not parse: {ex}")
    return None


def _gm_payload(args):
    data = _payload(args)
    if data is not None:
        return data
    if args.weights is None:
        raise PreconditionError("missing input: give --input/--inline or --weights")
    data = {"action": {"weights": [int(w) for w in args.weights.split(",")],
                       "a": args.a if args.a is not None else "0"}}
    if args.point:
        data["point"] = args.point
    return data


def _need(data, *keys):
    if data is None:
        raise PreconditionError("missing input: give --input or --inline")
    for k in keys:
        if k not in data:
            raise PreconditionError(f"input is missing the field {k!r}")
    return data


# -- handlers, one per (subcommand, verb) ---------------------------------


def _rings(verb, data, seed):
    if verb == "conj":
        _need(data, "scalar")
        return {"scalar": jsonio.scalar_to_json(
            jsonio.scalar_from_json(data["scalar"]).conj())}
    if verb == "eval":
        _need(data, "poly", "rho")
        rho = jsonio.vector_from_json(data["rho"])
        poly = jsonio.laurent_from_json(len(rho), data["poly"])
        return {"scalar": jsonio.scalar_to_json(poly.eval_character(rho))}
    if verb == "rank":
        _need(data, "matrix")
        return {"rank": linalg.rank(jsonio.matrix_from_json(data["matrix"]))}
    if verb == "minors":
        _need(data, "matrix", "k", "vars")
        rank_a = int(data["vars"])
        rows = [[jsonio.laurent_from_json(rank_a, e) for e in r]
                for r in data["matrix"]]
        from .laurent import LaurentPoly
        mins = linalg.minors(rows, int(data["k"]),
                             LaurentPoly.one(rank_a), LaurentPoly.zero(rank_a))
        return {"minors": [jsonio.laurent_to_json(q) for q in mins]}
    if verb == "snf":
        _need(data, "matrix")
        u, d, v = linalg.smith_normal_form(data["matrix"])
        return {"U": u, "D": d, "V": v}
    raise PreconditionError(f"unknown rings verb {verb!r}")


def _rees(verb, data, seed):
    if verb == "build":
        _need(data, "filtration")
        rm = rees_mod.build_rees(jsonio.filtration_from_json(data["filtration"]))
        return jsonio.rees_to_json(rm)
    if verb == "recover":
        _need(data, "rees")
        fs = rees_mod.recover_filtration(jsonio.rees_from_json(data["rees"]))
        return {"filtration": jsonio.filtration_to_json(fs)}
    if verb == "fiber":
        _need(data, "rees", "point")
        rm = jsonio.rees_from_json(data["rees"])
        out = rees_mod.fiber(rm, int(data["point"]))
        if isinstance(out, dict):
            return {"grades": {str(p): d for p, d in sorted(out.items())}}
        return {"dim": out}
    if verb == "griffiths":
        _need(data, "filtration", "nabla")
        fs = jsonio.filtration_from_json(data["filtration"])
        mats = [jsonio.matrix_from_json(m) for m in data["nabla"]]
        return {"transversal": rees_mod.griffiths_check(fs, mats)}
    if verb == "glue":
        _need(data, "F", "Fbar")
        fs = jsonio.filtration_from_json(data["F"])
        fsb = jsonio.filtration_from_json(data["Fbar"])
        pairing = (jsonio.matrix_from_json(data["pairing"])
                   if data.get("pairing") else None)
        bundle, report = rees_mod.rees_p1(fs, fsb, pairing)
        return {"splitting": list(report.splitting), "pure": report.pure,
                "weight": report.weight,
                "transition": jsonio.bundle_to_json(bundle)}
    raise PreconditionError(f"unknown rees verb {verb!r}")


def _twistor(verb, data, seed):
    if verb == "structure":
        _need(data, "r", "J", "lambda")
        qs = jsonio.quaternionic_from_json(data)
        op = tw.structure_at(qs, jsonio.scalar_from_json(data["lambda"]))
        pt = tw.stereographic(jsonio.scalar_from_json(data["lambda"]))
        return {"P": jsonio.matrix_to_json(op.p), "Q": jsonio.matrix_to_json(op.q),
                "sphere": {"x": str(pt.x), "y": str(pt.y), "z": str(pt.z)}}
    if verb == "section":
        _need(data, "r", "J", "v", "lambda0")
        qs = jsonio.quaternionic_from_json(data)
        sec = tw.invariant_section_through(
            qs, jsonio.vector_from_json(data["v"]),
            jsonio.scalar_from_json(data["lambda0"]))
        return jsonio.section_to_json(sec)
    if verb == "bundle":
        _need(data, "r", "J")
        qs = jsonio.quaternionic_from_json(data)
        bundle = tw.twistor_bundle(qs)
        return {"splitting": list(splitting_type(bundle)),
                "transition": jsonio.bundle_to_json(bundle)}
    if verb == "sff":
        _need(data, "r", "rprime")
        dim = tw.quaternionic_sff_space(int(data["r"]), int(data["rprime"]),
                                        data.get("constraints", "quaternionic"))
        return {"dimension": dim}
    raise PreconditionError(f"unknown twistor verb {verb!r}")


def _lambda(verb, data, seed):
    if verb == "pref":
        _need(data, "line", "lambda")
        h = jsonio.harmonic_from_json(data["line"])
        p = lf.prefered_section(h, jsonio.scalar_from_json(data["lambda"]))
        return jsonio.hodpoint_to_json(p)
    if verb == "sigma":
        _need(data, "point")
        return jsonio.hodpoint_to_json(
            lf.sigma_prime(jsonio.hodpoint_from_json(data["point"])))
    if verb == "act":
        _need(data, "t", "point")
        return jsonio.hodpoint_to_json(
            lf.gm_act(jsonio.scalar_from_json(data["t"]),
                      jsonio.hodpoint_from_json(data["point"])))
    if verb == "classify":
        _need(data, "beta", "eta")
        cand = jsonio.polysection_from_json(data)
        verdict, h = lf.classify_invariant_section(cand)
        out = {"verdict": verdict}
        if h is not None:
            out["line"] = jsonio.harmonic_to_json(h)
        return out
    raise PreconditionError(f"unknown lambda verb {verb!r}")


def _jumploci(verb, data, seed):
    if verb == "dims":
        _need(data, "cw", "rho")
        p = jsonio.cw_from_json(data["cw"])
        h2, h3 = jl.betti_dims(p, jsonio.vector_from_json(data["rho"]))
        return {"h2": h2, "h3": h3}
    if verb == "ideal":
        _need(data, "cw", "k")
        p = jsonio.cw_from_json(data["cw"])
        gens = jl.jump_ideal(p, int(data["k"]))
        return {"generators": [jsonio.laurent_to_json(g) for g in gens]}
    if verb == "contains":
        _need(data, "cw", "k", "subtorus")
        p = jsonio.cw_from_json(data["cw"])
        sub = jsonio.subtorus_from_json(data["subtorus"])
        return {"contained": jl.contains_subtorus(p, int(data["k"]), sub)}
    if verb == "scan":
        _need(data, "cw", "k", "count")
        if seed is None:
            raise PreconditionError("scan is randomized: --seed is mandatory")
        p = jsonio.cw_from_json(data["cw"])
        found = jl.character_scan(p, int(data["k"]), int(data["count"]), seed)
        return {"characters": [jsonio.vector_to_json(list(r)) for r in found]}
    raise PreconditionError(f"unknown jumploci verb {verb!r}")


def _gmquot(verb, data, seed):
    action = jsonio.action_from_json(_need(data, "action")["action"])
    if verb == "fixed":
        return {"components": [{"weight": c.weight, "indices": list(c.indices)}
                               for c in action.fixed_components()]}
    if verb == "limits":
        pt = jsonio.point_from_json(_need(data, "point")["point"])
        return {"limit0": jsonio.point_to_json(gm.limit0(action, pt)),
                "limitinf": jsonio.point_to_json(gm.limitinf(action, pt))}
    if verb == "order":
        witnesses = None
        if data.get("witnesses"):
            witnesses = [jsonio.point_from_json(x) for x in data["witnesses"]]
        order = gm.comp_order(action, witnesses)
        return {"pairs": [list(p) for p in order.sorted_pairs()]}
    if verb == "decompose":
        dec = gm.decompose(action)
        return {"plus": sorted(dec.plus_weights), "minus": sorted(dec.minus_weights)}
    if verb == "membership":
        pt = jsonio.point_from_json(_need(data, "point")["point"])
        dec = gm.decompose(action)
        return {"status": gm.membership(action, dec, pt)}
    if verb == "orbit-eq":
        _need(data, "x", "y")
        x = jsonio.point_from_json(data["x"])
        y = jsonio.point_from_json(data["y"])
        return {"equivalent": gm.orbit_equivalent(action, x, y)}
    if verb == "arc":
        arc = jsonio.arc_from_json(_need(data, "arc")["arc"])
        segments = gm.newton_limits(action, arc)
        segs = []
        for s in segments:
            segs.append({
                "kind": s.kind,
                "lo": None if s.lo is None else str(s.lo),
                "hi": None if s.hi is None else str(s.hi),
                "component": s.weight,
                "point": jsonio.point_to_json(s.point)})
        out = {"segments": segs}
        try:
            dec = gm.decompose(action)
            eps, landing = gm.choose_gauge(action, dec, arc)
            out["gauge"] = {"eps": str(eps),
                            "landing": jsonio.point_to_json(landing)}
        except PreconditionError:
            out["gauge"] = None
        return out
    if verb == "invariants":
        degree = int(_need(data, "degree")["degree"])
        return {"monomials": [list(m) for m in gm.invariant_monomials(action, degree)]}
    raise PreconditionError(f"unknown gmquot verb {verb!r}")


def _langton(verb, data, seed):
    fam = jsonio.family_from_json(_need(data, "family")["family"])
    if verb == "generic":
        return {"splitting": list(lg.generic_splitting(fam))}
    if verb == "special":
        return {"splitting": list(lg.special_splitting(fam))}
    if verb == "step":
        before = tuple(lg.special_splitting(fam))
        new_fam, cert, _ = lg.langton_step(fam)
        return {"family": jsonio.family_to_json(new_fam),
                "special_before": list(before),
                "special_after": list(lg.special_splitting(new_fam)),
                "certificate": _cert_json(cert)}
    if verb == "reduce":
        out, trail, certs = lg.langton_reduce(fam)
        return {"steps": len(certs),
                "final_type": list(trail[-1].special_type),
                "trail": [{"step": r.step, "special_type": list(r.special_type)}
                          for r in trail],
                "family": jsonio.family_to_json(out),
                "certificates": [_cert_json(c) for c in certs]}
    raise PreconditionError(f"unknown langton verb {verb!r}")


def _cert_json(cert):
    return {"left": [[jsonio.laurentz_to_json(e, "ratfun_s") for e in row]
                     for row in cert.left],
            "right": [[jsonio.laurentz_to_json(e, "ratfun_s") for e in row]
                      for row in cert.right]}


HANDLERS = {
    "rings": (_rings, ["conj", "eval", "rank", "minors", "snf"]),
    "rees": (_rees, ["build", "recover", "fiber", "griffiths", "glue"]),
    "twistor": (_twistor, ["structure", "section", "bundle", "sff"]),
    "lambda": (_lambda, ["pref", "sigma", "act", "classify"]),
    "jumploci": (_jumploci, ["dims", "ideal", "contains", "scan"]),
    "gmquot": (_gmquot, ["fixed", "limits", "order", "decompose",
                         "membership", "orbit-eq", "arc", "invariants"]),
    "langton": (_langton, ["generic", "special", "step", "reduce"]),
}


def build_parser():
    parser = _Parser(prog="hodgekit",
                     description="exact-arithmetic toolbox, JSON in / JSON out")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, (_, verbs) in HANDLERS.items():
        p = sub.add_parser(name)
        p.add_argument("verb", choices=verbs)
        _common_flags(p)
        if name == "gmquot":
            p.add_argument("--weights", help="comma-separated coordinate weights")
            p.add_argument("--a", help="linearization shift p/q")
            p.add_argument("--point", help="colon-separated scalars, e.g. 1:1:0")
    st = sub.add_parser("selftest")
    _common_flags(st)
    return parser


def _common_flags(p):
    p.add_argument("--input", help="path to a JSON input file")
    p.add_argument("--inline", help="inline JSON input")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", help="also write the result JSON here")


def _merge_value_flags(argv):
    """Join "--a -1/2" into "--a=-1/2" so negative values survive argparse."""
    merged = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in ("--a", "--point", "--weights") and i + 1 < len(argv):
            merged.append(f"{tok}={argv[i + 1]}")
            skip = True
        else:
            merged.append(tok)
    return merged


def run(argv):
    parser = build_parser()
    args = parser.parse_args(_merge_value_flags(argv))
    if args.subcommand == "selftest":
        if args.seed is None:
            raise PreconditionError("selftest is randomized: --seed is mandatory")
        results = run_selftest(args.seed)
        failed = [r for r in results if not r["passed"]]
        out = {"passed": len(results) - len(failed), "failed": len(failed),
               "checks": results}
        return out, (1 if failed else 0)
    handler, _ = HANDLERS[args.subcommand]
    if args.subcommand == "gmquot":
        data = _gm_payload(args)
    else:
        data = _payload(args)
    try:
        result = handler(args.verb, data, args.seed)
    except (KeyError, TypeError, ValueError) as ex:
        if isinstance(ex, PreconditionError):
            raise
        raise PreconditionError(f"input does not match the schema: {ex}")
    return result, 0


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        result, code = run(argv)
    except PreconditionError as ex:
        _emit({"error": {"kind": "precondition", "reason": str(ex)}}, None)
        return 1
    except InternalInvariantError as ex:
        _emit({"error": {"kind": "internal", "reason": str(ex)}}, None)
        return 2
    out_path = None
    for i, a in enumerate(argv):
        if a == "--out" and i + 1 < len(argv):
            out_path = argv[i + 1]
    _emit(result, out_path)
    return code


def _emit(obj, out_path):
    text = json.dumps(obj, indent=2, sort_keys=False)
    print(text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")


if __name__ == "__main__":
    sys.exit(main())
