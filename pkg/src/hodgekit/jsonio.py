"""Wire formats (version 1): every value the CLI reads or writes.

Scalars travel as strings "a/b+c/d*i" with zero parts omitted; cyclotomic
values as {"order": n, "coeffs": ["a/b", ...]}.  Laurent polynomials are
term lists; bundles, filtrations, actions and families are plain objects
documented in schemas/wire-v1.json.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .scalars import Scalar, format_scalar, parse_scalar
from .laurent import LaurentPoly
from .univariate import LaurentZ, RatFunc, RATFUNC_S, SCALARS
from .birkhoff import P1Bundle
from .rees import FilteredSpace, ReesModule
from .twistor import QuaternionicSpace, SectionO1
from .lambda_family import HarmonicLine, HodPoint, PolySection
from .jump_loci import CWPresentation, SubtorusParam
from .gm_action import Arc, ProjPoint, WeightedAction
from .langton import DiskFamily

WIRE_VERSION = 1


def scalar_to_json(s: Scalar):
    if s.is_gaussian:
        return format_scalar(s)
    return {"order": s.order, "coeffs": [str(c) for c in s.coeffs]}


def scalar_from_json(x) -> Scalar:
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, int):
        return Scalar.rational(x)
    if isinstance(x, dict) and "order" in x:
        return Scalar.cyclotomic(int(x["order"]),
                                 [Fraction(c) for c in x["coeffs"]])
    raise PreconditionError(f"unreadable scalar {x!r}")


def vector_to_json(v):
    return [scalar_to_json(x) for x in v]


def vector_from_json(xs):
    if not isinstance(xs, list):
        raise PreconditionError("expected a list of scalars")
    return [scalar_from_json(x) for x in xs]


def matrix_to_json(m):
    return [vector_to_json(r) for r in m]


def matrix_from_json(rows):
    if not isinstance(rows, list) or not rows:
        raise PreconditionError("expected a non-empty matrix")
    return [vector_from_json(r) for r in rows]


def fraction_to_json(f):
    return str(Fraction(f))


def fraction_from_json(x):
    try:
        return Fraction(x)
    except (ValueError, TypeError):
        raise PreconditionError(f"unreadable rational {x!r}")


# -- multivariate Laurent -------------------------------------------------


def laurent_to_json(p: LaurentPoly):
    return [{"exp": list(e), "coeff": scalar_to_json(c)}
            for e, c in p.sorted_terms()]


def laurent_from_json(rank, data) -> LaurentPoly:
    if not isinstance(data, list):
        raise PreconditionError("laurent polynomial must be a term list")
    terms = {}
    for item in data:
        exp = tuple(int(e) for e in item["exp"])
        c = scalar_from_json(item["coeff"])
        terms[exp] = terms.get(exp, Scalar.zero()) + c
    return LaurentPoly(rank, terms)


# -- one-variable Laurent, gaussian or ratfun_s coefficients -------------


def _coeff_to_json(c, tag):
    if tag == "gaussian":
        return scalar_to_json(c)
    return {"num": vector_to_json(list(c.num)), "den": vector_to_json(list(c.den))}


def _coeff_from_json(x, tag):
    if tag == "gaussian":
        return scalar_from_json(x)
    return RatFunc(vector_from_json(x["num"]), vector_from_json(x["den"]))


def laurentz_to_json(lz: LaurentZ, tag):
    return [{"exp": e, "coeff": _coeff_to_json(c, tag)}
            for e, c in sorted(lz.terms.items())]


def laurentz_from_json(data, tag):
    field = SCALARS if tag == "gaussian" else RATFUNC_S
    terms = {}
    for item in data:
        e = int(item["exp"])
        c = _coeff_from_json(item["coeff"], tag)
        terms[e] = terms.get(e, field.zero) + c
    return LaurentZ(field, terms)


def bundle_to_json(b: P1Bundle):
    tag = b.field.tag
    return {"rank": b.n, "var": "z", "field": tag,
            "entries": [[laurentz_to_json(e, tag) for e in row]
                        for row in b.entries]}


def bundle_from_json(d) -> P1Bundle:
    tag = d.get("field", "gaussian")
    if tag not in ("gaussian", "ratfun_s"):
        raise PreconditionError(f"unknown coefficient field {tag!r}")
    field = SCALARS if tag == "gaussian" else RATFUNC_S
    entries = [[laurentz_from_json(e, tag) for e in row] for row in d["entries"]]
    if len(entries) != int(d["rank"]):
        raise PreconditionError("bundle rank disagrees with entry count")
    return P1Bundle(field, entries)


# -- filtrations ----------------------------------------------------------


def filtration_to_json(fs: FilteredSpace):
    return {"dim": fs.n,
            "steps": [{"p": p, "basis": matrix_to_json(fs.basis(p))}
                      for p in fs.steps_range()]}


def filtration_from_json(d) -> FilteredSpace:
    steps = {}
    for st in d["steps"]:
        basis = st["basis"]
        steps[int(st["p"])] = matrix_from_json(basis) if basis else []
    return FilteredSpace(int(d["dim"]), steps)


def rees_to_json(rm: ReesModule):
    return {"weights": list(rm.weights),
            "basis": matrix_to_json([list(v) for v in rm.basis])}


def rees_from_json(d) -> ReesModule:
    basis = matrix_from_json(d["basis"])
    weights = [int(w) for w in d["weights"]]
    if len(basis) != len(weights):
        raise PreconditionError("weights and basis sizes disagree")
    return ReesModule(basis=tuple(tuple(v) for v in basis), weights=tuple(weights))


# -- twistor --------------------------------------------------------------


def quaternionic_from_json(d) -> QuaternionicSpace:
    return QuaternionicSpace(int(d["r"]), matrix_from_json(d["J"]))


def section_to_json(s: SectionO1):
    return {"a": vector_to_json(list(s.a)), "b": vector_to_json(list(s.b))}


def section_from_json(d) -> SectionO1:
    return SectionO1(a=tuple(vector_from_json(d["a"])),
                     b=tuple(vector_from_json(d["b"])))


# -- rank-one family ------------------------------------------------------


def harmonic_to_json(h: HarmonicLine):
    return {"g": h.g, "nu": vector_to_json(list(h.nu)),
            "thetaPrime": vector_to_json(list(h.theta_prime))}


def harmonic_from_json(d) -> HarmonicLine:
    h = HarmonicLine(nu=tuple(vector_from_json(d["nu"])),
                     theta_prime=tuple(vector_from_json(d["thetaPrime"])))
    if h.g != int(d["g"]):
        raise PreconditionError("declared g disagrees with coordinates")
    return h


def hodpoint_to_json(p: HodPoint):
    return {"beta": vector_to_json(list(p.beta)),
            "eta": vector_to_json(list(p.eta)),
            "lambda": scalar_to_json(p.lam)}


def hodpoint_from_json(d) -> HodPoint:
    return HodPoint(beta=tuple(vector_from_json(d["beta"])),
                    eta=tuple(vector_from_json(d["eta"])),
                    lam=scalar_from_json(d["lambda"]))


def polysection_from_json(d) -> PolySection:
    return PolySection(
        beta_coeffs=tuple(tuple(vector_from_json(v)) for v in d["beta"]),
        eta_coeffs=tuple(tuple(vector_from_json(v)) for v in d["eta"]))


# -- jump loci ------------------------------------------------------------


def cw_to_json(p: CWPresentation):
    return {"a": p.a, "m": p.m, "l": p.l,
            "A": [[laurent_to_json(e) for e in row] for row in p.rows()]}


def cw_from_json(d) -> CWPresentation:
    a = int(d["a"])
    rows = tuple(tuple(laurent_from_json(a, e) for e in row) for row in d["A"])
    return CWPresentation(a=a, m=int(d["m"]), l=int(d["l"]), matrix=rows)


def subtorus_from_json(d) -> SubtorusParam:
    return SubtorusParam(zeta=tuple(vector_from_json(d["zeta"])),
                         exponents=tuple(tuple(int(x) for x in row)
                                         for row in d["E"]))


# -- torus actions --------------------------------------------------------


def action_from_json(d) -> WeightedAction:
    return WeightedAction([int(w) for w in d["weights"]],
                          fraction_from_json(d["a"]))


def action_to_json(w: WeightedAction):
    return {"weights": list(w.weights), "a": fraction_to_json(w.shift)}


def point_from_json(x) -> ProjPoint:
    if isinstance(x, str):
        return ProjPoint([parse_scalar(c) for c in x.split(":")])
    return ProjPoint(vector_from_json(x))


def point_to_json(p: ProjPoint):
    return vector_to_json(list(p.coords))


def arc_from_json(data) -> Arc:
    return Arc([laurentz_from_json(c, "gaussian") for c in data])


def arc_to_json(a: Arc):
    return [laurentz_to_json(c, "gaussian") for c in a.coords]


# -- disk families --------------------------------------------------------


def family_to_json(f: DiskFamily):
    out = []
    for row in f.entries:
        jr = []
        for e in row:
            jr.append([{"zexp": k,
                        "coeff": {"num": vector_to_json(list(c.num)),
                                  "den": vector_to_json(list(c.den))}}
                       for k, c in sorted(e.terms.items())])
        out.append(jr)
    return {"rank": f.n, "entries": out}


def family_from_json(d) -> DiskFamily:
    entries = []
    for row in d["entries"]:
        er = []
        for e in row:
            terms = {}
            for item in e:
                k = int(item["zexp"])
                c = RatFunc(vector_from_json(item["coeff"]["num"]),
                            vector_from_json(item["coeff"]["den"]))
                terms[k] = terms.get(k, RATFUNC_S.zero) + c
            er.append(LaurentZ(RATFUNC_S, terms))
        entries.append(er)
    if len(entries) != int(d["rank"]):
        raise PreconditionError("family rank disagrees with entry count")
    return DiskFamily(entries)
