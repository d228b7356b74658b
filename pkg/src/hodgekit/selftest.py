"""Seeded property battery behind the CLI selftest verb.

Each check is a named callable taking a seeded RNG; it raises on failure.
The pytest suite runs the same battery (plus much more), so this is the
quick in-the-field consistency probe, not the acceptance gate.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .scalars import Scalar
from .laurent import LaurentPoly
from . import linalg
from .univariate import LaurentZ, RatFunc, RATFUNC_S, SCALARS
from .birkhoff import P1Bundle, h0_twist, splitting_type
from .rees import FilteredSpace, build_rees, fiber, recover_filtration
from .twistor import (QuaternionicSpace, RealLinearOp, sphere_combination,
                      stereographic, structure_at, structure_at_closed)
from .lambda_family import (HarmonicLine, from_harmonic,
                            classify_invariant_section, prefered_section,
                            sigma_prime)
from .jump_loci import CWPresentation, betti_dims
from .gm_action import (ProjPoint, WeightedAction, decompose,
                        membership, orbit_equivalent)
from .langton import DiskFamily, generic_splitting, langton_reduce


def random_scalar(rng, small=6):
    return Scalar.gaussian(Fraction(rng.randint(-small, small),
                                    rng.randint(1, 4)),
                           Fraction(rng.randint(-small, small),
                                    rng.randint(1, 4)))


def random_nonzero_scalar(rng):
    while True:
        s = random_scalar(rng)
        if not s.is_zero:
            return s


def random_laurent(rng, rank, nterms=3, spread=2):
    terms = {}
    for _ in range(nterms):
        exp = tuple(rng.randint(-spread, spread) for _ in range(rank))
        terms[exp] = random_scalar(rng)
    return LaurentPoly(rank, terms)


def random_filtration(rng, max_dim=6, max_len=4):
    n = rng.randint(1, max_dim)
    vecs = []
    while len(vecs) < n:
        v = [random_scalar(rng, 3) for _ in range(n)]
        if linalg.rank(vecs + [v]) == len(vecs) + 1:
            vecs.append(v)
    p_min = rng.randint(-2, 2)
    length = rng.randint(1, max_len)
    cuts = sorted(rng.randint(0, n) for _ in range(length - 1))
    dims = [n] + [n - c for c in cuts]
    steps = {}
    for k, d in enumerate(dims):
        steps[p_min + k] = [list(v) for v in vecs[:d]] if d else []
    return FilteredSpace(n, steps)


def random_unimodular_z(rng, field, n, chart, ops=3):
    """Product of elementary matrices over F[z] (chart=+1) or F[1/z] (-1)."""
    one, zero = LaurentZ.one(field), LaurentZ.zero(field)
    mat = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        e = chart * rng.randint(0, 1)
        coeff = Scalar.rational(rng.randint(-2, 2))
        if field is not SCALARS:
            coeff = RatFunc([coeff])
        if (coeff.is_zero if hasattr(coeff, "is_zero") else False):
            continue
        add = LaurentZ(field, {e: coeff})
        for k in range(n):
            mat[i][k] = mat[i][k] + add * mat[j][k]
    return mat


# -- individual checks ----------------------------------------------------


def check_scalar_field_axioms(rng):
    for _ in range(40):
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        if not b.is_zero:
            assert (a / b) * b == a
        assert a.conj().conj() == a
        assert (a * b).conj() == a.conj() * b.conj()


def check_eval_character_hom(rng):
    for _ in range(20):
        rank = rng.randint(1, 3)
        p = random_laurent(rng, rank)
        q = random_laurent(rng, rank)
        rho = [random_nonzero_scalar(rng) for _ in range(rank)]
        assert (p * q).eval_character(rho) == \
            p.eval_character(rho) * q.eval_character(rho)


def check_rank_symmetries(rng):
    for _ in range(10):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[random_scalar(rng, 3) for _ in range(cols)] for _ in range(rows)]
        assert linalg.rank(m) == linalg.rank(linalg.transpose(m))
        perm = list(range(rows))
        rng.shuffle(perm)
        assert linalg.rank([m[i] for i in perm]) == linalg.rank(m)


def check_snf_determinant(rng):
    import itertools

    def idet(mm):
        n = len(mm)
        tot = 0
        for p in itertools.permutations(range(n)):
            sgn = 1
            for x in range(n):
                for y in range(x + 1, n):
                    if p[x] > p[y]:
                        sgn = -sgn
            prod = 1
            for r in range(n):
                prod *= mm[r][p[r]]
            tot += sgn * prod
        return tot

    for _ in range(10):
        n = rng.randint(1, 3)
        e = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        u, d, v = linalg.smith_normal_form(e)
        prod = 1
        for i in range(n):
            prod *= d[i][i]
        assert abs(prod) == abs(idet(e))
        assert abs(idet(u)) == 1 and abs(idet(v)) == 1


def check_birkhoff_roundtrip(rng):
    for _ in range(6):
        n = rng.randint(1, 3)
        exps = sorted((rng.randint(-2, 2) for _ in range(n)), reverse=True)
        diag = [[LaurentZ.monomial(SCALARS, -a) if i == j else LaurentZ.zero(SCALARS)
                 for j in range(n)] for i, a in enumerate(exps)]
        left = random_unimodular_z(rng, SCALARS, n, chart=-1)
        right = random_unimodular_z(rng, SCALARS, n, chart=+1)
        g = linalg.mat_mul(linalg.mat_mul(left, diag), right)
        b = P1Bundle(SCALARS, g)
        assert splitting_type(b) == exps
        a = splitting_type(b)
        m = rng.randint(-3, 3)
        assert h0_twist(b, m) == sum(max(0, x + m + 1) for x in a)


def check_rees_roundtrip(rng):
    for _ in range(10):
        fs = random_filtration(rng)
        rm = build_rees(fs)
        assert recover_filtration(rm).equal(fs)
        assert sum(fiber(rm, 0).values()) == fiber(rm, 1)


def check_twistor_identities(rng):
    qs = QuaternionicSpace.standard(1)
    minus1 = RealLinearOp.mult(-Scalar.one(), qs.dim)
    for _ in range(6):
        lam = random_scalar(rng, 3)
        op = structure_at(qs, lam)
        assert op.compose(op) == minus1
        assert op == structure_at_closed(qs, lam)
        assert op == sphere_combination(qs, stereographic(lam))


def check_sigma_prime_invariance(rng):
    for _ in range(10):
        g = rng.randint(1, 3)
        h = HarmonicLine(nu=tuple(random_scalar(rng) for _ in range(g)),
                         theta_prime=tuple(random_scalar(rng) for _ in range(g)))
        lam = random_nonzero_scalar(rng)
        assert sigma_prime(prefered_section(h, lam)) == \
            prefered_section(h, -(lam.conj().inv()))
        assert classify_invariant_section(from_harmonic(h)) == ("prefered", h)


def check_jump_euler(rng):
    for _ in range(10):
        a = rng.randint(1, 2)
        m = rng.randint(1, 3)
        l = rng.randint(1, 3)
        mat = tuple(tuple(_int_laurent(rng, a) for _ in range(m)) for _ in range(l))
        p = CWPresentation(a=a, m=m, l=l, matrix=mat)
        rho = [rng.choice([Scalar.rational(2), -Scalar.one(), Scalar.i()])
               for _ in range(a)]
        h2, h3 = betti_dims(p, rho)
        assert h2 - h3 == m - l


def _int_laurent(rng, rank):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        exp = tuple(rng.randint(-1, 1) for _ in range(rank))
        terms[exp] = Scalar.rational(rng.randint(-2, 2))
    return LaurentPoly(rank, terms)


def check_gm_membership(rng):
    action = WeightedAction([0, 1, 2], Fraction(-1, 2))
    dec = decompose(action)
    pool = [Scalar.zero(), Scalar.one(), Scalar.rational(2), -Scalar.one()]
    upoints = []
    for _ in range(60):
        try:
            pt = ProjPoint([rng.choice(pool) for _ in range(3)])
        except Exception:
            continue
        status = membership(action, dec, pt)  # asserts Y+/Y- disjointness
        if status == "in_U":
            upoints.append(pt)
    for pt in upoints[:10]:
        assert orbit_equivalent(action, pt, pt)
        t = Scalar.rational(rng.randint(2, 5))
        assert orbit_equivalent(action, pt, action.act(t, pt))


def check_langton_fixture(rng):
    one = RatFunc([1])
    s = RatFunc.var()
    z0 = LaurentZ.zero(RATFUNC_S)
    fam = DiskFamily([[LaurentZ(RATFUNC_S, {1: one}), LaurentZ(RATFUNC_S, {0: s})],
                      [z0, LaurentZ(RATFUNC_S, {-1: one})]])
    out, trail, certs = langton_reduce(fam)
    assert len(certs) == 1
    assert trail[-1].special_type == (0, 0)
    assert generic_splitting(out) == [0, 0]


CHECKS = [
    ("scalar-field-axioms", check_scalar_field_axioms),
    ("eval-character-homomorphism", check_eval_character_hom),
    ("rank-symmetries", check_rank_symmetries),
    ("snf-determinant", check_snf_determinant),
    ("birkhoff-roundtrip", check_birkhoff_roundtrip),
    ("rees-roundtrip", check_rees_roundtrip),
    ("twistor-identities", check_twistor_identities),
    ("sigma-prime-invariance", check_sigma_prime_invariance),
    ("jump-loci-euler", check_jump_euler),
    ("gm-membership", check_gm_membership),
    ("langton-fixture", check_langton_fixture),
]


def run_selftest(seed: int):
    """Run the battery; returns a list of {name, passed, detail}."""
    results = []
    for name, fn in CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            fn(rng)
            results.append({"name": name, "passed": True})
        except Exception as ex:  # noqa: BLE001 - report, don't crash
            results.append({"name": name, "passed": False,
                            "detail": f"{type(ex).__name__}: {ex}"})
    return results
