"""Quaternionic linear algebra over exact scalars.

A quaternionic space is a complex space W of dimension 2r carrying the
complex structure I (multiplication by i) and an antilinear J given by a
matrix: J(v) = J_m conj(v), with J_m conj(J_m) = -1.  Real-linear
operators are stored as pairs (P, Q) acting by w -> P w + Q conj(w),
which makes composition, inversion and equality exact matrix algebra.

The family of complex structures over the sphere is realised two ways
(the direct (u, v) conjugation formula and the closed 1 - i*lambda*J
form) and the associated bundle over P^1 is produced as an explicit
transition matrix whose splitting type certifies weight-one purity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, InternalInvariantError
from . import linalg
from .birkhoff import P1Bundle
from .scalars import Scalar
from .univariate import LaurentZ, RatFunc, SCALARS


def _conj_mat(m):
    return [[x.conj() for x in row] for row in m]


def _conj_vec(v):
    return [x.conj() for x in v]


def _scalar_mat(rows):
    return [[x if isinstance(x, Scalar) else Scalar.rational(x) for x in row]
            for row in rows]


class RealLinearOp:
    """w -> P w + Q conj(w) on Scalar^n; exact composition algebra."""

    def __init__(self, p, q):
        self.p = p
        self.q = q
        self.n = len(p)

    @staticmethod
    def zero(n):
        z = [[Scalar.zero()] * n for _ in range(n)]
        return RealLinearOp(z, [row[:] for row in z])

    @staticmethod
    def identity(n):
        return RealLinearOp(linalg.identity(n, Scalar.one(), Scalar.zero()),
                            [[Scalar.zero()] * n for _ in range(n)])

    @staticmethod
    def mult(c, n):
        """Multiplication by the complex scalar c."""
        return RealLinearOp([[c if i == j else Scalar.zero() for j in range(n)]
                             for i in range(n)],
                            [[Scalar.zero()] * n for _ in range(n)])

    @staticmethod
    def antilinear(mat):
        n = len(mat)
        return RealLinearOp([[Scalar.zero()] * n for _ in range(n)], mat)

    def apply(self, v):
        cv = _conj_vec(v)
        return [sum((self.p[i][k] * v[k] + self.q[i][k] * cv[k]
                     for k in range(self.n)), Scalar.zero())
                for i in range(self.n)]

    def compose(self, other):
        # (P1, Q1) o (P2, Q2) = (P1 P2 + Q1 conj(Q2), P1 Q2 + Q1 conj(P2))
        p = _madd(linalg.mat_mul(self.p, other.p),
                  linalg.mat_mul(self.q, _conj_mat(other.q)))
        q = _madd(linalg.mat_mul(self.p, other.q),
                  linalg.mat_mul(self.q, _conj_mat(other.p)))
        return RealLinearOp(p, q)

    def __add__(self, other):
        return RealLinearOp(_madd(self.p, other.p), _madd(self.q, other.q))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RealLinearOp([[-x for x in r] for r in self.p],
                            [[-x for x in r] for r in self.q])

    def scale_rational(self, c):
        c = Fraction(c)
        sc = Scalar.rational(c)
        return RealLinearOp([[x * sc for x in r] for r in self.p],
                            [[x * sc for x in r] for r in self.q])

    def doubled(self):
        """The 2n x 2n complex matrix acting on (w, conj w)."""
        n = self.n
        top = [self.p[i] + self.q[i] for i in range(n)]
        bot = [_conj_mat(self.q)[i] + _conj_mat(self.p)[i] for i in range(n)]
        return top + bot

    def inverse(self):
        n = self.n
        try:
            dbl = linalg.invert(self.doubled(), Scalar.one(), Scalar.zero())
        except PreconditionError:
            raise InternalInvariantError("real-linear operator is singular")
        p = [row[:n] for row in dbl[:n]]
        q = [row[n:] for row in dbl[:n]]
        return RealLinearOp(p, q)

    def __eq__(self, other):
        if not isinstance(other, RealLinearOp):
            return NotImplemented
        return linalg.mat_eq(self.p, other.p) and linalg.mat_eq(self.q, other.q)

    def __repr__(self):
        return f"RealLinearOp(n={self.n})"


def _madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


class QuaternionicSpace:
    """(W, I, J) with I = mult by i and J antilinear, J^2 = -1."""

    def __init__(self, r, j_matrix):
        self.r = r
        self.dim = 2 * r
        jm = _scalar_mat(j_matrix)
        if len(jm) != self.dim or any(len(row) != self.dim for row in jm):
            raise PreconditionError(f"J matrix must be {self.dim}x{self.dim}")
        self.jm = jm
        prod = linalg.mat_mul(jm, _conj_mat(jm))
        minus_id = [[-Scalar.one() if i == j else Scalar.zero()
                     for j in range(self.dim)] for i in range(self.dim)]
        if not linalg.mat_eq(prod, minus_id):
            raise PreconditionError("J_m conj(J_m) != -1: not a quaternionic structure")

    @staticmethod
    def standard(r):
        """Block sum of r copies of [[0, -1], [1, 0]]."""
        dim = 2 * r
        jm = [[Scalar.zero()] * dim for _ in range(dim)]
        for k in range(r):
            jm[2 * k][2 * k + 1] = -Scalar.one()
            jm[2 * k + 1][2 * k] = Scalar.one()
        return QuaternionicSpace(r, jm)

    def op_i(self):
        return RealLinearOp.mult(Scalar.i(), self.dim)

    def op_j(self):
        return RealLinearOp.antilinear(self.jm)

    def op_k(self):
        return self.op_i().compose(self.op_j())

    def apply_j(self, v):
        cv = _conj_vec(list(v))
        return [sum((self.jm[i][k] * cv[k] for k in range(self.dim)),
                    Scalar.zero()) for i in range(self.dim)]


@dataclass(frozen=True)
class SpherePoint:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        if self.x * self.x + self.y * self.y + self.z * self.z != 1:
            raise PreconditionError("point is not exactly on the unit sphere")


def stereographic(lam):
    """lambda = u + iv on the sphere; None stands for infinity."""
    if lam is None:
        return SpherePoint(Fraction(-1), Fraction(0), Fraction(0))
    if not lam.is_gaussian:
        raise PreconditionError("stereographic needs a gaussian value")
    u, v = lam.re, lam.im
    t = u * u + v * v
    d = 1 + t
    return SpherePoint((1 - t) / d, 2 * u / d, 2 * v / d)


def inverse_stereographic(pt: SpherePoint):
    if pt.x == -1:
        return None
    d = 1 + pt.x
    return Scalar.gaussian(pt.y / d, pt.z / d)


def sphere_combination(qs: QuaternionicSpace, pt: SpherePoint) -> RealLinearOp:
    """x I + y J + z K."""
    return (qs.op_i().scale_rational(pt.x)
            + qs.op_j().scale_rational(pt.y)
            + qs.op_k().scale_rational(pt.z))


def structure_at(qs: QuaternionicSpace, lam: Scalar) -> RealLinearOp:
    """I_lambda by conjugation: (1 - uK + vJ)^(-1) I (1 - uK + vJ)."""
    if not lam.is_gaussian:
        raise PreconditionError("the structure family is parameterized by Q(i)")
    u, v = lam.re, lam.im
    g = (RealLinearOp.identity(qs.dim)
         - qs.op_k().scale_rational(u)
         + qs.op_j().scale_rational(v))
    return g.inverse().compose(qs.op_i()).compose(g)


def structure_at_closed(qs: QuaternionicSpace, lam: Scalar) -> RealLinearOp:
    """Same operator through the closed form (1 - i lam J)^(-1) I (1 - i lam J)."""
    q = (RealLinearOp.identity(qs.dim)
         - RealLinearOp.mult(Scalar.i() * lam, qs.dim).compose(qs.op_j()))
    return q.inverse().compose(qs.op_i()).compose(q)


@dataclass(frozen=True)
class SectionO1:
    """lambda -> a + b*lambda in the finite chart; (b, a) in the other."""

    a: tuple
    b: tuple

    def value_at(self, lam: Scalar):
        return [x + y * lam for x, y in zip(self.a, self.b)]

    def chart_infinity(self):
        return self.b, self.a


def sigma_section(qs: QuaternionicSpace, s: SectionO1) -> SectionO1:
    """The antilinear involution sigma(a + b lambda) = -J(b) + J(a) lambda."""
    return SectionO1(a=tuple(-x for x in qs.apply_j(list(s.b))),
                     b=tuple(qs.apply_j(list(s.a))))


def invariant_section_through(qs: QuaternionicSpace, v, lam0: Scalar) -> SectionO1:
    """The unique sigma-invariant section a + J(a) lambda through (lam0, v)."""
    n = qs.dim
    v = [x if isinstance(x, Scalar) else Scalar.rational(x) for x in v]
    if len(v) != n:
        raise PreconditionError("point has wrong dimension")
    # a + lam0 J_m conj(a) = v, solved together with its conjugate
    top = [[Scalar.one() if i == j else Scalar.zero() for j in range(n)]
           + [lam0 * qs.jm[i][j] for j in range(n)] for i in range(n)]
    bot = [[(lam0 * qs.jm[i][j]).conj() for j in range(n)]
           + [Scalar.one() if i == j else Scalar.zero() for j in range(n)]
           for i in range(n)]
    rhs = v + _conj_vec(v)
    try:
        full = linalg.invert(top + bot, Scalar.one(), Scalar.zero())
    except PreconditionError:
        raise InternalInvariantError(
            "invariant-section system is singular: J invariant is broken")
    x = [sum((full[i][k] * rhs[k] for k in range(2 * n)), Scalar.zero())
         for i in range(2 * n)]
    a, abar = x[:n], x[n:]
    if abar != _conj_vec(a):
        raise InternalInvariantError("doubled solve lost the reality constraint")
    sec = SectionO1(a=tuple(a), b=tuple(qs.apply_j(a)))
    if sec.value_at(lam0) != v:
        raise InternalInvariantError("invariant section misses its defining point")
    return sec


def invariant_space_real_dimension(qs: QuaternionicSpace) -> int:
    """Real dimension of the space of sigma-invariant sections (expect 4r)."""
    n = qs.dim
    one, zero = Scalar.one(), Scalar.zero()

    def block(label):
        return {"I": [[one if i == j else zero for j in range(n)] for i in range(n)],
                "0": [[zero] * n for _ in range(n)],
                "J": [row[:] for row in qs.jm],
                "Jc": _conj_mat(qs.jm)}[label]

    # unknown order (a, abar, b, bbar); rows encode b = J abar, bbar = Jc a,
    # a = -J bbar, abar = -Jc b, i.e. invariance plus its conjugate
    def neg(m):
        return [[-x for x in row] for row in m]

    z = block("0")
    sys_rows = []
    sys_rows += [z[i] + neg(block("J"))[i] + block("I")[i] + z[i] for i in range(n)]
    sys_rows += [neg(block("Jc"))[i] + z[i] + z[i] + block("I")[i] for i in range(n)]
    sys_rows += [block("I")[i] + z[i] + z[i] + block("J")[i] for i in range(n)]
    sys_rows += [z[i] + block("I")[i] + block("Jc")[i] + z[i] for i in range(n)]
    return len(linalg.nullspace(sys_rows, one, zero))


def twistor_bundle(qs: QuaternionicSpace) -> P1Bundle:
    """Transition matrix of the bundle of structure eigenspaces over P^1.

    On the complexification (w1, w2) the -i eigenspace of I_lambda is the
    image of the -i eigenspace of I under (1 - i lambda J)^(-1), spanned by
    the columns (i lambda J_m e_j, e_j).  Expressing the chart-at-infinity
    quotient frame in the finite-chart one by exact elimination over
    rational functions of lambda yields the transition matrix; its
    splitting type must be (1, ..., 1).
    """
    n = qs.dim
    rf_one, rf_zero = RatFunc([1]), RatFunc([])
    ivar = RatFunc([Scalar.zero(), Scalar.i()])  # i * lambda

    cols = []
    for j in range(n):  # moving frame of the eigenspace family
        top = [ivar * RatFunc([qs.jm[i][j]]) for i in range(n)]
        bot = [rf_one if i == j else rf_zero for i in range(n)]
        cols.append(top + bot)
    for j in range(n):  # constant frame spanning the complementary block
        top = [rf_one if i == j else rf_zero for i in range(n)]
        cols.append(top + [rf_zero] * n)

    mat = [[cols[j][i] for j in range(2 * n)] for i in range(2 * n)]
    tmat = [[rf_zero] * n for _ in range(n)]
    for j in range(n):
        rhs = [rf_zero] * n + [rf_one if i == j else rf_zero for i in range(n)]
        x = linalg.solve(mat, rhs, rf_one, rf_zero)
        if x is None:
            raise InternalInvariantError("degenerate eigenframe family")
        for k in range(n):
            tmat[k][j] = x[n + k]
    ginv = linalg.invert(tmat, rf_one, rf_zero)
    entries = [[_ratfunc_to_laurent(ginv[i][j]) for j in range(n)] for i in range(n)]
    return P1Bundle(SCALARS, entries)


def _ratfunc_to_laurent(rf: RatFunc) -> LaurentZ:
    if rf.is_zero:
        return LaurentZ.zero(SCALARS)
    den = list(rf.den)
    k = len(den) - 1
    if any(not c.is_zero for c in den[:-1]):
        raise InternalInvariantError("transition entry is not Laurent")
    lead = den[-1].inv()
    return LaurentZ(SCALARS, {t - k: c * lead for t, c in enumerate(rf.num)})


# -- quadratic maps equivariant for the structures ------------------------


def quaternionic_sff_space(r, rprime, constraints="quaternionic") -> int:
    """Real dimension of symmetric bilinear maps W x W -> W' commuting with
    the listed structures in each argument (I alone, or I and J).

    Uses the standard quaternionic structures on both sides and solves the
    realified constraint system exactly; the quaternionic answer is 0.
    """
    if constraints not in ("quaternionic", "complex"):
        raise PreconditionError("constraints must be 'quaternionic' or 'complex'")
    src = _real_structures(r)
    dst = _real_structures(rprime)
    nxs, nxd = 4 * r, 4 * rprime

    def uidx(a, b, g):
        if a > b:
            a, b = b, a
        return (a * nxs - a * (a - 1) // 2 + (b - a)) * nxd + g

    nunknown = (nxs * (nxs + 1) // 2) * nxd
    ops = ["I"] if constraints == "complex" else ["I", "J"]
    rows = []
    for opname in ops:
        s_op = src[opname]
        d_op = dst[opname]
        for a in range(nxs):
            for b in range(nxs):
                for g in range(nxd):
                    row = {}
                    for dd in range(nxs):  # B(op e_a, e_b)_g
                        c = s_op[dd][a]
                        if c:
                            key = uidx(dd, b, g)
                            row[key] = row.get(key, Fraction(0)) + c
                    for gg in range(nxd):  # -(op' B(e_a, e_b))_g
                        c = d_op[g][gg]
                        if c:
                            key = uidx(a, b, gg)
                            row[key] = row.get(key, Fraction(0)) - c
                    row = {k: v for k, v in row.items() if v}
                    if row:
                        rows.append(row)
    return nunknown - _sparse_rank(rows)


def _real_structures(r):
    """Realified I and J of the standard structure, as rational matrices.

    Real coordinates are ordered (Re z_1, Im z_1, ..., Re z_2r, Im z_2r).
    """
    n = 4 * r
    imat = [[Fraction(0)] * n for _ in range(n)]
    for k in range(2 * r):
        imat[2 * k][2 * k + 1] = Fraction(-1)
        imat[2 * k + 1][2 * k] = Fraction(1)
    jmat = [[Fraction(0)] * n for _ in range(n)]
    # J(v) = J_m conj(v) with J_m the block form: complex e_{2k} -> e_{2k+1},
    # e_{2k+1} -> -e_{2k}; conj flips the sign of the imaginary coordinate
    for k in range(r):
        a, b = 2 * (2 * k), 2 * (2 * k + 1)  # real offsets of the complex pair
        jmat[b][a] = Fraction(1)       # Re z2 <- Re z1
        jmat[b + 1][a + 1] = Fraction(-1)  # Im z2 <- -Im z1 (conj), then *1
        jmat[a][b] = Fraction(-1)      # Re z1 <- -Re z2
        jmat[a + 1][b + 1] = Fraction(1)
    return {"I": imat, "J": jmat}


def _sparse_rank(rows):
    """Rank of a sparse rational system given as dict rows."""
    pivots = {}  # col -> normalized row dict
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivots:
                f = row[c]
                for k, v in pivots[c].items():
                    row[k] = row.get(k, Fraction(0)) - f * v
                    if not row[k]:
                        del row[k]
            else:
                inv = 1 / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                rank += 1
                break
    return rank
