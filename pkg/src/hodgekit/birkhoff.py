"""Splitting types of algebraic vector bundles on the projective line.

A bundle is presented by its transition matrix G(z) between the two
standard charts; the determinant must be a unit (nonzero constant times a
power of z).  Convention, fixed here and inherited everywhere else: the
line bundle O(a) has the 1x1 transition z^(-a), so h0(O(a)) = max(0, a+1).

The splitting type is computed by exact h0 dimension counting, which is a
bounded linear-algebra problem: v(z) is a polynomial vector of degree at
most D and G v is required to have pole order at most m on the far chart.
The degree cap D = max(0, (n-1)*dmax - ddet + m) comes from Cramer's rule
(v = G^{-1} (G v) and the adjugate raises degrees by at most (n-1)*dmax),
so no genuine section is missed.  A constructive factorization G = A D C
is available as an optional certificate found by bounded search; the
splitting type never depends on it.
"""

from __future__ import annotations

import random

from .errors import PreconditionError, InternalInvariantError
from . import linalg
from .univariate import Field, LaurentZ


class P1Bundle:
    """Rank-n bundle on P^1 via an n x n Laurent transition matrix."""

    def __init__(self, field: Field, entries):
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise PreconditionError("transition matrix must be square")
        self.field = field
        self.n = n
        self.entries = [list(r) for r in entries]
        det = linalg.det_ring(self.entries,
                              LaurentZ.one(field), LaurentZ.zero(field))
        if det.is_zero or not det.is_monomial():
            raise PreconditionError("transition determinant is not a unit")
        (self.det_exp, self.det_coeff), = det.terms.items()

    @property
    def max_z_degree(self):
        out = None
        for row in self.entries:
            for e in row:
                if not e.is_zero:
                    m = e.max_exp()
                    out = m if out is None else max(out, m)
        if out is None:
            raise InternalInvariantError("unit determinant with zero matrix")
        return out

    def twist_degree_cap(self, m):
        return max(0, (self.n - 1) * self.max_z_degree - self.det_exp + m)

    def __repr__(self):
        return f"P1Bundle(n={self.n}, det=z^{self.det_exp})"


def _section_system(bundle, m):
    """Sparse constraint rows over the coefficient field for sections of B(m).

    Unknowns are the coefficients v[j, e] (j < n, e <= D); each row kills
    one coefficient of z^k, k > m, in one component of G v.
    """
    n = bundle.n
    cap = bundle.twist_degree_cap(m)
    rows = []
    kmax = bundle.max_z_degree + cap
    for i in range(n):
        for k in range(m + 1, kmax + 1):
            row = {}
            for j in range(n):
                g = bundle.entries[i][j]
                if g.is_zero:
                    continue
                for ge, c in g.terms.items():
                    e = k - ge
                    if 0 <= e <= cap:
                        row[j * (cap + 1) + e] = c
            if row:
                rows.append(row)
    return rows, cap


def h0_twist(bundle: P1Bundle, m: int) -> int:
    """dim H0 of bundle twisted by O(m)."""
    rows, cap = _section_system(bundle, m)
    total = bundle.n * (cap + 1)
    return total - linalg.sparse_rank(rows)


def section_basis(bundle, m):
    """Basis of H0(B(m)) as vectors of polynomial LaurentZ entries."""
    rows, cap = _section_system(bundle, m)
    n, field = bundle.n, bundle.field
    ncols = n * (cap + 1)
    kerns = linalg.sparse_nullspace(rows, ncols, field.one, field.zero)
    out = []
    for vec in kerns:
        v = []
        for j in range(n):
            v.append(LaurentZ(field, {e: vec[j * (cap + 1) + e]
                                      for e in range(cap + 1)}))
        out.append(v)
    return out


def splitting_type(bundle: P1Bundle):
    """The non-increasing Grothendieck exponents (a_1 >= ... >= a_n)."""
    n = bundle.n
    dd = bundle.det_exp
    a_ub = (n - 1) * bundle.max_z_degree - dd
    lo = -a_ub - 1                      # h0 vanishes here by the degree cap
    hi = max(lo + 1, -((-dd) // n))     # Euler characteristic forces h0 > 0
    memo = {}

    def h(m):
        if m not in memo:
            memo[m] = h0_twist(bundle, m)
        return memo[m]

    while h(hi) == 0:   # cannot happen; cheap guard against a bad bound
        hi += 1
        if hi > lo + 4 * (abs(a_ub) + abs(dd) + n + 2):
            raise InternalInvariantError("h0 probe window exhausted")

    left, right = lo, hi
    while right - left > 1:
        mid = (left + right) // 2
        if h(mid) > 0:
            right = mid
        else:
            left = mid
    first = right
    if first - 1 > lo and h(first - 1) != 0:
        raise InternalInvariantError("h0 is not monotone along the window")

    exps = []
    h_prev, c_prev = 0, 0
    m = first
    cap = dd + (n - 1) * abs(a_ub) + abs(dd) + n + 2
    while c_prev < n:
        hm = h(m)
        c_m = hm - h_prev
        mult = c_m - c_prev
        if mult < 0 or c_m > n:
            raise InternalInvariantError("h0 increments are inconsistent")
        exps.extend([-m] * mult)
        h_prev, c_prev = hm, c_m
        m += 1
        if m > max(cap, first + 1):
            raise InternalInvariantError("splitting scan failed to close")
    if sum(exps) != -dd:
        raise InternalInvariantError(
            f"splitting sum {sum(exps)} != -det exponent {-dd}")
    return exps


def _adjugate(mat, field):
    n = len(mat)
    one, zero = LaurentZ.one(field), LaurentZ.zero(field)
    if n == 1:
        return [[one]]
    adj = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[mat[r][c] for c in range(n) if c != j]
                   for r in range(n) if r != i]
            m = linalg.det_ring(sub, one, zero)
            adj[j][i] = m if (i + j) % 2 == 0 else -m
    return adj


def _is_unit_constant(p):
    return (not p.is_zero) and p.is_monomial() and p.min_exp() == 0


def invert_unimodular(mat, field):
    """Inverse of a matrix with constant unit determinant; entries stay
    in the same chart ring because the adjugate does."""
    one, zero = LaurentZ.one(field), LaurentZ.zero(field)
    det = linalg.det_ring(mat, one, zero)
    if not _is_unit_constant(det):
        raise PreconditionError("matrix determinant is not a unit constant")
    dinv = det.coeff(0).inv()
    adj = _adjugate(mat, field)
    return [[x.scale(dinv) for x in row] for row in adj]


def factorization_certificate(bundle: P1Bundle, seed=0, tries=60):
    """Optional constructive factorization G = A * D * C.

    A is invertible over polynomials in 1/z, C over polynomials in z, and
    D = diag(z^(-a_i)) carries the splitting type.  Returns None when the
    bounded search finds no unimodular section frame; callers must not
    rely on success.
    """
    field = bundle.field
    n = bundle.n
    one, zero = LaurentZ.one(field), LaurentZ.zero(field)

    diagonal = all(bundle.entries[i][j].is_zero
                   for i in range(n) for j in range(n) if i != j)
    if diagonal and all(bundle.entries[i][i].is_monomial() for i in range(n)):
        amat = [[LaurentZ.const(field, bundle.entries[i][i].coeff(
                     bundle.entries[i][i].min_exp())) if i == j else zero
                 for j in range(n)] for i in range(n)]
        dmat = [[LaurentZ.monomial(field, bundle.entries[i][i].min_exp())
                 if i == j else zero for j in range(n)] for i in range(n)]
        cmat = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return amat, dmat, cmat

    exps = splitting_type(bundle)

    bases = {}
    for a in sorted(set(exps), reverse=True):
        bases[a] = section_basis(bundle, -a)
        if not bases[a]:
            raise InternalInvariantError("missing sections for a computed exponent")

    rng = random.Random(seed)

    def assemble(columns):
        vmat = [[columns[j][i] for j in range(n)] for i in range(n)]
        det = linalg.det_ring(vmat, one, zero)
        if not _is_unit_constant(det):
            return None
        gv = linalg.mat_mul(bundle.entries, vmat)
        amat = [[gv[i][j].shift(exps[j]) for j in range(n)] for i in range(n)]
        for row in amat:
            for x in row:
                if not x.is_zero and x.max_exp() > 0:
                    return None
        dmat = [[LaurentZ.monomial(field, -exps[i]) if i == j else zero
                 for j in range(n)] for i in range(n)]
        cmat = invert_unimodular(vmat, field)
        recon = linalg.mat_mul(linalg.mat_mul(amat, dmat), cmat)
        if not linalg.mat_eq(recon, bundle.entries):
            return None
        return amat, dmat, cmat

    # natural attempt: the k-th repeat of an exponent takes the k-th basis
    # section of its twist, then seeded random combinations as a rescue
    counters = {}
    natural = []
    for a in exps:
        k = counters.get(a, 0)
        counters[a] = k + 1
        basis = bases[a]
        natural.append(basis[k % len(basis)])
    result = assemble(natural)
    if result is not None:
        return result

    for _ in range(tries):
        cols = []
        for a in exps:
            basis = bases[a]
            coeffs = [rng.randint(-3, 3) for _ in basis]
            if not any(coeffs):
                coeffs[rng.randrange(len(basis))] = 1
            v = [LaurentZ.zero(field) for _ in range(n)]
            for cf, b in zip(coeffs, basis):
                if cf:
                    sc = _int_in_field(field, cf)
                    v = [x + y.scale(sc) for x, y in zip(v, b)]
            cols.append(v)
        result = assemble(cols)
        if result is not None:
            return result
    return None


def _int_in_field(field, k):
    acc = field.zero
    one = field.one
    neg = k < 0
    for _ in range(abs(k)):
        acc = acc + one
    return -acc if neg else acc
