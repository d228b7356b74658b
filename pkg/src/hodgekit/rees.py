"""Filtrations as equivariant modules over the affine line.

A complete decreasing filtration F of a finite-dimensional space V turns
into a free module over the polynomial ring in z spanned by z^(-p_i) v_i
for an adapted basis (v_i) with integer weights (p_i); the torus scales
generator i with weight p_i.  The inverse reads the filtration back off
the weights.  Gluing two filtrations across the two charts of P^1 gives a
vector bundle whose splitting type detects purity: everything splits as
O(w) exactly when the pair of filtrations is pure of weight w.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError, InternalInvariantError
from . import linalg
from .scalars import Scalar
from .univariate import LaurentZ, SCALARS
from .birkhoff import P1Bundle, splitting_type


def _as_scalar_rows(rows, n):
    out = []
    for row in rows:
        if len(row) != n:
            raise PreconditionError(f"vector length {len(row)} != dim {n}")
        out.append([x if isinstance(x, Scalar) else Scalar.rational(x) for x in row])
    return out


def _rref(rows):
    if not rows:
        return [], []
    ech, pivots = linalg.row_echelon(rows)
    return ech, pivots


def _reduce_against(ech, pivots, v):
    v = list(v)
    for r, pc in enumerate(pivots):
        f = v[pc]
        if not f.is_zero:
            v = [x - f * y for x, y in zip(v, ech[r])]
    return v


def _in_span(ech, pivots, v):
    return all(x.is_zero for x in _reduce_against(ech, pivots, v))


class FilteredSpace:
    """Complete decreasing filtration of Scalar^n by explicit bases.

    ``steps`` maps every integer p in p_min..p_max to a spanning set of
    F^p; F^p = V for p < p_min and 0 for p > p_max are implied.  The
    constructor verifies completeness (F^(p_min) is everything) and
    nesting by exact rank computations.
    """

    def __init__(self, n, steps):
        self.n = n
        if not steps:
            raise PreconditionError("a filtration needs at least one step")
        ps = sorted(steps)
        if ps != list(range(ps[0], ps[-1] + 1)):
            raise PreconditionError("filtration steps must use consecutive indices")
        self.p_min, self.p_max = ps[0], ps[-1]
        self._rref = {}
        for p in ps:
            rows = _as_scalar_rows(steps[p], n)
            self._rref[p] = _rref(rows)
        if len(self._rref[self.p_min][0]) != n:
            raise PreconditionError("filtration is not complete: first step must be V")
        for p in ps[:-1]:
            ech, piv = self._rref[p]
            for v in self._rref[p + 1][0]:
                if not _in_span(ech, piv, v):
                    raise PreconditionError(f"F^{p + 1} is not contained in F^{p}")

    def dim(self, p):
        if p < self.p_min:
            return self.n
        if p > self.p_max:
            return 0
        return len(self._rref[p][0])

    def basis(self, p):
        if p < self.p_min:
            p = self.p_min
        if p > self.p_max:
            return []
        return [list(v) for v in self._rref[p][0]]

    def contains(self, p, v):
        if p > self.p_max:
            return all(x.is_zero for x in v)
        ech, piv = self._rref[max(p, self.p_min)]
        return _in_span(ech, piv, v)

    def steps_range(self):
        return range(self.p_min, self.p_max + 1)

    def equal(self, other):
        if self.n != other.n:
            return False
        lo = min(self.p_min, other.p_min)
        hi = max(self.p_max, other.p_max)
        for p in range(lo, hi + 1):
            if self.dim(p) != other.dim(p):
                return False
            for v in self.basis(p):
                if not other.contains(p, v):
                    return False
        return True


@dataclass(frozen=True)
class ReesModule:
    """Adapted basis with weights; generator i is z^(-weight_i) basis_i."""

    basis: tuple      # n row vectors of Scalar
    weights: tuple    # matching integer weights, non-increasing

    @property
    def n(self):
        return len(self.weights)


@dataclass(frozen=True)
class PurityReport:
    splitting: tuple
    pure: bool
    weight: Optional[int]


def build_rees(fs: FilteredSpace) -> ReesModule:
    """Deterministic adapted basis by echelon refinement from the top step."""
    chosen = []
    weights = []
    ech, piv = [], []
    for p in range(fs.p_max, fs.p_min - 1, -1):
        for v in fs.basis(p):
            if not _in_span(ech, piv, v):
                chosen.append(tuple(v))
                weights.append(p)
                ech, piv = _rref([list(w) for w in chosen])
    if len(chosen) != fs.n:
        raise InternalInvariantError("adapted basis has wrong size")
    for p in fs.steps_range():
        if sum(1 for w in weights if w >= p) != fs.dim(p):
            raise InternalInvariantError("weights do not reproduce filtration dims")
    return ReesModule(basis=tuple(chosen), weights=tuple(weights))


def recover_filtration(rm: ReesModule) -> FilteredSpace:
    """Left inverse of build_rees, up to subspace equality."""
    n = rm.n
    steps = {}
    lo, hi = min(rm.weights), max(rm.weights)
    for p in range(lo, hi + 1):
        steps[p] = [list(v) for v, w in zip(rm.basis, rm.weights) if w >= p]
    return FilteredSpace(n, steps)


def fiber(rm: ReesModule, point):
    """Fiber dimensions: total at 1, weight-graded pieces at 0."""
    if point == 1:
        return rm.n
    if point == 0:
        grades = {}
        for w in rm.weights:
            grades[w] = grades.get(w, 0) + 1
        return grades
    raise PreconditionError("fiber is defined at 0 and 1 only")


def griffiths_check(fs: FilteredSpace, nabla) -> bool:
    """True iff nabla F^p lands in F^(p-1) tensor W for every p.

    ``nabla`` is one n x n matrix per coordinate of the parameter space W.
    """
    for mat in nabla:
        if len(mat) != fs.n or any(len(r) != fs.n for r in mat):
            raise PreconditionError("connection matrix has wrong shape")
    mats = [_as_scalar_rows(m, fs.n) for m in nabla]
    for p in range(fs.p_min + 1, fs.p_max + 1):
        for v in fs.basis(p):
            col = [[x] for x in v]
            for m in mats:
                image = [row[0] for row in linalg.mat_mul(m, col)]
                if not fs.contains(p - 1, image):
                    return False
    return True


def rees_p1(fs: FilteredSpace, fs_bar: FilteredSpace, pairing=None):
    """Glue the two one-chart modules into a bundle on P^1 and test purity.

    The orientation is fixed so that a one-dimensional space with weights
    (p, q) in the two filtrations comes out with splitting type (p + q).
    An optional antilinear pairing (a matrix applied after coordinate
    conjugation) identifies the second space with the first before gluing.
    """
    if fs.n != fs_bar.n:
        raise PreconditionError("the two filtrations live on different spaces")
    n = fs.n
    rf = build_rees(fs)
    rb = build_rees(fs_bar)
    ubasis = [list(v) for v in rb.basis]
    if pairing is not None:
        pmat = _as_scalar_rows(pairing, n)
        ubasis = [
            [sum((pmat[i][k] * v[k].conj() for k in range(n)), Scalar.zero())
             for i in range(n)]
            for v in ubasis
        ]
    vcols = linalg.transpose([list(v) for v in rf.basis])
    ucols = linalg.transpose(ubasis)
    try:
        vinv = linalg.invert(vcols, Scalar.one(), Scalar.zero())
    except PreconditionError:
        raise InternalInvariantError("adapted basis is singular")
    cmat = linalg.mat_mul(vinv, ucols)
    cinv = linalg.invert(cmat, Scalar.one(), Scalar.zero())
    p = rf.weights
    q = rb.weights
    entries = [
        [LaurentZ(SCALARS, {-(q[i] + p[j]): cinv[i][j]}) for j in range(n)]
        for i in range(n)
    ]
    bundle = P1Bundle(SCALARS, entries)
    exps = splitting_type(bundle)
    pure = all(e == exps[0] for e in exps)
    report = PurityReport(splitting=tuple(exps), pure=pure,
                          weight=exps[0] if pure else None)
    return bundle, report
