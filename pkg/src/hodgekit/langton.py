"""Semistable reduction for bundle families on P^1 over a formal disk.

The family is a transition matrix T(z, s): Laurent in the chart coordinate
z, with coefficients rational in the disk parameter s and regular at
s = 0.  The generic fiber lives over the fraction field, the special fiber
is T at s = 0.  When the generic fiber is semistable (balanced splitting)
but the special one is not, one elementary modification

    T' = diag(s^-delta) * A0^(-1) * T * C0^(-1) * diag(s^delta)

with T|_(s=0) = A0 D C0 a constructive factorization and delta_i = 1
exactly on the summands of below-average degree (the destabilizing
quotient) strictly improves the special fiber; iterating terminates with
a balanced special fiber and never moves the generic one.  Every step
carries the pair (L, R) of fraction-field-invertible chart matrices with
L T R = T', checkable by exact re-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, InternalInvariantError
from . import linalg
from .birkhoff import (P1Bundle, factorization_certificate, invert_unimodular,
                       splitting_type)
from .univariate import LaurentZ, RatFunc, RATFUNC_S, SCALARS


class DiskFamily:
    """n x n transition matrix over the s-regular rational functions."""

    def __init__(self, entries):
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise PreconditionError("family matrix must be square")
        self.n = n
        self.entries = [list(r) for r in entries]
        for row in self.entries:
            for e in row:
                for c in e.terms.values():
                    if not c.regular_at_zero():
                        raise PreconditionError(
                            "family coefficients must be regular at s = 0")
        det = linalg.det_ring(self.entries,
                              LaurentZ.one(RATFUNC_S), LaurentZ.zero(RATFUNC_S))
        if det.is_zero or not det.is_monomial():
            raise PreconditionError("family determinant is not a unit in z")
        (self.det_exp, self.det_coeff), = det.terms.items()
        if not self.det_coeff.regular_at_zero() or \
                self.det_coeff.eval_zero().is_zero:
            raise PreconditionError("family determinant degenerates at s = 0")

    def generic_bundle(self) -> P1Bundle:
        return P1Bundle(RATFUNC_S, self.entries)

    def special_bundle(self) -> P1Bundle:
        special = [[e.map_coeffs(lambda c: c.eval_zero(), SCALARS) for e in row]
                   for row in self.entries]
        return P1Bundle(SCALARS, special)


@dataclass(frozen=True)
class HNRecord:
    step: int
    special_type: tuple


@dataclass(frozen=True)
class StepCertificate:
    """T' = L T R with L invertible over K[1/z] and R over K[z]."""

    left: tuple
    right: tuple

    def verify(self, before: DiskFamily, after: DiskFamily) -> bool:
        lhs = linalg.mat_mul(linalg.mat_mul([list(r) for r in self.left],
                                            before.entries),
                             [list(r) for r in self.right])
        return linalg.mat_eq(lhs, after.entries)


def generic_splitting(family: DiskFamily):
    return splitting_type(family.generic_bundle())


def special_splitting(family: DiskFamily):
    return splitting_type(family.special_bundle())


def _is_balanced(exps):
    return all(e == exps[0] for e in exps)


def _embed_scalar_matrix(mat):
    out = []
    for row in mat:
        out.append([e.map_coeffs(lambda c: RatFunc([c]), RATFUNC_S) for e in row])
    return out


def _s_power_conjugate(entries, delta):
    n = len(entries)
    svar = RatFunc.var()
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            k = delta[j] - delta[i]
            factor = svar ** k
            row.append(entries[i][j].map_coeffs(lambda c: c * factor, RATFUNC_S))
        out.append(row)
    return out


def _s_valuation(rf: RatFunc):
    """Order of vanishing at s = 0 of a function regular there."""
    for k, c in enumerate(rf.num):
        if not c.is_zero:
            return k
    return None  # the zero function


def _block_valuation(entries, delta):
    """Least s-valuation over the (destabilizing, complement) block."""
    val = None
    for i, di in enumerate(delta):
        if not di:
            continue
        for j, dj in enumerate(delta):
            if dj:
                continue
            for c in entries[i][j].terms.values():
                v = _s_valuation(c)
                if v is not None:
                    val = v if val is None else min(val, v)
    return val


def langton_step(family: DiskFamily, seed=0, max_passes=200):
    """One elementary modification; returns (new family, certificate, record).

    Internally this repeats {factor the special fiber, absorb the constant
    chart matrices, divide the destabilizing block by its s-valuation}
    until the special splitting type strictly drops: one pass alone may
    leave the type unchanged when the destabilizing quotient persists to
    a thicker neighbourhood of s = 0, and the repetition is exactly the
    passage to the maximal such quotient.  Non-termination would hand the
    generic fiber a destabilizing quotient, which the precondition forbids.
    """
    special_type = tuple(splitting_type(family.special_bundle()))
    if _is_balanced(special_type):
        raise PreconditionError("special fiber is already semistable")
    if not _is_balanced(generic_splitting(family)):
        raise PreconditionError("generic fiber is not semistable")

    svar = RatFunc.var()
    n = family.n
    ident = [[LaurentZ.one(RATFUNC_S) if i == j else LaurentZ.zero(RATFUNC_S)
              for j in range(n)] for i in range(n)]
    left_total, right_total = ident, [list(r) for r in ident]
    current = family

    for _ in range(max_passes):
        special = current.special_bundle()
        cert = factorization_certificate(special, seed=seed)
        if cert is None:
            cert = factorization_certificate(special, seed=seed + 1, tries=400)
        if cert is None:
            raise InternalInvariantError(
                "factorization certificate search failed; retry with larger bound")
        a0, dmat, c0 = cert
        # exponents of D carry the special splitting: D_ii = z^(-a_i)
        a_from_d = [-next(iter(dmat[i][i].terms)) for i in range(n)]
        avg = Fraction(sum(a_from_d), n)
        delta = [1 if a < avg else 0 for a in a_from_d]
        if not any(delta) or all(delta):
            raise InternalInvariantError("destabilizing index set must be proper")

        a0_inv = _embed_scalar_matrix(invert_unimodular(a0, SCALARS))
        c0_inv = _embed_scalar_matrix(invert_unimodular(c0, SCALARS))
        t1 = linalg.mat_mul(linalg.mat_mul(a0_inv, current.entries), c0_inv)
        v = _block_valuation(t1, delta)
        if v is None or v < 1:
            raise InternalInvariantError(
                "destabilizing block must vanish to positive order at s = 0")
        vdelta = [v * d for d in delta]
        t2 = _s_power_conjugate(t1, vdelta)

        left = [[a0_inv[i][j].map_coeffs(
                     lambda c, k=-vdelta[i]: c * svar ** k, RATFUNC_S)
                 for j in range(n)] for i in range(n)]
        right = [[c0_inv[i][j].map_coeffs(
                      lambda c, k=vdelta[j]: c * svar ** k, RATFUNC_S)
                  for j in range(n)] for i in range(n)]
        left_total = linalg.mat_mul(left, left_total)
        right_total = linalg.mat_mul(right_total, right)
        current = DiskFamily(t2)  # regularity at s = 0 re-validated here

        new_type = tuple(splitting_type(current.special_bundle()))
        if new_type == special_type:
            continue
        if not new_type < special_type:
            raise InternalInvariantError(
                f"special type must drop: {special_type} -> {new_type}")
        certificate = StepCertificate(
            left=tuple(tuple(r) for r in left_total),
            right=tuple(tuple(r) for r in right_total))
        if not certificate.verify(family, current):
            raise InternalInvariantError("step certificate failed to re-multiply")
        return current, certificate, HNRecord(step=0, special_type=special_type)

    raise InternalInvariantError(
        "modification pass bound exceeded; retry with larger bound")


def langton_reduce(family: DiskFamily, seed=0, max_steps=200):
    """Iterate elementary modifications until the special fiber balances.

    Requires a semistable generic fiber (the rank must divide the total
    degree).  The trail of special splitting types decreases strictly in
    lexicographic order, which both enforces and certifies termination.
    """
    generic_type = generic_splitting(family)
    if not _is_balanced(generic_type):
        raise PreconditionError(
            f"generic fiber not semistable: splitting {tuple(generic_type)}")
    trail = []
    certificates = []
    current = family
    step = 0
    prev_type = None
    while True:
        sp = tuple(special_splitting(current))
        trail.append(HNRecord(step=step, special_type=sp))
        if prev_type is not None:
            if not sp < prev_type:
                raise InternalInvariantError(
                    f"trail must decrease strictly: {prev_type} -> {sp}")
            gap_prev = prev_type[0] - prev_type[-1]
            gap_now = sp[0] - sp[-1]
            if gap_now > gap_prev:
                raise InternalInvariantError("splitting gap increased")
        prev_type = sp
        if _is_balanced(sp):
            break
        if step >= max_steps:
            raise InternalInvariantError(
                "step bound exceeded; this signals an implementation bug")
        current, cert, _ = langton_step(current, seed=seed + step)
        certificates.append(cert)
        step += 1
    return current, trail, certificates
