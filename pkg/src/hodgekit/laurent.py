"""Multivariate Laurent polynomials over exact scalars.

This is the group algebra of Z^a: finitely many terms c * t1^e1 ... ta^ea
with nonzero exact coefficients, stored as a map from integer exponent
vectors to ``Scalar``.  Units are exactly the single-term elements.
"""

from __future__ import annotations

from .errors import PreconditionError
from .scalars import Scalar


class LaurentPoly:
    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        if rank < 0:
            raise PreconditionError("rank must be non-negative")
        self.rank = rank
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != rank:
                raise PreconditionError(
                    f"exponent vector {exp} has length {len(exp)}, want {rank}")
            if not isinstance(coeff, Scalar):
                coeff = Scalar.rational(coeff)
            if not coeff.is_zero:
                clean[exp] = clean.get(exp, Scalar.zero()) + coeff
                if clean[exp].is_zero:
                    del clean[exp]
        self.terms = clean

    # ---- constructors

    @staticmethod
    def zero(rank):
        return LaurentPoly(rank)

    @staticmethod
    def constant(rank, c):
        return LaurentPoly(rank, {(0,) * rank: c})

    @staticmethod
    def one(rank):
        return LaurentPoly.constant(rank, 1)

    @staticmethod
    def var(rank, j, power=1):
        """The monomial t_j^power (j is 0-based)."""
        if not 0 <= j < rank:
            raise PreconditionError(f"variable index {j} out of range")
        exp = [0] * rank
        exp[j] = power
        return LaurentPoly(rank, {tuple(exp): Scalar.one()})

    @staticmethod
    def monomial(rank, exp, coeff):
        return LaurentPoly(rank, {tuple(exp): coeff})

    # ---- structure

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_unit(self):
        return len(self.terms) == 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def key(self):
        return (self.rank, tuple((e, c.key()) for e, c in self.sorted_terms()))

    def __eq__(self, other):
        if isinstance(other, (int,)):
            other = LaurentPoly.constant(self.rank, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # ---- arithmetic

    def _check(self, other):
        if isinstance(other, (int, Scalar)):
            other = LaurentPoly.constant(self.rank, other)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other)}")
        if other.rank != self.rank:
            raise PreconditionError("rank mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            acc = out.get(exp, Scalar.zero()) + c
            if acc.is_zero:
                out.pop(exp, None)
            else:
                out[exp] = acc
        return LaurentPoly(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                acc = out.get(exp, Scalar.zero()) + prod
                if acc.is_zero:
                    out.pop(exp, None)
                else:
                    out[exp] = acc
        return LaurentPoly(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = LaurentPoly.one(self.rank)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        if not isinstance(c, Scalar):
            c = Scalar.rational(c)
        return LaurentPoly(self.rank, {e: x * c for e, x in self.terms.items()})

    # ---- evaluation and substitution

    def eval_character(self, rho):
        """Evaluate at t_j = rho_j; every component must be invertible."""
        if len(rho) != self.rank:
            raise PreconditionError("character length mismatch")
        rho = [r if isinstance(r, Scalar) else Scalar.rational(r) for r in rho]
        for r in rho:
            if r.is_zero:
                raise PreconditionError("character has a zero component")
        total = Scalar.zero()
        for exp, c in self.terms.items():
            val = c
            for r, e in zip(rho, exp):
                if e:
                    val = val * (r ** e)
            total = total + val
        return total

    def substitute_monomials(self, zeta, exponent_matrix):
        """Substitute t_j -> zeta_j * prod_k s_k^(E[j][k]); result has rank b.

        ``exponent_matrix`` is an a-by-b integer matrix.  Components of
        ``zeta`` must be invertible.
        """
        a = self.rank
        if len(zeta) != a or len(exponent_matrix) != a:
            raise PreconditionError("substitution data must match rank")
        b = len(exponent_matrix[0]) if a else 0
        for row in exponent_matrix:
            if len(row) != b:
                raise PreconditionError("ragged exponent matrix")
        zeta = [z if isinstance(z, Scalar) else Scalar.rational(z) for z in zeta]
        for z in zeta:
            if z.is_zero:
                raise PreconditionError("translation has a zero component")
        out = LaurentPoly.zero(b)
        for exp, c in self.terms.items():
            coeff = c
            newexp = [0] * b
            for j, e in enumerate(exp):
                if e:
                    coeff = coeff * (zeta[j] ** e)
                    for k in range(b):
                        newexp[k] += e * exponent_matrix[j][k]
            out = out + LaurentPoly.monomial(b, newexp, coeff)
        return out

    def has_integer_coefficients(self):
        for c in self.terms.values():
            if not (c.is_gaussian and c.im == 0 and c.re.denominator == 1):
                return False
        return True

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for exp, c in self.sorted_terms():
            mono = "*".join(f"t{j + 1}^{e}" for j, e in enumerate(exp) if e)
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    def __repr__(self):
        return f"LaurentPoly({self})"


def eval_character(p: LaurentPoly, rho) -> Scalar:
    return p.eval_character(rho)
