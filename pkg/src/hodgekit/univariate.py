"""One-variable exact machinery shared by the bundle code.

Three layers, all over ``Scalar`` coefficients:

* dense polynomials (ascending coefficient lists) with euclidean division,
* ``RatFunc`` -- normalized rational functions, a field; models functions
  of the disk parameter s that stay exact under every operation,
* ``LaurentZ`` -- finitely supported Laurent polynomials in one chart
  coordinate z whose coefficients live in any of the fields above.

A tiny ``Field`` tag object carries the zero/one elements around so that
generic elimination code never needs to invent constants.
"""

from __future__ import annotations

from .errors import PreconditionError
from .scalars import Scalar


class Field:
    """Carrier of zero/one plus a wire-format tag."""

    def __init__(self, zero, one, tag):
        self.zero = zero
        self.one = one
        self.tag = tag

    def __repr__(self):
        return f"Field({self.tag})"


SCALARS = Field(Scalar.zero(), Scalar.one(), "gaussian")


# -- dense polynomials over Scalar ---------------------------------------


def ptrim(c):
    c = list(c)
    while c and c[-1].is_zero:
        c.pop()
    return c


def padd(a, b):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else Scalar.zero()
        y = b[k] if k < len(b) else Scalar.zero()
        out.append(x + y)
    return ptrim(out)


def pneg(a):
    return [-x for x in a]


def pmul(a, b):
    if not a or not b:
        return []
    out = [Scalar.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return ptrim(out)


def pdivmod(a, b):
    if not b:
        raise PreconditionError("polynomial division by zero")
    a = list(a)
    q = [Scalar.zero()] * max(0, len(a) - len(b) + 1)
    inv = b[-1].inv()
    while True:
        a = ptrim(a)
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        f = a[-1] * inv
        q[k] = q[k] + f
        for j, y in enumerate(b):
            a[k + j] = a[k + j] - f * y
    return ptrim(q), a


def pgcd(a, b):
    a, b = ptrim(a), ptrim(b)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, r
    if a:
        inv = a[-1].inv()
        a = [x * inv for x in a]  # monic
    return a


def peval(a, x):
    acc = Scalar.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


class RatFunc:
    """num/den with den monic and gcd(num, den) = 1.  A field element."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = ptrim([c if isinstance(c, Scalar) else Scalar.rational(c) for c in num])
        den = ptrim([c if isinstance(c, Scalar) else Scalar.rational(c) for c in (den or [1])])
        if not den:
            raise PreconditionError("rational function with zero denominator")
        if not num:
            self.num, self.den = (), (Scalar.one(),)
            return
        g = pgcd(num, den)
        if len(g) > 1:
            num, _ = pdivmod(num, g)
            den, _ = pdivmod(den, g)
        lead = den[-1].inv()
        self.num = tuple(c * lead for c in num)
        self.den = tuple(c * lead for c in den)

    @staticmethod
    def const(c):
        return RatFunc([c])

    @staticmethod
    def var():
        return RatFunc([0, 1])

    @property
    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def __add__(self, other):
        other = _rf(other)
        return RatFunc(padd(pmul(list(self.num), list(other.den)),
                            pmul(list(other.num), list(self.den))),
                       pmul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(pneg(list(self.num)), list(self.den))

    def __sub__(self, other):
        return self + (-_rf(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _rf(other)
        return RatFunc(pmul(list(self.num), list(other.num)),
                       pmul(list(self.den), list(other.den)))

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero:
            raise PreconditionError("division by zero rational function")
        return RatFunc(list(self.den), list(self.num))

    def __truediv__(self, other):
        return self * _rf(other).inv()

    def __rtruediv__(self, other):
        return _rf(other) * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = RatFunc.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            other = _rf(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(c.key() for c in self.num),
                     tuple(c.key() for c in self.den)))

    def regular_at_zero(self):
        return not self.den[0].is_zero

    def eval_zero(self):
        if not self.regular_at_zero():
            raise PreconditionError("rational function has a pole at 0")
        if self.is_zero:
            return Scalar.zero()
        return self.num[0] / self.den[0]

    def __str__(self):
        num = _fmt_poly(self.num)
        if len(self.den) == 1 and self.den[0] == Scalar.one():
            return num
        return f"({num})/({_fmt_poly(self.den)})"

    def __repr__(self):
        return f"RatFunc({self})"


def _rf(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Scalar) or isinstance(x, int):
        return RatFunc([x])
    raise TypeError(f"cannot coerce {type(x)} to RatFunc")


def _fmt_poly(c):
    if not c:
        return "0"
    return " + ".join(f"({x})*s^{k}" if k else f"({x})"
                      for k, x in enumerate(c) if not x.is_zero)


def ratfunc_field(varname="s"):
    return Field(RatFunc([]), RatFunc([1]), "ratfun_" + varname)


RATFUNC_S = ratfunc_field("s")


# -- Laurent polynomials in the chart coordinate -------------------------


class LaurentZ:
    """Finitely supported map exponent -> coefficient over ``field``."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        clean = {}
        for e, c in (terms or {}).items():
            if not c.is_zero:
                clean[int(e)] = c
        self.terms = clean

    @staticmethod
    def zero(field):
        return LaurentZ(field)

    @staticmethod
    def const(field, c):
        return LaurentZ(field, {0: c})

    @staticmethod
    def one(field):
        return LaurentZ.const(field, field.one)

    @staticmethod
    def monomial(field, e, c=None):
        return LaurentZ(field, {e: c if c is not None else field.one})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, e):
        return self.terms.get(e, self.field.zero)

    def min_exp(self):
        if self.is_zero:
            raise PreconditionError("zero Laurent polynomial has no valuation")
        return min(self.terms)

    def max_exp(self):
        if self.is_zero:
            raise PreconditionError("zero Laurent polynomial has no degree")
        return max(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e, self.field.zero) + c
            if acc.is_zero:
                out.pop(e, None)
            else:
                out[e] = acc
        return LaurentZ(self.field, out)

    def __neg__(self):
        return LaurentZ(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentZ):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                acc = out.get(e, self.field.zero) + c1 * c2
                if acc.is_zero:
                    out.pop(e, None)
                else:
                    out[e] = acc
        return LaurentZ(self.field, out)

    __rmul__ = __mul__

    def scale(self, c):
        return LaurentZ(self.field, {e: x * c for e, x in self.terms.items()})

    def shift(self, k):
        return LaurentZ(self.field, {e + k: c for e, c in self.terms.items()})

    def map_coeffs(self, fn, field):
        return LaurentZ(field, {e: fn(c) for e, c in self.terms.items()})

    def eval(self, x):
        acc = self.field.zero
        for e, c in self.terms.items():
            if e < 0:
                raise PreconditionError("evaluation of a genuine Laurent term")
            acc = acc + c * (x ** e) if e else acc + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda kv: kv[0],)))

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(f"({c})*z^{e}" if e else f"({c})"
                          for e, c in sorted(self.terms.items()))

    def __repr__(self):
        return f"LaurentZ({self})"
