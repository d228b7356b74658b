"""Exact scalars: Gaussian rationals Q(i) and fixed-order cyclotomics Q(zeta_n).

A ``Scalar`` is either

* gaussian -- a pair of ``Fraction``s (re, im) standing for re + im*i, or
* cyclotomic -- an order ``n`` together with rational coordinates in the
  power basis 1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th
  cyclotomic polynomial.

Arithmetic is a field in both branches.  Conjugation negates the imaginary
part on gaussian values and sends zeta to zeta^(n-1) on cyclotomic values;
it is an involutive field automorphism either way.

Mixing rules: rationals coerce everywhere; gaussian values embed into a
cyclotomic field only when 4 divides its order (i maps to zeta^(n/4));
two cyclotomic values of different orders are rejected outright so that
conjugation never becomes ambiguous.
"""

from __future__ import annotations

import os
import re as _re
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionError

_CYCLO_CAP_ENV = "HODGEKIT_CYCLOTOMIC_MAX"
_DEFAULT_CYCLO_CAP = 120


def _cyclo_cap():
    raw = os.environ.get(_CYCLO_CAP_ENV, "")
    try:
        return int(raw) if raw else _DEFAULT_CYCLO_CAP
    except ValueError:
        return _DEFAULT_CYCLO_CAP


def totient(n):
    assert n >= 1
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


# -- dense rational polynomials (low degree first), used only for the
#    cyclotomic reduction machinery -------------------------------------


def _ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    b = _ptrim(list(b))
    assert b, "division by zero polynomial"
    a = _ptrim(list(a))
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        f = a[-1] * inv
        q[k] = f
        for j, y in enumerate(b):
            a[k + j] -= f * y
        a = _ptrim(a)
    return _ptrim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, ascending, as a tuple of Fractions."""
    xn = [Fraction(0)] * n + [Fraction(1)]
    xn[0] = Fraction(-1)
    rest = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            rest = _pmul(rest, list(cyclotomic_polynomial(d)))
    q, r = _pdivmod(xn, rest)
    assert not r, "cyclotomic division must be exact"
    return tuple(q)


@lru_cache(maxsize=None)
def _power_basis(n, k):
    """zeta^k reduced mod Phi_n, as a tuple of phi(n) Fractions."""
    phi = totient(n)
    k %= n
    mono = [Fraction(0)] * k + [Fraction(1)]
    _, r = _pdivmod(mono, list(cyclotomic_polynomial(n)))
    r = list(r) + [Fraction(0)] * (phi - len(r))
    return tuple(r[:phi])


def _ext_gcd_poly(a, b):
    # returns (g, s, t) with s*a + t*b = g, over Q[x]
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while _ptrim(list(r1)):
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _ptrim([x - y for x, y in _pad2(s0, _pmul(q, s1))])
        t0, t1 = t1, _ptrim([x - y for x, y in _pad2(t0, _pmul(q, t1))])
    return r0, s0, t0


def _pad2(a, b):
    m = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (m - len(a))
    b = list(b) + [Fraction(0)] * (m - len(b))
    return zip(a, b)


class Scalar:
    """One exact number, gaussian or cyclotomic.  Immutable."""

    __slots__ = ("_re", "_im", "_order", "_coeffs")

    def __init__(self, re=None, im=None, order=None, coeffs=None):
        if order is None:
            self._order = None
            self._re = Fraction(re if re is not None else 0)
            self._im = Fraction(im if im is not None else 0)
            self._coeffs = None
        else:
            cap = _cyclo_cap()
            if order < 1 or order > cap:
                raise PreconditionError(
                    f"cyclotomic order {order} outside 1..{cap} "
                    f"(cap set by ${_CYCLO_CAP_ENV})")
            phi = totient(order)
            cs = [Fraction(c) for c in coeffs]
            if len(cs) != phi:
                raise PreconditionError(
                    f"order-{order} value needs {phi} coordinates, got {len(cs)}")
            self._order = order
            self._coeffs = tuple(cs)
            self._re = self._im = None

    # ---- constructors

    @staticmethod
    def _gauss(re, im):
        # internal fast path: re/im are already Fractions
        s = object.__new__(Scalar)
        s._order = None
        s._coeffs = None
        s._re = re
        s._im = im
        return s

    @staticmethod
    def rational(x):
        return Scalar(re=Fraction(x))

    @staticmethod
    def gaussian(re, im):
        return Scalar(re=Fraction(re), im=Fraction(im))

    @staticmethod
    def zero():
        return Scalar(re=0)

    @staticmethod
    def one():
        return Scalar(re=1)

    @staticmethod
    def i():
        return Scalar(re=0, im=1)

    @staticmethod
    def cyclotomic(order, coeffs):
        return Scalar(order=order, coeffs=coeffs)

    @staticmethod
    def zeta(order, power=1):
        phi = totient(order)
        base = _power_basis(order, power)
        return Scalar(order=order, coeffs=list(base[:phi]))

    # ---- inspection

    @property
    def is_gaussian(self):
        return self._order is None

    @property
    def order(self):
        return self._order

    @property
    def re(self):
        if not self.is_gaussian:
            raise PreconditionError("re only defined on gaussian values")
        return self._re

    @property
    def im(self):
        if not self.is_gaussian:
            raise PreconditionError("im only defined on gaussian values")
        return self._im

    @property
    def coeffs(self):
        if self.is_gaussian:
            raise PreconditionError("coeffs only defined on cyclotomic values")
        return self._coeffs

    @property
    def is_zero(self):
        if self.is_gaussian:
            return self._re == 0 and self._im == 0
        return all(c == 0 for c in self._coeffs)

    def __bool__(self):
        return not self.is_zero

    def is_rational(self):
        if self.is_gaussian:
            return self._im == 0
        return all(c == 0 for c in self._coeffs[1:])

    def as_rational(self):
        if not self.is_rational():
            raise PreconditionError("value is not rational")
        return self._re if self.is_gaussian else self._coeffs[0]

    def key(self):
        """Canonical hashable form, stable across equal values."""
        if self.is_gaussian:
            return ("g", self._re, self._im)
        if self.is_rational():
            return ("g", self._coeffs[0], Fraction(0))
        if self._order == 4:
            return ("g", self._coeffs[0], self._coeffs[1])
        return ("c", self._order, self._coeffs)

    def __hash__(self):
        return hash(self.key())

    # ---- coercion

    def _to_order(self, n):
        """Embed into Q(zeta_n); only rationals embed unless 4 | n."""
        if not self.is_gaussian:
            if self._order == n:
                return self
            raise PreconditionError(
                f"mixed cyclotomic orders {self._order} and {n}")
        phi = totient(n)
        out = [Fraction(0)] * phi
        out[0] = self._re
        if self._im:
            if n % 4 != 0:
                raise PreconditionError(
                    f"cannot embed i into Q(zeta_{n}) (order not divisible by 4)")
            for idx, c in enumerate(_power_basis(n, n // 4)):
                out[idx] += self._im * c
        return Scalar(order=n, coeffs=out)

    @staticmethod
    def _coerce(a, b):
        if isinstance(b, (int, Fraction)):
            b = Scalar.rational(b)
        if not isinstance(b, Scalar):
            return NotImplemented, NotImplemented
        if a.is_gaussian and b.is_gaussian:
            return a, b
        if a.is_gaussian:
            return a._to_order(b._order), b
        if b.is_gaussian:
            return a, b._to_order(a._order)
        if a._order != b._order:
            raise PreconditionError(
                f"mixed cyclotomic orders {a._order} and {b._order}")
        return a, b

    # ---- arithmetic

    def __add__(self, other):
        if isinstance(other, Scalar) and self._order is None and other._order is None:
            return Scalar._gauss(self._re + other._re, self._im + other._im)
        a, b = Scalar._coerce(self, other)
        if a is NotImplemented:
            return NotImplemented
        if a.is_gaussian:
            return Scalar._gauss(a._re + b._re, a._im + b._im)
        return Scalar(order=a._order,
                      coeffs=[x + y for x, y in zip(a._coeffs, b._coeffs)])

    __radd__ = __add__

    def __neg__(self):
        if self._order is None:
            return Scalar._gauss(-self._re, -self._im)
        return Scalar(order=self._order, coeffs=[-c for c in self._coeffs])

    def __sub__(self, other):
        a, b = Scalar._coerce(self, other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar) and self._order is None and other._order is None:
            return Scalar._gauss(self._re * other._re - self._im * other._im,
                                 self._re * other._im + self._im * other._re)
        a, b = Scalar._coerce(self, other)
        if a is NotImplemented:
            return NotImplemented
        if a.is_gaussian:
            return Scalar._gauss(a._re * b._re - a._im * b._im,
                                 a._re * b._im + a._im * b._re)
        n = a._order
        prod = _pmul(list(a._coeffs), list(b._coeffs))
        _, r = _pdivmod(prod, list(cyclotomic_polynomial(n)))
        phi = totient(n)
        r = list(r) + [Fraction(0)] * (phi - len(r))
        return Scalar(order=n, coeffs=r[:phi])

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero:
            raise PreconditionError("division by zero scalar")
        if self.is_gaussian:
            nrm = self._re * self._re + self._im * self._im
            return Scalar._gauss(self._re / nrm, -self._im / nrm)
        g, s, _ = _ext_gcd_poly(list(self._coeffs),
                                list(cyclotomic_polynomial(self._order)))
        assert len(g) == 1, "cyclotomic polynomial must be coprime to a unit"
        phi = totient(self._order)
        _, r = _pdivmod(_pmul(s, [1 / g[0]]),
                        list(cyclotomic_polynomial(self._order)))
        r = list(r) + [Fraction(0)] * (phi - len(r))
        return Scalar(order=self._order, coeffs=r[:phi])

    def __truediv__(self, other):
        a, b = Scalar._coerce(self, other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return Scalar.rational(other) / self if isinstance(other, (int, Fraction)) else NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out, base = Scalar.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        if self._order is None:
            return Scalar._gauss(self._re, -self._im)
        n = self._order
        phi = totient(n)
        out = [Fraction(0)] * phi
        for k, c in enumerate(self._coeffs):
            if c:
                for idx, p in enumerate(_power_basis(n, (k * (n - 1)) % n)):
                    out[idx] += c * p
        return Scalar(order=n, coeffs=out)

    # ---- comparison and display

    def __eq__(self, other):
        if isinstance(other, Scalar) and self._order is None and other._order is None:
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        try:
            a, b = Scalar._coerce(self, other)
        except PreconditionError:
            # Different cyclotomic fields only share the rationals.
            if self.is_rational() and other.is_rational():
                return self.as_rational() == other.as_rational()
            return False
        if a.is_gaussian:
            return a._re == b._re and a._im == b._im
        return a._coeffs == b._coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def conj(s: Scalar) -> Scalar:
    """Exact complex conjugation; involutive ring homomorphism."""
    return s.conj()


# -- text form: gaussian as "a/b+c/d*i" with zero parts omitted.  When both
#    parts are present the sign between them is mandatory, otherwise pure
#    imaginary values like "11/2*i" would be ambiguous.

_FULL_RX = _re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)\s*"
    r"(?P<im>[+-]\s*(?:\d+(?:/\d+)?\s*\*\s*)?i)?\s*$")
_IMAG_RX = _re.compile(
    r"^\s*(?P<im>[+-]?\s*(?:\d+(?:/\d+)?\s*\*\s*)?i)\s*$")


def format_scalar(s: Scalar) -> str:
    if s.is_gaussian:
        re_, im_ = s.re, s.im
        if re_ == 0 and im_ == 0:
            return "0"
        parts = []
        if re_ != 0:
            parts.append(str(re_))
        if im_ != 0:
            imtxt = f"{im_}*i" if im_ > 0 else f"-{-im_}*i"
            if parts and im_ > 0:
                parts.append("+" + imtxt)
            else:
                parts.append(imtxt)
        return "".join(parts)
    return "cyclotomic(%d;%s)" % (s.order, ",".join(str(c) for c in s.coeffs))


def _imag_value(imtxt):
    body = imtxt.replace(" ", "")[:-1]  # strip the trailing i
    sign = 1
    if body.startswith("+"):
        body = body[1:]
    elif body.startswith("-"):
        sign, body = -1, body[1:]
    if body.endswith("*"):
        body = body[:-1]
    return sign * (Fraction(body) if body else Fraction(1))


def parse_scalar(text: str) -> Scalar:
    """Parse the gaussian string form "a/b+c/d*i" (either part omittable)."""
    m = _IMAG_RX.match(text)
    if m:
        return Scalar.gaussian(Fraction(0), _imag_value(m.group("im")))
    m = _FULL_RX.match(text)
    if not m:
        raise PreconditionError(f"cannot parse scalar {text!r}")
    re_ = Fraction(m.group("re"))
    im_ = _imag_value(m.group("im")) if m.group("im") else Fraction(0)
    return Scalar.gaussian(re_, im_)
