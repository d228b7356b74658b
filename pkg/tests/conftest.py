import random

import pytest

from hodgekit.scalars import Scalar
from hodgekit.univariate import LaurentZ, RatFunc, RATFUNC_S, SCALARS


def sc(x):
    return Scalar.rational(x)


def gauss(a, b):
    return Scalar.gaussian(a, b)


def lzg(terms):
    """Gaussian-coefficient Laurent in z from {exp: rational-ish}."""
    return LaurentZ(SCALARS, {k: v if isinstance(v, Scalar) else Scalar.rational(v)
                              for k, v in terms.items()})


def lzs(terms):
    """ratfun_s-coefficient Laurent in z from {exp: RatFunc | int}."""
    return LaurentZ(RATFUNC_S, {k: v if isinstance(v, RatFunc) else RatFunc([v])
                                for k, v in terms.items()})


def basis_vec(i, n):
    return [Scalar.one() if j == i else Scalar.zero() for j in range(n)]


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture
def svar():
    return RatFunc.var()
