from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hodgekit.errors import PreconditionError
from hodgekit.scalars import Scalar, conj, format_scalar, parse_scalar

small_fracs = st.fractions(min_value=-8, max_value=8, max_denominator=6)
gaussians = st.builds(Scalar.gaussian, small_fracs, small_fracs)


def test_conj_examples():
    assert conj(Scalar.i()) == -Scalar.i()
    assert conj(Scalar.rational(Fraction(2, 3))) == Scalar.rational(Fraction(2, 3))
    z8 = Scalar.zeta(8)
    assert conj(z8) == z8 ** 7


@given(gaussians)
def test_conj_involution(a):
    assert a.conj().conj() == a


@given(gaussians, gaussians)
@settings(max_examples=60)
def test_conj_ring_hom(a, b):
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()


@given(gaussians, gaussians, gaussians)
@settings(max_examples=60)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not b.is_zero:
        assert (a / b) * b == a


def test_conj_is_automorphism_on_cyclotomics():
    z = Scalar.zeta(12)
    a = z + 3 * z.inv() - Scalar.rational(Fraction(1, 7)) * z ** 2
    b = z ** 5 - 2
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a


def test_division_by_zero():
    with pytest.raises(PreconditionError):
        Scalar.one() / Scalar.zero()
    with pytest.raises(PreconditionError):
        Scalar.zeta(8).inv() * Scalar.cyclotomic(8, [0, 0, 0, 0]).inv()


def test_gaussian_embeds_into_order_four():
    i = Scalar.i()
    z4 = Scalar.zeta(4)
    assert z4 == i
    assert z4 + i == Scalar.cyclotomic(4, [0, 2])
    # and into any order divisible by 4
    z8 = Scalar.zeta(8)
    assert z8 ** 2 == i
    assert (i * z8) == z8 ** 3


def test_mixed_orders_rejected():
    with pytest.raises(PreconditionError):
        Scalar.zeta(3) + Scalar.zeta(8)
    with pytest.raises(PreconditionError):
        Scalar.i() + Scalar.zeta(3)
    # rationals embed everywhere
    assert Scalar.rational(2) + Scalar.zeta(3) == Scalar.zeta(3) + 2


def test_cyclotomic_inverse_and_power():
    for n in (1, 2, 3, 4, 5, 8, 12):
        z = Scalar.zeta(n)
        assert z ** n == Scalar.one()
        assert z * z.inv() == Scalar.one()
        assert (z * z.conj()) == Scalar.one()  # |zeta| = 1 exactly


def test_order_cap_env(monkeypatch):
    monkeypatch.setenv("HODGEKIT_CYCLOTOMIC_MAX", "10")
    with pytest.raises(PreconditionError):
        Scalar.zeta(12)
    monkeypatch.delenv("HODGEKIT_CYCLOTOMIC_MAX")
    assert Scalar.zeta(12) ** 12 == Scalar.one()


@given(gaussians)
@settings(max_examples=60)
def test_format_parse_roundtrip(a):
    assert parse_scalar(format_scalar(a)) == a


@pytest.mark.parametrize("text,re_,im_", [
    ("0", 0, 0),
    ("i", 0, 1),
    ("-i", 0, -1),
    ("2/3", Fraction(2, 3), 0),
    ("1/2*i", 0, Fraction(1, 2)),
    ("-5", -5, 0),
    ("1/2+2/3*i", Fraction(1, 2), Fraction(2, 3)),
    ("1/2-2/3*i", Fraction(1, 2), Fraction(-2, 3)),
])
def test_parse_fixtures(text, re_, im_):
    assert parse_scalar(text) == Scalar.gaussian(re_, im_)


def test_parse_garbage():
    for bad in ("", "x", "1//2", "2i3"):
        with pytest.raises(PreconditionError):
            parse_scalar(bad)
