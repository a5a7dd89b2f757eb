from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diadeform.errors import BadScalar, MixedFields
from diadeform.fields import GFElement, PrimeField, QQ, parse_field


def test_rationals_basics():
    half = QQ.parse("1/2")
    assert half + half == QQ.one
    assert QQ.parse("-3/6") == QQ.parse("-1/2")
    assert QQ.format(QQ.parse("4/6")) == "2/3"
    assert QQ.from_int(7) == Fraction(7)
    assert QQ.owns(QQ.zero) and QQ.owns(Fraction(1, 3))
    assert not QQ.owns(0.5) and not QQ.owns(1)


def test_rationals_bad_scalar():
    with pytest.raises(BadScalar):
        QQ.parse("1/0")
    with pytest.raises(BadScalar):
        QQ.parse("pi")


def test_gf_arithmetic():
    F = PrimeField(7)
    a, b = F.from_int(3), F.from_int(5)
    assert a + b == F.from_int(1)
    assert a * b == F.from_int(1)
    assert -a == F.from_int(4)
    assert a - b == F.from_int(5)
    assert (a / b) * b == a
    assert F.from_int(10) == F.from_int(3)
    assert F.parse("5/3") == b / a
    assert F.format(F.from_int(-1)) == "6"


@given(st.integers(-50, 50))
def test_gf_inverse(n):
    F = PrimeField(11)
    x = F.from_int(n)
    if x != F.zero:
        assert x * (F.one / x) == F.one


def test_gf_compares_to_int():
    F = PrimeField(5)
    assert F.from_int(0) == 0
    assert F.from_int(1) == 1
    assert F.from_int(3) != 0


def test_mixed_primes_rejected():
    a = GFElement(5, 2)
    b = GFElement(7, 2)
    with pytest.raises(MixedFields):
        a + b


def test_prime_required():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_parse_field():
    assert parse_field("rationals") == QQ
    assert parse_field("gf 7") == PrimeField(7)
    assert parse_field("gf:13") == PrimeField(13)
    with pytest.raises(BadScalar):
        parse_field("reals")
