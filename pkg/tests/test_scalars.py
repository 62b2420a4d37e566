import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunklsb.scalars import SqrtRational, format_scalar, rational_power, rational_sqrt, to_fraction


def test_to_fraction():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(2) == 2
    with pytest.raises(TypeError):
        to_fraction(0.5)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None


def test_sqrt_rational_arithmetic():
    r2 = SqrtRational.sqrt(2)
    assert r2 * r2 == 2
    assert (r2 * SqrtRational.sqrt(8)).is_rational
    assert float(r2.inverse()) == pytest.approx(2**-0.5)
    assert SqrtRational.sqrt(Fraction(9, 4)).as_fraction() == Fraction(3, 2)


def test_rational_power():
    assert rational_power(Fraction(4), Fraction(3, 2)) == 8
    assert float(rational_power(Fraction(2), Fraction(5, 2))) == pytest.approx(2**2.5)
    assert isinstance(rational_power(Fraction(2), Fraction(1, 3)), float)


@given(st.fractions(max_denominator=10**6))
def test_rational_format_round_trip(q):
    text = format_scalar(q)
    assert "/" in text
    assert Fraction(text) == q


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_format_round_trip(v):
    text = format_scalar(v)
    assert float(json.loads(json.dumps(text))) == v
