from fractions import Fraction

import pytest
from hypothesis import given, settings

from clifflame.scalars import QuadScalar, format_scalar, get_radicand, set_radicand, split_square

from conftest import quad_scalars

R2 = QuadScalar.sqrt(2)
HALF_R2 = R2 / 2


def test_add_examples():
    assert QuadScalar(Fraction(1, 2)) + QuadScalar(Fraction(1, 2)) == 1
    assert HALF_R2 + HALF_R2 == R2
    assert (1 + R2) + (1 - R2) == 2


def test_mul_examples():
    assert HALF_R2 * HALF_R2 == Fraction(1, 2)
    assert (1 + R2) * (1 - R2) == -1
    a, b = QuadScalar(Fraction(3, 5)), QuadScalar(Fraction(4, 5))
    assert a * a + b * b == 1


def test_inv_examples():
    assert QuadScalar(2).inverse() == Fraction(1, 2)
    assert (1 + R2).inverse() == -1 + R2
    assert HALF_R2.inverse() == R2


def test_inv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QuadScalar(0).inverse()
    with pytest.raises(ZeroDivisionError):
        QuadScalar(1) / 0


def test_canonical_form():
    a = QuadScalar(Fraction(2, 4), Fraction(-6, 3))
    assert a.rat == Fraction(1, 2) and a.rat.denominator == 2
    assert a.irr == -2
    assert QuadScalar(3) == 3 and hash(QuadScalar(3)) == hash(3)
    assert QuadScalar(0, 1) != 0


@settings(max_examples=1000, deadline=None)
@given(quad_scalars(), quad_scalars(), quad_scalars())
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1
    assert a - a == 0


@settings(max_examples=300, deadline=None)
@given(quad_scalars())
def test_norm_nonzero_for_nonzero(a):
    # p^2 - 2 q^2 vanishes only at p = q = 0
    norm = a.rat**2 - 2 * a.irr**2
    assert (norm == 0) == (not a)


@settings(max_examples=500, deadline=None)
@given(quad_scalars())
def test_print_parse_round_trip(a):
    assert QuadScalar.parse(str(a)) == a


@pytest.mark.parametrize(
    "a, text",
    [
        (QuadScalar(Fraction(1, 2)), "1/2"),
        (HALF_R2, "1/2*sqrt(2)"),
        (-R2, "-sqrt(2)"),
        (1 - R2, "1 - sqrt(2)"),
        (QuadScalar(Fraction(-3, 7), Fraction(2, 5)), "-3/7 + 2/5*sqrt(2)"),
        (QuadScalar(0), "0"),
    ],
)
def test_format(a, text):
    assert format_scalar(a) == text
    assert QuadScalar.parse(text) == a


def test_ordering():
    assert R2 > 1
    assert 1 - R2 < 0
    assert QuadScalar(Fraction(3, 2)) > R2  # 2.25 > 2
    assert QuadScalar(Fraction(7, 5)) < R2  # 1.96 < 2
    assert sorted([R2, QuadScalar(1), QuadScalar(2)]) == [1, R2, 2]


def test_split_square():
    assert split_square(8) == (2, 2)
    assert split_square(18) == (3, 2)
    assert split_square(36) == (6, 1)
    assert QuadScalar.sqrt(8) == 2 * R2
    with pytest.raises(ValueError):
        QuadScalar.sqrt(3)


def test_other_radicand():
    set_radicand(3)
    try:
        r3 = QuadScalar.sqrt(3)
        assert r3 * r3 == 3
        assert (2 + r3).inverse() == 2 - r3
        with pytest.raises(ValueError):
            r3 + R2
    finally:
        set_radicand(2)
    assert get_radicand() == 2
    with pytest.raises(ValueError):
        set_radicand(4)
