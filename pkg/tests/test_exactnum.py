from decimal import Decimal, localcontext
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from seqconv.exactnum import (
    golden_ratio,
    golden_ratio_cubed,
    parse_decimal,
    reduce,
    render,
    sqrt_decimal,
    to_decimal,
)


@pytest.mark.parametrize(
    "num,den,expected",
    [(2, 4, Fraction(1, 2)), (0, 7, Fraction(0, 1)), (-6, -4, Fraction(3, 2)), (6, -4, Fraction(-3, 2))],
)
def test_reduce(num, den, expected):
    r = reduce(num, den)
    assert r == expected
    assert r.denominator > 0


def test_reduce_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        reduce(1, 0)


@pytest.mark.parametrize(
    "value,digits,text",
    [
        (Fraction(1, 3), 5, "0.33333"),
        (Fraction(1, 8), 2, "0.12"),
        (Fraction(3, 8), 2, "0.38"),
        (Fraction(5, 4), 3, "1.250"),
        (Fraction(-1, 8), 2, "-0.12"),
        (Fraction(1, 10**9), 12, "0.000000001000"),
        (Fraction(2, 3), 1, "0.7"),
    ],
)
def test_to_decimal(value, digits, text):
    assert render(to_decimal(value, digits)) == text


def test_to_decimal_rejects_zero_digits():
    with pytest.raises(ValueError):
        to_decimal(Fraction(1, 2), 0)


def _mp_phi(digits):
    with mpmath.workdps(digits + 20):
        return mpmath.nstr((1 + mpmath.sqrt(5)) / 2, digits + 1, min_fixed=-1, max_fixed=5)


def test_golden_ratio_examples():
    # frozen from an mpmath evaluation at 60 digits
    assert render(golden_ratio(15)) == "1.618033988749895"
    assert render(golden_ratio(6)) == "1.618034"
    assert render(golden_ratio(1)) == "1.6"


@pytest.mark.parametrize("digits", [3, 10, 25, 40, 60])
def test_golden_ratio_matches_mpmath(digits):
    assert render(golden_ratio(digits)) == _mp_phi(digits)


@pytest.mark.parametrize("digits", [5, 12, 30])
def test_golden_ratio_identity(digits):
    phi = golden_ratio(digits)
    with localcontext() as ctx:
        ctx.prec = 4 * digits + 10
        assert abs(phi * phi - phi - 1) < Decimal(10) ** (1 - digits)


def test_golden_ratio_cubed_matches_mpmath():
    with mpmath.workdps(80):
        ref = mpmath.nstr(((1 + mpmath.sqrt(5)) / 2) ** 3, 41)
    assert render(golden_ratio_cubed(40)) == ref


def test_sqrt_decimal():
    assert render(sqrt_decimal(Fraction(1, 4), 3)) == "0.500"
    assert render(sqrt_decimal(Fraction(2), 10)) == "1.4142135624"


def test_parse_roundtrip():
    assert parse_decimal("−1.25") == Fraction(-5, 4)
    assert parse_decimal(render(to_decimal(Fraction(7, 16), 4))) == Fraction(7, 16)


fractions = st.fractions(max_denominator=10**6).filter(lambda f: abs(f) < 10**6)


@given(fractions, fractions, st.integers(1, 12))
def test_sum_of_renderings_agrees(a, b, n):
    direct = to_decimal(a + b, n)
    guarded = Fraction(to_decimal(a, n + 2)) + Fraction(to_decimal(b, n + 2))
    assert abs(Fraction(direct) - Fraction(to_decimal(guarded, n))) <= Fraction(1, 10**n)


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30).filter(bool))
def test_reduce_idempotent(p, q):
    r = reduce(p, q)
    assert reduce(r.numerator, r.denominator) == r
    assert r == Fraction(p) / q


@given(st.integers(-10**40, 10**40))
def test_int_decimal_roundtrip(n):
    assert int(str(n)) == n
    assert Fraction(to_decimal(n, 3)) == n
