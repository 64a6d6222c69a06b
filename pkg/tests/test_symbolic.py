from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from gdyck.errors import DomainError
from gdyck.symbolic import (
    Laurent,
    TruncatedSeries,
    as_fraction,
    binom,
    format_rational,
    laurent_mul,
    multinomial,
    series_exp,
    series_log,
)

small_rat = st.fractions(min_value=-5, max_value=5, max_denominator=6)
terms = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5)


def test_binom_matches_math_and_vanishes_outside():
    for n in range(8):
        for k in range(-2, 10):
            expected = math.comb(n, k) if 0 <= k <= n else 0
            assert binom(n, k) == expected
    assert binom(-1, 0) == 0


def test_multinomial():
    assert multinomial(4, 2, 1) == 12  # 4! / (2! 1! 1!)
    assert multinomial(3, 3) == 1
    assert multinomial(2, 1, 1) == 2
    assert multinomial(2, 2, 1) == 0
    assert multinomial(-1, 0) == 0


def test_rational_parse_and_format():
    assert as_fraction("3/6") == Fraction(1, 2)
    assert as_fraction(4) == 4
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 4)) == "-1/4"
    with pytest.raises(DomainError):
        as_fraction("x/2")


def test_laurent_basics():
    Q = Laurent.monomial(1)
    p = 28 + 4 * Q + 4 * Q ** -1
    assert p.coefficient(0) == 28 and p.coefficient(-1) == 4
    assert repr(p) == "28 + 4*Q + 4*Q^-1"
    assert p.to_json() == {"-1": "4", "0": "28", "1": "4"}
    assert (Q * Q ** -1) == 1
    assert Laurent() == 0


def test_laurent_modular_reduction():
    Q = Laurent.monomial(1, 1, 5)
    assert Q ** 5 == 1
    assert Q ** -1 == Q ** 4
    with pytest.raises(DomainError):
        Q + Laurent.monomial(1)


@given(terms, terms)
def test_laurent_commutative(a, b):
    A, B = Laurent(a), Laurent(b)
    assert A * B == B * A
    assert A + B == B + A
    assert laurent_mul(A, B) == A * B


@given(terms, terms, terms)
def test_laurent_associative_distributive(a, b, c):
    A, B, C = Laurent(a), Laurent(b), Laurent(c)
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C


@given(terms, terms, st.integers(1, 9))
def test_reduction_is_a_ring_homomorphism(a, b, q):
    A, B = Laurent(a), Laurent(b)
    assert (A * B).reduce(q) == A.reduce(q) * B.reduce(q)
    assert (A + B).reduce(q) == A.reduce(q) + B.reduce(q)


def test_log_of_one_plus_x():
    s = TruncatedSeries([1, 1], 5)
    assert list(series_log(s).coeffs) == [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4),
                                          Fraction(1, 5)]


def test_log_requires_unit_constant():
    with pytest.raises(DomainError):
        series_log(TruncatedSeries([2, 1], 3))
    with pytest.raises(DomainError):
        series_exp(TruncatedSeries([1, 1], 3))


@given(st.lists(small_rat, min_size=1, max_size=7))
def test_exp_log_inverse(tail):
    s = TruncatedSeries([1] + tail)
    assert series_exp(series_log(s)) == s
    b = TruncatedSeries([0] + tail)
    assert series_log(series_exp(b)) == b


@given(st.lists(small_rat, min_size=1, max_size=6))
def test_series_inverse(tail):
    s = TruncatedSeries([1] + tail)
    one = TruncatedSeries([1], s.order)
    assert s * s.inverse() == one


def test_series_over_laurent_coefficients():
    Q = Laurent.monomial(1)
    s = TruncatedSeries([1, Q + Q ** -1], 3)
    log = series_log(s)
    assert log[2] == -(Q + Q ** -1) ** 2 / 2
