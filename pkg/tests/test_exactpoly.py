"""Laurent polynomial and rational function arithmetic.

Multiplication and addition are cross-checked against evaluation at rational
points (an oracle independent of the term-map implementation), and the ring
axioms are property-tested on random sparse polynomials.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckecell.exactpoly import (
    ONE,
    Q,
    QINV,
    ZERO,
    LaurentPoly,
    NotLaurentError,
    RationalFunction,
    q_power,
    rf_convert,
)

laurents = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=8,
).map(LaurentPoly)

EVAL_POINTS = [Fraction(1), Fraction(-2), Fraction(3, 5), Fraction(-7, 2)]


def test_basic_products():
    assert (Q + QINV) * Q == LaurentPoly({2: 1, 0: 1})
    assert (Q - QINV) * (Q + QINV) == LaurentPoly({2: 1, -2: -1})


def test_additive_identity():
    p = LaurentPoly({3: 4, -1: -2})
    assert p + ZERO == p
    assert p - p == ZERO
    assert not ZERO


@given(laurents, laurents)
@settings(deadline=None)
def test_mul_matches_evaluation(a, b):
    prod = a * b
    for x in EVAL_POINTS:
        assert prod.evaluate(x) == a.evaluate(x) * b.evaluate(x)


@given(laurents, laurents, laurents)
@settings(deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_is_unit():
    assert LaurentPoly({3: -1}).is_unit()
    assert not (ONE + Q).is_unit()
    assert not ZERO.is_unit()
    assert not LaurentPoly({0: 2}).is_unit()


@given(st.integers(min_value=-5, max_value=5), st.sampled_from([1, -1]))
def test_unit_inverse(k, sign):
    u = LaurentPoly({k: sign})
    assert u * u.unit_inverse() == ONE


def test_pow():
    assert (Q + ONE) ** 0 == ONE
    assert (Q + ONE) ** 2 == LaurentPoly({2: 1, 1: 2, 0: 1})


def test_json_round_trip():
    p = LaurentPoly({-1: 1, 1: 1})
    assert p.to_json() == [[-1, "1"], [1, "1"]]
    assert LaurentPoly.from_json(p.to_json()) == p
    # integer coefficients accepted on input as well
    assert LaurentPoly.from_json([[-1, 1], [1, 1]]) == p


def test_repr_readable():
    assert repr(LaurentPoly({2: 1, -2: -1})) == "q^2 - q^-2"
    assert repr(ZERO) == "0"


# -- rational functions ----------------------------------------------------------


def test_rf_convert_examples():
    num = LaurentPoly({2: 1, 0: -1})     # q^2 - 1
    assert rf_convert(RationalFunction(num, Q)) == Q - QINV
    with pytest.raises(NotLaurentError):
        rf_convert(RationalFunction(ONE, Q + ONE))
    assert rf_convert(RationalFunction(q_power(5), q_power(2))) == q_power(3)


@given(laurents)
@settings(deadline=None)
def test_rf_round_trip(p):
    assert rf_convert(RationalFunction.from_laurent(p)) == p


@given(laurents, laurents, laurents, laurents)
@settings(deadline=None, max_examples=40)
def test_rf_field_arithmetic(a, b, c, d):
    if not b or not d:
        return
    x = RationalFunction(a, b)
    y = RationalFunction(c, d)
    s = x + y
    p = x * y
    for v in EVAL_POINTS:
        if b.evaluate(v) == 0 or d.evaluate(v) == 0:
            continue
        xv = a.evaluate(v) / b.evaluate(v)
        yv = c.evaluate(v) / d.evaluate(v)
        assert s.num.evaluate(v) / s.den.evaluate(v) == xv + yv
        assert p.num.evaluate(v) / p.den.evaluate(v) == xv * yv


def test_rf_normal_form():
    # reduced, positive leading denominator, structural equality
    two_q = LaurentPoly({1: 2})
    assert RationalFunction(two_q, LaurentPoly({0: 2})) == RationalFunction(Q)
    neg = RationalFunction(ONE, -Q - ONE)
    assert neg.den == Q + ONE and neg.num == -ONE
    assert RationalFunction(Q * Q + Q, Q + ONE) == RationalFunction(Q)


def test_rf_division():
    x = RationalFunction(ONE, Q + ONE)
    assert (x / x) == RationalFunction(ONE)
    with pytest.raises(ZeroDivisionError):
        x / RationalFunction(ZERO)
