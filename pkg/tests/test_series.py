"""Exact core: rationals, truncated series, bivariate expansions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superyangian.series import (
    RATIONALS,
    BiSeries,
    NonUnitError,
    OrderMismatchError,
    SeriesTail,
    rational_from_text,
    rational_to_text,
)

rationals = st.fractions(min_value=-40, max_value=40, max_denominator=9)


def series(order, coeffs):
    return SeriesTail(RATIONALS, order, [Fraction(c) for c in coeffs])


def test_rational_text_round_trip_examples():
    for text in ["-7/3", "4", "0", "22/7", "-1"]:
        assert rational_to_text(rational_from_text(text)) == text


@given(rationals)
def test_rational_text_round_trip_random(q):
    assert rational_from_text(rational_to_text(q)) == q


def test_rational_rejects_junk():
    for bad in ["", "1/0", "x", "1.5", "7/"]:
        with pytest.raises(ValueError):
            rational_from_text(bad)


def test_add_is_coefficientwise():
    a = series(1, [1, 2])
    b = series(1, [3, -2])
    assert a + b == series(1, [4, 0])


def test_add_identity():
    a = series(2, [5, -1, 7])
    assert a + SeriesTail.zero(RATIONALS, 2) == a


def test_mixed_orders_error():
    with pytest.raises(OrderMismatchError):
        series(3, [1, 0, 0, 0]) + series(4, [1, 0, 0, 0, 0])
    with pytest.raises(OrderMismatchError):
        series(3, [1, 0, 0, 0]) == series(4, [1, 0, 0, 0, 0])


def test_mul_example():
    a = series(2, [1, 1, 0])
    b = series(2, [1, -1, 0])
    assert a * b == series(2, [1, 0, -1])


def test_mul_unit():
    b = series(3, [2, 0, 5, -7])
    assert SeriesTail.one(RATIONALS, 3) * b == b


def test_mul_preserves_factor_order_over_noncommutative_ring():
    # 2x2 rational matrices as a noncommutative stand-in
    from superyangian.algebra import algebra
    from superyangian.matrices import element_ring

    alg = algebra(1, 1)
    ring = element_ring(alg)
    x = alg.gen(1, 2, 1)
    y = alg.gen(2, 1, 1)
    a = SeriesTail(ring, 2, [alg.one(1), x, alg.zero(1)])
    b = SeriesTail(ring, 2, [alg.one(1), y, alg.zero(1)])
    prod = a * b
    assert prod.coefficient(2) == x * y
    assert prod.coefficient(2) != y * x


def test_inverse_geometric():
    a = series(3, [1, -1, 0, 0])
    assert a.inverse() == series(3, [1, 1, 1, 1])


def test_inverse_of_one():
    one = SeriesTail.one(RATIONALS, 4)
    assert one.inverse() == one


def test_inverse_quadratic_over_noncommutative_ring():
    # inverse(1 + Z u^-2) = 1 - Z u^-2 modulo u^-4
    from superyangian.algebra import algebra
    from superyangian.matrices import element_ring

    alg = algebra(1, 1)
    ring = element_ring(alg)
    z = alg.gen(1, 1, 1)
    a = SeriesTail.from_map(ring, 3, {0: alg.one(1), 2: z})
    inv = a.inverse()
    assert inv == SeriesTail.from_map(ring, 3, {0: alg.one(1), 2: -z})
    assert (a * inv) == SeriesTail.one(ring, 3)
    assert (inv * a) == SeriesTail.one(ring, 3)


def test_inverse_needs_unit_constant_term():
    with pytest.raises(NonUnitError):
        series(2, [2, 0, 0]).inverse()


def test_shift_zero_is_identity():
    a = series(1, [1, 1])
    assert a.shift(0) == a


def test_shift_matches_long_division():
    # 1/(u+1) = u^-1 - u^-2 + u^-3 - ...
    a = series(3, [0, 1, 0, 0])
    assert a.shift(1) == series(3, [0, 1, -1, 1])


def test_shift_round_trip():
    a = series(4, [2, -3, 5, 0, 7])
    for c in range(-3, 4):
        assert a.shift(c).shift(-c) == a


@given(st.lists(rationals, min_size=5, max_size=5),
       st.lists(rationals, min_size=5, max_size=5),
       st.integers(min_value=-3, max_value=3))
@settings(max_examples=40, deadline=None)
def test_shift_is_ring_homomorphism(acoef, bcoef, c):
    a = series(4, acoef)
    b = series(4, bcoef)
    assert (a * b).shift(c) == a.shift(c) * b.shift(c)
    assert (a + b).shift(c) == a.shift(c) + b.shift(c)


def test_derivative_examples():
    assert series(2, [1, 1, 0]).derivative() == series(2, [0, 0, -1])
    assert series(3, [5, 0, 0, 0]).derivative() == SeriesTail.zero(RATIONALS, 3)
    assert series(3, [0, 0, 1, 0]).derivative() == series(3, [0, 0, 0, -2])


@given(st.lists(rationals, min_size=4, max_size=4),
       st.lists(rationals, min_size=4, max_size=4))
@settings(max_examples=40, deadline=None)
def test_derivative_leibniz_up_to_one_order_less(acoef, bcoef):
    a = series(3, acoef)
    b = series(3, bcoef)
    lhs = (a * b).derivative()
    rhs = a.derivative() * b + a * b.derivative()
    # the u^-(D+1) tail is unknown; compare up to u^-D only after
    # dropping the boundary coefficient, which may differ
    for r in range(3):
        assert lhs.coefficient(r) == rhs.coefficient(r)


@given(st.lists(rationals, min_size=4, max_size=4),
       st.lists(rationals, min_size=4, max_size=4),
       st.lists(rationals, min_size=4, max_size=4))
@settings(max_examples=40, deadline=None)
def test_ring_axioms(ac, bc, cc):
    a, b, c = series(3, ac), series(3, bc), series(3, cc)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(st.lists(rationals, min_size=4, max_size=4))
@settings(max_examples=40, deadline=None)
def test_inverse_is_two_sided(coeffs):
    a = series(3, [Fraction(1)] + [Fraction(c) for c in coeffs[1:]])
    inv = a.inverse()
    one = SeriesTail.one(RATIONALS, 3)
    assert a * inv == one
    assert inv * a == one


def test_biseries_times_u_minus_v():
    # (u - v) * (u^-1 v^-1) = v^-1 - u^-1 at one order less
    b = BiSeries(RATIONALS, 2, 2, {(1, 1): Fraction(1)})
    shifted = b.times_u_minus_v()
    assert shifted.coefficient(0, 1) == 1
    assert shifted.coefficient(1, 0) == -1
    assert shifted.order_u == 1 and shifted.order_v == 1


def test_biseries_product_and_equality():
    a = BiSeries.in_u(RATIONALS, 2, 2, [1, 2, 0])
    b = BiSeries.in_v(RATIONALS, 2, 2, [1, 0, -1])
    prod = a * b
    assert prod.coefficient(1, 2) == -2
    assert prod.coefficient(1, 0) == 2
    with pytest.raises(OrderMismatchError):
        prod == BiSeries.in_u(RATIONALS, 1, 1, [1, 0])
