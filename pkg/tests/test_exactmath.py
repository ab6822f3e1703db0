from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dowling.exactmath import (
    DegenerateBasisError,
    IntegralityError,
    Poly,
    Series,
    as_integer,
    binomial,
    exp_series,
    factorial_basis_poly,
    falling_factorial,
    generalized_falling,
    generalized_rising,
    interpolate,
    rising_factorial,
)

F = Fraction


def test_falling_factorial_values():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(F(7, 2), 0) == 1
    assert falling_factorial(0, 0) == 1
    assert falling_factorial(F(1, 2), 2) == F(-1, 4)


def test_rising_factorial_values():
    assert rising_factorial(3, 3) == 60
    assert rising_factorial(F(-5, 3), 0) == 1


@pytest.mark.parametrize("x", [F(0), F(1), F(-2), F(1, 2), F(-7, 3)])
@pytest.mark.parametrize("n", range(11))
def test_rising_is_signed_falling_of_negated_argument(x, n):
    assert rising_factorial(x, n) == (-1) ** n * falling_factorial(-x, n)


def test_generalized_factorials():
    assert generalized_falling(4, 2, 2) == 8
    assert generalized_falling(F(9), F(1, 3), 0) == 1
    assert generalized_rising(4, 2, 2) == 24
    assert generalized_rising(7, 5, 0) == 1


@pytest.mark.parametrize("x", [F(3), F(-1, 2), F(10, 3)])
@pytest.mark.parametrize("n", range(7))
def test_step_one_reduces_to_plain_factorials(x, n):
    assert generalized_falling(x, 1, n) == falling_factorial(x, n)
    assert generalized_rising(x, 1, n) == rising_factorial(x, n)


def test_generalized_rising_quotients_divide_for_even_start():
    # [2r|m]_n / [2r|m]_k must be integral for positive r, m: needed by the
    # closed-form r-Whitney-Lah route.
    for r in range(1, 4):
        for m in range(1, 4):
            for n in range(8):
                for k in range(n + 1):
                    q = F(generalized_rising(2 * r, m, n), generalized_rising(2 * r, m, k))
                    assert q.denominator == 1


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(9, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        falling_factorial(3, -1)
    with pytest.raises(ValueError):
        generalized_rising(3, 1, -2)


def test_as_integer():
    assert as_integer(F(10, 2)) == 5
    assert as_integer(7) == 7
    with pytest.raises(IntegralityError):
        as_integer(F(1, 2))


# --- polynomials -----------------------------------------------------------

small_rationals = st.fractions(
    min_value=-9, max_value=9, max_denominator=6
)
small_polys = st.lists(small_rationals, max_size=5).map(Poly)


def test_poly_basics():
    p = Poly([-1, 0, 1])  # x^2 - 1
    assert p.degree == 2
    assert p(3) == 8
    assert p(F(1, 2)) == F(-3, 4)
    assert Poly([1, 0, 0]).degree == 0
    assert Poly().is_zero() and Poly().degree == -1


def test_poly_shift_argument():
    assert Poly([0, 0, 1]).shift_argument(1) == Poly([1, 2, 1])
    p = Poly([2, -3, 0, 5])
    q = p.shift_argument(F(1, 2))
    for x in (F(0), F(1), F(-2), F(3, 4)):
        assert q(x) == p(x + F(1, 2))


def test_poly_mul_by_zero():
    assert (Poly([1, 2, 3]) * Poly()).is_zero()
    assert Poly([1, 1]) * 0 == Poly()


def test_poly_immutable():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = ()


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * Poly([1]) == a


def test_factorial_basis_poly():
    assert factorial_basis_poly(1, -1, 3, 2) == Poly([4, -5, 1])  # (x-1)(x-4)
    assert factorial_basis_poly(-1, -1, 5, 1) == Poly([-1, -1])
    assert factorial_basis_poly(1, 0, 0, 2) == Poly([0, 0, 1])
    with pytest.raises(DegenerateBasisError):
        factorial_basis_poly(0, 1, 1, 1)
    assert factorial_basis_poly(0, 5, 1, 0) == Poly([1])


@pytest.mark.parametrize("a", [1, -1, F(2, 3)])
@pytest.mark.parametrize("n", range(6))
def test_factorial_basis_poly_degree_and_leading(a, n):
    p = factorial_basis_poly(a, F(1, 2), F(-3), n)
    assert p.degree == n
    assert p.leading == F(a) ** n


def test_interpolate_recovers_quadratic():
    p = Poly([4, -5, 1])
    pts = [(x, p(x)) for x in (0, 1, 2, 7)]
    assert interpolate(pts) == p
    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])


# --- truncated series ------------------------------------------------------


def test_series_geometric_inverse():
    s = Series.from_poly(Poly([1, 1]), 3).inverse()
    assert s == Series([1, -1, 1, -1], 3)


def test_series_exp_coefficients():
    e = exp_series(6)
    assert e.coefficient(0) == 1
    assert e.coefficient(5) == F(1, 120)
    assert exp_series(4, 3).coefficient(2) == F(9, 2)


def test_series_squared_lah_sample():
    # ((-t)/(1+t))^2 / 2! has t^3 coefficient -1.
    order = 5
    base = Series.from_poly(Poly([0, -1]), order) * Series.from_poly(Poly([1, 1]), order).inverse()
    s = (base ** 2) * F(1, 2)
    assert s.coefficient(3) == -1
    assert s.coefficient(2) == F(1, 2)


def test_series_inverse_rejects_zero_constant_term():
    with pytest.raises(ZeroDivisionError):
        Series.from_poly(Poly([0, 1]), 4).inverse()


def test_series_mul_requires_same_order():
    with pytest.raises(ValueError):
        Series([1], 2) * Series([1], 3)


def test_series_truncate():
    s = Series([1, 2, 3, 4], 3)
    assert s.truncate(1) == Series([1, 2], 1)
    with pytest.raises(ValueError):
        s.truncate(5)


def test_series_inverse_roundtrip():
    s = Series([2, -1, F(1, 3), 5, 0, -2], 5)
    assert s * s.inverse() == Series([1], 5)
