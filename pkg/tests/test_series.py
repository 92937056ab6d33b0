from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbsegre.coeff import D
from hilbsegre.integrals import segre_integral
from hilbsegre.series import (
    PowerSeries,
    SeriesFitError,
    closed_form_coefficient_poly,
    closed_form_for_degree,
    expected_q,
    fit_universal_exponents,
    mop_closed_form,
    segre_series,
    t_of_z,
    t_of_z_sqrt,
)

from oracles import sympy_closed_form, sympy_t_of_z


def T(cs, order, var="t"):
    return PowerSeries(cs, order, var)


def test_log_mercator():
    assert T((1, 1), 3).log() == T((0, 1, Fraction(-1, 2), Fraction(1, 3)), 3)


def test_binomial_half_power():
    assert T((1, 2), 2).pow_rational(Fraction(1, 2)) == T((1, 1, Fraction(-1, 2)), 2)


def test_exp_log_inverse_pair():
    assert T((1, 1), 6).log().exp() == T((1, 1), 6)


def test_domain_errors():
    with pytest.raises(ValueError):
        T((2, 1), 3).log()
    with pytest.raises(ValueError):
        T((2, 1), 3).pow_rational(Fraction(1, 2))
    with pytest.raises(ValueError):
        T((1, 1), 3).exp()
    with pytest.raises(ZeroDivisionError):
        T((0, 1), 3).inverse()


def test_tags_and_orders_never_mix():
    with pytest.raises(ValueError):
        T((1,), 3, "t") + T((1,), 3, "z")
    with pytest.raises(ValueError):
        T((1,), 3) * T((1,), 4)
    with pytest.raises(ValueError):
        T((1,), 3).compose(T((0, 1), 4))
    with pytest.raises(ValueError):
        PowerSeries((1,), 2, "x")
    assert T((1, 2, 3), 3).truncate(1) == T((1, 2), 1)


def test_inverse_and_division():
    s = T((2, 1, 5), 5)
    assert s * s.inverse() == T((1,), 5)
    assert (s / s) == T((1,), 5)
    assert s ** -2 * s**2 == T((1,), 5)


def test_t_of_z():
    t = t_of_z(5)
    assert t[1] == 1
    assert t == PowerSeries((0, 1, -1, 2, -5, 14), 5, "z")
    assert t + t * t == PowerSeries.gen(5, "z")


@pytest.mark.parametrize("order", [1, 4, 9])
def test_t_of_z_against_sympy(order):
    assert list(t_of_z(order).coeffs) == sympy_t_of_z(order)
    assert t_of_z(order) == t_of_z_sqrt(order)


def test_t_of_z_roundtrip():
    # substituting z = t + t^2 back gives t
    order = 8
    z_of_t = T((0, 1, 1), order)
    assert t_of_z(order).compose(z_of_t) == PowerSeries.gen(order, "t")


def test_reversion_rejects_degenerate():
    with pytest.raises(ValueError):
        T((0, 0, 1), 3).reversion()


small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@given(small, small)
@settings(max_examples=40, deadline=None)
def test_rational_powers_add(p, q):
    s = T((1, 3, -1, 2), 5)
    assert s.pow_rational(p) * s.pow_rational(q) == s.pow_rational(p + q)


def test_closed_form_trivial_at_degree_three():
    for order in (1, 6, 12):
        assert mop_closed_form(9, 9, -9, order) == PowerSeries.one(order, "z")


def test_closed_form_constant_term():
    assert mop_closed_form(Fraction(3, 7), 2, -5, 4)[0] == 1
    assert mop_closed_form(1, 2, 3, 0) == PowerSeries.one(0)


@pytest.mark.parametrize("args", [(4, 4, -6), (1, 0, 0), (Fraction(1, 2), 3, -1)])
def test_closed_form_against_sympy(args):
    got = mop_closed_form(*args, 5)
    want = sympy_closed_form(*args, 5)
    assert [sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, got.coeffs)] == want


@pytest.mark.parametrize("d0, want", [(1, 1), (2, 1), (4, -2), (5, -5)])
def test_closed_form_z2_coefficient(d0, want):
    assert closed_form_for_degree(d0, 4)[2] == want == Fraction(-(d0 * d0 - 3 * d0), 2)


def test_closed_form_coefficients_as_polynomials():
    from hilbsegre.integrals import segre_integral_poly

    for n in range(6):
        assert closed_form_coefficient_poly(n) == segre_integral_poly(n)
    assert closed_form_coefficient_poly(2) == (3 * D - D**2) * Fraction(1, 2)


def test_segre_series():
    assert segre_series(2, 4) == PowerSeries((1, 0, 1, -4, 15), 4)


def test_fit():
    fit = fit_universal_exponents([1, 2, 4, 5], 5)
    assert fit.C == PowerSeries.zero(5)
    assert fit.L == fit.Q * -3
    assert fit.Q == expected_q(5)
    for d0 in (1, 2, 4, 5):
        assert fit.predicted_log(d0) == segre_series(d0, 5).log()


def test_fit_rejects_bad_input():
    with pytest.raises(ValueError):
        fit_universal_exponents([1, 2], 3)
    with pytest.raises(ValueError):
        fit_universal_exponents([1, 2, 3], 3)
    with pytest.raises(ValueError):
        fit_universal_exponents([1, 1, 2], 3)


def test_fit_detects_non_quadratic_data():
    def cubic(n, d0):
        return segre_integral(n, d0) + (d0**3 if n == 1 else 0)

    with pytest.raises(SeriesFitError):
        fit_universal_exponents([1, 2, 4, 5], 3, cubic)


def test_serialization():
    s = PowerSeries((1, Fraction(-1, 2)), 2, "t")
    data = s.to_json()
    assert data == {"var": "t", "coeffs": [["1", "1"], ["-1", "2"], ["0", "1"]]}
    assert PowerSeries.from_json(data) == s
    assert s.to_strings() == ["1/1", "-1/2", "0/1"]
    assert str(s) == "1 - 1/2*t + O(t^3)"
