from fractions import Fraction

import pytest

from hilbsegre.coeff import D, DPoly
from hilbsegre.integrals import (
    CheckResult,
    SegreConsistencyError,
    _divide_factorial,
    _evaluate_level0,
    check_chain_vanishing,
    check_divisible,
    check_delta23_tails,
    check_balanced_chain_sum,
    check_special_sum,
    check_xi,
    integral_record,
    integral_table,
    pushforward_levels,
    segre_integral,
    segre_integral_poly,
    special_sum_element,
)
from hilbsegre.operators import apply_chain_sum
from hilbsegre.symalg import NORMAL, UNPRUNED, Element, Rules, degree_of, parse_monomial

half = Fraction(1, 2)


def test_small_integrals():
    assert segre_integral_poly(0) == DPoly((1,))
    assert segre_integral_poly(1) == DPoly()
    assert segre_integral_poly(2) == (3 * D - D**2) * half


def test_n2_by_hand():
    # f(S_4) at level 1 is -d * sum theta_t^1 S_{3-t}; pruning keeps t = 1, 2, 3
    lv = pushforward_levels(2)
    assert lv[1] == Element(1, {parse_monomial(f"t1_{t}*S_{3 - t}"): -D for t in (1, 2, 3)})
    assert lv[2] == Element(0, {parse_monomial("S_0"): 3 * D - D**2})


def test_known_polynomials():
    assert segre_integral_poly(3) == 2 * D**2 - 6 * D
    assert segre_integral_poly(4) == (
        D**4 * Fraction(1, 8) - D**3 * Fraction(3, 4) - D**2 * Fraction(49, 8) + D * Fraction(87, 4)
    )


@pytest.mark.parametrize("n", range(1, 7))
def test_integer_values_and_zeros(n):
    p = segre_integral_poly(n)
    for d0 in range(6):
        assert isinstance(p.eval_at(d0), int)
    assert p.eval_at(0) == 0
    assert p.eval_at(3) == 0
    assert p.degree <= 2 * n


@pytest.mark.parametrize("n", range(0, 6))
def test_fixed_d_agrees_with_symbolic(n):
    p = segre_integral_poly(n)
    for d0 in (1, 2, 3, 4, 5, -2, Fraction(1, 3)):
        assert segre_integral(n, d0) == p.eval_at(d0)


@pytest.mark.parametrize("n", range(0, 4))
def test_pruning_invariance(n):
    assert segre_integral_poly(n, UNPRUNED) == segre_integral_poly(n)


@pytest.mark.parametrize("n", range(0, 5))
def test_theta1_rule_invariance(n):
    assert segre_integral_poly(n, Rules(kill_theta1=True)) == segre_integral_poly(n)


@pytest.mark.parametrize("n", range(0, 6))
def test_homogeneity_along_pipeline(n):
    for k, e in enumerate(pushforward_levels(n)):
        assert e.level == n - k
        assert all(degree_of(m) == 2 * (n - k) for m in e.terms)


def test_parallel_expansion_matches_serial():
    assert integral_record(6, D, NORMAL, workers=3).value == segre_integral_poly(6)


def test_record_and_table():
    rec = integral_record(3)
    assert rec.n == 3 and rec.chain_count >= 1
    tab = integral_table(3)
    assert [r.value for r in tab] == [segre_integral_poly(n) for n in range(4)]
    with pytest.raises(ValueError):
        integral_record(-1)


def test_consistency_errors():
    with pytest.raises(SegreConsistencyError):
        _evaluate_level0(Element.segre(1, 1), 1)
    with pytest.raises(SegreConsistencyError):
        _evaluate_level0(Element(0, {parse_monomial("S_1"): 1}), 1)
    with pytest.raises(SegreConsistencyError):
        _divide_factorial(DPoly((0, 1)), 2)
    with pytest.raises(SegreConsistencyError):
        _divide_factorial(3, 2)
    assert _divide_factorial(6, 3) == 1


def test_check_divisible_reports_witness():
    e = Element(2, {parse_monomial("t0_1*S_0"): D, parse_monomial("S_2"): D - 3})
    res = check_divisible(e, {"case": 1})
    assert not res and res.witness == ("t0_1*S_0", "d")
    assert "t0_1*S_0" in res.describe()
    assert check_divisible(Element(2, {parse_monomial("S_2"): D * D - 3 * D}), by_d=True)
    assert not check_divisible(Element(2, {parse_monomial("S_2"): D - 3}), by_d=True)
    assert bool(CheckResult(True))


@pytest.mark.parametrize("k, r, m, n", [(1, 2, 4, 3), (2, 3, 6, 4)])
def test_chain_vanishing_examples(k, r, m, n):
    assert check_chain_vanishing(k, r, m, n)


def test_chain_vanishing_scope():
    with pytest.raises(ValueError):
        check_chain_vanishing(2, 2, 4, 4)
    # the balanced sum is generally nonzero
    assert apply_chain_sum(2, 2, Element.segre(6, 4))


@pytest.mark.parametrize("k, m, n", [(1, 2, 2), (2, 4, 3), (3, 6, 4)])
def test_balanced_chain_sum_examples(k, m, n):
    assert check_balanced_chain_sum(k, m, n)


def test_balanced_chain_sum_preconditions():
    for bad in [(0, 2, 2), (1, 0, 2), (3, 4, 2)]:
        with pytest.raises(ValueError):
            check_balanced_chain_sum(*bad)


@pytest.mark.parametrize("k, m, n", [(0, 3, 3), (1, 5, 4), (2, 6, 5)])
def test_special_sum_examples(k, m, n):
    assert check_special_sum(k, m, n)


def test_special_sum_sharper_divisibility_is_used():
    e = special_sum_element(1, 8, 6)
    assert e
    for _, c in e.sorted_terms():
        assert c.divisible_by_d() and c.divisible_by_d_minus_3()


@pytest.mark.parametrize("k, m, n, prefix", [(0, 3, 3, ()), (1, 5, 5, ()), (0, 4, 5, (1,))])
def test_xi_examples(k, m, n, prefix):
    assert check_xi(k, m, n, prefix)


@pytest.mark.parametrize("k, r, m, n", [(0, 0, 3, 2), (1, 1, 4, 4), (2, 1, 5, 5)])
def test_i_and_ii_examples(k, r, m, n):
    assert check_delta23_tails(k, r, m, n)


def test_wide_grids_are_not_vacuous():
    # larger m, n than the acceptance grid so that the sums are mostly nonzero
    nonzero = 0
    for k in range(1, 5):
        for m in range(2 * k, 13):
            for n in range(k, 9):
                assert check_balanced_chain_sum(k, m, n, UNPRUNED if n <= 5 else NORMAL)
                nonzero += bool(apply_chain_sum(k, k, Element.segre(m, n)))
    assert nonzero > 60
    for k in range(4):
        for m in range(2, 13):
            for n in range(1, 9):
                assert check_special_sum(k, m, n)
    for k in range(3):
        for m in range(11):
            for n in range(2, 8):
                for prefix in [(), (0,), (1,), (2,), (3,), (1, 0), (2, 1)]:
                    assert check_xi(k, m, n, prefix)
    for k in range(4):
        for r in range(7):
            for m in range(1, 11):
                for n in range(1, 7):
                    assert check_delta23_tails(k, r, m, n)
