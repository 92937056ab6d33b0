"""Segre integrals from the pushforward recursion, and executable checks of the
divisibility statements about sums of delta-chains.

The integral over the Hilbert scheme of ``n`` points is obtained by pushing
``S_{2n}`` down ``n`` times with ``f``; the resulting number at level 0 is
``n!`` times the integral.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .coeff import D, DPoly, as_rational
from .closed_forms import binomial_regrouping_identity, rising_product_identity  # noqa: F401  (re-exported)
from .operators import (
    Ad,
    Sum,
    apply_chain_sum,
    apply_op,
    chain,
    delta,
    pushf,
    xi_op,
)
from .symalg import NORMAL, Element, Monomial, degree_of

__all__ = [
    "SegreConsistencyError",
    "IntegralRecord",
    "CheckResult",
    "pushforward_levels",
    "segre_integral",
    "segre_integral_poly",
    "integral_record",
    "integral_table",
    "check_divisible",
    "check_chain_vanishing",
    "check_balanced_chain_sum",
    "check_special_sum",
    "special_sum_element",
    "check_xi",
    "check_delta23_tails",
    "binomial_regrouping_identity",
    "rising_product_identity",
]

log = logging.getLogger(__name__)


class SegreConsistencyError(RuntimeError):
    """Raised when the recursion produces something that can only be a bug."""


@dataclass(frozen=True)
class IntegralRecord:
    n: int
    value: object  # DPoly in symbolic mode, rational for a fixed d
    chain_count: int


@dataclass
class CheckResult:
    """Outcome of one checker call; truthy iff it passed.

    On failure ``witness`` names the offending monomial and its coefficient.
    """

    passed: bool
    params: dict = field(default_factory=dict)
    witness: tuple = None

    def __bool__(self):
        return self.passed

    def describe(self):
        p = ", ".join(f"{k}={v}" for k, v in self.params.items())
        if self.passed:
            return f"pass ({p})"
        mono, coeff = self.witness
        return f"FAIL ({p}): monomial {mono} has coefficient {coeff}"


# -- integrals -----------------------------------------------------------------


@lru_cache(maxsize=256)
def pushforward_levels(n, d=D, rules=NORMAL):
    """``(f^0(S_2n), f^1(S_2n), ..., f^n(S_2n))`` starting at level ``n``.

    Cached on ``(n, d, rules)``; treat the returned elements as read-only.
    """
    return tuple(_pushforward_levels(n, d, rules, workers=1))


def _pushforward_levels(n, d, rules, workers):
    e = Element.segre(2 * n, n)
    out = [e]
    for k in range(1, n + 1):
        e = pushf(e, d=d, rules=rules, workers=workers)
        want = 2 * (n - k)
        for m in e.terms:
            if degree_of(m) != want:
                raise SegreConsistencyError(
                    f"monomial {m} of degree {degree_of(m)} after {k} pushforwards of S_{2 * n}; expected {want}"
                )
        out.append(e)
        log.debug("n=%d k=%d: %d monomials", n, k, len(e))
    return out


def _evaluate_level0(e, n):
    if e.level != 0:
        raise SegreConsistencyError(f"expected a level-0 element, got level {e.level}")
    unit = Monomial((), 0)
    for m in e.terms:
        if m != unit:
            raise SegreConsistencyError(f"surviving symbol {m} at level 0 (n={n})")
    return e.terms.get(unit, 0)


def _divide_factorial(value, n):
    nf = factorial(n)
    if isinstance(value, DPoly):
        out = value / nf
        # an integral must be an integer for every integer d
        for d0 in range(out.degree + 1):
            v = out.eval_at(d0)
            if not isinstance(v, int):
                raise SegreConsistencyError(f"f^{n}(S_{2 * n}) at d={d0} is not divisible by {n}!")
        return out
    value = as_rational(value)
    if isinstance(value, int) and value % nf == 0:
        return value // nf
    if not isinstance(value, int):
        return as_rational(value / nf)
    raise SegreConsistencyError(f"f^{n}(S_{2 * n}) = {value} is not divisible by {n}!")


def integral_record(n, d=D, rules=NORMAL, workers=1):
    if n < 0:
        raise ValueError("n must be non-negative")
    if workers > 1:
        levels = _pushforward_levels(n, d, rules, workers)
    else:
        levels = pushforward_levels(n, d, rules)
    value = _evaluate_level0(levels[-1], n)
    if isinstance(d, DPoly) and not isinstance(value, DPoly):
        value = DPoly((value,))
    value = _divide_factorial(value, n)
    width = max(len(e) for e in levels)
    return IntegralRecord(n, value, width)


def segre_integral_poly(n, rules=NORMAL, workers=1):
    """The integral of ``s_{2n}`` of the tautological class of a degree-``d``
    plane curve over ``P2^[n]``, as a polynomial in ``d``."""
    return integral_record(n, D, rules, workers).value


def segre_integral(n, d0, rules=NORMAL, workers=1):
    """Same integral with ``d`` fixed to the number ``d0`` from the start."""
    return integral_record(n, as_rational(d0), rules, workers).value


def integral_table(n_max, d=D, rules=NORMAL, workers=1):
    return [integral_record(n, d, rules, workers) for n in range(n_max + 1)]


# -- divisibility checkers --------------------------------------------------------


def check_divisible(e, params=None, by_d=False):
    """Every coefficient of ``e`` divisible by ``d - 3`` (and by ``d`` if asked)."""
    params = dict(params or {})
    for m, c in e.sorted_terms():
        if not isinstance(c, DPoly):
            c = DPoly((c,))
        if not c.divisible_by_d_minus_3() or (by_d and not c.divisible_by_d()):
            return CheckResult(False, params, (str(m), str(c)))
    return CheckResult(True, params)


def check_chain_vanishing(k, r, m, n, rules=NORMAL):
    """Chains whose letters add up to more than their length kill ``S_m``."""
    if r <= k:
        raise ValueError("chain vanishing needs r > k")
    e = apply_chain_sum(k, r, Element.segre(m, n), rules=rules)
    params = dict(k=k, r=r, m=m, n=n)
    if e:
        mono, c = e.sorted_terms()[0]
        return CheckResult(False, params, (str(mono), str(c)))
    return CheckResult(True, params)


def check_balanced_chain_sum(k, m, n, rules=NORMAL):
    """Sum of all ``delta_{i_1} ... delta_{i_k}`` with ``sum i = k`` on ``S_m`` is
    divisible by ``d - 3`` coefficient-wise."""
    if k < 1 or m < 1 or n < k:
        raise ValueError("need k, m >= 1 and n >= k")
    e = apply_chain_sum(k, k, Element.segre(m, n), rules=rules)
    return check_divisible(e, dict(k=k, m=m, n=n))


def special_sum_element(k, m, n, rules=NORMAL):
    """``(delta_2 delta_1^k delta_0 + sum_s delta_3 delta_1^(k-s-1) delta_0 delta_1^s delta_0)(S_m)``."""
    terms = [chain(2, *([1] * k), 0)]
    for s in range(k):
        terms.append(chain(3, *([1] * (k - s - 1)), 0, *([1] * s), 0))
    return apply_op(Sum(tuple(terms)), Element.segre(m, n), rules=rules)


def check_special_sum(k, m, n, rules=NORMAL):
    """Divisibility by ``d - 3``; for ``k >= 1`` the sharper ``d(d - 3)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    e = special_sum_element(k, m, n, rules)
    return check_divisible(e, dict(k=k, m=m, n=n), by_d=k >= 1)


def check_xi(k, m, n, ad_prefix=(), rules=NORMAL):
    """``Ad_{i_1} ... Ad_{i_l} (Xi(k))`` applied to ``S_m`` is divisible by ``d - 3``."""
    op = xi_op(k)
    for j in reversed(list(ad_prefix)):
        op = Ad(j, op)
    e = apply_op(op, Element.segre(m, n), rules=rules)
    return check_divisible(e, dict(k=k, m=m, n=n, prefix=list(ad_prefix)))


def _two_three_tail(k, r, alphabet, m, n, rules):
    x = Element.segre(m, n)
    a = delta(2, apply_chain_sum(k, r, x, alphabet, rules=rules), rules=rules)
    if r >= 1:
        b = delta(3, apply_chain_sum(k, r - 1, x, alphabet, rules=rules), rules=rules)
        if a.level != b.level:
            raise SegreConsistencyError("level mismatch in II/I")
        a = a + b
    return a


def check_delta23_tails(k, r, m, n, rules=NORMAL):
    """``delta_2 (chains of sum r) + delta_3 (chains of sum r-1)`` on ``S_m``, for
    all letters (II) and for letters in {0, 1} only (I)."""
    if k < 0 or r < 0:
        raise ValueError("need k, r >= 0")
    ii = _two_three_tail(k, r, (0, 1, 2, 3), m, n, rules)
    res = check_divisible(ii, dict(k=k, r=r, m=m, n=n, which="II"))
    if not res:
        return res
    i = _two_three_tail(k, r, (0, 1), m, n, rules)
    res = check_divisible(i, dict(k=k, r=r, m=m, n=n, which="I"))
    if res:
        res.params.pop("which")
    return res
