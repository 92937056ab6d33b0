"""Closed-form right-hand sides for chains of delta_1 and delta_0, and the
two combinatorial identities they rest on.

Everything here is generated directly from summation formulas over ordered
index tuples; nothing calls into :mod:`hilbsegre.operators`, so the results
can be used to cross-check operator composition.
"""

from fractions import Fraction
from math import comb, prod

from .coeff import D
from .symalg import NORMAL, T0, T1, Element, Monomial, ThetaSym, accumulate, normalize_monomial

__all__ = [
    "compositions",
    "rising_product",
    "chain_closed_form",
    "double_chain_closed_form",
    "double_chain_sum_closed_form",
    "binomial_regrouping_identity",
    "rising_product_identity",
    "rising_product_identity_sides",
]


def compositions(total, parts):
    """All ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def rising_product(length, base):
    """``prod_{j=0}^{length-1} (j + base)``; empty product is 1."""
    return prod(range(base, base + length)) if length > 0 else 1


def _block_weight(a, vec):
    """``prod_{j=0}^{len(vec)-1} (j + a + 1 + sum(v + 1 for v in vec))``."""
    return rising_product(len(vec), a + 1 + sum(v + 1 for v in vec))


def _block_thetas(a, vec):
    return [ThetaSym(T0, v) for v in vec] + [ThetaSym(T1, a)]


def _finish(terms, level, rules):
    out = {}
    for m, c in terms.items():
        nm = normalize_monomial(m, level, rules)
        if nm is not None:
            accumulate(out, nm, c)
    return Element(level, out)


def chain_closed_form(k, m, n, d=D, rules=NORMAL):
    """Closed form of ``delta_1^k delta_0 (S_m)`` at level ``n - k - 1``."""
    level = n - k - 1
    if level < 0:
        raise ValueError("need n >= k + 1")
    sign = -1 if (k + 1) % 2 else 1
    terms = {}
    rest = m - 2 * k - 1
    if rest >= 0:
        for tup in compositions(rest, k + 2):
            vec, a, m_prime = tup[:k], tup[k], tup[k + 1]
            w = _block_weight(a, vec)
            mono = Monomial(tuple(sorted(_block_thetas(a, vec))), m_prime)
            accumulate(terms, mono, sign * w)
    factor = d * 1
    return _finish({mono: c * factor for mono, c in terms.items()}, level, rules)


def _two_block_terms(len_a, len_b, rest, weight):
    """Accumulate ``weight * block(a) * block(b) * S_m'`` over all index tuples."""
    terms = {}
    for tup in compositions(rest, len_a + len_b + 3):
        avec = tup[:len_a]
        a = tup[len_a]
        bvec = tup[len_a + 1 : len_a + 1 + len_b]
        b = tup[len_a + 1 + len_b]
        m_prime = tup[-1]
        w = weight * _block_weight(a, avec) * _block_weight(b, bvec)
        ts = tuple(sorted(_block_thetas(a, avec) + _block_thetas(b, bvec)))
        accumulate(terms, Monomial(ts, m_prime), w)
    return terms


def double_chain_closed_form(k, s, m, n, d=D, rules=NORMAL):
    """Closed form of ``delta_1^(k-1-s) delta_0 delta_1^s delta_0 (S_m)`` at level ``n - k - 1``."""
    if not 0 <= s <= k - 1:
        raise ValueError("need 0 <= s <= k - 1")
    level = n - k - 1
    if level < 0:
        raise ValueError("need n >= k + 1")
    sign = -1 if (k + 1) % 2 else 1
    rest = m - 2 - 2 * (k - 1)
    terms = {}
    if rest >= 0:
        for i in range(k - s):
            part = _two_block_terms(s + i, k - s - i - 1, rest, comb(k - s - 1, i))
            for mono, c in part.items():
                accumulate(terms, mono, c)
    factor = d * d * sign
    return _finish({mono: c * factor for mono, c in terms.items()}, level, rules)


def double_chain_sum_closed_form(k, m, n, d=D, rules=NORMAL):
    """Closed form of ``sum_{s=0}^{k-1} delta_1^(k-1-s) delta_0 delta_1^s delta_0 (S_m)``,
    grouped by the size ``M`` of the first block with weight ``C(k, M)``."""
    level = n - k - 1
    if level < 0:
        raise ValueError("need n >= k + 1")
    sign = -1 if (k + 1) % 2 else 1
    rest = m - 2 - 2 * (k - 1)
    terms = {}
    if rest >= 0:
        for M in range(k):
            for mono, c in _two_block_terms(M, k - M - 1, rest, comb(k, M)).items():
                accumulate(terms, mono, c)
    factor = d * d * sign
    return _finish({mono: c * factor for mono, c in terms.items()}, level, rules)


def binomial_regrouping_identity(k, M):
    """Check ``sum_{s+i=M} C(k-s-1, i) == C(k, M)`` by brute force."""
    if not 0 <= M <= k - 1:
        raise ValueError("need 0 <= M <= k - 1")
    total = sum(comb(k - s - 1, M - s) for s in range(M + 1))
    return total == comb(k, M)


def rising_product_identity_sides(a, N, m, k, theta):
    """Both sides of the binomial/rising-product identity with theta_x^0
    replaced by ``theta(x)``.  Returns ``(lhs, rhs)`` as exact rationals."""
    N = Fraction(N)
    lhs = Fraction(0)
    rhs = Fraction(0)
    for vec in compositions(m, k + 1):
        th = Fraction(1)
        for v in vec:
            th *= Fraction(theta(v))
        if not th:
            continue
        inner = Fraction(0)
        for M in range(k + 1):
            left = rising_product(M, a + 1 + sum(v + 1 for v in vec[:M]))
            tail = vec[k] + 1 + sum(v + 1 for v in vec[M:k]) + N + 1
            right = prod((j + tail for j in range(k - M)), start=Fraction(1))
            inner += comb(k + 1, M) * left * right
        lhs += N * th * inner
        base = a + 1 + sum(v + 1 for v in vec)
        rhs += th * (
            prod((j + base + N for j in range(k + 1)), start=Fraction(1))
            - prod((j + base for j in range(k + 1)), start=Fraction(1))
        )
    return lhs, rhs


def rising_product_identity(a, N, m, k, theta):
    lhs, rhs = rising_product_identity_sides(a, N, m, k, theta)
    return lhs == rhs
