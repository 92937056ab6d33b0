"""
Closed forms for chains of delta_1 and delta_0
==============================================

``delta_1^k delta_0 (S_m)`` and the double chains
``delta_1^(k-1-s) delta_0 delta_1^s delta_0 (S_m)`` have explicit expansions
as sums over index tuples.  The closed_forms module generates them directly and
they match operator composition term by term.
"""

from hilbsegre import Element, apply_op, chain
from hilbsegre.closed_forms import (
    binomial_regrouping_identity,
    chain_closed_form,
    double_chain_closed_form,
    rising_product_identity,
)

# %%
# A single chain, computed both ways.

k, m, n = 2, 7, 5
by_operators = apply_op(chain(1, 1, 0), Element.segre(m, n))
by_formula = chain_closed_form(k, m, n)
print(by_formula)
print("equal:", by_operators == by_formula)

# %%
# A double chain with ``s = 1``.

op = chain(1, 0, 1, 0)
print("equal:", apply_op(op, Element.segre(8, 6)) == double_chain_closed_form(3, 1, 8, 6))

# %%
# The two counting identities behind the regrouping of double chains.

print(all(binomial_regrouping_identity(k, M) for k in range(1, 11) for M in range(k)))
print(rising_product_identity(a=1, N=2, m=3, k=2, theta=lambda x: x * x))
