"""
Divisibility by d - 3
=====================

The vanishing at ``d = 3`` comes from a stronger statement: summing all
chains ``delta_{i_1} ... delta_{i_k}`` whose indices add up to ``k`` gives an
element whose coefficients are all divisible by ``d - 3``.  Chains whose
indices add up to more than ``k`` vanish outright.
"""

from hilbsegre import (
    Element,
    apply_chain_sum,
    check_chain_vanishing,
    check_balanced_chain_sum,
    check_special_sum,
    check_xi,
    sum_over_chains,
    xi_op,
)

# %%
# The balanced sum for ``k = 3`` has ten chains.

print(sum_over_chains(3, 3))
e = apply_chain_sum(3, 3, Element.segre(8, 6))
for mono, c in e.sorted_terms():
    q, r = c.div_by_d_minus_3()
    print(f"{mono}: {c}  =  (d - 3)*({q})  remainder {r}")

# %%
# Over-weighted chains give the empty element.

print(apply_chain_sum(2, 3, Element.segre(6, 4)))
print(check_chain_vanishing(2, 3, 6, 4))

# %%
# The checkers return a result object that is truthy on success and
# carries a witness on failure.

print(check_balanced_chain_sum(3, 6, 4).describe())
print(check_special_sum(2, 6, 5).describe())

# %%
# The commutator combination ``Xi(k)`` is built as an expression tree, so
# it can be printed and wrapped in further commutators.

print(xi_op(1))
print(check_xi(1, 5, 5).describe())
print(check_xi(0, 4, 5, ad_prefix=(1,)).describe())
