"""
The four pushforward operators
==============================

The pushforward ``f`` from level ``n+1`` to level ``n`` splits as
``delta_0 + delta_1 + delta_2 + delta_3``.  Each piece acts monomial by
monomial on products of theta symbols with one Segre class ``S_m``.
"""

from hilbsegre import RAW, UNPRUNED, Element, delta, pushf
from hilbsegre.operators import shift_s
from hilbsegre.symalg import grading_signature

# %%
# ``delta_0`` consumes the Segre index and emits a ``theta^1`` factor.
# Without pruning, the ``theta_0^1`` term is still visible.

s4 = Element.segre(4, 2)
print(delta(0, s4, rules=UNPRUNED))
print(delta(0, s4))

# %%
# ``delta_1`` splits each theta factor in two.  ``delta_2`` does the same for
# ``theta^1`` factors and may also lower the Segre index.  ``delta_3`` pairs
# up two ``theta^1`` factors.

print(delta(1, Element.monomial("t1_3*S_0", 3), rules=RAW))
print(delta(2, Element.monomial("t1_2*S_1", 2)))
print(delta(3, Element.monomial("t1_2*t1_3*S_0", 2)))

# %%
# Each ``delta_j`` adds one factor, adds ``j`` theta^0 factors and lowers
# the degree by two.

m = Element.monomial("t0_2*t1_3*t1_4*S_3", 6)
(mono, _), = m.sorted_terms()
print("input signature", grading_signature(mono))
for j in range(4):
    sigs = {grading_signature(mm) for mm, _ in delta(j, m, rules=RAW).sorted_terms()}
    print(f"delta_{j}:", sorted(sigs))

# %%
# The shift ``S_m -> S_{m-1}`` commutes with ``delta_1..delta_3``.

e = Element.monomial("t1_4*S_3", 4)
print(delta(2, shift_s(e)) == shift_s(delta(2, e)))

# %%
# Applying ``f`` twice to ``S_4`` at level 2 leaves a multiple of the unit.

print(pushf(pushf(s4)))
