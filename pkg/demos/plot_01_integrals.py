"""
Segre integrals as polynomials in the curve degree
===================================================

For a plane curve of degree ``d`` the top Segre class of its tautological
sheaf on the Hilbert scheme of ``n`` points integrates to a number that is
polynomial in ``d``.  The package computes it by pushing the class ``S_{2n}``
down one level at a time.
"""

from hilbsegre import D, integral_record, segre_integral, segre_integral_poly

# %%
# The first few integrals, with ``d`` kept symbolic.

for n in range(7):
    print(f"n={n}:", segre_integral_poly(n))

# %%
# Every polynomial has roots at ``d = 0`` and ``d = 3``.  Division by
# ``d - 3`` is exact synthetic division.

p = segre_integral_poly(5)
quotient, remainder = p.div_by_d_minus_3()
print("n=5 divided by (d - 3):", quotient, "remainder", remainder)
print("values at d = 0..5:", [p(d0) for d0 in range(6)])

# %%
# Fixing ``d`` before the recursion keeps coefficients small and gives the
# same numbers.  This is the fast path for larger ``n``.

print("n=7 at d=3:", segre_integral(7, 3))
print("n=7 at d=5:", segre_integral(7, 5))

# %%
# ``integral_record`` also reports the widest intermediate element, a
# rough measure of the work done.

for n in range(2, 8):
    rec = integral_record(n, D)
    print(f"n={n}: {rec.chain_count} monomials at the widest level")
