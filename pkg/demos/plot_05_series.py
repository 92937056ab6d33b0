"""
Generating series and the universal exponents
=============================================

The integrals assemble into a series in ``z``.  After the substitution
``z = t(1 + t)`` it has a closed form, and its logarithm is quadratic in
``d``.  All series arithmetic is exact.
"""

from fractions import Fraction

from hilbsegre import PowerSeries, fit_universal_exponents, mop_closed_form, t_of_z
from hilbsegre.series import closed_form_for_degree, expected_q, segre_series

# %%
# ``t(z)`` by series reversion: signed Catalan numbers.

print(t_of_z(8))

# %%
# The closed form for Chern data ``(c2, c1^2, c1.K) = (9, 9, -9)`` is 1,
# matching the vanishing for cubics.

print(mop_closed_form(9, 9, -9, 8))

# %%
# For ``d = 4`` the closed form and the recursion agree coefficient by
# coefficient.

print(closed_form_for_degree(4, 5))
print(segre_series(4, 5))

# %%
# Fitting ``log S_d = d^2 Q + d L + C`` from four values of ``d``.

fit = fit_universal_exponents([1, 2, 4, 5], 6)
print("Q =", fit.Q)
print("L = -3Q:", fit.L == fit.Q * -3)
print("C = 0:", fit.c_is_zero())
print("Q matches -log(1+t) + log(1+2t)/2:", fit.Q == expected_q(6))

# %%
# Basic series operations are also available directly.

s = PowerSeries((1, 2), 4, "t")
print(s.pow_rational(Fraction(1, 2)))
print(s.log().exp() == s)
