"""Exact Segre integrals on Hilbert schemes of points of the projective plane,
computed by pushing Segre classes down through the ``delta`` operator
recursion, plus executable checks of the divisibility statements behind the
vanishing at ``d = 3``.
"""

from .coeff import D, DPoly, as_rational
from .integrals import (
    CheckResult,
    IntegralRecord,
    SegreConsistencyError,
    check_chain_vanishing,
    check_delta23_tails,
    check_balanced_chain_sum,
    check_special_sum,
    check_xi,
    integral_record,
    integral_table,
    segre_integral,
    segre_integral_poly,
)
from .operators import (
    Ad,
    Base,
    Compose,
    Sum,
    apply_chain_sum,
    apply_op,
    chain,
    delta,
    pushf,
    sum_over_chains,
    xi_op,
)
from .series import PowerSeries, fit_universal_exponents, mop_closed_form, t_of_z
from .symalg import NORMAL, RAW, UNPRUNED, Element, Monomial, Rules, mono

__version__ = "0.1.0"

__all__ = [
    "D",
    "DPoly",
    "as_rational",
    "CheckResult",
    "IntegralRecord",
    "SegreConsistencyError",
    "check_chain_vanishing",
    "check_delta23_tails",
    "check_balanced_chain_sum",
    "check_special_sum",
    "check_xi",
    "integral_record",
    "integral_table",
    "segre_integral",
    "segre_integral_poly",
    "Ad",
    "Base",
    "Compose",
    "Sum",
    "apply_chain_sum",
    "apply_op",
    "chain",
    "delta",
    "pushf",
    "sum_over_chains",
    "xi_op",
    "PowerSeries",
    "fit_universal_exponents",
    "mop_closed_form",
    "t_of_z",
    "NORMAL",
    "RAW",
    "UNPRUNED",
    "Element",
    "Monomial",
    "Rules",
    "mono",
]
