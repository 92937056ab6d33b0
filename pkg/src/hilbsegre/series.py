"""Truncated power series over the rationals, the closed-form rank-zero Segre
series in the variable ``z = t(1 + t)``, and the exact fit of the universal
exponents from computed integrals.

A :class:`PowerSeries` carries its truncation order and a variable tag
(``"t"`` or ``"z"``).  Binary operations require both to match; nothing is
truncated or re-tagged implicitly.
"""

from fractions import Fraction

from .coeff import D, as_rational, rational_to_str

__all__ = [
    "PowerSeries",
    "SeriesFitError",
    "t_of_z",
    "t_of_z_sqrt",
    "mop_closed_form",
    "segre_series",
    "UniversalFit",
    "fit_universal_exponents",
    "expected_q",
    "closed_form_for_degree",
    "closed_form_coefficient_poly",
]

VARIABLES = ("t", "z")


class SeriesFitError(ValueError):
    """The data cannot be written as ``d^2 Q + d L + C``."""


class PowerSeries:
    """``sum_{i=0}^{N} c_i x^i`` with exact rational ``c_i``, modulo ``x^(N+1)``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, order=None, var="z"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}")
        cs = [as_rational(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = (cs + [0] * (order + 1))[: order + 1]
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, order, var="z"):
        return cls((), order, var)

    @classmethod
    def one(cls, order, var="z"):
        return cls((1,), order, var)

    @classmethod
    def gen(cls, order, var="z"):
        """The variable itself."""
        return cls((0, 1), order, var)

    @classmethod
    def from_json(cls, data):
        cs = [Fraction(int(num), int(den)) for num, den in data["coeffs"]]
        return cls(cs, len(cs) - 1, data["var"])

    # -- protocol ----------------------------------------------------------------

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return (self.var, self.coeffs) == (other.var, other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r}, order={self.order}, var={self.var!r})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mon = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if not mon:
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{a}*{mon}"
            parts.append((sign, body))
        if not parts:
            body = "0"
        else:
            body = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, b in parts[1:]:
                body += f" {sign} {b}"
        return f"{body} + O({self.var}^{self.order + 1})"

    def to_json(self):
        return {
            "var": self.var,
            "coeffs": [[str(Fraction(c).numerator), str(Fraction(c).denominator)] for c in self.coeffs],
        }

    def to_strings(self):
        return [rational_to_str(c) for c in self.coeffs]

    # -- arithmetic ------------------------------------------------------------

    def _like(self, cs):
        return PowerSeries(cs, self.order, self.var)

    def _match(self, other):
        if isinstance(other, (int, Fraction)):
            return self._like((other,))
        if not isinstance(other, PowerSeries):
            return None
        if other.var != self.var:
            raise ValueError(f"cannot combine series in {self.var} and {other.var}")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return self._like([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._like([c * other for c in self.coeffs])
        o = self._match(other)
        if o is None:
            return NotImplemented
        n = self.order
        a, b = self.coeffs, o.coeffs
        cs = [0] * (n + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(n + 1 - i):
                    cs[i + j] += x * b[j]
        return self._like(cs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._like([Fraction(c) / other for c in self.coeffs])
        o = self._match(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = self._like((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def truncate(self, order):
        """Explicitly drop terms above ``order``."""
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return PowerSeries(self.coeffs[: order + 1], order, self.var)

    def derivative(self):
        cs = [i * c for i, c in enumerate(self.coeffs)][1:]
        # the top coefficient is unknown after differentiating, so order drops
        return PowerSeries(cs, max(self.order - 1, 0), self.var)

    def integral(self):
        """Antiderivative with zero constant term, same order."""
        cs = [0] + [Fraction(c, i + 1) for i, c in enumerate(self.coeffs[:-1])]
        return self._like(cs)

    def inverse(self):
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        n = self.order
        out = [Fraction(1) / c0]
        for k in range(1, n + 1):
            acc = sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out.append(-acc / c0)
        return self._like(out)

    def log(self):
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        # log f = integral of f'/f, computed on the recurrence to keep order N
        n = self.order
        a = self.coeffs
        b = [0] * (n + 1)  # b = x * (log f)'
        for k in range(1, n + 1):
            b[k] = k * a[k] - sum(b[i] * a[k - i] for i in range(1, k))
        return self._like([0] + [Fraction(b[k], k) for k in range(1, n + 1)])

    def exp(self):
        if self.coeffs[0]:
            raise ValueError("exp needs constant term 0")
        n = self.order
        a = self.coeffs
        out = [Fraction(1)] + [0] * n
        for k in range(1, n + 1):
            out[k] = sum(i * a[i] * out[k - i] for i in range(1, k + 1)) / Fraction(k)
        return self._like(out)

    def pow_rational(self, alpha):
        """``f^alpha = exp(alpha log f)`` for ``f`` with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("rational power needs constant term 1")
        return (self.log() * as_rational(alpha)).exp()

    def compose(self, inner):
        """``self(inner)``; ``inner`` must have zero constant term and the
        same order.  The result carries the tag of ``inner``."""
        if inner.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {inner.order}")
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        out = PowerSeries.zero(inner.order, inner.var)
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def reversion(self, var=None):
        """Compositional inverse ``g`` with ``self(g) = x``; needs ``c_0 = 0``
        and ``c_1 != 0``.  ``var`` tags the result."""
        a = self.coeffs
        if a[0] or not a[1]:
            raise ValueError("reversion needs zero constant term and nonzero linear term")
        var = var or self.var
        n = self.order
        x = PowerSeries.gen(n, var)
        f = PowerSeries(a, n, var)
        g = x / a[1]
        # each pass fixes one more coefficient
        for _ in range(n):
            g = g + (x - f.compose(g)) / a[1]
        return g


# -- the rank-zero closed form ---------------------------------------------------


def t_of_z(order):
    """``t(z)`` with ``t + t^2 = z``, by reversion of ``z = t + t^2``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return PowerSeries((0, 1, 1), order, "t").reversion(var="z")


def t_of_z_sqrt(order):
    """``t(z) = (-1 + sqrt(1 + 4z)) / 2`` via the binomial series."""
    if order < 1:
        raise ValueError("order must be at least 1")
    root = PowerSeries((1, 4), order, "z").pow_rational(Fraction(1, 2))
    return (root - 1) / 2


def mop_closed_form(c2, c1sq, c1k, order):
    """``(1+t)^(-c2-c1k) (1+2t)^((c1sq+c1k)/2)`` written in ``z``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    if order == 0:
        return PowerSeries.one(0, "z")
    c2, c1sq, c1k = (as_rational(x) for x in (c2, c1sq, c1k))
    a = PowerSeries((1, 1), order, "t").pow_rational(-c2 - c1k)
    b = PowerSeries((1, 2), order, "t").pow_rational(Fraction(c1sq + c1k, 2))
    return (a * b).compose(t_of_z(order))


def expected_q(order):
    """``-log(1+t) + log(1+2t)/2`` in ``z``: the d^2-exponent of the plane series."""
    ls = -PowerSeries((1, 1), order, "t").log() + PowerSeries((1, 2), order, "t").log() / 2
    return ls.compose(t_of_z(order))


def segre_series(d, order, integral=None):
    """``sum_n z^n * integral(n, d)`` up to ``z^order``.

    ``integral`` defaults to the operator recursion with ``d`` fixed.
    """
    if integral is None:
        from .integrals import segre_integral

        integral = segre_integral
    return PowerSeries([integral(n, d) for n in range(order + 1)], order, "z")


class UniversalFit:
    """Exact solution of ``log S_d = d^2 Q + d L + C``."""

    __slots__ = ("Q", "L", "C", "d_list")

    def __init__(self, Q, L, C, d_list):
        self.Q, self.L, self.C, self.d_list = Q, L, C, tuple(d_list)

    def predicted_log(self, d):
        return self.Q * (d * d) + self.L * d + self.C

    def l_is_minus_3q(self):
        return self.L == self.Q * (-3)

    def c_is_zero(self):
        return not any(self.C.coeffs)


def _solve3(rows, rhs):
    """Gauss-Jordan on a 3x3 rational system."""
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(3):
        piv = next((r for r in range(col, 3) if m[r][col]), None)
        if piv is None:
            raise SeriesFitError("singular fitting system")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(3):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][3] for r in range(3)]


def fit_universal_exponents(d_list, order, integral=None):
    """Fit ``Q, L, C`` from the series ``S_d`` for every ``d`` in ``d_list``.

    The first three values determine the fit; every value, including those,
    must then be reproduced exactly or :class:`SeriesFitError` is raised.
    """
    ds = [as_rational(d) for d in d_list]
    if len(set(ds)) != len(ds):
        raise ValueError("d values must be distinct")
    if len(ds) < 3:
        raise ValueError("need at least three distinct d values")
    if 3 in ds:
        raise ValueError("d = 3 is excluded: every integral vanishes there")
    logs = {d: segre_series(d, order, integral).log() for d in ds}
    basis = ds[:3]
    rows = [(d * d, d, 1) for d in basis]
    q, l, c = [], [], []
    for i in range(order + 1):
        qi, li, ci = _solve3(rows, [logs[d][i] for d in basis])
        q.append(qi)
        l.append(li)
        c.append(ci)
    fit = UniversalFit(
        PowerSeries(q, order, "z"), PowerSeries(l, order, "z"), PowerSeries(c, order, "z"), ds
    )
    for d in ds:
        if fit.predicted_log(d) != logs[d]:
            raise SeriesFitError(f"log S_d at d={d} is not quadratic in d up to z^{order}")
    return fit


def closed_form_for_degree(d, order):
    """The plane-curve specialisation ``c2 = c1^2 = d^2``, ``c1.K = -3d``."""
    d = as_rational(d)
    return mop_closed_form(d * d, d * d, -3 * d, order)


def closed_form_coefficient_poly(n):
    """Coefficient of ``z^n`` in the plane-curve closed form, as a polynomial
    in ``d``, recovered by exact interpolation at ``2n + 1`` points."""
    pts = list(range(2 * n + 1))
    vals = [closed_form_for_degree(p, max(n, 1))[n] for p in pts]
    out = D * 0
    for i, xi in enumerate(pts):
        basis = D * 0 + 1
        for j, xj in enumerate(pts):
            if j != i:
                basis = basis * (D - xj) / (xi - xj)
        out = out + basis * vals[i]
    return out

