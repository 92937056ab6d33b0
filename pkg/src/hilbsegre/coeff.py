"""Exact rationals and univariate polynomials in the curve degree ``d``.

Rationals are :class:`fractions.Fraction`.  Integral values are stored as
plain ``int`` so that the common case (operator outputs are integer
polynomials) never pays for fraction normalisation.
"""

from fractions import Fraction
from numbers import Rational

__all__ = ["DPoly", "as_rational", "rational_to_str", "rational_from_str", "D"]


def as_rational(x):
    """Return ``x`` as an ``int`` when integral, else a reduced ``Fraction``."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return rational_from_str(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rational_to_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s):
    return as_rational(Fraction(s.strip()))


class DPoly:
    """Dense polynomial in ``d`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``d**i``; trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, cs):
        # cs is already a list of canonical rationals
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def d(cls):
        return cls((0, 1))

    # -- basic protocol ---------------------------------------------------

    @property
    def degree(self):
        """Degree in ``d``; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, DPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == DPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"DPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mon = "d" if i == 1 else f"d^{i}"
                body = mon if a == 1 else f"{a}*{mon}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, DPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return DPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = as_rational(cs[i] + c)
        return DPoly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return DPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return DPoly._raw([])
            return DPoly._raw([as_rational(c * other) for c in self.coeffs])
        if not isinstance(other, DPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DPoly._raw([])
        cs = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                cs[i + j] += x * y
        return DPoly._raw([as_rational(c) for c in cs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational scalar."""
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of DPoly by zero")
            return DPoly._raw([as_rational(Fraction(c) / other) for c in self.coeffs])
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = DPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- evaluation and division ---------------------------------------------

    def __call__(self, d0):
        return self.eval_at(d0)

    def eval_at(self, d0):
        """Exact value at ``d = d0`` (Horner)."""
        d0 = as_rational(d0)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * d0 + c
        return as_rational(acc)

    def div_linear(self, root):
        """Synthetic division by ``(d - root)``: returns ``(quotient, remainder)``."""
        root = as_rational(root)
        cs = self.coeffs
        if not cs:
            return DPoly._raw([]), 0
        q = [0] * (len(cs) - 1)
        acc = 0
        for i in range(len(cs) - 1, 0, -1):
            acc = as_rational(acc * root + cs[i])
            q[i - 1] = acc
        rem = as_rational(acc * root + cs[0])
        return DPoly._raw(q), rem

    def div_by_d_minus_3(self):
        return self.div_linear(3)

    def divisible_by_d_minus_3(self):
        return self.div_linear(3)[1] == 0

    def divisible_by_d(self):
        return not self.coeffs or self.coeffs[0] == 0

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    # -- serialisation ----------------------------------------------------------

    def to_json(self):
        """Ascending coefficient array of ``[num, den]`` decimal string pairs."""
        out = []
        for c in self.coeffs:
            c = Fraction(c)
            out.append([str(c.numerator), str(c.denominator)])
        return out

    @classmethod
    def from_json(cls, data):
        return cls(Fraction(int(num), int(den)) for num, den in data)

    def to_strings(self):
        return [rational_to_str(c) for c in self.coeffs]


D = DPoly.d()
