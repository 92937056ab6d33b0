"""Formal graded algebra spanned by theta-monomials times one Segre class.

A :class:`Monomial` is a sorted multiset of theta symbols together with the
index ``m`` of its single ``S_m`` factor (``S_0`` is the unit).  Symbols carry
no level; an :class:`Element` holds the level ``n`` of the Hilbert scheme it
lives on plus a map from monomials to coefficients.

Coefficients are anything supporting ``+``, ``*`` and truth testing: a
:class:`~hilbsegre.coeff.DPoly` in symbolic mode, or an exact rational when
``d`` has been specialised to a number.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .coeff import DPoly, as_rational

__all__ = [
    "T0",
    "T1",
    "ThetaSym",
    "Monomial",
    "Element",
    "Rules",
    "NORMAL",
    "UNPRUNED",
    "RAW",
    "theta0",
    "theta1",
    "mono",
    "parse_monomial",
    "degree_of",
    "grading_signature",
    "normalize",
    "normalize_monomial",
    "mul_elements",
    "accumulate",
]

T0 = 0
T1 = 1


class ThetaSym(NamedTuple):
    kind: int  # T0 or T1
    index: int

    @property
    def degree(self):
        return self.index - self.kind

    def __str__(self):
        return f"t{self.kind}_{self.index}"


def theta0(a):
    return ThetaSym(T0, a)


def theta1(a):
    return ThetaSym(T1, a)


class Monomial(NamedTuple):
    thetas: tuple  # sorted tuple of ThetaSym
    s: int

    @classmethod
    def make(cls, thetas=(), s=0):
        ts = tuple(sorted(ThetaSym(*t) for t in thetas))
        if s < 0 or any(t.index < 0 or t.kind not in (T0, T1) for t in ts):
            raise ValueError(f"invalid monomial {ts!r} * S_{s}")
        return cls(ts, s)

    @property
    def degree(self):
        return degree_of(self)

    @property
    def signature(self):
        return grading_signature(self)

    def __str__(self):
        return "*".join([str(t) for t in self.thetas] + [f"S_{self.s}"])


def mono(*thetas, s=0):
    """Shorthand: ``mono((0, 3), (1, 2), s=4)`` is ``t0_3*t1_2*S_4``."""
    return Monomial.make(thetas, s)


_TOKEN = re.compile(r"^(?:t([01])_(\d+)|S_(\d+))$")


def parse_monomial(text):
    """Inverse of ``str(Monomial)``, e.g. ``"t0_3*t1_2*S_4"``."""
    thetas, s = [], None
    for tok in text.replace(" ", "").split("*"):
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad monomial token {tok!r} in {text!r}")
        if m.group(3) is not None:
            if s is not None:
                raise ValueError(f"two S-factors in {text!r}")
            s = int(m.group(3))
        else:
            thetas.append((int(m.group(1)), int(m.group(2))))
    return Monomial.make(thetas, 0 if s is None else s)


def degree_of(m):
    return sum(t.index - t.kind for t in m.thetas) + m.s


def grading_signature(m):
    """``(w, i)``: number of theta factors and how many of them are ``theta^0``."""
    return len(m.thetas), sum(1 for t in m.thetas if t.kind == T0)


@dataclass(frozen=True)
class Rules:
    """Normalisation switches.

    ``raw`` disables every rule (theta_0^0 factors are kept).  Otherwise
    theta_0^0 = 1 is always applied, as is the level-0 rule; ``prune`` adds
    the dimension-vanishing rules and ``kill_theta1`` the s_1 = 0 rule.
    """

    prune: bool = True
    kill_theta1: bool = False
    raw: bool = False


NORMAL = Rules()
UNPRUNED = Rules(prune=False)
RAW = Rules(prune=False, raw=True)


@lru_cache(maxsize=1 << 20)
def normalize_monomial(m, level, rules=NORMAL):
    """Normal form of one monomial at ``level``, or ``None`` if it vanishes."""
    if rules.raw:
        return m
    ts = m.thetas
    if ts and ts[0] == (T0, 0):
        ts = tuple(t for t in ts if t != (T0, 0))
    if level == 0:
        if ts or m.s:
            return None
        return m if not m.thetas else Monomial((), 0)
    if rules.kill_theta1:
        for t in ts:
            if t.index == 1:
                return None
    if rules.prune:
        top = 2 * level
        if m.s > top:
            return None
        deg = m.s
        for kind, a in ts:
            if kind == T1:
                if a == 0 or a - 1 > top:
                    return None
                deg += a - 1
            else:
                if a > top:
                    return None
                deg += a
        if deg > top:
            return None
    if ts is m.thetas:
        return m
    return Monomial(ts, m.s)


class Element:
    """A formal class ``sum c_M * M`` at a fixed level.

    Treat instances as immutable; arithmetic returns new elements.
    """

    __slots__ = ("level", "terms")

    def __init__(self, level, terms=None):
        if level < 0:
            raise ValueError("level must be non-negative")
        self.level = level
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, m, level, coeff=1):
        if isinstance(m, str):
            m = parse_monomial(m)
        return cls(level, {m: coeff})

    @classmethod
    def segre(cls, m, level, coeff=1):
        """The element ``S_m`` at ``level``."""
        return cls(level, {Monomial((), m): coeff})

    @classmethod
    def zero(cls, level):
        return cls(level)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def sorted_terms(self):
        return sorted(self.terms.items())

    def coefficient(self, m):
        if isinstance(m, str):
            m = parse_monomial(m)
        return self.terms.get(m, 0)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.level == other.level and self.terms == other.terms

    __hash__ = None

    def _check(self, other):
        if self.level != other.level:
            raise ValueError(f"level mismatch: {self.level} vs {other.level}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            out[m] = c if v is None else v + c
        return Element(self.level, out)

    def __neg__(self):
        return Element(self.level, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return Element(self.level)
        return Element(self.level, {m: v * c for m, v in self.terms.items()})

    def map_coefficients(self, fn):
        return Element(self.level, {m: fn(c) for m, c in self.terms.items()})

    def __repr__(self):
        return f"Element(level={self.level}, {self.render()})"

    def render(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in self.sorted_terms())

    def max_degree(self):
        return max((degree_of(m) for m in self.terms), default=None)


def accumulate(out, m, c):
    """In-place ``out[m] += c`` dropping zeros; shared by the operator kernels."""
    v = out.get(m)
    if v is None:
        out[m] = c
    else:
        v = v + c
        if v:
            out[m] = v
        else:
            del out[m]


def normalize(e, rules=NORMAL):
    """Apply the vanishing rules to every monomial and merge equal terms."""
    out = {}
    for m, c in e.terms.items():
        nm = normalize_monomial(m, e.level, rules)
        if nm is not None:
            accumulate(out, nm, c)
    return Element(e.level, out)


def mul_elements(a, b, rules=NORMAL):
    """Product where at most one factor carries a nontrivial Segre class."""
    a._check(b)
    a_s = any(m.s for m in a.terms)
    b_s = any(m.s for m in b.terms)
    if a_s and b_s:
        raise ValueError("product of two elements with positive S-index is not in the basis")
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = Monomial(tuple(sorted(ma.thetas + mb.thetas)), ma.s + mb.s)
            accumulate(out, m, ca * cb)
    return normalize(Element(a.level, out), rules)


def coerce_coefficient(c):
    """Turn user input into a coefficient: DPoly stays, numbers become rationals."""
    if isinstance(c, DPoly):
        return c
    return as_rational(c)
