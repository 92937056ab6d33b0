"""The graded pieces delta_0..delta_3 of the pushforward ``f`` and operator
expressions built from them.

Each ``delta_j`` sends an element at level ``n+1`` to level ``n``.  They are
evaluated monomial by monomial: :func:`expand` gives the level-free image of
a single monomial as a list of ``(monomial, integer, power of d)`` triples,
which is cached, and the public functions scale, normalise and merge.

Sums over positions in a monomial word are sums over *occurrences*: a symbol
of multiplicity ``mu`` contributes ``mu`` times to delta_1 and delta_2, and
delta_3 runs over unordered pairs of occurrences.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .coeff import D
from .symalg import NORMAL, T0, T1, Element, Monomial, ThetaSym, accumulate, normalize_monomial

__all__ = [
    "expand",
    "delta",
    "delta0",
    "delta1",
    "delta2",
    "delta3",
    "pushf",
    "shift_s",
    "OpExpr",
    "Base",
    "Sum",
    "Compose",
    "Ad",
    "apply_op",
    "chain",
    "sum_over_chains",
    "apply_chain_sum",
    "xi_op",
]


def _replace(thetas, remove, add):
    """Remove one occurrence of each symbol in ``remove``, then add ``add``."""
    out = list(thetas)
    for r in remove:
        out.remove(r)
    out.extend(add)
    out.sort()
    return tuple(out)


def _expand0(m):
    ts, s = m.thetas, m.s
    return [
        (Monomial(_replace(ts, (), (ThetaSym(T1, t),)), s - t - 1), -1, 1)
        for t in range(s)
    ]


def _expand1(m):
    out = []
    for sym, mu in Counter(m.thetas).items():
        kind, l = sym
        for t in range(l - 1):
            if kind == T1:
                add = (ThetaSym(T0, l - t - 2), ThetaSym(T1, t))
                k = -l * mu
            else:
                add = (ThetaSym(T0, l - t - 2), ThetaSym(T0, t))
                k = -(t + 1) * mu
            out.append((Monomial(_replace(m.thetas, (sym,), add), m.s), k, 0))
    return out


def _expand2(m):
    out = []
    s = m.s
    for sym, mu in Counter(m.thetas).items():
        kind, l = sym
        if kind != T1:
            continue
        for t in range(l - 1):
            for a in range(s):
                add = (ThetaSym(T0, l - t - 2), ThetaSym(T0, a + t))
                out.append((Monomial(_replace(m.thetas, (sym,), add), s - a - 1), (t + 1) * mu, 1))
        for t in range(l - 2):
            add = (ThetaSym(T0, l - t - 3), ThetaSym(T0, t))
            k = -3 * ((t + 1) * (t + 2) // 2) * mu
            out.append((Monomial(_replace(m.thetas, (sym,), add), s), k, 0))
    return out


def _pair_image(lj, lk):
    """Image of the pair theta_lj^1 theta_lk^1 as ``[(added thetas, weight)]``."""
    out = []
    for t in range(lk - 1):
        for a in range(lj - 1):
            add = (ThetaSym(T0, lk - t - 2), ThetaSym(T0, lj - a - 2), ThetaSym(T0, a + t))
            out.append((add, (t + 1) * (a + 1)))
    return out


def _expand3(m):
    out = []
    ones = sorted((sym, mu) for sym, mu in Counter(m.thetas).items() if sym.kind == T1)
    for x in range(len(ones)):
        sx, mx = ones[x]
        for y in range(x, len(ones)):
            sy, my = ones[y]
            if x == y:
                npairs = mx * (mx - 1) // 2
            else:
                npairs = mx * my
            if not npairs:
                continue
            for add, w in _pair_image(sx.index, sy.index):
                out.append((Monomial(_replace(m.thetas, (sx, sy), add), m.s), w * npairs, 0))
    return out


_EXPANDERS = (_expand0, _expand1, _expand2, _expand3)


@lru_cache(maxsize=1 << 20)
def expand(j, m):
    """Raw image of monomial ``m`` under delta_j, merged, before normalisation.

    Returns a tuple of ``(monomial, integer coefficient, power of d)``.
    """
    acc = {}
    for mm, k, p in _EXPANDERS[j](m):
        key = (mm, p)
        acc[key] = acc.get(key, 0) + k
    return tuple((mm, k, p) for (mm, p), k in sorted(acc.items()) if k)


@lru_cache(maxsize=1 << 20)
def _image(js, m, level, rules):
    """Normalised image of ``m`` (at ``level``) under ``sum(delta_j for j in js)``,
    as a tuple of ``(monomial, integer, power of d)``."""
    acc = {}
    for j in js:
        for mm, k, p in expand(j, m):
            nm = normalize_monomial(mm, level - 1, rules)
            if nm is None:
                continue
            key = (nm, p)
            acc[key] = acc.get(key, 0) + k
    return tuple((mm, k, p) for (mm, p), k in acc.items() if k)


def _apply_terms(js, items, level, d, rules):
    out = {}
    dk = {}
    for m, c in items:
        for mm, k, p in _image(js, m, level, rules):
            if p:
                fac = dk.get(k)
                if fac is None:
                    fac = dk[k] = d * k
            else:
                fac = k
            accumulate(out, mm, c * fac)
    return out


def _chunk_worker(args):
    js, items, level, d, rules = args
    return _apply_terms(js, items, level, d, rules)


def _apply(js, e, d, rules, workers=1):
    if e.level == 0:
        return Element(0)
    items = sorted(e.terms.items())
    if workers <= 1 or len(items) < 64:
        return Element(e.level - 1, _apply_terms(js, items, e.level, d, rules))
    size = -(-len(items) // workers)
    chunks = [(js, items[i : i + size], e.level, d, rules) for i in range(0, len(items), size)]
    out = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_chunk_worker, chunks):
            for mm, c in sorted(part.items()):
                accumulate(out, mm, c)
    return Element(e.level - 1, out)


def delta(j, e, d=D, rules=NORMAL):
    """delta_j applied to element ``e`` (level ``n+1`` -> ``n``)."""
    if j not in (0, 1, 2, 3):
        raise ValueError(f"no operator delta_{j}")
    return _apply((j,), e, d, rules)


def delta0(e, d=D, rules=NORMAL):
    return delta(0, e, d, rules)


def delta1(e, d=D, rules=NORMAL):
    return delta(1, e, d, rules)


def delta2(e, d=D, rules=NORMAL):
    return delta(2, e, d, rules)


def delta3(e, d=D, rules=NORMAL):
    return delta(3, e, d, rules)


def pushf(e, d=D, rules=NORMAL, workers=1):
    """The full pushforward ``f = delta_0 + delta_1 + delta_2 + delta_3``."""
    return _apply((0, 1, 2, 3), e, d, rules, workers)


def shift_s(e):
    """The map ``(1)``: ``S_m -> S_{m-1}``, with ``S_{-1} = 0``."""
    return Element(e.level, {Monomial(m.thetas, m.s - 1): c for m, c in e.terms.items() if m.s})


# -- operator expressions ------------------------------------------------------


class OpExpr:
    """Base class of operator expression trees."""

    def __add__(self, other):
        return Sum((self, other))

    def __sub__(self, other):
        return Sum((self, Compose((Neg(), other))))

    def __matmul__(self, other):
        return Compose((self, other))

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Base(OpExpr):
    j: int

    def __post_init__(self):
        if self.j not in (0, 1, 2, 3):
            raise ValueError(f"no operator delta_{self.j}")

    def render(self):
        return f"d{self.j}"

    def drop(self):
        return 1


@dataclass(frozen=True)
class Neg(OpExpr):
    """Multiplication by -1 (level preserving)."""

    def render(self):
        return "-"

    def drop(self):
        return 0


@dataclass(frozen=True)
class Sum(OpExpr):
    """Pointwise sum.  ``level_drop`` fixes the drop of an empty sum."""

    terms: tuple = ()
    level_drop: int = None

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def render(self):
        if not self.terms:
            return "0"
        return " + ".join(t.render() for t in self.terms)

    def drop(self):
        drops = {t.drop() for t in self.terms}
        if self.level_drop is not None:
            drops.add(self.level_drop)
        if len(drops) > 1:
            raise ValueError(f"inhomogeneous sum {self.render()}")
        return drops.pop() if drops else 0


@dataclass(frozen=True)
class Compose(OpExpr):
    """``Compose((A, B, C))`` is ``A o B o C``: ``C`` is applied first."""

    ops: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))

    def render(self):
        if not self.ops:
            return "id"
        parts = []
        for o in self.ops:
            r = o.render()
            parts.append(f"({r})" if isinstance(o, Sum) and len(o.terms) > 1 else r)
        return "∘".join(parts)

    def drop(self):
        return sum(o.drop() for o in self.ops)


@dataclass(frozen=True)
class Ad(OpExpr):
    """``Ad(j, xi) = delta_j o xi - xi o delta_j``."""

    j: int
    inner: OpExpr

    def render(self):
        return f"Ad(d{self.j}, {self.inner.render()})"

    def drop(self):
        return self.inner.drop() + 1


def apply_op(op, e, d=D, rules=NORMAL):
    """Evaluate operator expression ``op`` on element ``e``."""
    if isinstance(op, Base):
        return delta(op.j, e, d, rules)
    if isinstance(op, Neg):
        return -e
    if isinstance(op, Sum):
        level = max(e.level - op.drop(), 0)
        out = Element(level)
        for t in op.terms:
            out = out + apply_op(t, e, d, rules)
        return out
    if isinstance(op, Compose):
        for o in reversed(op.ops):
            e = apply_op(o, e, d, rules)
        return e
    if isinstance(op, Ad):
        first = delta(op.j, apply_op(op.inner, e, d, rules), d, rules)
        second = apply_op(op.inner, delta(op.j, e, d, rules), d, rules)
        return first - second
    raise TypeError(f"not an operator expression: {op!r}")


def chain(*js):
    """``chain(1, 1, 0)`` is delta_1 o delta_1 o delta_0."""
    return Compose(tuple(Base(j) for j in js))


def sum_over_chains(k, r, alphabet=(0, 1, 2, 3)):
    """Sum of all ``delta_{i_1} o ... o delta_{i_k}`` with letters from
    ``alphabet`` and ``i_1 + ... + i_k = r``."""
    if k < 0 or r < 0:
        return Sum((), max(k, 0))
    alphabet = sorted(set(alphabet))
    return Sum(tuple(chain(*t) for t in product(alphabet, repeat=k) if sum(t) == r), k)


def apply_chain_sum(k, r, e, alphabet=(0, 1, 2, 3), d=D, rules=NORMAL):
    """Same value as ``apply_op(sum_over_chains(k, r, alphabet), e)``, computed
    by dynamic programming over partial letter sums."""
    if k < 0 or r < 0:
        return Element(max(e.level - max(k, 0), 0))
    alphabet = sorted(set(alphabet))
    layers = {0: e}
    for step in range(k):
        level = max(e.level - step - 1, 0)
        nxt = {}
        for s, x in layers.items():
            for i in alphabet:
                if s + i > r:
                    continue
                y = delta(i, x, d, rules)
                nxt[s + i] = nxt[s + i] + y if s + i in nxt else y
        layers = {s: x if x.level == level else Element(level) for s, x in nxt.items()}
    return layers.get(r, Element(max(e.level - k, 0)))


def ad_power(j, times, inner):
    for _ in range(times):
        inner = Ad(j, inner)
    return inner


def xi_op(k):
    """The commutator combination

    ``Ad_0 Ad_1^k (delta_2) + sum_s Ad_0 Ad_1^(k-1-s) Ad_0 Ad_1^s (delta_3)``.
    """
    terms = [Ad(0, ad_power(1, k, Base(2)))]
    for s in range(k):
        terms.append(Ad(0, ad_power(1, k - 1 - s, Ad(0, ad_power(1, s, Base(3))))))
    return Sum(tuple(terms))
