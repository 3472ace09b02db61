"""Exact rationals and truncated multivariate Laurent polynomials.

Every coefficient in the package is a :class:`LaurentPoly`: a sparse map from
exponent vectors to exact rationals (``int`` or :class:`fractions.Fraction`)
together with a per-variable *exactness horizon*.  A horizon ``hi`` for the
variable ``z`` means that every coefficient whose ``z``-exponent is ``<= hi``
is known exactly and nothing is claimed above it.  Variables without a horizon
are exact.  Negative exponents never truncate.

Products propagate horizons the only sound way: if ``a`` is exact up to
``hi_a`` and its support starts at ``lo_a`` (and likewise for ``b``) then
``a * b`` is exact up to ``min(hi_a + lo_b, hi_b + lo_a)``.
"""
from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

FAMILIES = ("e", "z", "w")
_add = operator.add


class WindowError(ValueError):
    """A coefficient was requested outside the range a series is known in."""


class VarId(NamedTuple):
    family: str
    index: int

    def __str__(self) -> str:
        return f"{self.family}{self.index}"

    @classmethod
    def parse(cls, name: Union[str, "VarId"]) -> "VarId":
        if isinstance(name, VarId):
            return name
        m = re.fullmatch(r"([ezw])(\d+)", name)
        if not m or int(m.group(2)) < 1:
            raise ValueError(f"bad variable name {name!r}")
        return cls(m.group(1), int(m.group(2)))


def var_key(v: VarId):
    """Canonical variable order: e1 < e2 < ... < z1 < ... < zk < w1 < ... < wk."""
    return (FAMILIES.index(v.family), v.index)


def zs(k: int) -> tuple[VarId, ...]:
    return tuple(VarId("z", i) for i in range(1, k + 1))


def ws(k: int) -> tuple[VarId, ...]:
    return tuple(VarId("w", i) for i in range(1, k + 1))


def es(r: int) -> tuple[VarId, ...]:
    return tuple(VarId("e", i) for i in range(1, r + 1))


# --- rationals --------------------------------------------------------------

def rational(x) -> Number:
    """Parse ``"p/q"``, an int or a Fraction into a normalized rational."""
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(x: Number) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rat_add(a: Number, b: Number) -> Number:
    return rational(Fraction(a) + Fraction(b))


def rat_mul(a: Number, b: Number) -> Number:
    return rational(Fraction(a) * Fraction(b))


def rat_neg(a: Number) -> Number:
    return rational(-Fraction(a))


def rat_div(a: Number, b: Number) -> Number:
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return rational(Fraction(a) / Fraction(b))


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


# --- alignment helpers ------------------------------------------------------

@lru_cache(maxsize=4096)
def _union(va: tuple, vb: tuple) -> tuple:
    if va == vb:
        return va
    return tuple(sorted(set(va) | set(vb), key=var_key))


@lru_cache(maxsize=4096)
def _positions(src: tuple, dst: tuple) -> tuple:
    return tuple(dst.index(v) for v in src)


def _embed_terms(terms: dict, src: tuple, dst: tuple) -> dict:
    if src == dst:
        return terms
    pos = _positions(src, dst)
    n = len(dst)
    out = {}
    for k, c in terms.items():
        key = [0] * n
        for p, e in zip(pos, k):
            key[p] = e
        out[tuple(key)] = c
    return out


def _embed_hi(hi: tuple, src: tuple, dst: tuple) -> tuple:
    if src == dst:
        return hi
    out = [None] * len(dst)
    for p, h in zip(_positions(src, dst), hi):
        out[p] = h
    return tuple(out)


def _min_hi(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _inside(key, hi) -> bool:
    for e, h in zip(key, hi):
        if h is not None and e > h:
            return False
    return True


class Comparison(NamedTuple):
    """Outcome of comparing two truncated quantities on their common window."""

    equal: bool
    window: dict

    def __bool__(self) -> bool:
        return self.equal


# --- Laurent polynomials ----------------------------------------------------

class LaurentPoly:
    """Immutable sparse Laurent polynomial over Q with exactness horizons."""

    __slots__ = ("_vars", "_terms", "_hi")

    def __init__(self, terms: Optional[Mapping] = None, window: Optional[Mapping] = None):
        """Build from ``{exponents: coeff}`` where exponents map variable names to ints.

        >>> str(LaurentPoly({(): 1, (("z1", 1),): -1}))
        '1 - z1'
        """
        acc: dict = {}
        names = set()
        for exps, c in (terms or {}).items():
            items = dict(exps).items() if not isinstance(exps, dict) else exps.items()
            mono = {VarId.parse(v): int(e) for v, e in items if int(e) != 0}
            names.update(mono)
            acc[frozenset(mono.items())] = acc.get(frozenset(mono.items()), 0) + rational(c)
        hi_map = {VarId.parse(v): int(h) for v, h in (window or {}).items()}
        names.update(hi_map)
        vars_ = tuple(sorted(names, key=var_key))
        hi = tuple(hi_map.get(v) for v in vars_)
        out = {}
        for mono, c in acc.items():
            d = dict(mono)
            key = tuple(d.get(v, 0) for v in vars_)
            if c != 0 and _inside(key, hi):
                out[key] = _norm(c)
        self._vars, self._terms, self._hi = vars_, out, hi

    @classmethod
    def _make(cls, vars_: tuple, terms: dict, hi: tuple) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._vars, obj._terms, obj._hi = vars_, terms, hi
        return obj

    # constructors
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._make((), {}, ())

    @classmethod
    def constant(cls, c: Number) -> "LaurentPoly":
        c = rational(c)
        return cls._make((), {(): c} if c != 0 else {}, ())

    @classmethod
    def monomial(cls, exps: Mapping, coeff: Number = 1) -> "LaurentPoly":
        return cls({tuple(exps.items()): coeff})

    @classmethod
    def var(cls, name, exp: int = 1) -> "LaurentPoly":
        v = VarId.parse(name)
        if exp == 0:
            return cls.constant(1)
        return cls._make((v,), {(exp,): 1}, (None,))

    # inspection
    @property
    def vars(self) -> tuple:
        return self._vars

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_exact(self) -> bool:
        return all(h is None for h in self._hi)

    def horizon(self, v) -> Optional[int]:
        v = VarId.parse(v)
        if v in self._vars:
            return self._hi[self._vars.index(v)]
        return None

    @property
    def window(self) -> dict:
        """Per-variable ``(lo, hi)``; ``lo`` bounds the support, ``hi`` the exact range."""
        out = {}
        for i, v in enumerate(self._vars):
            lo = min((k[i] for k in self._terms), default=None)
            out[v] = (lo, self._hi[i])
        return out

    def lows(self) -> tuple:
        """Support lower bound per variable (``hi + 1`` for an empty truncated series)."""
        if not self._terms:
            return tuple(math.inf if h is None else h + 1 for h in self._hi)
        return tuple(min(col) for col in zip(*self._terms)) if self._vars else ()

    def items(self):
        """Yield ``({VarId: exp}, coeff)`` in canonical order."""
        for key in sorted(self._terms, key=_grlex):
            yield {v: e for v, e in zip(self._vars, key) if e}, self._terms[key]

    def __len__(self) -> int:
        return len(self._terms)

    def degree_range(self, v) -> tuple:
        v = VarId.parse(v)
        if v not in self._vars or not self._terms:
            return (0, 0)
        i = self._vars.index(v)
        col = [k[i] for k in self._terms]
        return (min(col), max(col))

    def free_of(self, vs: Iterable) -> bool:
        idx = [i for i, v in enumerate(self._vars) if v in set(map(VarId.parse, vs))]
        return all(k[i] == 0 for k in self._terms for i in idx)

    # alignment
    def _aligned(self, vars_: tuple) -> tuple:
        return (_embed_terms(self._terms, self._vars, vars_), _embed_hi(self._hi, self._vars, vars_))

    def embed(self, vars_: tuple) -> "LaurentPoly":
        vars_ = _union(self._vars, tuple(vars_))
        t, h = self._aligned(vars_)
        return LaurentPoly._make(vars_, t, h)

    def truncate(self, window: Mapping) -> "LaurentPoly":
        """Declare (tighter) horizons and drop every term beyond them."""
        wanted = {VarId.parse(v): h for v, h in window.items()}
        vars_ = _union(self._vars, tuple(sorted(wanted, key=var_key)))
        terms, hi = self._aligned(vars_)
        hi = tuple(_min_hi(h, wanted.get(v)) for v, h in zip(vars_, hi))
        return LaurentPoly._make(vars_, {k: c for k, c in terms.items() if _inside(k, hi)}, hi)

    # arithmetic
    @staticmethod
    def coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        return LaurentPoly.constant(x)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._make(self._vars, {k: -c for k, c in self._terms.items()}, self._hi)

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if other == 0:
                return self
            other = LaurentPoly.constant(other)
        vars_ = _union(self._vars, other._vars)
        ta, ha = self._aligned(vars_)
        tb, hb = other._aligned(vars_)
        hi = tuple(map(_min_hi, ha, hb))
        out = dict(ta)
        for k, c in tb.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        if any(h is not None for h in hi):
            out = {k: c for k, c in out.items() if _inside(k, hi)}
        return LaurentPoly._make(vars_, out, hi)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) + (-self)

    def scale(self, c: Number) -> "LaurentPoly":
        c = rational(c)
        if c == 0:
            return LaurentPoly._make(self._vars, {}, self._hi)
        if c == 1:
            return self
        return LaurentPoly._make(self._vars, {k: _norm(v * c) for k, v in self._terms.items()}, self._hi)

    def shift(self, exps: Mapping) -> "LaurentPoly":
        """Multiply by the monomial ``exps``; horizons move with the exponents."""
        mono = {VarId.parse(v): e for v, e in exps.items() if e}
        if not mono:
            return self
        vars_ = _union(self._vars, tuple(sorted(mono, key=var_key)))
        terms, hi = self._aligned(vars_)
        delta = tuple(mono.get(v, 0) for v in vars_)
        hi = tuple(h if h is None else h + d for h, d in zip(hi, delta))
        return LaurentPoly._make(vars_, {tuple(map(_add, k, delta)): c for k, c in terms.items()}, hi)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        vars_ = _union(self._vars, other._vars)
        ta, ha = self._aligned(vars_)
        tb, hb = other._aligned(vars_)
        hi = _product_horizon(vars_, ta, ha, tb, hb)
        return LaurentPoly._make(vars_, _mul_terms(ta, tb, hi), hi)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self._terms.items()
            return LaurentPoly._make(self._vars, {tuple(-e for e in k): rational(Fraction(1) / c) ** -n}, self._hi)
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # coefficients
    def coefficient(self, exps: Mapping) -> Number:
        """Exact coefficient of one monomial in *all* variables of ``self``."""
        mono = {VarId.parse(v): e for v, e in exps.items()}
        for v, e in mono.items():
            h = self.horizon(v)
            if h is not None and e > h:
                raise WindowError(f"exponent {e} of {v} lies beyond the known range (<= {h})")
        if any(e and v not in self._vars for v, e in mono.items()):
            return 0
        key = tuple(mono.get(v, 0) for v in self._vars)
        return self._terms.get(key, 0)

    def extract(self, exps: Mapping) -> "LaurentPoly":
        """Coefficient of a monomial in a subset of variables, as a poly in the rest."""
        mono = {VarId.parse(v): e for v, e in exps.items()}
        for v, e in mono.items():
            h = self.horizon(v)
            if h is not None and e > h:
                raise WindowError(f"exponent {e} of {v} lies beyond the known range (<= {h})")
        keep = tuple(v for v in self._vars if v not in mono)
        idx_fix = [(i, mono[v]) for i, v in enumerate(self._vars) if v in mono]
        if any(e and v not in self._vars for v, e in mono.items()):
            return LaurentPoly._make(keep, {}, tuple(self._hi[self._vars.index(v)] for v in keep))
        idx_keep = [i for i, v in enumerate(self._vars) if v not in mono]
        out = {}
        for k, c in self._terms.items():
            if all(k[i] == e for i, e in idx_fix):
                out[tuple(k[i] for i in idx_keep)] = c
        return LaurentPoly._make(keep, out, tuple(self._hi[i] for i in idx_keep))

    def constant_term(self) -> Number:
        return self._terms.get((0,) * len(self._vars), 0)

    def map_coefficients(self, f) -> "LaurentPoly":
        out = {}
        for k, c in self._terms.items():
            c = _norm(f(c))
            if c:
                out[k] = c
        return LaurentPoly._make(self._vars, out, self._hi)

    def substitute_inverse(self, v) -> "LaurentPoly":
        """Replace ``v`` by ``v**-1`` (only for exact series)."""
        v = VarId.parse(v)
        if v not in self._vars:
            return self
        i = self._vars.index(v)
        if self._hi[i] is not None:
            raise WindowError("cannot invert a truncated variable")
        out = {k[:i] + (-k[i],) + k[i + 1:]: c for k, c in self._terms.items()}
        return LaurentPoly._make(self._vars, out, self._hi)

    # comparison
    def compare(self, other) -> Comparison:
        """Compare on the intersection of windows; report the window checked."""
        other = LaurentPoly.coerce(other)
        vars_ = _union(self._vars, other._vars)
        ta, ha = self._aligned(vars_)
        tb, hb = other._aligned(vars_)
        hi = tuple(map(_min_hi, ha, hb))
        keys = {k for k in ta if _inside(k, hi)} | {k for k in tb if _inside(k, hi)}
        equal = all(ta.get(k, 0) == tb.get(k, 0) for k in keys)
        return Comparison(equal, {v: h for v, h in zip(vars_, hi) if h is not None})

    def __eq__(self, other) -> bool:
        if not isinstance(other, (LaurentPoly, int, Fraction)):
            return NotImplemented
        return self.compare(other).equal

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self._terms)

    # rendering
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms, key=_grlex):
            c = self._terms[key]
            mono = "*".join(
                str(v) if e == 1 else f"{v}^{e}" for v, e in zip(self._vars, key) if e
            )
            parts.append(_signed_term(c, mono))
        text = parts[0] if not parts[0].startswith("+ ") else parts[0][2:]
        text = text.replace("- ", "-", 1) if text.startswith("- ") else text
        return " ".join([text] + parts[1:])

    def __repr__(self) -> str:
        w = {str(v): h for v, h in zip(self._vars, self._hi) if h is not None}
        return f"LaurentPoly({str(self)!r}{', window=' + repr(w) if w else ''})"

    def to_json(self) -> list:
        return [
            {"exponents": {str(v): e for v, e in mono.items()}, "coeff": format_rational(c)}
            for mono, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: list, window: Optional[Mapping] = None) -> "LaurentPoly":
        return cls({tuple(t["exponents"].items()): rational(t["coeff"]) for t in data}, window)


def _grlex(key):
    return (sum(key), key)


def _signed_term(c, mono: str) -> str:
    neg = c < 0
    a = abs(c)
    if mono:
        body = mono if a == 1 else f"{a}*{mono}"
    else:
        body = str(a)
    return ("- " if neg else "+ ") + body


def _product_horizon(vars_, ta, ha, tb, hb) -> tuple:
    if all(h is None for h in ha) and all(h is None for h in hb):
        return ha
    la = _lows(ta, ha)
    lb = _lows(tb, hb)
    hi = []
    for i, v in enumerate(vars_):
        x = math.inf if ha[i] is None else ha[i] + lb[i]
        y = math.inf if hb[i] is None else hb[i] + la[i]
        h = min(x, y)
        if h != math.inf and ta and tb and h < la[i] + lb[i]:
            raise WindowError(f"product has no exactly known coefficient in {v}")
        hi.append(None if h == math.inf else int(h))
    return tuple(hi)


def _lows(terms, hi):
    if not terms:
        return tuple(math.inf if h is None else h + 1 for h in hi)
    return tuple(min(col) for col in zip(*terms)) if hi else ()


def _mul_terms(ta: dict, tb: dict, hi: tuple) -> dict:
    out: dict = {}
    get = out.get
    checks = [(i, h) for i, h in enumerate(hi) if h is not None]
    if len(ta) < len(tb):
        ta, tb = tb, ta
    tb_items = list(tb.items())
    for ka, ca in ta.items():
        for kb, cb in tb_items:
            k = tuple(map(_add, ka, kb))
            if checks and any(k[i] > h for i, h in checks):
                continue
            out[k] = get(k, 0) + ca * cb
    return {k: _norm(c) for k, c in out.items() if c}


# --- operations named by the contract --------------------------------------

def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_coefficient(a: LaurentPoly, exps: Mapping) -> Number:
    return a.coefficient(exps)


def lp_invert_unit(a: LaurentPoly, var, order: int) -> LaurentPoly:
    """Inverse of ``a`` as a power series in ``var`` truncated at ``var**order``.

    ``a`` must be a polynomial in ``var`` whose ``var**0`` coefficient is exactly 1;
    the other coefficients may involve further variables.
    """
    v = VarId.parse(var)
    lo, top = a.degree_range(v)
    if lo < 0:
        raise ValueError(f"{v} must occur with non-negative exponents only")
    if a.horizon(v) is not None:
        raise WindowError("the series to invert must be exact in its variable")
    coeffs = [a.extract({v: n}) for n in range(top + 1)]
    if coeffs[0] != 1:
        raise ValueError("constant term is not 1; not a unit of the power-series ring")
    inv = [LaurentPoly.constant(1)]
    for n in range(1, order + 1):
        acc = LaurentPoly.zero()
        for m in range(1, min(n, top) + 1):
            if coeffs[m]:
                acc = acc + coeffs[m] * inv[n - m]
        inv.append(-acc)
    return series_from_coefficients(inv, v, order)


def series_from_coefficients(coeffs: Sequence[LaurentPoly], var, order: Optional[int]) -> LaurentPoly:
    """Assemble ``sum_n coeffs[n] * var**n`` and declare ``var`` exact up to ``order``."""
    v = VarId.parse(var)
    total = LaurentPoly.zero()
    for n, c in enumerate(coeffs):
        c = LaurentPoly.coerce(c)
        if c:
            total = total + c.shift({v: n})
    if order is not None:
        total = total.truncate({v: order})
    return total


def lp_log_unit(a: LaurentPoly, var, order: int) -> LaurentPoly:
    """Formal logarithm of a power series with constant term 1, through ``var**order``.

    Uses ``n * L_n = n * a_n - sum_{m<n} m * L_m * a_{n-m}`` (from ``a' = a * L'``).
    """
    v = VarId.parse(var)
    coeffs = [a.extract({v: n}) for n in range(order + 1)]
    if coeffs[0] != 1:
        raise ValueError("logarithm needs constant term 1")
    logs = [LaurentPoly.zero()]
    for n in range(1, order + 1):
        acc = coeffs[n].scale(n)
        for m in range(1, n):
            acc = acc - logs[m].scale(m) * coeffs[n - m]
        logs.append(acc.scale(Fraction(1, n)))
    return series_from_coefficients(logs, v, order)


def lp_exp(a: LaurentPoly, var, order: int) -> LaurentPoly:
    """``exp(a)`` for a power series without constant term, through ``var**order``."""
    v = VarId.parse(var)
    coeffs = [a.extract({v: n}) for n in range(order + 1)]
    if coeffs[0]:
        raise ValueError("exp needs a series without constant term")
    # E' = a' E  =>  n E_n = sum_{m=1}^{n} m a_m E_{n-m}
    out = [LaurentPoly.constant(1)]
    for n in range(1, order + 1):
        acc = LaurentPoly.zero()
        for m in range(1, n + 1):
            if coeffs[m]:
                acc = acc + coeffs[m].scale(m) * out[n - m]
        out.append(acc.scale(Fraction(1, n)))
    return series_from_coefficients(out, v, order)


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient ``a / b`` when ``b`` divides ``a`` in the Laurent ring.

    Leading terms are taken in lex order, which is a group order on Laurent
    monomials, so the quotient's terms appear from the top down.  Raises
    ``ArithmeticError`` if the division is not exact.  Variables of ``b`` must
    be exact in ``a``; other horizons of ``a`` carry over unchanged.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    vars_ = _union(a._vars, b._vars)
    ta, ha = a._aligned(vars_)
    tb, hb = b._aligned(vars_)
    if any(h is not None for h in hb):
        raise WindowError("divisor must be exact")
    bvars = {i for k in tb for i, e in enumerate(k) if e}
    if any(ha[i] is not None for i in bvars):
        raise WindowError("dividend is truncated in a variable of the divisor")
    if not ta:
        return LaurentPoly._make(vars_, {}, ha)
    lead_b = max(tb)
    cb = tb[lead_b]
    floor = tuple(map(operator.sub, min(ta), min(tb)))
    rem = dict(ta)
    quot = {}
    while rem:
        lead = max(rem)
        q = tuple(map(operator.sub, lead, lead_b))
        if q < floor:
            raise ArithmeticError("division is not exact")
        cq = _norm(Fraction(rem[lead]) / cb)
        quot[q] = cq
        for kb, c in tb.items():
            k = tuple(map(_add, q, kb))
            s = rem.get(k, 0) - cq * c
            if s:
                rem[k] = _norm(s)
            else:
                rem.pop(k, None)
    return LaurentPoly._make(vars_, quot, ha)


def _exact_zero(p: LaurentPoly) -> bool:
    return not p._terms and p.is_exact


def det(matrix: Sequence[Sequence]) -> LaurentPoly:
    """Determinant by Laplace expansion along the first row, memoized on column sets."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly.constant(1)
    rows = [[LaurentPoly.coerce(x) for x in row] for row in matrix]
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    # minors[cols] = det of rows n-len(cols).. restricted to cols (sorted tuple)
    minors = {(): LaurentPoly.constant(1)}
    for size in range(1, n + 1):
        row = rows[n - size]
        new = {}
        for cols in combinations(range(n), size):
            acc = LaurentPoly.zero()
            for pos, c in enumerate(cols):
                entry = row[c]
                sub = minors[cols[:pos] + cols[pos + 1:]]
                if _exact_zero(entry) or _exact_zero(sub):
                    continue
                term = entry * sub
                acc = acc + term if pos % 2 == 0 else acc - term
            new[cols] = acc
        minors = new
    return minors[tuple(range(n))]
