"""Exterior algebra of V = span(b_0, b_1, ...) and its restricted dual.

Monomials are tuples of strictly decreasing indices; ``(2, 0)`` is ``b_2 ^ b_0``.
Elements map monomials to :class:`LaurentPoly` coefficients.

Contraction convention (frozen): a covector acts on a wedge by
``beta ⌟ (u_1 ^ ... ^ u_r) = sum_s (-1)^(s+1) beta(u_s) u_1 ^ ..^ (omit u_s) .. ^ u_r``,
and a dual monomial ``beta_{i_1} ^ ... ^ beta_{i_k}`` contracts by applying
``beta_{i_1}`` first and ``beta_{i_k}`` last.  This is the order forced by
``eta(xi ⌟ u) = (xi ^ eta)(u)``, and with it a full contraction (k = r)
reproduces the determinant pairing.
"""
from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional

from .arith import LaurentPoly, VarId, det, var_key
from .partitions import Partition, as_partition


def normalize(indices: Iterable[int]) -> tuple:
    """Sort a word of basis indices decreasingly; return ``(sign, monomial)`` or ``(0, None)``."""
    word = list(indices)
    if len(set(word)) != len(word):
        return 0, None
    if any(i < 0 for i in word):
        return 0, None
    sign = 1
    # insertion sort counting transpositions
    for a in range(1, len(word)):
        x = word[a]
        b = a
        while b > 0 and word[b - 1] < x:
            word[b] = word[b - 1]
            b -= 1
            sign = -sign
        word[b] = x
    return sign, tuple(word)


def append_sign(mono: tuple, x: int) -> tuple:
    """``mono ^ b_x`` normalized: ``(sign, new_mono)``, or ``(0, None)`` if ``x`` repeats."""
    pos = len(mono)
    while pos > 0 and mono[pos - 1] < x:
        pos -= 1
    if pos > 0 and mono[pos - 1] == x:
        return 0, None
    moved = len(mono) - pos
    return (-1 if moved & 1 else 1), mono[:pos] + (x,) + mono[pos:]


def monomial_from_partition(r: int, lam) -> tuple:
    """Indices ``(r-1+lam_1, r-2+lam_2, ..., lam_r)``."""
    lam = as_partition(lam)
    return tuple(r - i + p for i, p in enumerate(lam.padded(r), start=1))


def partition_from_monomial(mono: Iterable[int]) -> tuple:
    """Inverse of :func:`monomial_from_partition`: ``(r, lam)``."""
    mono = tuple(mono)
    sign, norm = normalize(mono)
    if sign != 1 or norm != mono:
        raise ValueError(f"{mono} is not a strictly decreasing index sequence")
    r = len(mono)
    return r, Partition(i - (r - 1 - a) for a, i in enumerate(mono))


def _finish(terms: dict, window: Optional[Mapping]) -> tuple:
    """Drop vanishing coefficients; a truncated zero narrows the element window instead."""
    window = dict(window or {})
    out = {}
    for m, c in terms.items():
        if c:
            out[m] = c
        elif not c.is_exact:
            for v, h in zip(c.vars, c._hi):
                if h is not None:
                    window[v] = min(h, window.get(v, h))
    return out, window


def coefficient_lows(terms: Mapping) -> dict:
    """Per-variable lowest exponent over all coefficients (variables that occur)."""
    lows: dict = {}
    for c in terms.values():
        for v, lo in zip(c.vars, c.lows()):
            if lo != float("inf") and (v not in lows or lo < lows[v]):
                lows[v] = lo
    return lows


def _shift_window(window: Mapping, lows: Mapping) -> dict:
    """Horizon of ``unknown * x`` when the known part of ``x`` starts at ``lows``."""
    return {v: h + lows.get(v, 0) for v, h in window.items()}


def _min_window(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for v, h in b.items():
        out[v] = min(h, out[v]) if v in out else h
    return out


class _Element:
    """Shared machinery of wedge and dual-wedge elements.

    ``window`` maps variables to an element-level horizon: a monomial that is
    absent from ``terms`` is known to vanish only up to those exponents.
    """

    __slots__ = ("terms", "window")

    def __init__(self, terms: Optional[Mapping] = None, window: Optional[Mapping] = None):
        acc: dict = {}
        for word, c in (terms or {}).items():
            sign, mono = normalize(word)
            if sign == 0:
                continue
            c = LaurentPoly.coerce(c)
            if sign < 0:
                c = -c
            acc[mono] = acc[mono] + c if mono in acc else c
        self.terms, self.window = _finish(acc, {VarId.parse(v): h for v, h in (window or {}).items()})

    @classmethod
    def _raw(cls, terms: dict, window: Optional[dict] = None):
        obj = cls.__new__(cls)
        obj.terms, obj.window = _finish(terms, window)
        return obj

    @classmethod
    def basis(cls, mono: Iterable[int], coeff=1):
        return cls({tuple(mono): coeff})

    def degrees(self) -> set:
        return {len(m) for m in self.terms}

    @property
    def degree(self) -> Optional[int]:
        """The common degree, or ``None`` for zero/inhomogeneous elements."""
        d = self.degrees()
        return d.pop() if len(d) == 1 else None

    @property
    def is_exact(self) -> bool:
        return not self.window and all(c.is_exact for c in self.terms.values())

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return type(self)._raw(out, _min_window(self.window, other.window))

    def __neg__(self):
        return type(self)._raw({m: -c for m, c in self.terms.items()}, self.window)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        out = {}
        for m, x in self.terms.items():
            out[m] = x * c
        return type(self)._raw(out, _shift_window(self.window, coefficient_lows({0: c})))

    __mul__ = scale
    __rmul__ = scale

    def map_coefficients(self, f: Callable[[LaurentPoly], LaurentPoly], window: Optional[dict] = None):
        out = {}
        for m, x in self.terms.items():
            out[m] = f(x)
        return type(self)._raw(out, self.window if window is None else window)

    def truncate(self, window: Mapping):
        window = {VarId.parse(v): h for v, h in window.items()}
        return self.map_coefficients(lambda c: c.truncate(window), _min_window(self.window, window))

    def coefficient(self, mono: Iterable[int]) -> LaurentPoly:
        sign, m = normalize(mono)
        if sign == 0:
            return LaurentPoly.zero()
        c = self.terms.get(m)
        if c is None:
            return LaurentPoly.zero().truncate(self.window)
        return c if sign > 0 else -c

    def compare(self, other) -> tuple:
        """``(equal, window)``: coefficientwise comparison on the common windows."""
        window: dict = _min_window(self.window, other.window)
        equal = True
        for m in set(self.terms) | set(other.terms):
            res = self.coefficient(m).compare(other.coefficient(m))
            equal = equal and res.equal
            window = _min_window(window, res.window)
        return equal, {str(v): h for v, h in sorted(window.items(), key=lambda vh: var_key(vh[0]))}

    def __eq__(self, other) -> bool:
        if not isinstance(other, _Element):
            return NotImplemented
        return self.compare(other)[0]

    __hash__ = None

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.terms.values())

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda mc: (len(mc[0]), mc[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = self._symbol
        parts = []
        for m, c in self:
            name = "^".join(f"{sym}{i}" for i in m) if m else "1"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)})"

    def to_json(self) -> list:
        return [{"indices": list(m), "coeff": c.to_json()} for m, c in self]


def _wedge_terms(a: "_Element", b: "_Element") -> tuple:
    out: dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            sign, m = normalize(m1 + m2)
            if sign == 0:
                continue
            c = c1 * c2
            if sign < 0:
                c = -c
            out[m] = out[m] + c if m in out else c
    window = _min_window(
        _shift_window(a.window, coefficient_lows(b.terms)),
        _shift_window(b.window, coefficient_lows(a.terms)),
    )
    return out, window


class ExtElement(_Element):
    """A finite combination of wedge monomials ``b_{i_1} ^ ... ^ b_{i_d}``."""

    _symbol = "b"

    def wedge(self, other: "ExtElement") -> "ExtElement":
        return ExtElement._raw(*_wedge_terms(self, other))

    __xor__ = wedge


class DualElement(_Element):
    """A finite combination of dual wedge monomials ``beta_{i_1} ^ ... ^ beta_{i_d}``."""

    _symbol = "beta"

    def wedge(self, other: "DualElement") -> "DualElement":
        return DualElement._raw(*_wedge_terms(self, other))

    __xor__ = wedge


def basis_element(r: int, lam, coeff=1) -> ExtElement:
    """``[b]^r_lam``."""
    return ExtElement.basis(monomial_from_partition(r, lam), coeff)


def dual_basis_element(r: int, mu, coeff=1) -> DualElement:
    """``[beta]^r_mu``."""
    return DualElement.basis(monomial_from_partition(r, mu), coeff)


def one() -> ExtElement:
    return ExtElement.basis(())


def wedge(u: ExtElement, v: ExtElement) -> ExtElement:
    return u.wedge(v)


def pairing_monomials(dual: tuple, mono: tuple) -> int:
    """``det(beta_{dual[a]}(b_{mono[c]}))``."""
    if len(dual) != len(mono):
        raise ValueError("pairing needs equal degrees")
    if sorted(dual) != sorted(mono):
        return 0
    return det([[1 if i == j else 0 for j in mono] for i in dual]).constant_term()


def pairing(eta: DualElement, u: ExtElement) -> LaurentPoly:
    """Bilinear extension of the determinant pairing (only equal degrees pair)."""
    total = LaurentPoly.zero()
    for d, cd in eta.terms.items():
        for m, cm in u.terms.items():
            if len(d) != len(m):
                raise ValueError("pairing needs equal degrees")
            s = pairing_monomials(d, m)
            if s:
                total = total + (cd * cm).scale(s)
    return total


def _contract_mono(j: int, mono: tuple):
    for s, i in enumerate(mono):
        if i == j:
            return (1 if s % 2 == 0 else -1), mono[:s] + mono[s + 1:]
    return 0, None


def contract_covector(j: int, u: ExtElement) -> ExtElement:
    """``beta_j ⌟ u``."""
    out: dict = {}
    for m, c in u.terms.items():
        sign, rest = _contract_mono(j, m)
        if sign:
            out[rest] = c if sign > 0 else -c
    return ExtElement._raw(out, u.window)


def contract_monomial(dual: Iterable[int], u: ExtElement) -> ExtElement:
    """Contract by the dual monomial ``beta_{d_1} ^ ... ^ beta_{d_k}`` (``beta_{d_1}`` acts first)."""
    dual = tuple(dual)
    out: dict = {}
    for m, c in u.terms.items():
        sign, cur = 1, m
        for j in dual:
            s, cur = _contract_mono(j, cur)
            if not s:
                break
            sign *= s
        else:
            c = c if sign > 0 else -c
            out[cur] = out[cur] + c if cur in out else c
    return ExtElement._raw(out, u.window)


def contract_dual(eta: DualElement, u: ExtElement) -> ExtElement:
    """Contraction by a dual element; vanishes when its degree exceeds that of ``u``."""
    total = ExtElement()
    for d, c in eta.terms.items():
        total = total + contract_monomial(d, u).scale(c)
    return total


def contract_series(wvar, u: ExtElement) -> ExtElement:
    """Contraction by ``beta(w^-1) = sum_j beta_j w^-j``; exact since ``u`` is finite."""
    v = VarId.parse(wvar)
    out: dict = {}
    for m, c in u.terms.items():
        for s, i in enumerate(m):
            rest = m[:s] + m[s + 1:]
            term = c.shift({v: -i})
            if s % 2:
                term = -term
            out[rest] = out[rest] + term if rest in out else term
    if v in u.window:
        raise ValueError(f"contraction variable {v} must not be truncated")
    return ExtElement._raw(out, u.window)


def dual_series_wedge(wvars, max_index: int) -> DualElement:
    """``beta(w_1^-1) ^ ... ^ beta(w_k^-1)`` restricted to indices ``<= max_index``.

    Every coefficient of a retained monomial is exact: it is the alternant
    ``det(w_a^{-i_c})``.
    """
    ws = [VarId.parse(v) for v in wvars]
    out = DualElement.basis(())
    for v in ws:
        series = DualElement({(j,): LaurentPoly.var(v, -j) for j in range(max_index + 1)})
        out = out.wedge(series)
    return out


def element_from_json(data: list, dual: bool = False):
    cls = DualElement if dual else ExtElement
    return cls({tuple(t["indices"]): LaurentPoly.from_json(t["coeff"]) for t in data})
