"""Schubert derivations on the exterior algebra and the commutation rules they obey.

The four univariate operators act on basis vectors by

    sigma_plus(z)      b_j = sum_{i>=0} b_{j+i} z^i          (truncated at z^D)
    sigma_plus_bar(z)  b_j = b_j - b_{j+1} z
    sigma_minus(z)     b_j = sum_{i=0}^{j} b_{j-i} z^-i
    sigma_minus_bar(z) b_j = b_j - b_{j-1} z^-1

and on wedge products factor by factor.  Multivariate operators apply their
univariate factors one at a time, rightmost variable first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, NamedTuple, Optional, Sequence

from .arith import LaurentPoly, VarId
from .exterior import (
    DualElement,
    ExtElement,
    append_sign,
    basis_element,
    coefficient_lows,
    contract_covector,
    contract_series,
    pairing,
    _min_window,
    _shift_window,
)
from .partitions import as_partition
from .symfun import VarSet, complete, elementary

KINDS = ("sigma_plus", "sigma_plus_bar", "sigma_minus", "sigma_minus_bar")


class Check(NamedTuple):
    """Outcome of one identity check: both sides and the window they were compared on."""

    holds: bool
    lhs: object
    rhs: object
    window: dict

    def __bool__(self) -> bool:
        return self.holds


def compare(lhs, rhs) -> Check:
    if isinstance(lhs, ExtElement) or isinstance(rhs, ExtElement):
        equal, window = lhs.compare(rhs)
    else:
        res = LaurentPoly.coerce(lhs).compare(rhs)
        equal, window = res.equal, {str(v): h for v, h in res.window.items()}
    return Check(equal, lhs, rhs, window)


@dataclass(frozen=True)
class SchubertOp:
    """One of the four Schubert derivations in one or more variables."""

    kind: str
    vars: tuple
    trunc: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown Schubert derivation {self.kind!r}")
        vs = tuple(VarId.parse(v) for v in self.vars)
        if not vs:
            raise ValueError("a Schubert derivation needs at least one variable")
        object.__setattr__(self, "vars", vs)
        if self.kind == "sigma_plus" and (self.trunc is None or self.trunc < 0):
            raise ValueError("sigma_plus needs a non-negative truncation order")

    def __call__(self, u: ExtElement) -> ExtElement:
        return apply(self, u)


def op(kind: str, *vars_, trunc: Optional[int] = None) -> SchubertOp:
    return SchubertOp(kind, tuple(vars_), trunc)


def vector_image(kind: str, j: int, trunc: Optional[int]) -> tuple:
    """Image of ``b_j`` as ``((index, coeff, exponent), ...)``."""
    if kind == "sigma_plus":
        return tuple((j + i, 1, i) for i in range(trunc + 1))
    if kind == "sigma_plus_bar":
        return ((j, 1, 0), (j + 1, -1, 1))
    if kind == "sigma_minus":
        return tuple((j - i, 1, -i) for i in range(j + 1))
    return ((j, 1, 0), (j - 1, -1, -1)) if j > 0 else ((j, 1, 0),)


@lru_cache(maxsize=200_000)
def monomial_image(kind: str, mono: tuple, trunc: Optional[int]) -> tuple:
    """Image of a wedge monomial under a univariate operator.

    Returns ``((target, ((exponent, coeff), ...)), ...)``; for ``sigma_plus``
    every exponent above ``trunc`` is dropped (the result is exact up to it).
    """
    state = {(): {0: 1}}
    for j in mono:
        new: dict = {}
        for idx, c, e in vector_image(kind, j, trunc):
            for m, series in state.items():
                sign, m2 = append_sign(m, idx)
                if not sign:
                    continue
                slot = new.setdefault(m2, {})
                for e0, c0 in series.items():
                    ee = e0 + e
                    if trunc is not None and ee > trunc:
                        continue
                    slot[ee] = slot.get(ee, 0) + sign * c * c0
        state = {m: {e: c for e, c in s.items() if c} for m, s in new.items()}
        state = {m: s for m, s in state.items() if s}
    return tuple((m, tuple(sorted(s.items()))) for m, s in sorted(state.items()))


def _image_poly(series: tuple, v: VarId, trunc: Optional[int]) -> LaurentPoly:
    p = LaurentPoly._make((v,), {(e,): c for e, c in series}, (trunc,))
    return p


def apply_univariate(kind: str, v, u: ExtElement, trunc: Optional[int] = None) -> ExtElement:
    v = VarId.parse(v)
    trunc = trunc if kind == "sigma_plus" else None
    out: dict = {}
    for m, c in u.terms.items():
        for target, series in monomial_image(kind, m, trunc):
            term = c * _image_poly(series, v, trunc)
            out[target] = out[target] + term if target in out else term
    window = dict(u.window)
    if kind == "sigma_minus" or kind == "sigma_minus_bar":
        lo = -max((max(m) if m else 0 for m in u.terms), default=0)
        window = _shift_window(window, {v: lo})
    if kind == "sigma_plus":
        lo = coefficient_lows(u.terms).get(v, 0)
        bound = trunc + lo if u.terms else trunc
        window = _min_window(window, {v: bound})
        # pruned images of any source start above ``bound``: no coefficient is known past it
        out = {m: c.truncate({v: bound}) for m, c in out.items()}
    return ExtElement._raw(out, window)


def apply(o: SchubertOp, u: ExtElement) -> ExtElement:
    """Apply ``o`` to ``u``; multivariate operators act rightmost variable first."""
    for v in reversed(o.vars):
        u = apply_univariate(o.kind, v, u, o.trunc)
    return u


def sigma_plus(u, *vars_, trunc: int):
    return apply(SchubertOp("sigma_plus", vars_, trunc), u)


def sigma_plus_bar(u, *vars_):
    return apply(SchubertOp("sigma_plus_bar", vars_), u)


def sigma_minus(u, *vars_):
    return apply(SchubertOp("sigma_minus", vars_), u)


def sigma_minus_bar(u, *vars_):
    return apply(SchubertOp("sigma_minus_bar", vars_), u)


# --- generic HS derivation exp(sum delta(phi^i) z^i / i) ---------------------

def _derivation(phi_power: Callable[[int], Sequence], u: ExtElement) -> ExtElement:
    """``delta(psi) u`` for the linear map ``psi`` given on basis vectors."""
    out = ExtElement()
    for m, c in u.terms.items():
        for s, j in enumerate(m):
            for idx, a in phi_power(j):
                word = m[:s] + (idx,) + m[s + 1:]
                out = out + ExtElement({word: c.scale(a)})
    return out


def hs_exp(phi: Callable[[int], Sequence], v, D: Optional[int], u: ExtElement, inverted: bool = False) -> ExtElement:
    """``exp(sum_{i>=1} delta(phi^i) t^i / i) u`` with ``t = v`` (or ``v^-1`` if ``inverted``).

    ``phi(j)`` returns ``[(index, coeff), ...]`` for ``phi(b_j)``.  With ``inverted``
    the map must be locally nilpotent (no truncation is then needed); otherwise
    the series is truncated at ``v^D``.
    """
    v = VarId.parse(v)

    def power(i: int):
        def image(j: int):
            vec = {j: 1}
            for _ in range(i):
                nxt: dict = {}
                for a, c in vec.items():
                    for b, d in phi(a):
                        nxt[b] = nxt.get(b, 0) + c * d
                vec = {a: c for a, c in nxt.items() if c and a >= 0}
            return list(vec.items())
        return image

    sign = -1 if inverted else 1

    def X(w: ExtElement) -> ExtElement:
        acc = ExtElement()
        i = 1
        while True:
            if not inverted and i > D:
                break
            term = _derivation(power(i), w)
            if inverted and not term and i > max((max(m) for m in w.terms if m), default=0):
                break
            if term:
                acc = acc + term.scale(LaurentPoly.var(v, sign * i).scale(Fraction(1, i)))
            i += 1
        if not inverted:
            acc = acc.truncate({v: D})
        return acc

    result = u if inverted else u.truncate({v: D})
    cur = result
    n = 1
    while True:
        cur = X(cur).scale(Fraction(1, n))
        if not cur:
            break
        result = result + cur
        n += 1
        if not inverted and n > D:
            break
    return result


def shift_up(j: int):
    return [(j + 1, 1)]


def shift_down(j: int):
    return [(j - 1, 1)] if j > 0 else []


# --- integration by parts and transposes -----------------------------------

PAIRS = {
    "plus": ("sigma_plus", "sigma_plus_bar"),
    "minus": ("sigma_minus", "sigma_minus_bar"),
}


def integration_by_parts_check(pair: str, u: ExtElement, v: ExtElement, D: int = 4, var="z1") -> Check:
    """``D(z)(Dbar(z)u ^ v) = u ^ D(z)v`` for the mutually inverse pair named ``pair``."""
    kind, bar = PAIRS[pair]
    Dz = SchubertOp(kind, (var,), D if kind == "sigma_plus" else None)
    Dbar = SchubertOp(bar, (var,))
    lhs = apply(Dz, apply(Dbar, u).wedge(v))
    rhs = u.wedge(apply(Dz, v))
    return compare(lhs, rhs)


def transpose_apply_beta(o: SchubertOp, eta: DualElement, max_index: int) -> DualElement:
    """``o^T eta`` restricted to dual monomials with indices ``<= max_index``.

    Characterized by ``(o^T eta)(u) = eta(o u)``: the coefficient of
    ``beta_I`` is ``eta(o b_I)``.
    """
    out: dict = {}
    for d in {len(m) for m in eta.terms}:
        for mono in combinations(range(max_index, -1, -1), d):
            image = apply(o, ExtElement.basis(mono))
            c = pairing(DualElement._raw({m: x for m, x in eta.terms.items() if len(m) == d}),
                        ExtElement._raw({m: x for m, x in image.terms.items()}))
            out[mono] = c
    return DualElement._raw(out)


# --- commutation rules ------------------------------------------------------

def _zw(D):
    return VarId("z", 1), VarId("w", 1)


def commute_check_same_sign(kind: str, u: ExtElement, D: int = 4) -> Check:
    """``S(z)S(w)u = S(w)S(z)u`` for one Schubert derivation ``S``."""
    z, w = _zw(D)
    t = D if kind == "sigma_plus" else None
    lhs = apply(SchubertOp(kind, (z,), t), apply(SchubertOp(kind, (w,), t), u))
    rhs = apply(SchubertOp(kind, (w,), t), apply(SchubertOp(kind, (z,), t), u))
    return compare(lhs, rhs)


def commute_check_mixed(r: int, lam, D: int = 4) -> Check:
    """``sigma_minus_bar(w) sigma_plus(z)`` versus ``sigma_plus(z) sigma_minus_bar(w)`` on ``[b]^r_lam``.

    If ``lam`` has ``r`` parts the two agree (and ``sigma_minus_bar(w)`` also
    commutes with ``sigma_plus_bar(z)``); otherwise they differ by ``1 - z/w``.
    The returned ``rhs`` includes the factor, reported in ``window['factor']``.
    """
    lam = as_partition(lam)
    z, w = _zw(D)
    u = basis_element(r, lam)
    lhs = sigma_minus_bar(sigma_plus(u, z, trunc=D), w)
    rhs = sigma_plus(sigma_minus_bar(u, w), z, trunc=D)
    if lam.length == r:
        factor = LaurentPoly.constant(1)
        c1 = compare(lhs, rhs)
        c2 = compare(sigma_minus_bar(sigma_plus_bar(u, z), w), sigma_plus_bar(sigma_minus_bar(u, w), z))
        holds = c1.holds and c2.holds
    else:
        factor = 1 - LaurentPoly.var(z) * LaurentPoly.var(w, -1)
        rhs = rhs.scale(factor)
        c1 = compare(lhs, rhs)
        holds = c1.holds
    window = dict(c1.window)
    window["factor"] = str(factor)
    return Check(holds, lhs, rhs, window)


def micro_case() -> tuple:
    """``sigma_{-1} sigma_1 b_0`` and ``sigma_1 sigma_{-1} b_0`` (the simplest non-commuting pair)."""
    b0 = ExtElement.basis((0,))

    def s1(u):
        return _derivation(shift_up, u)

    def sm1(u):
        return _derivation(shift_down, u)

    return sm1(s1(b0)), s1(sm1(b0))


def beta0_commutation_check(r: int, lam, D: int = 4) -> Check:
    """``beta_0 ⌟ sigma_minus(w) sigma_plus_bar(z) u = (1 - z/w) sigma_plus_bar(z)(beta_0 ⌟ sigma_minus(w) u)``."""
    z, w = _zw(D)
    u = basis_element(r, lam) if r > 0 else ExtElement.basis(())
    lhs = contract_covector(0, sigma_minus(sigma_plus_bar(u, z), w))
    factor = 1 - LaurentPoly.var(z) * LaurentPoly.var(w, -1)
    rhs = sigma_plus_bar(contract_covector(0, sigma_minus(u, w)), z).scale(factor)
    return compare(lhs, rhs)


def beta_series_commutation_check(r: int, lam) -> Check:
    """``beta(w^-1) ⌟ sigma_plus_bar(z) u = (1 - z/w) sigma_plus_bar(z)(beta(w^-1) ⌟ u)``."""
    z, w = _zw(0)
    u = basis_element(r, lam)
    lhs = contract_series(w, sigma_plus_bar(u, z))
    factor = 1 - LaurentPoly.var(z) * LaurentPoly.var(w, -1)
    rhs = sigma_plus_bar(contract_series(w, u), z).scale(factor)
    return compare(lhs, rhs)


def beta_series_factorization_check(r: int, lam) -> Check:
    """``beta(w^-1) ⌟ u = sigma_minus_bar(w)(beta_0 ⌟ sigma_minus(w) u)``."""
    w = VarId("w", 1)
    u = basis_element(r, lam)
    return compare(contract_series(w, u), sigma_minus_bar(contract_covector(0, sigma_minus(u, w)), w))


def beta0_plus_bar_check(r: int, lam) -> Check:
    """``beta_0 ⌟ sigma_plus_bar(z)[b]^r_lam = sigma_plus_bar(z)(beta_0 ⌟ [b]^r_lam)``."""
    z = VarId("z", 1)
    u = basis_element(r, lam)
    return compare(contract_covector(0, sigma_plus_bar(u, z)), sigma_plus_bar(contract_covector(0, u), z))


def transpose_beta0_check(max_index: int = 6) -> Check:
    """``sigma_minus(w)^T beta_0 = beta(w^-1)`` on dual indices ``<= max_index``."""
    w = VarId("w", 1)
    lhs = transpose_apply_beta(SchubertOp("sigma_minus", (w,)), DualElement.basis((0,)), max_index)
    rhs = DualElement({(j,): LaurentPoly.var(w, -j) for j in range(max_index + 1)})
    equal, window = lhs.compare(rhs)
    return Check(equal, lhs, rhs, window)


# --- closed forms in several variables --------------------------------------

def sigma_plus_closed_form_check(k: int, j: int, D: int = 4) -> Check:
    """``sigma_plus_bar(z_k) b_j = sum (-1)^i e_i(z) b_{j+i}`` and ``sigma_plus(z_k) b_j = sum h_i(z) b_{j+i}``."""
    vs = VarSet("z", k)
    bj = ExtElement.basis((j,))
    lhs1 = sigma_plus_bar(bj, *vs.ids)
    rhs1 = ExtElement({(j + i,): elementary(i, vs).scale((-1) ** i) for i in range(k + 1)})
    lhs2 = sigma_plus(bj, *vs.ids, trunc=D)
    rhs2 = ExtElement({(j + i,): complete(i, vs) for i in range(k * D + 1)}).truncate({v: D for v in vs.ids})
    c1, c2 = compare(lhs1, rhs1), compare(lhs2, rhs2)
    return Check(c1.holds and c2.holds, (lhs1, lhs2), (rhs1, rhs2), c2.window)


def sigma_minus_bar_closed_form_check(k: int, j: int) -> Check:
    """``sigma_minus_bar(z_k) b_{j+k} = b_{j+k} + sum_i (-1)^i e_i(z^-1) b_{j+k-i}``."""
    vs = VarSet("z", k)
    lhs = sigma_minus_bar(ExtElement.basis((j + k,)), *vs.ids)
    rhs = ExtElement({(j + k - i,): elementary(i, vs.inverse()).scale((-1) ** i) for i in range(k + 1)})
    return compare(lhs, rhs)


def vacuum_wedge_check(k: int, r: int, lam) -> Check:
    """``[b]^k_0 ^ sigma_plus_bar(z_k)[b]^r_lam = e_k(z)^r sigma_minus_bar(z_k)[b]^{r+k}_lam``."""
    vs = VarSet("z", k)
    lhs = basis_element(k, ()).wedge(sigma_plus_bar(basis_element(r, lam), *vs.ids))
    rhs = sigma_minus_bar(basis_element(r + k, lam), *vs.ids).scale(elementary(k, vs) ** r)
    return compare(lhs, rhs)


def inverse_pair_check(kind: str, r: int, lam, D: int = 4) -> Check:
    """``S(z) Sbar(z) = id`` on ``[b]^r_lam``."""
    z = VarId("z", 1)
    u = basis_element(r, lam)
    if kind == "plus":
        lhs = sigma_plus(sigma_plus_bar(u, z), z, trunc=D)
    else:
        lhs = sigma_minus(sigma_minus_bar(u, z), z)
    return compare(lhs, u)


def hs_property_check(o: SchubertOp, u: ExtElement, v: ExtElement) -> Check:
    return compare(apply(o, u.wedge(v)), apply(o, u).wedge(apply(o, v)))
