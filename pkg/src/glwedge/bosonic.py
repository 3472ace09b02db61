"""The polynomial ring B_r = Q[e_1..e_r], Schur determinants and the map B_r -> wedge^r V.

Elements of B_r are :class:`LaurentPoly` values whose ``e`` variables have
index ``<= r``; other variables (``z``, ``w``) ride along as coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Mapping

from .arith import LaurentPoly, VarId, det
from .exterior import ExtElement, monomial_from_partition, partition_from_monomial
from .partitions import Partition, as_partition, partitions_of


class BrElement:
    """An element of ``B_r`` (possibly with Laurent coefficients in ``z``/``w``)."""

    __slots__ = ("r", "poly")

    def __init__(self, r: int, poly):
        poly = LaurentPoly.coerce(poly)
        bad = [v for v in poly.vars if v.family == "e" and v.index > r]
        if bad and not poly.free_of(bad):
            raise ValueError(f"{bad[0]} is not a generator of B_{r}")
        self.r = r
        self.poly = poly

    @classmethod
    def e(cls, r: int, i: int) -> "BrElement":
        if i == 0:
            return cls(r, 1)
        if not 1 <= i <= r:
            return cls(r, 0)
        return cls(r, LaurentPoly.var(VarId("e", i)))

    def __add__(self, other):
        return BrElement(self.r, self.poly + _poly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return BrElement(self.r, self.poly - _poly(other))

    def __neg__(self):
        return BrElement(self.r, -self.poly)

    def __mul__(self, other):
        return BrElement(self.r, self.poly * _poly(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return BrElement(self.r, self.poly ** n)

    def __eq__(self, other):
        if isinstance(other, BrElement):
            return self.poly == other.poly
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.poly == other
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.poly)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"BrElement(r={self.r}, {self.poly})"

    def e_terms(self) -> dict:
        """``{e_exponents: coefficient}`` where the coefficient involves only ``z``/``w``."""
        evs = [VarId("e", i) for i in range(1, self.r + 1)]
        window = {v: self.poly.horizon(v) for v in self.poly.vars if v.family != "e"}
        window = {v: h for v, h in window.items() if h is not None}
        out: dict = {}
        for mono, c in self.poly.items():
            key = tuple(mono.get(v, 0) for v in evs)
            rest = {v: x for v, x in mono.items() if v.family != "e"}
            term = LaurentPoly.monomial(rest, c).truncate(window)
            out[key] = out[key] + term if key in out else term
        return out

    def to_json(self) -> list:
        return [{"e_exponents": list(k), "coeff": c.to_json()} for k, c in sorted(self.e_terms().items(), key=_ekey)]

    @classmethod
    def from_json(cls, r: int, data: list) -> "BrElement":
        total = LaurentPoly.zero()
        for t in data:
            mono = {VarId("e", i + 1): x for i, x in enumerate(t["e_exponents"]) if x}
            total = total + LaurentPoly.from_json(t["coeff"]).shift(mono)
        return cls(r, total)

    def schur_coordinates(self) -> dict:
        return schur_basis_decompose(self)


def _ekey(kc):
    k = kc[0]
    return (sum((i + 1) * x for i, x in enumerate(k)), k)


def _poly(x) -> LaurentPoly:
    return x.poly if isinstance(x, BrElement) else LaurentPoly.coerce(x)


# --- the sequence H_r -------------------------------------------------------

@lru_cache(maxsize=None)
def _h(r: int, j: int) -> LaurentPoly:
    if j < 0:
        return LaurentPoly.zero()
    if j == 0:
        return LaurentPoly.constant(1)
    # 1/E_r(z): h_j = sum_{i=1}^{min(j,r)} (-1)^(i+1) e_i h_{j-i}
    acc = LaurentPoly.zero()
    for i in range(1, min(j, r) + 1):
        term = _h(r, j - i) * LaurentPoly.var(VarId("e", i))
        acc = acc + term if i % 2 else acc - term
    return acc


def h(r: int, j: int) -> BrElement:
    """Coefficient of ``t^j`` in ``1/E_r(t)``; zero for negative ``j``."""
    return BrElement(r, _h(r, j))


def E(r: int, var) -> LaurentPoly:
    """``E_r(t) = 1 - e_1 t + ... + (-1)^r e_r t^r``."""
    from .symfun import generic_E

    return generic_E(r, var)


def schur_matrix_entries(lam, size: int, seq: Callable[[int], LaurentPoly]) -> list:
    """``[[seq(lam_j - j + i)]]`` for ``1 <= i, j <= size``."""
    lam = as_partition(lam)
    return [[seq(lam.part(j) - j + i) for j in range(1, size + 1)] for i in range(1, size + 1)]


def schur_det_of(lam, size: int, seq: Callable[[int], LaurentPoly]) -> LaurentPoly:
    """``det(seq(lam_j - j + i))_{size x size}`` for an arbitrary sequence."""
    return det(schur_matrix_entries(lam, size, seq))


@lru_cache(maxsize=None)
def _schur_det_poly(lam: Partition, r: int) -> LaurentPoly:
    return schur_det_of(lam, r, lambda j: _h(r, j))


def schur_det(lam, r: int) -> BrElement:
    """``Delta_lam(H_r) = det(h_{lam_j - j + i})_{r x r}``."""
    lam = as_partition(lam)
    if lam.length > r:
        raise ValueError(f"{lam} has more than {r} parts")
    return BrElement(r, _schur_det_poly(lam, r))


# --- Schur basis decomposition ---------------------------------------------

@lru_cache(maxsize=None)
def _transition(r: int, n: int) -> tuple:
    """Inverse of the weight-``n`` matrix expressing Schur determinants in e-monomials.

    Returns ``(e_keys, lambdas, inverse)`` with ``inverse[lam_index][key_index]``.
    """
    lambdas = [lam for lam in partitions_of(n) if lam.length <= r]
    # e-monomials of weight n in e_1..e_r <-> partitions of n with parts <= r
    keys = []
    for kappa in partitions_of(n):
        if kappa.part(1) <= r:
            key = [0] * r
            for p in kappa:
                key[p - 1] += 1
            keys.append(tuple(key))
    idx = {k: a for a, k in enumerate(keys)}
    size = len(keys)
    assert size == len(lambdas)
    # columns: lambdas; rows: keys
    m = [[Fraction(0)] * size for _ in range(size)]
    for c, lam in enumerate(lambdas):
        for key, coeff in BrElement(r, _schur_det_poly(lam, r)).e_terms().items():
            m[idx[key]][c] = Fraction(coeff.constant_term())
    inv = _invert(m)
    return tuple(keys), tuple(lambdas), inv


def _invert(m: list) -> list:
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def schur_basis_decompose(x: BrElement) -> dict:
    """Coordinates of ``x`` in the basis ``Delta_lam(H_r)``: ``{lam: coefficient}``."""
    r = x.r
    by_weight: dict = {}
    for key, c in x.e_terms().items():
        n = sum((i + 1) * a for i, a in enumerate(key))
        by_weight.setdefault(n, {})[key] = c
    out: dict = {}
    for n in sorted(by_weight):
        keys, lambdas, inv = _transition(r, n)
        comp = by_weight[n]
        for li, lam in enumerate(lambdas):
            acc = LaurentPoly.zero()
            for ki, key in enumerate(keys):
                if key in comp and inv[li][ki] != 0:
                    acc = acc + comp[key].scale(inv[li][ki])
            if acc or not acc.is_exact:
                out[lam] = acc
    return out


def from_schur_coordinates(r: int, coords: Mapping) -> BrElement:
    total = LaurentPoly.zero()
    for lam, c in coords.items():
        total = total + _schur_det_poly(as_partition(lam), r) * LaurentPoly.coerce(c)
    return BrElement(r, total)


# --- boson-fermion map --------------------------------------------------------

def bf_iso(x: BrElement) -> ExtElement:
    """``Delta_lam(H_r) -> [b]^r_lam`` extended linearly."""
    terms = {monomial_from_partition(x.r, lam): c for lam, c in schur_basis_decompose(x).items()}
    return ExtElement(terms)


def bf_iso_inv(u: ExtElement, r: int | None = None) -> BrElement:
    """Inverse of :func:`bf_iso` on homogeneous elements."""
    degs = u.degrees()
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    if r is None:
        if not degs:
            raise ValueError("cannot infer the rank of the zero element")
        r = degs.pop()
    elif degs and degs != {r}:
        raise ValueError(f"element is not of degree {r}")
    coords = {}
    for m, c in u.terms.items():
        _, lam = partition_from_monomial(m)
        coords[lam] = c
    return from_schur_coordinates(r, coords)


# --- module structure ---------------------------------------------------------

def _e_action_mono(i: int, mono: tuple) -> dict:
    """``e_i`` on a wedge monomial: raise ``i`` distinct slots by one (collisions vanish)."""
    from .exterior import normalize

    out: dict = {}
    for slots in combinations(range(len(mono)), i):
        word = list(mono)
        for s in slots:
            word[s] += 1
        sign, m = normalize(word)
        if sign:
            out[m] = out.get(m, 0) + sign
    return {m: c for m, c in out.items() if c}


def e_action(i: int, u: ExtElement) -> ExtElement:
    """``e_i u``, i.e. the coefficient of ``(-t)^i`` in ``sigma_plus_bar(t) u``."""
    out = ExtElement()
    for m, c in u.terms.items():
        out = out + ExtElement({mm: c.scale(s) for mm, s in _e_action_mono(i, m).items()})
    return out


def module_action(x: BrElement, u: ExtElement) -> ExtElement:
    """Action of ``x`` on ``u`` through ``e_i u = sigma_bar_i u``."""
    degs = u.degrees()
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    if degs and degs != {x.r}:
        raise ValueError(f"B_{x.r} acts on wedge^{x.r} V, not on degree {degs.pop()}")
    out = ExtElement()
    cache = {(): u}

    def act(key: tuple) -> ExtElement:
        if not any(key):
            return u
        if key in cache:
            return cache[key]
        i = next(a for a, x_ in enumerate(key) if x_)
        rest = list(key)
        rest[i] -= 1
        res = e_action(i + 1, act(tuple(rest)))
        cache[key] = res
        return res

    for key, c in x.e_terms().items():
        out = out + act(tuple(key)).scale(c)
    return out


# --- sigma_minus on the h sequence --------------------------------------------

def sigma_minus_on_h(r: int, j: int, zvar) -> LaurentPoly:
    """``sum_{i>=0} h_{j-i} z^-i``."""
    v = VarId.parse(zvar)
    total = LaurentPoly.zero()
    for i in range(0, max(j, -1) + 1):
        total = total + _h(r, j - i).shift({v: -i})
    return total


def sigma_minus_bar_on_h(r: int, j: int, zvar) -> LaurentPoly:
    """``h_j - h_{j-1} z^-1``."""
    v = VarId.parse(zvar)
    return _h(r, j) - _h(r, j - 1).shift({v: -1})


def sigma_minus_multi_on_h(r: int, j: int, wvars) -> LaurentPoly:
    """``sigma_minus(w_1)...sigma_minus(w_k) h_j = sum_i h_i(w^-1) h_{j-i}``."""
    ws = [VarId.parse(v) for v in wvars]
    total = LaurentPoly.zero()
    for i in range(0, j + 1):
        total = total + _h(r, j - i) * _complete_inverse(tuple(ws), i)
    return total


def sigma_minus_bar_multi_on_h(r: int, j: int, zvars) -> LaurentPoly:
    """``h_j - e_1(z^-1) h_{j-1} + ... + (-1)^k e_k(z^-1) h_{j-k}``."""
    zs = tuple(VarId.parse(v) for v in zvars)
    total = LaurentPoly.zero()
    for i in range(0, len(zs) + 1):
        total = total + (_h(r, j - i) * _elementary_inverse(zs, i)).scale((-1) ** i)
    return total


@lru_cache(maxsize=None)
def _complete_inverse(vs: tuple, i: int) -> LaurentPoly:
    from itertools import combinations_with_replacement

    terms = {}
    for sub in combinations_with_replacement(vs, i):
        exps: dict = {}
        for v in sub:
            exps[str(v)] = exps.get(str(v), 0) - 1
        terms[tuple(exps.items())] = 1
    return LaurentPoly(terms)


@lru_cache(maxsize=None)
def _elementary_inverse(vs: tuple, i: int) -> LaurentPoly:
    if i > len(vs):
        return LaurentPoly.zero()
    return LaurentPoly({tuple((str(v), -1) for v in sub): 1 for sub in combinations(vs, i)})


def schur_det_transformed(lam, r: int, transform: Callable[[int], LaurentPoly]) -> LaurentPoly:
    """``Delta_lam`` with every ``h_m`` replaced by ``transform(m)``.

    Only meaningful as the image of ``Delta_lam(H_r)`` when ``lam`` has at most
    ``r`` parts; longer partitions are rejected (use :func:`schur_det_of`
    to evaluate the determinant anyway).
    """
    lam = as_partition(lam)
    if lam.length > r:
        raise ValueError(
            f"{lam} has more than {r} parts: the transformed determinant does not "
            "represent the transformed Schur determinant in that case"
        )
    return schur_det_of(lam, r, transform)


def sigma_minus_bar_on_Br(x: BrElement, zvar) -> BrElement:
    """``sigma_minus_bar(z)`` acting on ``B_r`` through the exterior power."""
    from .schubert import sigma_minus_bar

    return bf_iso_inv(sigma_minus_bar(bf_iso(x), zvar), x.r)


def remark_counterexample() -> tuple:
    """The determinant with ``sigma_minus_bar(z)`` substituted for a two-part partition at rank 1.

    Returns ``(transformed_determinant, transformed_of_determinant)``; they differ.
    """
    z = VarId("z", 1)
    lam = Partition((1, 1))
    transformed = schur_det_of(lam, 2, lambda j: sigma_minus_bar_on_h(1, j, z))
    direct = schur_det_of(lam, 2, lambda j: _h(1, j))  # zero in B_1
    image = sigma_minus_bar_on_Br(BrElement(1, direct), z).poly if direct else LaurentPoly.zero()
    return transformed, image
