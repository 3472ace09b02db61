"""Symmetric polynomials in finitely many formal variables (or their inverses)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .arith import LaurentPoly, VarId, det, exact_divide, lp_exp, lp_invert_unit, lp_log_unit
from .partitions import as_partition, enumerate_partitions


@dataclass(frozen=True)
class VarSet:
    """``k`` variables of one family, e.g. ``z1..zk``; ``inverted`` evaluates at their inverses."""

    family: str
    k: int
    inverted: bool = False

    def __post_init__(self):
        if self.family not in ("z", "w"):
            raise ValueError("variable family must be 'z' or 'w'")
        if self.k < 0:
            raise ValueError("k must be non-negative")

    @property
    def ids(self) -> tuple:
        return tuple(VarId(self.family, i) for i in range(1, self.k + 1))

    def power(self, j: int, p: int) -> LaurentPoly:
        """``x_j ** p`` (with ``x_j`` replaced by its inverse if ``inverted``)."""
        return LaurentPoly.var(VarId(self.family, j), -p if self.inverted else p)

    def inverse(self) -> "VarSet":
        return VarSet(self.family, self.k, not self.inverted)


def _sign(vs: VarSet) -> int:
    return -1 if vs.inverted else 1


@lru_cache(maxsize=None)
def elementary(i: int, vs: VarSet) -> LaurentPoly:
    """``e_i`` of the variables; zero for ``i > k`` or ``i < 0``."""
    if i < 0 or i > vs.k:
        return LaurentPoly.zero()
    s = _sign(vs)
    terms = {tuple((str(v), s) for v in sub): 1 for sub in combinations(vs.ids, i)}
    return LaurentPoly(terms)


@lru_cache(maxsize=None)
def complete(i: int, vs: VarSet) -> LaurentPoly:
    """``h_i`` of the variables: sum of all monomials of degree ``i``."""
    if i < 0:
        return LaurentPoly.zero()
    s = _sign(vs)
    terms = {}
    for sub in combinations_with_replacement(vs.ids, i):
        exps: dict = {}
        for v in sub:
            exps[str(v)] = exps.get(str(v), 0) + s
        terms[tuple(exps.items())] = 1
    return LaurentPoly(terms)


def power_sum(i: int, vs: VarSet) -> LaurentPoly:
    if i < 1:
        raise ValueError("power sums start at degree 1")
    total = LaurentPoly.zero()
    for j in range(1, vs.k + 1):
        total = total + vs.power(j, i)
    return total


def alternant(exponents, vs: VarSet) -> LaurentPoly:
    """``det(x_j ** exponents[i])`` with row ``i`` and column ``j``."""
    return det([[vs.power(j, e) for j in range(1, vs.k + 1)] for e in exponents])


def vandermonde(vs: VarSet) -> LaurentPoly:
    """Rows ``1, x, ..., x^(k-1)`` (lowest power on top); equals ``prod_{i<j}(x_j - x_i)``."""
    return alternant(range(vs.k), vs)


def schur_alternant(lam, vs: VarSet) -> LaurentPoly:
    """``det(x_j ** (lam_{k-i+1} + i - 1))``: row ``i`` carries the ``(k-i+1)``-th part."""
    lam = as_partition(lam)
    k = vs.k
    if lam.length > k:
        raise ValueError(f"{lam} has more than {k} parts")
    return alternant([lam.part(k - i + 1) + i - 1 for i in range(1, k + 1)], vs)


@lru_cache(maxsize=None)
def schur(lam, vs: VarSet) -> LaurentPoly:
    """Schur polynomial as the exact quotient of the alternant by the Vandermonde."""
    lam = as_partition(lam)
    if lam.length > vs.k:
        raise ValueError(f"{lam} has more than {vs.k} parts")
    try:
        return exact_divide(schur_alternant(lam, vs), vandermonde(vs))
    except ArithmeticError as exc:  # pragma: no cover - would mean a broken alternant
        raise AssertionError(f"alternant of {lam} not divisible by the Vandermonde") from exc


def jacobi_trudi(lam, vs: VarSet) -> LaurentPoly:
    """``det(h_{lam_i - i + j})`` built from :func:`complete`."""
    lam = as_partition(lam)
    n = max(lam.length, 1)
    return det([[complete(lam.part(i) - i + j, vs) for j in range(1, n + 1)] for i in range(1, n + 1)])


def ei_reciprocal(i: int, k: int, family: str = "z") -> tuple:
    """Both sides of ``e_i(x)/(x_1...x_k) = e_{k-i}(1/x)``; returns ``(holds, lhs, rhs)``."""
    if not 0 <= i <= k:
        raise ValueError("need 0 <= i <= k")
    vs = VarSet(family, k)
    prod = {str(v): -1 for v in vs.ids}
    lhs = elementary(i, vs).shift(prod)
    rhs = elementary(k - i, vs.inverse())
    return lhs == rhs, lhs, rhs


def generic_E(r: int, var) -> LaurentPoly:
    """``E_r(t) = 1 - e_1 t + ... + (-1)^r e_r t^r`` in the variable ``var``."""
    v = VarId.parse(var)
    out = LaurentPoly.constant(1)
    for i in range(1, r + 1):
        out = out + LaurentPoly.var(VarId("e", i)).shift({v: i}).scale((-1) ** i)
    return out


def cauchy_expand(k: int, D: int) -> tuple:
    """Compare ``prod_j 1/E_k(z_j)`` with ``sum_mu s_mu(z) Delta_mu(H_k)`` up to ``z_j^D``.

    Returns ``(holds, lhs, rhs)``; both sides carry the horizon ``D`` in every ``z_j``.
    """
    from .bosonic import schur_det

    vs = VarSet("z", k)
    window = {str(v): D for v in vs.ids}
    lhs = LaurentPoly.constant(1)
    for v in vs.ids:
        lhs = lhs * lp_invert_unit(generic_E(k, v), v, D)
    rhs = LaurentPoly.zero().truncate(window)
    # s_mu has monomials inside the window whenever |mu| <= kD, even if mu_1 > D
    for mu in enumerate_partitions(k, k * D):
        rhs = rhs + (schur(mu, vs) * schur_det(mu, k).poly).truncate(window)
    return lhs == rhs, lhs, rhs


def newton_vars(r: int, D: int) -> list:
    """``[x_1, ..., x_D]`` with ``exp(sum_j x_j t^j) = 1/E_r(t)``; ``x_j = p_j(roots)/j``."""
    if D < 1:
        raise ValueError("D must be at least 1")
    t = VarId("z", 1)
    log = lp_log_unit(lp_invert_unit(generic_E(r, t), t, D), t, D)
    return [log.extract({t: j}) for j in range(1, D + 1)]


def exp_of_newton(xs, var, D: int) -> LaurentPoly:
    """Rebuild ``exp(sum_j xs[j-1] t^j)`` through ``t^D``; the inverse of :func:`newton_vars`."""
    v = VarId.parse(var)
    series = LaurentPoly.zero()
    for j, x in enumerate(xs[:D], start=1):
        series = series + x.shift({v: j})
    return lp_exp(series, v, D)
