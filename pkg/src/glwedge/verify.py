"""Identity sweep: every check in the package, run over a bounded parameter range.

Each identity is a name, a case generator and a case runner.  Runners are
module-level functions of a plain tuple so the sweep can be farmed out to
worker processes; results are collected in case order whatever the pool does.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import schubert as sch
from . import vertex as vx
from .arith import LaurentPoly, VarId
from .bosonic import (
    BrElement,
    module_action,
    remark_counterexample,
    schur_det,
    schur_det_transformed,
    sigma_minus_bar_on_Br,
    sigma_minus_bar_on_h,
)
from .exterior import ExtElement, basis_element
from .partitions import enumerate_partitions
from .symfun import VarSet, cauchy_expand, ei_reciprocal, jacobi_trudi, schur


@dataclass(frozen=True)
class SweepConfig:
    k_max: int = 2
    r_max: int = 4
    max_weight: int = 4
    trunc: int = 6

    def to_json(self) -> dict:
        return {"k_max": self.k_max, "r_max": self.r_max, "max_weight": self.max_weight, "trunc": self.trunc}


def _lams(r_max: int, weight: int, r_min: int = 0):
    for r in range(r_min, r_max + 1):
        for lam in enumerate_partitions(r, weight):
            yield r, tuple(lam)


# --- runners: each takes the case tuple and returns a bool ---------------------

def run_giambelli(case) -> bool:
    r, lam = case
    return module_action(schur_det(lam, r), basis_element(r, ())) == basis_element(r, lam)


def run_sigma_minus_bar_schur_det(case) -> bool:
    r, lam = case
    z = VarId("z", 1)
    lhs = sigma_minus_bar_on_Br(schur_det(lam, r), z)
    rhs = BrElement(r, schur_det_transformed(lam, r, lambda j: sigma_minus_bar_on_h(r, j, z)))
    return lhs == rhs


def run_rank_counterexample(case) -> bool:
    transformed, image = remark_counterexample()
    z, e1 = VarId("z", 1), VarId("e", 1)
    expected = LaurentPoly.var(z, -2) - LaurentPoly.var(e1) * LaurentPoly.var(z, -1)
    return transformed == expected and not image and bool(transformed)


def run_same_sign(case) -> bool:
    kind, r, lam, D = case
    return sch.commute_check_same_sign(kind, basis_element(r, lam), D).holds


def run_mixed(case) -> bool:
    r, lam, D = case
    return sch.commute_check_mixed(r, lam, D).holds


def run_beta0_commutation(case) -> bool:
    r, lam, D = case
    return sch.beta0_commutation_check(r, lam, D).holds


def run_beta_series_commutation(case) -> bool:
    return sch.beta_series_commutation_check(*case).holds


def run_beta_series_factorization(case) -> bool:
    return sch.beta_series_factorization_check(*case).holds


def run_transpose_beta0(case) -> bool:
    return sch.transpose_beta0_check(*case).holds


def run_beta0_plus_bar(case) -> bool:
    return sch.beta0_plus_bar_check(*case).holds


def run_micro_case(case) -> bool:
    a, b = sch.micro_case()
    return a == ExtElement.basis((0,)) and not b


def run_inverse_pair(case) -> bool:
    return sch.inverse_pair_check(*case).holds


def run_integration_by_parts(case) -> bool:
    pair, r, lam, j, D = case
    return sch.integration_by_parts_check(pair, basis_element(r, lam), ExtElement.basis((j,)), D).holds


def run_sigma_plus_closed_form(case) -> bool:
    return sch.sigma_plus_closed_form_check(*case).holds


def run_sigma_minus_bar_closed_form(case) -> bool:
    return sch.sigma_minus_bar_closed_form_check(*case).holds


def run_e_reciprocity(case) -> bool:
    i, k = case
    return ei_reciprocal(i, k)[0]


def run_vacuum_wedge(case) -> bool:
    return sch.vacuum_wedge_check(*case).holds


def run_vacuum_gamma(case) -> bool:
    return vx.vacuum_gamma_check(*case).holds


def run_single_contraction(case) -> bool:
    return vx.single_contraction_check(*case).holds


def run_contraction_gamma_star(case) -> bool:
    return vx.contraction_gamma_star_check(*case).holds


def run_gamma_star_routes(case) -> bool:
    return vx.gamma_star_routes_check(*case).holds


def run_basis_series(case) -> bool:
    return vx.basis_series_check(*case).holds


def run_dual_basis_series(case) -> bool:
    return vx.dual_basis_series_check(*case).holds


def run_k_equals_r(case) -> bool:
    return vx.k_equals_r_check(*case).holds


def run_first_version(case) -> bool:
    k, r, lam, mu, nu, D = case
    return vx.action_direct(k, r, lam, mu, nu) == vx.first_version_coeff(k, r, lam, mu, nu, D)


def run_second_version(case) -> bool:
    k, r, lam, mu, nu, D = case
    return vx.action_direct(k, r, lam, mu, nu) == vx.second_version_coeff(k, r, lam, mu, nu, D)


def run_gamma_product(case) -> bool:
    """Holds exactly when ``r - k >= len(lam)``; the other cases are negative controls."""
    k, r, lam, D = case
    expected = r - k >= len(lam)
    return vx.gamma_product_check(k, r, lam, D).holds == expected


def run_power_sum(case) -> bool:
    return vx.power_sum_check(*case).holds


def run_cauchy(case) -> bool:
    return cauchy_expand(*case)[0]


def run_jacobi_trudi(case) -> bool:
    k, lam = case
    vs = VarSet("z", k)
    return schur(lam, vs) == jacobi_trudi(lam, vs)


# --- case generators -------------------------------------------------------------

def _small_r(cfg: SweepConfig) -> int:
    return min(cfg.r_max, 3)


def cases_giambelli(cfg):
    return list(_lams(cfg.r_max, cfg.max_weight, 1))


def cases_sigma_minus_bar_schur_det(cfg):
    return list(_lams(_small_r(cfg), cfg.max_weight, 1))


def cases_single(cfg):
    return [()]


def cases_same_sign(cfg):
    D = min(cfg.trunc, 4)
    return [(kind, r, lam, D) for kind in sch.KINDS for r, lam in _lams(_small_r(cfg), cfg.max_weight, 1)]


def cases_r_lam_D(cfg):
    D = min(cfg.trunc, 4)
    return [(r, lam, D) for r, lam in _lams(_small_r(cfg), cfg.max_weight, 1)]


def cases_r_lam(cfg):
    return list(_lams(_small_r(cfg), cfg.max_weight, 1))


def cases_transpose(cfg):
    return [(cfg.trunc,)]


def cases_inverse_pair(cfg):
    D = min(cfg.trunc, 4)
    return [(kind, r, lam, D) for kind in ("plus", "minus") for r, lam in _lams(_small_r(cfg), cfg.max_weight, 1)]


def cases_integration_by_parts(cfg):
    D = min(cfg.trunc, 4)
    return [(pair, r, lam, j, D) for pair in ("plus", "minus") for r, lam in _lams(2, min(cfg.max_weight, 3), 1)
            for j in range(3)]


def cases_k_j(cfg):
    return [(k, j) for k in range(1, 4) for j in range(4)]


def cases_k_j_D(cfg):
    return [(k, j, min(cfg.trunc, 4)) for k in range(1, 4) for j in range(4)]


def cases_e_reciprocity(cfg):
    return [(i, k) for k in range(1, 6) for i in range(k + 1)]


def cases_vacuum_wedge(cfg):
    return [(k, r, lam) for k in range(1, cfg.k_max + 1) for r, lam in _lams(_small_r(cfg), 3, 1)]


def cases_vacuum_gamma(cfg):
    D = min(cfg.trunc, 4)
    return [(k, r, lam, D) for k in range(1, cfg.k_max + 1) for r, lam in _lams(_small_r(cfg), 3, 1)]


def cases_k_r_lam(cfg):
    return [(k, r, lam) for k in range(1, cfg.k_max + 1) for r, lam in _lams(_small_r(cfg), cfg.max_weight, k)]


def cases_basis_series(cfg):
    return [(k, D) for k in range(1, min(cfg.k_max, 3) + 1) for D in range(1, min(cfg.trunc, 4) + 1)]


def cases_dual_basis_series(cfg):
    return [(k, cfg.max_weight) for k in range(1, cfg.k_max + 1)]


def cases_k_equals_r(cfg):
    out = []
    for r in range(1, min(cfg.k_max, 3) + 1):
        parts = enumerate_partitions(r, 2)
        out.extend((r, tuple(lam), tuple(mu), tuple(nu)) for lam in parts for mu in parts for nu in parts)
    return out


def cases_main_theorem(cfg):
    out = []
    for q in vx.action_queries(cfg.k_max, cfg.r_max, cfg.max_weight, 3):
        D = max(q.trunc, cfg.trunc)
        out.append((q.k, q.r, tuple(q.lam), tuple(q.mu), tuple(q.nu), D))
    return out


def cases_gamma_product(cfg):
    D = min(cfg.trunc, 4)
    return [(k, r, lam, D) for k in range(1, cfg.k_max + 1) for r, lam in _lams(cfg.r_max, 3, k)]


def cases_power_sum(cfg):
    return [(k, r, lam, 4) for k in range(1, cfg.k_max + 1) for r, lam in _lams(_small_r(cfg), 3, k)]


def cases_cauchy(cfg):
    return [(k, D) for k in range(1, 4) for D in range(1, min(cfg.trunc, 4) + 1)]


def cases_jacobi_trudi(cfg):
    return [(k, tuple(lam)) for k in range(1, 4) for lam in enumerate_partitions(k, 6)]


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    cases: Callable[[SweepConfig], list]
    run: Callable[[tuple], bool]


IDENTITIES = (
    Identity("giambelli", "Delta_lam(H_r) [b]^r_0 = [b]^r_lam", cases_giambelli, run_giambelli),
    Identity("sigma_minus_bar_schur_det", "sigma_minus_bar(z) Delta_lam(H_r) = Delta_lam(sigma_minus_bar(z) H_r)",
             cases_sigma_minus_bar_schur_det, run_sigma_minus_bar_schur_det),
    Identity("rank_counterexample", "Delta_(1,1)(sigma_minus_bar(z) H_1) = z^-2 - h1 z^-1 but the image is 0",
             cases_single, run_rank_counterexample),
    Identity("same_sign_commutation", "S(z) S(w) = S(w) S(z) for each Schubert derivation", cases_same_sign,
             run_same_sign),
    Identity("mixed_commutation", "sigma_minus_bar(w) sigma_plus(z) vs sigma_plus(z) sigma_minus_bar(w), factor 1 - z/w",
             cases_r_lam_D, run_mixed),
    Identity("beta0_commutation", "beta_0 ⌟ sigma_minus(w) sigma_plus_bar(z) = (1 - z/w) sigma_plus_bar(z) beta_0 ⌟ sigma_minus(w)",
             cases_r_lam_D, run_beta0_commutation),
    Identity("beta_series_commutation", "beta(w^-1) ⌟ sigma_plus_bar(z) = (1 - z/w) sigma_plus_bar(z) beta(w^-1) ⌟",
             cases_r_lam, run_beta_series_commutation),
    Identity("beta_series_factorization", "beta(w^-1) ⌟ u = sigma_minus_bar(w)(beta_0 ⌟ sigma_minus(w) u)",
             cases_r_lam, run_beta_series_factorization),
    Identity("transpose_beta0", "sigma_minus(w)^T beta_0 = beta(w^-1)", cases_transpose, run_transpose_beta0),
    Identity("beta0_plus_bar", "beta_0 ⌟ sigma_plus_bar(z) = sigma_plus_bar(z) beta_0 ⌟", cases_r_lam,
             run_beta0_plus_bar),
    Identity("micro_case", "sigma_-1 sigma_1 b_0 = b_0, sigma_1 sigma_-1 b_0 = 0", cases_single, run_micro_case),
    Identity("inverse_pair", "S(z) Sbar(z) = id", cases_inverse_pair, run_inverse_pair),
    Identity("integration_by_parts", "D(z)(Dbar(z) u ^ v) = u ^ D(z) v", cases_integration_by_parts,
             run_integration_by_parts),
    Identity("sigma_plus_closed_form", "sigma_plus(z_k) b_j and sigma_plus_bar(z_k) b_j via h_i(z), e_i(z)",
             cases_k_j_D, run_sigma_plus_closed_form),
    Identity("sigma_minus_bar_closed_form", "sigma_minus_bar(z_k) b_j via e_i(z^-1)", cases_k_j,
             run_sigma_minus_bar_closed_form),
    Identity("e_reciprocity", "e_i(z)/(z_1..z_k) = e_{k-i}(z^-1)", cases_e_reciprocity, run_e_reciprocity),
    Identity("vacuum_wedge", "[b]^k_0 ^ sigma_plus_bar(z_k) u = e_k(z)^r sigma_minus_bar(z_k) [b]^{r+k}_lam",
             cases_vacuum_wedge, run_vacuum_wedge),
    Identity("vacuum_gamma", "sigma_plus(z_k)[b]^k_0 ^ u = prod z_j^r Gamma(z_k) u", cases_vacuum_gamma,
             run_vacuum_gamma),
    Identity("single_contraction", "beta(w^-1) ⌟ u = w^(1-r) Gamma*(w) u", cases_r_lam, run_single_contraction),
    Identity("contraction_gamma_star", "reversed beta(w^-1) wedge ⌟ u = sign Delta_0(w)/(prod w)^(r-1) Gamma*(w) u",
             cases_k_r_lam, run_contraction_gamma_star),
    Identity("gamma_star_routes", "Gamma* by the module route = Gamma* by the mixed determinant", cases_k_r_lam,
             run_gamma_star_routes),
    Identity("basis_series", "sum s_mu(z)[b]^k_mu = sigma_plus(z_k)[b]^k_0", cases_basis_series, run_basis_series),
    Identity("dual_basis_series", "sum s_nu(w^-1)[beta]^k_nu against the reversed beta(w^-1) wedge",
             cases_dual_basis_series, run_dual_basis_series),
    Identity("k_equals_r", "k = r action is delta_{nu,lam} Delta_mu(H_r)", cases_k_equals_r, run_k_equals_r),
    Identity("first_version", "action_direct = coefficient of prod(z/w)^(r-k) Gamma(z) Gamma*(w) [b]^r_lam",
             cases_main_theorem, run_first_version),
    Identity("second_version", "action_direct = coefficient of the deformed Giambelli form", cases_main_theorem,
             run_second_version),
    Identity("gamma_product", "Gamma(z)Gamma*(w) = Gamma(z) sigma_plus_bar(w) sigma_minus(w) at rank r-k iff r-k >= len(lam)",
             cases_gamma_product, run_gamma_product),
    Identity("power_sum_form", "exp(sum x_j p_j(z)) form = second version", cases_power_sum, run_power_sum),
    Identity("cauchy", "prod 1/E_k(z_j) = sum s_mu(z) Delta_mu(H_k)", cases_cauchy, run_cauchy),
    Identity("jacobi_trudi", "bialternant Schur = Jacobi-Trudi determinant", cases_jacobi_trudi, run_jacobi_trudi),
)

BY_NAME = {ident.name: ident for ident in IDENTITIES}


@dataclass
class IdentityReport:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"identity": self.name, "passed": self.passed, "failed": self.failed, "failures": self.failures}


PARAMS = {
    cases_giambelli: ("r", "lambda"),
    cases_sigma_minus_bar_schur_det: ("r", "lambda"),
    cases_single: (),
    cases_same_sign: ("kind", "r", "lambda", "D"),
    cases_r_lam_D: ("r", "lambda", "D"),
    cases_r_lam: ("r", "lambda"),
    cases_transpose: ("max_index",),
    cases_inverse_pair: ("kind", "r", "lambda", "D"),
    cases_integration_by_parts: ("pair", "r", "lambda", "j", "D"),
    cases_k_j: ("k", "j"),
    cases_k_j_D: ("k", "j", "D"),
    cases_e_reciprocity: ("i", "k"),
    cases_vacuum_wedge: ("k", "r", "lambda"),
    cases_vacuum_gamma: ("k", "r", "lambda", "D"),
    cases_k_r_lam: ("k", "r", "lambda"),
    cases_basis_series: ("k", "D"),
    cases_dual_basis_series: ("k", "max_weight"),
    cases_k_equals_r: ("r", "lambda", "mu", "nu"),
    cases_main_theorem: ("k", "r", "lambda", "mu", "nu", "D"),
    cases_gamma_product: ("k", "r", "lambda", "D"),
    cases_power_sum: ("k", "r", "lambda", "D"),
    cases_cauchy: ("k", "D"),
    cases_jacobi_trudi: ("k", "lambda"),
}


def _case_json(name: str, case) -> dict:
    """The failing case as ``{parameter: value}`` (partitions become lists)."""
    names = PARAMS[BY_NAME[name].cases]
    return {n: (list(x) if isinstance(x, tuple) else x) for n, x in zip(names, case)}


def _run_one(job):
    name, case, inject = job
    ok = BY_NAME[name].run(case)
    if inject == name:
        ok = not ok
    return ok


def run_sweep(cfg: SweepConfig = SweepConfig(), names: Optional[Iterable[str]] = None, workers: int = 1,
              inject: Optional[str] = None) -> dict:
    """Run the selected identities; ``inject`` names one identity whose verdicts are flipped (self-test)."""
    selected = list(names) if names else [i.name for i in IDENTITIES]
    unknown = [n for n in selected if n not in BY_NAME]
    if unknown:
        raise KeyError(f"unknown identities: {', '.join(unknown)}")
    jobs = [(n, case, inject) for n in selected for case in BY_NAME[n].cases(cfg)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_run_one, jobs, chunksize=16))
    else:
        verdicts = [_run_one(j) for j in jobs]
    reports = {n: IdentityReport(n) for n in selected}
    for (name, case, _), ok in zip(jobs, verdicts):
        rep = reports[name]
        if ok:
            rep.passed += 1
        else:
            rep.failed += 1
            rep.failures.append(_case_json(name, case))
    failed = sum(r.failed for r in reports.values())
    return {
        "config": cfg.to_json(),
        "identities": [reports[n].to_json() for n in selected],
        "total_cases": len(jobs),
        "failed": failed,
        "ok": failed == 0,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def report_text(report: dict) -> str:
    lines = []
    for item in report["identities"]:
        status = "PASS" if not item["failed"] else "FAIL"
        lines.append(f"{status} {item['identity']}: {item['passed']} passed, {item['failed']} failed")
        for case in item["failures"]:
            lines.append(f"    failing case: {json.dumps(case)}")
    lines.append(f"{'OK' if report['ok'] else 'FAILED'}: {report['total_cases']} cases, {report['failed']} failed")
    return "\n".join(lines)
