"""
Наборы проверок verify: каждый набор собирает отчеты модулей в один CheckReport
"""
import logging
from typing import Callable, Dict

from .job import JobConfig
from ..complexes import cohomology, eta_p, expected_cohomology, gamma_report, random_complex
from ..derham import (
    FP, ZP, affine_model, cartier_vs_frobenius, cusp_model, frobenius_lift_structure, laurent_model,
    verify_cartier_iso
)
from ..derham.models import DeRhamModel
from ..dieudonne import (
    cartier_type_check, frobenius_image_check, frobenius_power_check, nygaard, nygaard_graded_compare, saturate,
    validate_tower, wr_cohomology_check
)
from ..drw import (
    cusp_F_dt, cusp_omega2, cusp_saturation, cusp_seminormal_h0, drw_tower, frobenius_isogeny_check,
    integral_forms, nu_comparison, oracle_compare_saturation, witt_crosscheck
)
from ..padic import Lattice, make_weight
from ..utils.report import CheckReport
from ..witt import check_wr_fp_isomorphism, structure_polys, verify_ghost_identity

logger = logging.getLogger(__name__)


def derham_model(job: JobConfig, coeff: str = ZP) -> DeRhamModel:
    """Модель Ω* для типа job.model_kind на окне задания"""
    kind = job.model_kind
    if kind == 'cusp':
        return cusp_model(job.p, job.cusp_w_max(), job.prec)
    if kind == 'line':
        return affine_model(1, job.p, job.bound(), job.prec, coeff)
    return laurent_model(job.n, job.p, job.bound(), job.prec, coeff)


def suite_etap(job: JobConfig) -> CheckReport:
    """H(η_p M) = H(M)/H(M)[p] на случайном корпусе; SNF против описания по кускам"""
    report = CheckReport(name='verify.etap')
    for seed in range(job.seed, job.seed + job.effective_count):
        C = random_complex(job.p, seed, job.prec)
        profile = cohomology(C)
        report.add('cohomology_oracle', profile.same_groups(expected_cohomology(C)), message=f"seed={seed}")
        actual = cohomology(eta_p(C))
        if actual.has_unresolved():
            report.untestable('eta_cohomology_law', message=f"seed={seed}: не хватает точности")
            continue
        report.add('eta_cohomology_law', actual.same_groups(profile.mod_torsion_p()), message=f"seed={seed}")
    return report


def suite_gamma(job: JobConfig) -> CheckReport:
    report = CheckReport(name='verify.gamma')
    for seed in range(job.seed, job.seed + job.effective_count):
        report.extend(gamma_report(random_complex(job.p, seed, job.prec)), prefix=f"seed{seed}")
    return report


def suite_cartier(job: JobConfig) -> CheckReport:
    """Cart биективен над F_p, совпадает с F mod p, а Ω* с подъемом Фробениуса картье-типа"""
    report = CheckReport(name='verify.cartier')
    report.extend(verify_cartier_iso(derham_model(job, FP)), prefix='cartier')
    if job.model_kind == 'cusp':
        report.untestable('cartier_type', message="hypothesis unmet: кольцо не гладкое")
        return report
    model = derham_model(job)
    report.extend(cartier_vs_frobenius(model), prefix='frobenius')
    report.extend(cartier_type_check(frobenius_lift_structure(model)), prefix='cartier_type')
    return report


def suite_tower(job: JobConfig) -> CheckReport:
    """Восемь аксиом строгой башни и F^r-описания уровней на интегральных формах тора"""
    lower, upper = job.window()
    levels = job.effective_levels
    T = drw_tower(job.model_kind, job.n, job.p, levels, upper, job.prec, s=job.effective_depth, lower=lower)
    report = CheckReport(name='verify.tower')
    report.extend(validate_tower(T), prefix='tower')
    report.extend(frobenius_image_check(T.structure), prefix='frobenius_image')
    if levels:
        report.extend(frobenius_power_check(T.structure, levels), prefix='frobenius_power')
        report.extend(wr_cohomology_check(T.structure, levels, T.verschiebung), prefix='wr_cohomology')
    report.data['weights'] = len(T.weights)
    return report


def suite_nygaard(job: JobConfig) -> CheckReport:
    """gr^k ≅ τ^{≤k}(M/p), сэндвич и 𝒩^k W(F_p) = p^k W(F_p) на весе 0"""
    lower, upper = job.window()
    forms = integral_forms(job.model_kind, job.n, job.p, job.effective_depth, upper, job.prec, lower=lower)
    D = forms.to_dieudonne()
    N = nygaard(D, job.k)
    report = CheckReport(name='verify.nygaard')
    for k in range(job.k + 1):
        report.extend(nygaard_graded_compare(N, k), prefix=f"k{k}")
    zero = make_weight(*([0] * job.n))
    for k in range(job.k + 1):
        level = N.get(k, 0, zero)
        expected = Lattice.full(D.p, 1, D.prec).scaled(k)
        report.add('constants_filtration', level == expected, 0, zero, f"k={k}")
    return report


def suite_nu(job: JobConfig) -> CheckReport:
    return nu_comparison(job.model_kind, job.n, job.p, job.bound(), job.prec)


def suite_oracle(job: JobConfig) -> CheckReport:
    """Две независимые сборки Sat и F-образ на интегральных формах"""
    report = oracle_compare_saturation(job.model_kind, job.n, job.p, job.effective_depth, job.bound(), job.prec)
    forms = integral_forms(job.model_kind, job.n, job.p, job.effective_depth, job.bound(), job.prec)
    report.extend(frobenius_image_check(forms.to_dieudonne()), prefix='frobenius_image')
    return report


def suite_cusp(job: JobConfig) -> CheckReport:
    """Свидетель F^n(dt), изоморфизм насыщений, Ω² и F_p[t] в 𝒲_1Ω⁰"""
    w_max = job.cusp_w_max()
    report = CheckReport(name='verify.cusp')
    witness = cusp_F_dt(job.p, job.prec)
    report.add('witness_F_dt', witness.verified, 1, make_weight(witness.weight),
               f"n={witness.n}: {witness.expression}")
    report.data['witness'] = witness.to_json()
    sat = cusp_saturation(job.p, w_max, job.prec, depth=job.effective_depth)
    report.extend(sat.report, prefix='saturation')
    report.extend(cusp_omega2(job.p, w_max), prefix='omega2')
    report.extend(cusp_seminormal_h0(sat), prefix='seminormal')
    D = sat.cusp.to_dieudonne()
    report.extend(frobenius_isogeny_check(D), prefix='isogeny')
    report.extend(frobenius_image_check(D), prefix='frobenius_image')
    return report


def suite_witt(job: JobConfig) -> CheckReport:
    """Тождества духовых компонент, W_r(F_p) ≅ Z/p^r и сверка степени 0 с W_2(F_p[x^{±1}])"""
    report = CheckReport(name='verify.witt')
    for r in range(1, job.r + 1):
        for op in ('sum', 'product'):
            report.add('ghost_identity', verify_ghost_identity(structure_polys(job.p, r, op)),
                       message=f"{op}, r={r}")
        report.extend(check_wr_fp_isomorphism(job.p, r), prefix=f"wr{r}")
    report.extend(witt_crosscheck(job.p, 2, job.bound(), samples=job.effective_count, seed=job.seed,
                                  prec=job.prec), prefix='crosscheck')
    return report


def suite_criterion(job: JobConfig) -> CheckReport:
    """Ω* картье-типа и равенство H(-/p) по стадиям насыщения"""
    D = frobenius_lift_structure(derham_model(job))
    report = CheckReport(name='verify.criterion')
    report.extend(cartier_type_check(D), prefix='cartier_type')
    tower = saturate(D, job.effective_depth)
    report.extend(tower.mod_p_stage_report(), prefix='stages')
    report.data['precision_left'] = tower.final.prec
    return report


SUITE_RUNNERS: Dict[str, Callable[[JobConfig], CheckReport]] = {
    'etap': suite_etap,
    'gamma': suite_gamma,
    'cartier': suite_cartier,
    'tower': suite_tower,
    'nygaard': suite_nygaard,
    'nu': suite_nu,
    'oracle': suite_oracle,
    'cusp': suite_cusp,
    'witt': suite_witt,
    'criterion': suite_criterion,
}


def run_suite(job: JobConfig) -> CheckReport:
    logger.info(f"Набор проверок {job.target}: p={job.p}, prec={job.prec}")
    report = SUITE_RUNNERS[job.target](job)
    logger.info(f"Набор {job.target} завершен: {report.counts()}")
    return report
