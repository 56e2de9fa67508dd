"""
Цели compute: модели, башни, фильтрации и многочлены Витта в JSON
"""
import logging
from typing import Any, Callable, Dict

from .job import JobConfig
from .suites import derham_model
from ..derham import frobenius_lift_structure
from ..dieudonne import build_tower, nygaard
from ..drw import cusp_F_dt, cusp_saturation, drw_tower, integral_forms
from ..witt import structure_polys, verify_ghost_identity

logger = logging.getLogger(__name__)


def compute_forms(job: JobConfig) -> Dict[str, Any]:
    """Решетки интегральных форм глубины s по весам и, при R > 0, уровни 𝒲_r"""
    lower, upper = job.window()
    forms = integral_forms(job.model_kind, job.n, job.p, job.effective_depth, upper, job.prec, lower=lower)
    result = forms.to_json()
    result['prec'] = forms.prec
    if job.effective_levels:
        result['tower'] = build_tower(forms.to_dieudonne(), job.effective_levels).to_json()
    return result


def compute_cusp(job: JobConfig) -> Dict[str, Any]:
    sat = cusp_saturation(job.p, job.cusp_w_max(), job.prec, depth=job.effective_depth)
    return sat.to_json()


def compute_witt_polys(job: JobConfig) -> Dict[str, Any]:
    polyset = structure_polys(job.p, job.r, job.op)
    return {
        'p': job.p,
        'r': job.r,
        'op': job.op,
        'polys': polyset.as_strings(),
        'ghost_identity': verify_ghost_identity(polyset),
    }


def compute_cusp_witness(job: JobConfig) -> Dict[str, Any]:
    return cusp_F_dt(job.p, job.prec).to_json()


def compute_derham(job: JobConfig) -> Dict[str, Any]:
    """Ω* с подъемом Фробениуса для job.kind"""
    return frobenius_lift_structure(derham_model(job)).to_json()


def compute_tower(job: JobConfig) -> Dict[str, Any]:
    lower, upper = job.window()
    T = drw_tower(job.model_kind, job.n, job.p, job.effective_levels, upper, job.prec,
                  s=job.effective_depth, lower=lower)
    return T.to_json()


def compute_nygaard(job: JobConfig) -> Dict[str, Any]:
    forms = integral_forms(job.model_kind, job.n, job.p, job.effective_depth, job.bound(), job.prec)
    return {'k_max': job.k, 'filtration': nygaard(forms.to_dieudonne(), job.k).to_json()}


COMPUTE_RUNNERS: Dict[str, Callable[[JobConfig], Dict[str, Any]]] = {
    'torus': compute_forms,
    'line': compute_forms,
    'cusp': compute_cusp,
    'witt-polys': compute_witt_polys,
    'cusp-witness': compute_cusp_witness,
    'derham': compute_derham,
    'tower': compute_tower,
    'nygaard': compute_nygaard,
}


def run_compute(job: JobConfig) -> Dict[str, Any]:
    logger.info(f"Вычисление {job.target}: p={job.p}, prec={job.prec}")
    return COMPUTE_RUNNERS[job.target](job)
