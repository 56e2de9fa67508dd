from .models import (
    TORUS, LINE, CUSP_KIND, SaturatedModel, IntegralFormModel, integral_forms, saturated_from_tower,
    ambient_ring, ambient_differential
)
from .oracle import oracle_compare_saturation, frobenius_isogeny_check
from .towers import drw_tower, nu_comparison, witt_crosscheck
from .cusp import (
    CuspWitness, CuspSaturation, cusp_F_dt, cusp_saturation, cusp_omega2, cusp_seminormal_h0,
    witness_stage, default_w_max
)

__all__ = [
    'TORUS', 'LINE', 'CUSP_KIND', 'SaturatedModel', 'IntegralFormModel', 'integral_forms',
    'saturated_from_tower', 'ambient_ring', 'ambient_differential',
    'oracle_compare_saturation', 'frobenius_isogeny_check',
    'drw_tower', 'nu_comparison', 'witt_crosscheck',
    'CuspWitness', 'CuspSaturation', 'cusp_F_dt', 'cusp_saturation', 'cusp_omega2', 'cusp_seminormal_h0',
    'witness_stage', 'default_w_max'
]
