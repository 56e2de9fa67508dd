from .structure import AlgebraHooks, DieudonneStructure, validate_dieudonne, frobenius_image_check
from .alpha import alpha_F, is_saturated
from .saturation import SaturationTower, saturate, window_guard
from .verschiebung import Verschiebung, derive_verschiebung, verschiebung_report
from .tower import (
    WrLevel, StrictTower, quotient_Wr, build_tower, validate_tower, tower_weights, frobenius_kernel,
    frobenius_power_check, wr_cohomology_check
)
from .cartier import cartier_type_check
from .nygaard import NygaardFiltration, nygaard, nygaard_graded_compare

__all__ = [
    'AlgebraHooks', 'DieudonneStructure', 'validate_dieudonne', 'frobenius_image_check',
    'alpha_F', 'is_saturated',
    'SaturationTower', 'saturate', 'window_guard',
    'Verschiebung', 'derive_verschiebung', 'verschiebung_report',
    'WrLevel', 'StrictTower', 'quotient_Wr', 'build_tower', 'validate_tower', 'tower_weights',
    'frobenius_kernel', 'frobenius_power_check', 'wr_cohomology_check',
    'cartier_type_check',
    'NygaardFiltration', 'nygaard', 'nygaard_graded_compare'
]
