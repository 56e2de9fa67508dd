from .rings import MonomialRing, LAURENT, AFFINE, CUSP, FP, ZP, cusp_normal_form, cusp_monomial_text, cusp_form_gcd
from .forms import MonomialForm, sort_sign
from .models import (
    DeRhamModel, derham_complex, frobenius_lift_structure, algebra_hooks, cusp_relation_report,
    cusp_ambient_form, laurent_model, affine_model, cusp_model
)
from .lift import GeneralLift, general_lift_frobenius, lift_report
from .cartier import CartierMap, cartier_map, verify_cartier_iso, cartier_vs_frobenius

__all__ = [
    'MonomialRing', 'LAURENT', 'AFFINE', 'CUSP', 'FP', 'ZP', 'cusp_normal_form', 'cusp_monomial_text',
    'cusp_form_gcd',
    'MonomialForm', 'sort_sign',
    'DeRhamModel', 'derham_complex', 'frobenius_lift_structure', 'algebra_hooks', 'cusp_relation_report',
    'cusp_ambient_form', 'laurent_model', 'affine_model', 'cusp_model',
    'GeneralLift', 'general_lift_frobenius', 'lift_report',
    'CartierMap', 'cartier_map', 'verify_cartier_iso', 'cartier_vs_frobenius'
]
