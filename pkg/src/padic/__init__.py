from .scalars import (
    PScalar, Weight, UNTWISTED, vp, is_integral, residue, pow_p, reduce_mod_p,
    teichmuller_lift, make_weight, scale_weight, weight_depth, weight_to_json,
    weight_from_json, weight_sort_key, format_weight_text, to_fraction
)
from .matrix import PMatrix
from .snf import snf, SNFResult
from .lattice import Lattice, solve_integrality, cokernel_invariants, kernel_lattice, preimage, index_exponent
from .fp import FpSubquotient, fp_reduce, fp_rank, fp_kernel, fp_solve, cohomology_fp, is_bijective

__all__ = [
    'PScalar', 'Weight', 'UNTWISTED', 'vp', 'is_integral', 'residue', 'pow_p', 'reduce_mod_p',
    'teichmuller_lift', 'make_weight', 'scale_weight', 'weight_depth', 'weight_to_json',
    'weight_from_json', 'weight_sort_key', 'format_weight_text', 'to_fraction',
    'PMatrix', 'snf', 'SNFResult',
    'Lattice', 'solve_integrality', 'cokernel_invariants', 'kernel_lattice', 'preimage', 'index_exponent',
    'FpSubquotient', 'fp_reduce', 'fp_rank', 'fp_kernel', 'fp_solve', 'cohomology_fp', 'is_bijective'
]
