from .polynomials import WittPolySet, structure_polys, verify_ghost_identity, ghost_poly, OPERATIONS
from .rings import CoefficientRing, IntegersModPN, LaurentFp
from .vectors import (
    WittVector, witt_add, witt_mul, witt_neg, witt_zero, witt_scalar, teichmuller,
    frobenius_w, frobenius_char_p, verschiebung_w, restrict_w, ghost_vector,
    check_wr_fp_isomorphism
)

__all__ = [
    'WittPolySet', 'structure_polys', 'verify_ghost_identity', 'ghost_poly', 'OPERATIONS',
    'CoefficientRing', 'IntegersModPN', 'LaurentFp',
    'WittVector', 'witt_add', 'witt_mul', 'witt_neg', 'witt_zero', 'witt_scalar', 'teichmuller',
    'frobenius_w', 'frobenius_char_p', 'verschiebung_w', 'restrict_w', 'ghost_vector',
    'check_wr_fp_isomorphism'
]
