from .based import (
    BasedComplex, BlockKey, zero_complex, single_weight_complex, validate, truncate_leq, complexes_equal
)
from .cohomology import BlockCohomology, CohomologyProfile, cohomology, mod_p_cohomology, mod_p_dimensions
from .chain_maps import ChainMap, chain_map_report, compose, induced_mod_p_map, mod_p_quasi_iso_report
from .eta import eta_p, eta_p_map, eta_consumption
from .bockstein import BocksteinComplex, bockstein, gamma_map, gamma_report
from .random import random_complex, expected_cohomology, random_quasi_iso_pair
from .windows import box_window, closure_window

__all__ = [
    'BasedComplex', 'BlockKey', 'zero_complex', 'single_weight_complex', 'validate', 'truncate_leq',
    'complexes_equal',
    'BlockCohomology', 'CohomologyProfile', 'cohomology', 'mod_p_cohomology', 'mod_p_dimensions',
    'ChainMap', 'chain_map_report', 'compose', 'induced_mod_p_map', 'mod_p_quasi_iso_report',
    'eta_p', 'eta_p_map', 'eta_consumption',
    'BocksteinComplex', 'bockstein', 'gamma_map', 'gamma_report',
    'random_complex', 'expected_cohomology', 'random_quasi_iso_pair',
    'box_window', 'closure_window'
]
