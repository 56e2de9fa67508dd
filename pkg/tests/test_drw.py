from fractions import Fraction

import pytest

from src.dieudonne import (
    frobenius_image_check, frobenius_power_check, is_saturated, validate_dieudonne, validate_tower, wr_cohomology_check
)
from src.drw import (
    cusp_F_dt, cusp_omega2, cusp_saturation, cusp_seminormal_h0, default_w_max, drw_tower, frobenius_isogeny_check,
    integral_forms, nu_comparison, oracle_compare_saturation, witness_stage, witt_crosscheck
)
from src.padic import Lattice, make_weight, weight_to_json
from src.utils.exceptions import PrecisionExhausted, ValidationError, WindowTooSmall


def test_integral_form_lattices():
    forms = integral_forms('torus', 1, 2, 1, 1, 8)
    assert forms.prec == 7
    assert len(forms.weights) == 5
    assert forms.lattice(0, make_weight(Fraction(1, 2))) == Lattice(2, 1, [[2]], 7)
    assert forms.lattice(0, make_weight(1)) == Lattice.full(2, 1, 7)
    assert forms.lattice(1, make_weight(Fraction(1, 2))) == Lattice.full(2, 1, 7)


def test_forms_model_carries_frobenius_to_larger_weights():
    D = integral_forms('torus', 1, 2, 1, 1, 8).to_dieudonne()
    assert validate_dieudonne(D).ok
    half = make_weight(Fraction(1, 2))
    assert (0, half) in D.frobenius
    assert D.F(0, half).is_integral()


def test_integral_forms_on_the_plane():
    forms = integral_forms('torus', 2, 3, 1, 1, 6)
    a = make_weight(Fraction(1, 3), 0)
    assert forms.lattice(0, a) == Lattice(3, 1, [[3]], 5)
    assert forms.lattice(1, a) == Lattice(3, 2, [[1, 0], [0, 3]], 5)


def test_integral_forms_guards():
    with pytest.raises(PrecisionExhausted):
        integral_forms('torus', 1, 2, 3, 1, 3)
    with pytest.raises(ValidationError):
        integral_forms('cusp', 1, 2, 1, 4)
    with pytest.raises(ValidationError):
        integral_forms('line', 2, 2, 1, 1)


@pytest.mark.parametrize('kind, n, p, s, bound', [
    ('torus', 1, 2, 1, 1),
    ('torus', 1, 3, 2, 1),
    ('line', 1, 2, 2, 1),
    ('torus', 2, 2, 1, 1),
])
def test_eta_iterates_match_integral_forms(kind, n, p, s, bound):
    report = oracle_compare_saturation(kind, n, p, s, bound, prec=8)
    assert report.ok
    assert report.data['blocks'] > 0


def test_line_forms_are_saturated():
    assert is_saturated(integral_forms('line', 1, 3, 1, 2, 6).to_dieudonne()).ok


@pytest.mark.parametrize('kind, p', [('torus', 2), ('torus', 3), ('line', 2)])
def test_drw_tower(kind, p):
    T = drw_tower(kind, 1, p, 1, 2, 8)
    assert validate_tower(T).ok
    assert frobenius_power_check(T.structure, 1).ok
    assert wr_cohomology_check(T.structure, 1, T.verschiebung).ok


def test_drw_tower_needs_depth():
    with pytest.raises(ValidationError):
        drw_tower('torus', 1, 2, 2, 1, 8, s=1)


@pytest.mark.parametrize('kind, p', [('torus', 2), ('torus', 5), ('line', 3)])
def test_nu_is_isomorphism(kind, p):
    report = nu_comparison(kind, 1, p, 2)
    assert report.ok
    assert report.data['dimensions']


def test_witt_vectors_of_laurent_ring():
    report = witt_crosscheck(2, 2, 4, samples=6, seed=3)
    assert report.ok
    assert report.data['modulus'] == 4


@pytest.mark.parametrize('p, n, expression', [
    (2, 3, '(1/3)*x*y*dx'),
    (3, 2, '(1/2)*x*y^2*dy'),
    (5, 1, '(1/2)*x*dy'),
    (7, 1, '(1/2)*x*y*dy'),
])
def test_cusp_witness(p, n, expression):
    witness = cusp_F_dt(p)
    assert witness.n == n
    assert witness.expression == expression
    assert witness.weight == p ** n
    assert witness.verified


def test_cusp_witness_rejects_composite():
    with pytest.raises(ValidationError):
        cusp_F_dt(4)


def test_witness_stage():
    assert [witness_stage(p) for p in (2, 3, 5, 11)] == [3, 2, 1, 1]
    assert witness_stage(7) == cusp_F_dt(7).n
    assert default_w_max(3) == 54


@pytest.mark.parametrize('p', [2, 3, 5])
def test_cusp_saturation_agrees_with_line(p):
    sat = cusp_saturation(p, depth=1)
    assert sat.report.ok
    assert sat.report.data['stage'] == witness_stage(p)
    assert cusp_seminormal_h0(sat).ok
    D = sat.cusp.to_dieudonne()
    assert frobenius_isogeny_check(D).ok
    assert frobenius_image_check(D).ok


def test_cusp_seminormal_covers_every_weight():
    sat = cusp_saturation(2, depth=1)
    report = cusp_seminormal_h0(sat)
    assert report.ok
    weights = [row['weight'] for row in report.data['dimensions']]
    assert weights == [weight_to_json(make_weight(w)) for w in range(default_w_max(2) + 1)]
    assert all(row['dim'] == 1 for row in report.data['dimensions'])
    assert sat.cusp.lattice(0, make_weight(Fraction(1, 2))).ambient_rank == 1


def test_cusp_saturation_window_guard():
    with pytest.raises(WindowTooSmall):
        cusp_saturation(2, w_max=7)
    with pytest.raises(WindowTooSmall):
        cusp_saturation(3, w_max=default_w_max(3) - 1)


@pytest.mark.parametrize('p, annihilator', [(2, ['y^2']), (3, ['x']), (5, ['x', 'y^2'])])
def test_cusp_omega2(p, annihilator):
    report = cusp_omega2(p, 12)
    assert report.ok
    assert report.data['annihilator'] == annihilator
    dims = {row['weight']: row['dim'] for row in report.data['dimensions']}
    assert dims['5'] == 1
