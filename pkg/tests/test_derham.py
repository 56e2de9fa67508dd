import pytest

from src.derham import (
    CUSP, FP, LAURENT, MonomialForm, MonomialRing, affine_model, cartier_vs_frobenius, cusp_form_gcd,
    cusp_model, cusp_monomial_text, cusp_normal_form, cusp_relation_report, frobenius_lift_structure,
    general_lift_frobenius, laurent_model, lift_report, sort_sign, verify_cartier_iso
)
from src.dieudonne import cartier_type_check, validate_dieudonne
from src.utils.exceptions import ValidationError, WindowTooSmall
from src.utils.report import UNTESTABLE


def test_sort_sign():
    assert sort_sign([0, 1, 2]) == 1
    assert sort_sign([1, 0]) == -1
    assert sort_sign([2, 0, 1]) == 1
    assert sort_sign([0, 0]) == 0


def test_d_squared_vanishes():
    form = MonomialForm.monomial(2, (1, 2)) + MonomialForm.monomial(2, (3, -1), [1], c=5)
    assert form.d().d().is_zero()


def test_leibniz_rule():
    f = MonomialForm.monomial(2, (1, 0))
    g = MonomialForm.monomial(2, (0, 3), [0])
    assert f.wedge(g).d() == f.d().wedge(g) + f.wedge(g.d())


def test_monomial_lift_satisfies_dF_equals_pFd():
    omega = MonomialForm.monomial(3, (2, -1, 4), [2])
    p = 3
    assert omega.frobenius(p).d() == omega.d().frobenius(p).scale(p)


def test_cusp_normal_forms():
    assert cusp_normal_form(1) is None
    assert cusp_normal_form(7) == (1, 2)
    assert [cusp_monomial_text(w) for w in (0, 2, 3, 4, 5, 7)] == ['1', 'y', 'x', 'y^2', 'x*y', 'x*y^2']
    assert [cusp_form_gcd(w) for w in (1, 2, 3, 4, 5, 6, 9)] == [None, 2, 3, 2, 1, 1, 1]


def test_ring_validation():
    with pytest.raises(ValidationError):
        MonomialRing('sphere', 1, 2)
    with pytest.raises(ValidationError):
        MonomialRing(CUSP, 2, 2)
    assert not MonomialRing(CUSP, 1, 2).has_monomial((1,))
    assert MonomialRing(LAURENT, 1, 2).form_subsets((0,), 1) == [(0,)]


@pytest.mark.parametrize('p, theta', [(2, '0'), (3, 'x**2'), (5, '2*x**3 - x')])
def test_general_lift(p, theta):
    assert lift_report(general_lift_frobenius(p, theta)).ok


def test_general_lift_rejects_other_variables():
    with pytest.raises(ValueError):
        general_lift_frobenius(2, 'y')


@pytest.mark.parametrize('p, bound', [(2, 4), (3, 3)])
def test_cartier_isomorphism_on_torus(p, bound):
    report = verify_cartier_iso(laurent_model(1, p, bound, 4, FP))
    assert report.ok
    assert report.counts()['pass'] > 0


def test_cartier_isomorphism_on_line():
    assert verify_cartier_iso(affine_model(1, 3, 3, 4, FP)).ok


def test_frobenius_reduces_to_cartier():
    assert cartier_vs_frobenius(laurent_model(1, 2, 4, 4)).ok


def test_frobenius_lift_structure_is_dieudonne():
    D = frobenius_lift_structure(laurent_model(2, 2, 2, 4))
    assert validate_dieudonne(D).ok
    assert cartier_type_check(D).ok


def test_frobenius_lift_needs_integral_coefficients():
    with pytest.raises(ValidationError):
        frobenius_lift_structure(laurent_model(1, 2, 2, 4, FP))


def test_cusp_relation_and_window():
    assert cusp_relation_report(cusp_model(2, 8, 4)).ok
    with pytest.raises(WindowTooSmall):
        cusp_model(2, 5, 4)


def test_cartier_on_cusp_is_untestable():
    report = verify_cartier_iso(cusp_model(3, 8, 4))
    assert [f.status for f in report.findings] == [UNTESTABLE]
