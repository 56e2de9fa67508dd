from dataclasses import replace
from fractions import Fraction

import pytest

from src.complexes import chain_map_report, compose, eta_p, eta_p_map, single_weight_complex
from src.derham import laurent_model, frobenius_lift_structure
from src.dieudonne import (
    DieudonneStructure, alpha_F, build_tower, cartier_type_check, derive_verschiebung, frobenius_image_check,
    frobenius_kernel, frobenius_power_check, is_saturated, nygaard, nygaard_graded_compare, quotient_Wr, saturate,
    validate_dieudonne, validate_tower, verschiebung_report, wr_cohomology_check
)
from src.drw import integral_forms
from src.padic import Lattice, PMatrix, make_weight
from src.utils.exceptions import NotSaturated, WindowTooSmall


@pytest.fixture
def torus_omega():
    return frobenius_lift_structure(laurent_model(1, 2, 2, 6))


@pytest.fixture
def torus_forms():
    return integral_forms('torus', 1, 2, 2, 1, 8).to_dieudonne()


def witt_of_fp(p):
    """W(F_p) = Z_p в степени 0 с F = id"""
    C = single_weight_complex(p, 8, 0, [], [1])
    return DieudonneStructure(C, {(0, ()): PMatrix.identity(p, 8, 1)}, name='W(F_p)')


def with_frobenius_block(D, key, matrix):
    return replace(D, frobenius={**D.frobenius, key: matrix})


def test_alpha_is_chain_map(torus_omega):
    assert chain_map_report(alpha_F(torus_omega)).ok


def test_alpha_of_eta_composes_to_alpha_of_frobenius_square():
    D = frobenius_lift_structure(laurent_model(1, 2, 4, 8))
    first = eta_p(D.complex)
    second = eta_p(first)
    alpha = alpha_F(D, first)
    composite = compose(eta_p_map(alpha, source_eta=first, target_eta=second), alpha)
    assert composite.blocks
    for (n, w), block in composite.blocks.items():
        b = composite.target_weight(w)
        ambient = first.embedding_of(n, b) @ second.embedding_of(n, b) @ block
        expected = D.F_power(n, w, 2).scale_p(2 * n)
        assert ambient.equals_at(expected, second.prec)


def test_de_rham_complex_is_not_saturated(torus_omega):
    report = is_saturated(torus_omega)
    assert not report.ok
    assert report.data['defects']
    for finding in report.failures:
        assert finding.weight[0].denominator == 1
        assert finding.weight[0] % 2 != 0


def test_verschiebung_needs_saturation(torus_omega):
    with pytest.raises(NotSaturated):
        derive_verschiebung(torus_omega)


def test_saturation_stages_preserve_mod_p_cohomology(torus_omega):
    assert cartier_type_check(torus_omega).ok
    tower = saturate(torus_omega, 2)
    assert tower.depth == 2
    assert tower.final.prec == 4
    assert tower.mod_p_stage_report().ok


def test_saturation_checks_window_before_eta(torus_omega):
    tower = saturate(torus_omega, 2, targets=[make_weight(Fraction(1, 2))])
    assert tower.depth == 2
    with pytest.raises(WindowTooSmall):
        saturate(torus_omega, 2, targets=[make_weight(1)])


def test_cartier_type_fails_when_frobenius_is_divisible():
    C = single_weight_complex(3, 8, 0, [[[3]]], [1, 1])
    D = DieudonneStructure(C, {(0, ()): PMatrix(3, 8, [[3]]), (1, ()): PMatrix(3, 8, [[1]])})
    assert validate_dieudonne(D).ok
    report = cartier_type_check(D)
    assert not report.ok
    assert [finding.degree for finding in report.failures] == [0]


def test_integral_forms_are_saturated(torus_forms):
    assert validate_dieudonne(torus_forms).ok
    assert is_saturated(torus_forms).ok


def test_validate_detects_corrupted_frobenius(torus_forms):
    key = (0, make_weight(Fraction(1, 4)))
    broken = with_frobenius_block(torus_forms, key, torus_forms.F(*key).scale_p(1))
    report = validate_dieudonne(broken)
    assert not report.ok
    assert any(finding.check_id == 'dF=pFd' for finding in report.failures)


def test_frobenius_image_contains_pM(torus_forms):
    report = frobenius_image_check(torus_forms)
    assert report.ok
    assert any(finding.check_id == 'image_contains_pM' for finding in report.findings)


def test_frobenius_image_check_sees_shrunken_frobenius(torus_forms):
    key = (0, make_weight(0))
    broken = with_frobenius_block(torus_forms, key, torus_forms.F(*key).scale_p(2))
    report = frobenius_image_check(broken)
    assert [(f.check_id, f.degree, f.weight) for f in report.failures] == [('image_contains_pM', 0, key[1])]


def test_verschiebung_identities(torus_forms):
    assert verschiebung_report(derive_verschiebung(torus_forms)).ok


def test_strict_tower_axioms(torus_forms):
    T = build_tower(torus_forms, 2)
    assert validate_tower(T).ok
    assert frobenius_power_check(torus_forms, 2).ok
    assert wr_cohomology_check(torus_forms, 2, T.verschiebung).ok


def test_tower_without_dv_violates_kernel_span(torus_forms):
    T = build_tower(torus_forms, 2, include_dv=False)
    report = validate_tower(T)
    assert not report.ok
    assert any(finding.check_id == 'axiom8.ker_res_span' for finding in report.failures)


def test_tower_levels_of_constants(torus_forms):
    T = build_tower(torus_forms, 2)
    zero = make_weight(0)
    for r in range(3):
        assert T.level(r).invariants(0, zero) == ([r] if r else [])


def test_single_level_matches_frobenius_kernel(torus_forms):
    level = quotient_Wr(torus_forms, 1)
    assert level.kernels
    for (n, a), kernel in level.kernels.items():
        assert kernel == frobenius_kernel(torus_forms, 1, n, a)
    assert not level.is_zero()


def test_frobenius_kernel_needs_window(torus_forms):
    with pytest.raises(WindowTooSmall):
        frobenius_kernel(torus_forms, 1, 0, make_weight(1))


def test_nygaard_filtration(torus_forms):
    N = nygaard(torus_forms, 2)
    for k in range(3):
        assert nygaard_graded_compare(N, k).ok
        assert N.get(k, 0, make_weight(0)) == Lattice.full(2, 1, torus_forms.prec).scaled(k)


@pytest.mark.parametrize('p', [2, 3])
def test_nygaard_of_witt_vectors_is_p_adic(p):
    D = witt_of_fp(p)
    assert validate_dieudonne(D).ok
    assert is_saturated(D).ok
    N = nygaard(D, 3)
    assert [N.get(k, 0, ()).pivot_valuations for k in range(4)] == [[0], [1], [2], [3]]
