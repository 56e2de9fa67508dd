import pytest
from sympy import expand

from src.utils.exceptions import CostGuard, ValidationError
from src.witt import (
    IntegersModPN, LaurentFp, WittVector, check_wr_fp_isomorphism, frobenius_char_p, frobenius_w, ghost_vector,
    restrict_w, structure_polys, teichmuller, verify_ghost_identity, verschiebung_w, witt_add, witt_mul, witt_neg,
    witt_scalar, witt_zero
)


def test_sum_polynomials_p2():
    polys = structure_polys(2, 2, 'sum')
    x0, x1 = polys.x_vars
    y0, y1 = polys.y_vars
    assert expand(polys.polys[0].as_expr() - (x0 + y0)) == 0
    assert expand(polys.polys[1].as_expr() - (x1 + y1 - x0 * y0)) == 0


def test_sum_polynomials_p3():
    polys = structure_polys(3, 2, 'sum')
    x0, x1 = polys.x_vars
    y0, y1 = polys.y_vars
    assert expand(polys.polys[1].as_expr() - (x1 + y1 - x0 ** 2 * y0 - x0 * y0 ** 2)) == 0


def test_negation_polynomials():
    two = structure_polys(2, 2, 'neg')
    x0, x1 = two.x_vars
    assert expand(two.polys[1].as_expr() - (-x0 ** 2 - x1)) == 0
    three = structure_polys(3, 2, 'neg')
    assert expand(three.polys[1].as_expr() + three.x_vars[1]) == 0


@pytest.mark.parametrize('p, r', [(2, 3), (3, 3), (5, 2)])
@pytest.mark.parametrize('op', ['sum', 'product', 'neg', 'frobenius'])
def test_ghost_identity(p, r, op):
    assert verify_ghost_identity(structure_polys(p, r, op))


def test_structure_polys_guards():
    with pytest.raises(CostGuard):
        structure_polys(2, 5, 'sum')
    with pytest.raises(CostGuard):
        structure_polys(17, 2, 'sum')
    with pytest.raises(ValidationError):
        structure_polys(2, 2, 'div')


@pytest.mark.parametrize('p', [2, 3])
def test_p_times_one(p):
    ring = IntegersModPN(p)
    assert witt_scalar(p, p, ring, 2).components == (0, 1)
    assert witt_scalar(p ** 2, p, ring, 2) == witt_zero(p, ring, 2)


@pytest.mark.parametrize('p, r', [(2, 2), (2, 3), (3, 2), (5, 2)])
def test_wr_fp_is_integers_mod_pr(p, r):
    assert check_wr_fp_isomorphism(p, r).ok


def test_negation_is_additive_inverse():
    ring = IntegersModPN(3)
    a = WittVector(3, ring, (2, 1, 2))
    assert witt_add(a, witt_neg(a)) == witt_zero(3, ring, 3)


def test_frobenius_in_characteristic_p():
    ring = IntegersModPN(3)
    a = WittVector(3, ring, (2, 1, 2))
    assert frobenius_w(a) == frobenius_char_p(a)


@pytest.mark.parametrize('p', [2, 3])
def test_frobenius_after_verschiebung_is_p(p):
    ring = IntegersModPN(p)
    a = WittVector(p, ring, (1, 1))
    assert frobenius_w(verschiebung_w(a)) == witt_mul(witt_scalar(p, p, ring, 2), a)
    assert restrict_w(verschiebung_w(a)).components == (0, 1)


def test_teichmuller_ghost_components():
    ring = IntegersModPN(3, 4)
    assert ghost_vector(teichmuller(2, 3, ring, 3)) == [2, 8, pow(2, 9, 81)]


def test_laurent_coefficients():
    ring = LaurentFp(2)
    x = ring.monomial(1, (1,))
    x_inv = ring.monomial(1, (-1,))
    assert ring.eq(ring.mul(x, x_inv), ring.one())
    assert ring.pth_power(ring.add(x, ring.one())) == {(2,): 1, (0,): 1}
    assert ring.eq(ring.add(x, x), ring.zero())
    a = teichmuller(x, 2, ring, 2)
    assert witt_add(a, a) == WittVector(2, ring, (ring.zero(), ring.mul(x, x)))
