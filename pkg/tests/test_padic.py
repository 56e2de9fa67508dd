import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd

import pytest
import sympy

from src.padic import (
    Lattice, PMatrix, PScalar, cokernel_invariants, fp_kernel, fp_rank, index_exponent, is_bijective,
    kernel_lattice, make_weight, preimage, residue, snf, solve_integrality, teichmuller_lift, vp,
    weight_depth
)
from src.utils.exceptions import NotASublattice, PrecisionExhausted, ShapeMismatch


def test_valuation_and_residue():
    assert vp(12, 2) == 2
    assert vp(Fraction(1, 9), 3) == -2
    assert vp(0, 5) is None
    assert residue(Fraction(1, 3), 2, 3) == 3
    assert residue(8, 2, 3) == 0


def test_teichmuller_lift_is_root_of_unity():
    t = teichmuller_lift(2, 5, 2)
    assert t == 7
    assert pow(t, 4, 25) == 1


def test_scalar_arithmetic_tracks_precision():
    a = PScalar.from_rational(3, 18, 4)
    assert a.to_json() == {'v': 2, 'u': '2', 'prec': 4}
    product = PScalar.from_rational(2, 2, 5) * PScalar.from_rational(2, 4, 3)
    assert product.val == 3
    assert product.prec == 4
    assert (a - a).is_zero()


def test_weight_depth():
    assert weight_depth(make_weight(Fraction(1, 4), 3), 2) == 2
    assert weight_depth(make_weight(5), 2) == 0
    with pytest.raises(ValueError):
        weight_depth(make_weight(Fraction(1, 3)), 2)


def test_nonpositive_precision_rejected():
    with pytest.raises(ShapeMismatch):
        PMatrix(2, 0, [[1]])


def _determinantal_valuations(rows, p):
    """Показатели инвариантных множителей через НОД миноров"""
    m, n = len(rows), len(rows[0])
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for r in combinations(range(m), k):
            for c in combinations(range(n), k):
                g = gcd(g, int(sympy.Matrix([[rows[i][j] for j in c] for i in r]).det()))
        if g == 0:
            break
        divisors.append(g)
    return [vp(Fraction(divisors[k], divisors[k - 1]), p) for k in range(1, len(divisors))]


@pytest.mark.parametrize('p, rows', [
    (2, [[2, 4], [6, 8]]),
    (3, [[9, 3, 0], [1, 0, 3], [0, 27, 6]]),
    (5, [[5, 10], [25, 0], [0, 125]]),
    (2, [[4, 8, 12], [2, 4, 6]]),
])
def test_snf_matches_determinantal_divisors(p, rows):
    matrix = PMatrix(p, 10, rows)
    result = snf(matrix)
    assert [v for v in result.diag_valuations if v is not None] == _determinantal_valuations(rows, p)
    assert result.reconstruction_ok(matrix)
    assert result.diag_valuations == sorted(result.diag_valuations, key=lambda v: (v is None, v or 0))


def test_lattice_equality_ignores_generators():
    assert Lattice(2, 2, [[2, 0], [0, 4]], 8) == Lattice(2, 2, [[2, 0], [2, 4]], 8)
    assert Lattice(2, 2, [[2, 0]], 8) != Lattice(2, 2, [[4, 0]], 8)


def test_cokernel_invariants():
    full = Lattice.full(2, 2, 8)
    assert cokernel_invariants(Lattice(2, 2, [[2, 0], [0, 8]], 8), full) == [1, 3]
    assert cokernel_invariants(Lattice(2, 2, [[4, 0]], 8), full) == [2, None]
    assert index_exponent(Lattice(2, 2, [[2, 0], [0, 8]], 8), full) == 4
    assert index_exponent(Lattice(2, 2, [[4, 0]], 8), full) is None


def test_cokernel_of_non_sublattice():
    with pytest.raises(NotASublattice):
        cokernel_invariants(Lattice.full(2, 1, 8), Lattice(2, 1, [[2]], 8))


def test_solve_integrality_spends_denominator_depth():
    result = solve_integrality(PMatrix(2, 4, [[Fraction(1, 2), 0], [0, 1]]))
    assert result == Lattice(2, 2, [[2, 0], [0, 1]], 3)
    assert result.prec == 3
    with pytest.raises(PrecisionExhausted):
        solve_integrality(PMatrix(2, 1, [[Fraction(1, 2)]]))


def _integral_image(rows, vector, p):
    values = [sum(Fraction(x) * c for x, c in zip(row, vector)) for row in rows]
    return all(v == 0 or vp(v, p) >= 0 for v in values)


@pytest.mark.parametrize('p', [2, 3])
def test_solve_integrality_matches_enumeration(p):
    rows = [[Fraction(1, p), 0], [Fraction(1, p * p), Fraction(1, p)]]
    lattice = solve_integrality(PMatrix(p, 8, rows))
    modulus = p ** 3
    members = 0
    for c in product(range(modulus), repeat=2):
        expected = _integral_image(rows, c, p)
        assert lattice.contains(list(c)) == expected
        members += expected
    assert members == p ** 4


@pytest.mark.parametrize('p, seed', [(2, 0), (3, 1), (5, 2)])
def test_solve_integrality_on_random_vectors(p, seed):
    rng = random.Random(seed)
    rows = [[Fraction(rng.randint(-6, 6), p ** rng.randint(0, 2)) for _ in range(3)] for _ in range(2)]
    lattice = solve_integrality(PMatrix(p, 10, rows))
    for _ in range(60):
        c = [rng.randint(-p ** 3, p ** 3) for _ in range(3)]
        assert lattice.contains(c) == _integral_image(rows, c, p)


def test_preimage_and_kernel():
    target = Lattice.full(2, 1, 4).scaled(1)
    L = preimage(PMatrix(2, 4, [[1, 1]]), target)
    assert L.contains([1, 1])
    assert L.contains([2, 0])
    assert not L.contains([1, 0])
    K = kernel_lattice(PMatrix(3, 4, [[1, 1]]))
    assert K == Lattice(3, 2, [[1, -1]], 4)


def test_mod_p_linear_algebra():
    rows = [[1, 2], [2, 4]]
    assert fp_rank(rows, 5) == 1
    kernel = fp_kernel(rows, 5, 2)
    assert len(kernel) == 1
    v = kernel[0]
    assert (v[0] + 2 * v[1]) % 5 == 0
    assert is_bijective([[1, 1], [0, 1]], 2, 2, 2)
    assert not is_bijective([[1, 1], [1, 1]], 2, 2, 2)
