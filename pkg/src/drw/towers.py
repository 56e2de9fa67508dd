"""
Башни 𝒲_rΩ* над интегральными формами, сравнение ν и сверка с векторами Витта
"""
import logging
import random
from fractions import Fraction
from typing import List, Optional

from .models import LINE, TORUS, ambient_ring, integral_forms
from ..config import config
from ..derham.forms import MonomialForm
from ..dieudonne.tower import StrictTower, build_tower
from ..padic.lattice import Lattice, cokernel_invariants
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, make_weight, scale_weight, teichmuller_lift, weight_to_json
from ..utils.exceptions import ValidationError, WindowTooSmall
from ..utils.report import CheckReport
from ..witt.rings import LaurentFp
from ..witt.vectors import (
    check_wr_fp_isomorphism, frobenius_char_p, teichmuller, verschiebung_w, witt_add, witt_mul
)

logger = logging.getLogger(__name__)


def drw_tower(kind: str, n: int, p: int, levels: int, bound, prec: int = 8, s: int = None,
              strict: bool = False, lower=None) -> StrictTower:
    """
    𝒲_rΩ*, r = 0..levels, как уровни башни над интегральными формами глубины s >= levels

    Raises:
        ValidationError: Если s < levels
        WindowTooSmall: Если нет весов с p^levels·a в окне
    """
    s = levels if s is None else s
    if s < levels:
        raise ValidationError(f"Глубина знаменателей s={s} меньше числа уровней {levels}")
    forms = integral_forms(kind, n, p, s, bound, prec, lower=lower)
    return build_tower(forms.to_dieudonne(), levels, strict=strict)


def _ambient_to_basis(T: StrictTower, j: int, a: Weight, vector) -> List[Fraction]:
    C = T.structure.complex
    column = PMatrix.from_columns(C.p, C.prec, [vector], len(vector))
    return C.embedding_of(j, a).solve(column).column(0)


def nu_comparison(kind: str, n: int, p: int, bound, prec: int = 8) -> CheckReport:
    """
    ν: Ω*_{F_p-кольцо} -> 𝒲_1Ω*, x^a dlog_S ↦ класс x^a dlog_S; изоморфизм по блокам

    На дробных весах 𝒲_1 обязан быть нулем.
    """
    if kind not in (TORUS, LINE):
        raise ValidationError(f"ν определено для тора и прямой, получено {kind}")
    T = drw_tower(kind, n, p, 1, bound, prec)
    D = T.structure
    C = D.complex
    ring = ambient_ring(kind, n, p)
    report = CheckReport(name='drw.nu')
    dimensions = []
    for a in T.weights:
        for j in C.degrees:
            rank = C.rank(j, a)
            K = T.kernel(1, j, a)
            full = Lattice.full(p, rank, D.prec)
            invariants = cokernel_invariants(K, full)
            if any(c.denominator != 1 for c in a):
                report.add('fractional_zero', not invariants, j, a, '' if not invariants else f"{invariants}")
                continue
            subsets = ring.form_subsets(a, j)
            if not subsets:
                continue
            images = []
            for i in range(len(subsets)):
                e = [int(k == i) for k in range(len(subsets))]
                images.append(_ambient_to_basis(T, j, a, e))
            integral = all(c.denominator % p for image in images for c in image)
            spans = integral and K.sum(Lattice(p, rank, images, D.prec)) == full
            dims_ok = invariants == [1] * len(subsets)
            report.add('nu_iso', spans and dims_ok, j, a,
                       '' if spans and dims_ok else f"dim Ω = {len(subsets)}, 𝒲_1: {invariants}")
            dimensions.append({'degree': j, 'weight': weight_to_json(a), 'omega': len(subsets),
                               'w1': len(invariants)})
            if j < n and C.rank(j + 1, a):
                targets = ring.form_subsets(a, j + 1)
                K_next = T.kernel(1, j + 1, a)
                for i, S in enumerate(subsets):
                    d_omega = MonomialForm.monomial(n, a, S).d().coordinates(a, targets)
                    left = C.d(j, a).apply(images[i])
                    right = _ambient_to_basis(T, j + 1, a, d_omega)
                    diff = [x - y for x, y in zip(left, right)]
                    report.add('nu_commutes_d', K_next.contains(diff), j, a)
    report.data['dimensions'] = dimensions
    logger.info(f"ν-сравнение {kind} n={n} p={p}: {len(report.failures)} расхождений")
    return report


def _lattice_value(T: StrictTower, a: Weight, value, level: int = None) -> bool:
    """Ноль ли элемент value·x^a в 𝒲_level (степень 0)"""
    level = T.levels if level is None else level
    coords = _ambient_to_basis(T, 0, a, [Fraction(value)])
    return T.kernel(level, 0, a).contains(coords)


def _witt_to_scalar(w, p: int, r: int, k: int) -> Optional[int]:
    """Σ p^j τ(s_j) для компонент a_j = s_j x^{p^j k}; None, если компонента не такого вида"""
    total = 0
    for j, component in enumerate(w.components):
        if not component:
            continue
        if len(component) != 1:
            return None
        (exponent,), s = next(iter(component.items()))
        if exponent != p ** j * k:
            return None
        total += p ** j * teichmuller_lift(s, p, r)
    return total % p ** r


def witt_crosscheck(p: int, r: int, bound, samples: int = 20, seed: int = None, prec: int = 8) -> CheckReport:
    """
    Степень 0 башни тора n = 1 против W_r(F_p[x^±1]): V^j[c x^k] ↦ p^j τ(c) x^{k/p^j}

    Raises:
        WindowTooSmall: Если в окне башни нет целых весов
    """
    seed = config.DEFAULT_SEED if seed is None else seed
    T = drw_tower(TORUS, 1, p, r, bound, prec)
    ring = LaurentFp(p, 1)
    weights = set(T.weights)
    integral = [a for a in T.weights if a[0].denominator == 1]
    if not integral:
        raise WindowTooSmall("В окне башни нет целых весов")
    report = CheckReport(name='drw.witt_crosscheck')
    modulus = p ** r

    for a in integral:
        invariants = T.level(r).invariants(0, a)
        coords = _ambient_to_basis(T, 0, a, [Fraction(1)])
        generator = not T.kernel(r, 0, a).sum(Lattice.full(p, 1, T.structure.prec).scaled(1)).contains(coords)
        report.add('teichmuller_generator', invariants == [r] and generator, 0, a)

    rng = random.Random(seed * 31 + p)
    for _ in range(samples):
        a, b = rng.choice(integral), rng.choice(integral)
        k, l = int(a[0]), int(b[0])
        c, c2 = rng.randrange(p), rng.randrange(p)
        x = teichmuller(ring.monomial(c, (k,)), p, ring, r)
        y = teichmuller(ring.monomial(c2, (k,)), p, ring, r)
        value = _witt_to_scalar(witt_add(x, y), p, r, k)
        expected = teichmuller_lift(c, p, r) + teichmuller_lift(c2, p, r)
        ok = value is not None and _lattice_value(T, a, value - expected)
        report.add('witt_add', ok, 0, a, f"[{c}x^{k}] + [{c2}x^{k}]")
        product_weight = make_weight(k + l)
        if product_weight in weights:
            z = teichmuller(ring.monomial(c2, (l,)), p, ring, r)
            value = _witt_to_scalar(witt_mul(x, z), p, r, k + l)
            expected = teichmuller_lift(c, p, r) * teichmuller_lift(c2, p, r)
            ok = value is not None and _lattice_value(T, product_weight, value - expected)
            report.add('witt_mul', ok, 0, product_weight, f"[{c}x^{k}] · [{c2}x^{l}]")

    V = T.verschiebung
    for a in integral:
        k = int(a[0])
        down = scale_weight(a, Fraction(1, p))
        if down not in weights or r < 2:
            continue
        c = 1 + rng.randrange(p - 1)
        w = verschiebung_w(teichmuller(ring.monomial(c, (k,)), p, ring, r - 1))
        image = V.V(0, a).apply(_ambient_to_basis(T, 0, a, [teichmuller_lift(c, p, r)]))
        ambient = T.structure.complex.embedding_of(0, down).apply(image)[0]
        ok = ring.eq(w.components[1], ring.monomial(c, (k,))) and _lattice_value(
            T, down, ambient - p * teichmuller_lift(c, p, r))
        report.add('V_intertwines', ok, 0, down)
    D = T.structure
    for a in integral:
        pa = D.up(a)
        if pa not in weights or r < 2:
            continue
        k = int(a[0])
        c = 1 + rng.randrange(p - 1)
        w = frobenius_char_p(teichmuller(ring.monomial(c, (k,)), p, ring, r))
        image = D.F(0, a).apply(_ambient_to_basis(T, 0, a, [teichmuller_lift(c, p, r)]))
        ambient = D.complex.embedding_of(0, pa).apply(image)[0]
        ok = ring.eq(w.components[0], ring.monomial(c, (p * k,))) and _lattice_value(
            T, pa, ambient - teichmuller_lift(c, p, r - 1), level=r - 1)
        report.add('F_intertwines', ok, 0, pa)

    report.extend(check_wr_fp_isomorphism(p, r), prefix='weight0')
    report.data.update({'p': p, 'r': r, 'samples': samples, 'seed': seed, 'modulus': modulus})
    return report
