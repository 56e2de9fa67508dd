"""
Каспидальная кубика Z_p[t², t³]: насыщение, свидетели F^n(dt), Ω² и семинормализация
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

import sympy

from .models import CUSP_KIND, LINE, SaturatedModel, ambient_ring, saturated_from_tower
from ..derham.models import CUSP_RELATION_WEIGHT, cusp_ambient_form, derham_complex, frobenius_lift_structure
from ..derham.rings import AFFINE, CUSP, MonomialRing, cusp_form_gcd, cusp_monomial_text, cusp_normal_form
from ..dieudonne.saturation import SaturationTower, saturate, window_guard
from ..dieudonne.tower import quotient_Wr
from ..padic.lattice import Lattice
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, make_weight, scale_weight, weight_depth, weight_to_json
from ..utils.exceptions import ValidationError, WindowTooSmall
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)

MAX_WITNESS_POWER = 8


def default_w_max(p: int) -> int:
    return 2 * p ** 3


@dataclass
class CuspWitness:
    """F^n(dt) = coefficient · monomial · d(differential) в Ω¹ кубики"""
    p: int
    n: int
    expression: str
    weight: int
    coefficient: Fraction
    differential: str
    verified: bool = False

    def to_json(self) -> Dict[str, Any]:
        return {
            'p': self.p,
            'n': self.n,
            'expression': self.expression,
            'weight': str(self.weight),
            'coefficient': str(self.coefficient),
            'verified': self.verified,
        }


def _check_prime(p: int):
    if not sympy.isprime(p):
        raise ValidationError(f"{p} не простое")


def cusp_F_dt(p: int, prec: int = 6) -> CuspWitness:
    """
    Минимальное n с F^n(dt) = t^{p^n - 1} dt в образе Ω¹_{Z_p[t², t³]} и явная запись

    Коэффициент 1/2 (через dy) или 1/3 (через dx, при p = 2) - p-адическая единица.
    Проверяется применением F^n в модели Z_p[t].
    """
    _check_prime(p)
    n = 1
    while cusp_form_gcd(p ** n) % p == 0:
        n += 1
        if n > MAX_WITNESS_POWER:
            raise ValidationError(f"F^n(dt) не найден при n <= {MAX_WITNESS_POWER}")
    w = p ** n
    differential, shift = ('x', 3) if p == 2 else ('y', 2)
    coefficient = Fraction(1, shift)
    monomial_weight = w - shift
    if cusp_normal_form(monomial_weight) is None:
        raise ValidationError(f"Нет монома веса {monomial_weight}")
    monomial = cusp_monomial_text(monomial_weight)
    expression = f"({coefficient.numerator}/{coefficient.denominator})"
    if monomial != '1':
        expression += f"*{monomial}"
    expression += f"*d{differential}"

    line = derham_complex(MonomialRing(AFFINE, 1, p), [(p ** k,) for k in range(n + 1)], prec)
    D = frobenius_lift_structure(line)
    image = D.F_power(1, make_weight(1), n).apply([1])
    expected = cusp_ambient_form(monomial_weight, differential, coefficient).coordinates(make_weight(w), [(0,)])
    verified = image == expected
    if not verified:
        logger.error(f"Свидетель F^{n}(dt) для p={p} не совпал: {image} против {expected}")
    return CuspWitness(p, n, expression, w, coefficient, differential, verified)


def witness_stage(p: int, prec: int = 6) -> int:
    """Степень Фробениуса, на которой dt попадает в образ Ω¹ кубики (n из cusp_F_dt)"""
    witness = cusp_F_dt(p, prec)
    if not witness.verified:
        raise ValidationError(f"Свидетель F^{witness.n}(dt) для p={p} не подтвержден")
    return witness.n


@dataclass
class CuspSaturation:
    """Sat кубики и Sat прямой в общих координатах t^w dlog t; сравнение - вложение"""
    p: int
    stage: int
    cusp: SaturatedModel
    line: SaturatedModel
    cusp_tower: SaturationTower
    line_tower: SaturationTower
    report: CheckReport = field(default_factory=lambda: CheckReport(name='drw.cusp_saturation'))

    def comparison_block(self, j: int, a: Weight) -> PMatrix:
        """Матрица Sat(Ω_R) -> Sat(Ω_{Z_p[t]}) в базисах решеток"""
        source, target = self.cusp.lattice(j, a), self.line.lattice(j, a)
        return target.basis.solve(source.basis)

    def to_json(self) -> Dict[str, Any]:
        return {
            'p': self.p,
            'stage': self.stage,
            'cusp': self.cusp.to_json(),
            'report': self.report.to_json(),
        }


def _sat_weights(p: int, w_max: int, depth: int) -> List[Weight]:
    """
    Целые веса 0..p·w_max (𝒲_1 в весе a читает вес pa) и веса k/p^e глубины 1 <= e <= depth до w_max
    """
    result = [make_weight(k) for k in range(p * w_max + 1)]
    for e in range(1, depth + 1):
        for k in range(p ** e * w_max + 1):
            a = make_weight(Fraction(k, p ** e))
            if weight_depth(a, p) == e:
                result.append(a)
    return sorted(result)


def _derham_weights(p: int, sat_weights: List[Weight], base_stage: int) -> List[Weight]:
    """
    Веса модели де Рама под заданные веса Sat: p^{s+e}·a, вес свидетеля p^{s-1} и вес 6

    η_p действует на каждом весе отдельно, окно де Рама разреженное.
    """
    result = {make_weight(CUSP_RELATION_WEIGHT), make_weight(p ** max(base_stage - 1, 0))}
    for a in sat_weights:
        result.add(scale_weight(a, p ** (base_stage + weight_depth(a, p))))
    return sorted(result)


def _contains_t(lattice: Lattice) -> bool:
    return lattice.ambient_rank == 1 and lattice.contains([1])


def cusp_saturation(p: int, w_max: int = None, prec: int = 6, depth: int = 1,
                    threads: int = None) -> CuspSaturation:
    """
    Sat(Ω*_{Z_p[t², t³]}) -> Sat(Ω*_{Z_p[t]}) - изоморфизм по блокам

    Вес глубины e читается со стадии s_p + e. Веса Sat покрывают [0, w_max]
    вместе с целыми весами до p·w_max для 𝒲_1.

    Raises:
        WindowTooSmall: Если w_max < 2p³
        PrecisionExhausted: Из η_p
    """
    _check_prime(p)
    w_max = default_w_max(p) if w_max is None else w_max
    if w_max < default_w_max(p):
        raise WindowTooSmall(f"Окно кубики требует w_max >= {default_w_max(p)}, задано {w_max}",
                             weight=make_weight(default_w_max(p)))
    stage = witness_stage(p, prec)
    stages = stage + depth
    weights = _sat_weights(p, w_max, depth)
    window = _derham_weights(p, weights, stage)
    cusp_derham = derham_complex(MonomialRing(CUSP, 1, p), window, prec)
    line_derham = derham_complex(MonomialRing(AFFINE, 1, p), window, prec)
    cusp_D, line_D = frobenius_lift_structure(cusp_derham), frobenius_lift_structure(line_derham)
    for e in range(depth + 1):
        window_guard(cusp_D, [a for a in weights if weight_depth(a, p) == e], stage + e)
    cusp_tower = saturate(cusp_D, stages, threads=threads)
    line_tower = saturate(line_D, stages, threads=threads)
    ring = ambient_ring(CUSP_KIND, 1, p)
    cusp = saturated_from_tower(cusp_tower, ring, CUSP_KIND, weights, stage, name=f"Sat[cusp,p={p}]")
    line = saturated_from_tower(line_tower, ring, LINE, weights, stage, name=f"Sat[line,p={p}]")

    report = CheckReport(name='drw.cusp_saturation')
    for a in weights:
        for j in (0, 1):
            source, target = cusp.lattice(j, a), line.lattice(j, a)
            if not source.ambient_rank and not target.ambient_rank:
                continue
            report.add('inclusion', target.contains_lattice(source), j, a)
            report.add('sat_iso', source == target, j, a,
                       '' if source == target else f"{source.pivot_valuations} против {target.pivot_valuations}")
    degree2 = all(not ring.form_subsets(a, 2) for a in weights)
    report.add('line_degree2_zero', degree2, 2, None)
    one = make_weight(1)
    report.add('witness_t', _contains_t(cusp_tower.lattice_at(0, one, stage)), 0, one,
               f"стадия {stage}")
    before = cusp_tower.lattice_at(0, one, stage - 1)
    report.add('witness_stage_before', not _contains_t(before), 0, one, f"стадия {stage - 1} еще без t")
    report.data.update({'p': p, 'w_max': w_max, 'stage': stage, 'depth': depth,
                        'weights': len(weights), 'precision_left': cusp_tower.final.prec})
    logger.info(f"Насыщение кубики p={p}: стадия {stage}+{depth}, {len(report.failures)} расхождений")
    return CuspSaturation(p, stage, cusp, line, cusp_tower, line_tower, report)


def _cusp_product(left: Tuple[int, int], right: Tuple[int, int]) -> Tuple[int, int]:
    """Нормальная форма x^i y^j с x² = y³"""
    i = left[0] + right[0]
    j = left[1] + right[1]
    return i % 2, j + 3 * (i // 2)


def cusp_omega2(p: int, w_max: int = None) -> CheckReport:
    """
    Ω²_{F_p[x,y]/(x² - y³)} = R/(2x, 3y²) · dx∧dy по весам 5 + u

    Насыщенная сторона от одной переменной: степень 2 нулевая.
    """
    _check_prime(p)
    w_max = default_w_max(p) if w_max is None else w_max
    generators = [(c, g, name) for c, g, name in ((2, (1, 0), 'x'), (3, (0, 2), 'y^2')) if c % p]
    dims = []
    for u in range(0, max(w_max - 5, 0) + 1):
        basis = cusp_normal_form(u)
        dim = 0
        if basis is not None:
            dim = 1
            for _, g, _ in generators:
                rest = u - (3 * g[0] + 2 * g[1])
                other = cusp_normal_form(rest) if rest >= 0 else None
                if other is not None and _cusp_product(g, other) == basis:
                    dim = 0
        dims.append({'weight': str(5 + u), 'dim': dim})
    report = CheckReport(name='drw.cusp_omega2')
    weight5 = make_weight(5)
    report.add('dxdy_nonzero', bool(dims) and dims[0]['dim'] == 1, 2, weight5)
    ring = ambient_ring(CUSP_KIND, 1, p)
    zero = all(not ring.form_subsets(make_weight(w), 2) for w in range(w_max + 1))
    report.add('saturated_degree2_zero', zero, 2, None)
    report.data.update({'p': p, 'annihilator': [name for _, _, name in generators], 'dimensions': dims})
    return report


def cusp_seminormal_h0(sat: CuspSaturation) -> CheckReport:
    """𝒲_1Ω⁰ модели Sat кубики: одномерный кусок F_p на каждом целом весе, то есть F_p[t]"""
    D = sat.cusp.to_dieudonne()
    level = quotient_Wr(D, 1)
    report = CheckReport(name='drw.cusp_seminormal_h0')
    dims = []
    for (j, a), _ in sorted(level.kernels.items(), key=lambda item: (item[0][1], item[0][0])):
        if j != 0 or a[0].denominator != 1:
            continue
        invariants = level.invariants(0, a)
        dim = sum(e for e in invariants if e is not None) if None not in invariants else None
        report.add('dimension_one', invariants == [1], 0, a, '' if invariants == [1] else f"{invariants}")
        dims.append({'weight': weight_to_json(a), 'dim': dim})
    one = make_weight(1)
    if D.complex.has_weight(one):
        lattice = sat.cusp.lattice(0, one)
        report.add('contains_t', _contains_t(lattice), 0, one)
    report.data['dimensions'] = dims
    return report
