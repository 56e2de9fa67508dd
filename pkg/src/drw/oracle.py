"""
Сверка двух независимых вычислений Sat: итерации η_p и интегральные формы
"""
import logging

from .models import LINE, TORUS, ambient_ring, integral_forms
from ..derham.models import derham_complex, frobenius_lift_structure
from ..dieudonne.saturation import saturate
from ..dieudonne.structure import DieudonneStructure
from ..padic.lattice import Lattice
from ..padic.scalars import scale_weight
from ..utils.exceptions import ValidationError
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


def oracle_compare_saturation(kind: str, n: int, p: int, s: int, bound, prec: int = 8,
                              threads: int = None) -> CheckReport:
    """
    Решетки стадии s ряда η_p для Ω*_A против интегральных форм глубины s

    Модель де Рама строится на весах p^s·a, чтобы каждая решетка Sat
    считывалась со стадии s.
    """
    if kind not in (TORUS, LINE):
        raise ValidationError(f"Сверка определена для тора и прямой, получено {kind}")
    forms = integral_forms(kind, n, p, s, bound, prec)
    ring = ambient_ring(kind, n, p)
    weights = [scale_weight(a, p ** s) for a in forms.weights]
    model = derham_complex(ring, weights, prec)
    tower = saturate(frobenius_lift_structure(model), s, threads=threads, targets=forms.weights)
    report = CheckReport(name='drw.oracle')
    blocks = 0
    for a in forms.weights:
        for j in range(n + 1):
            expected = forms.lattice(j, a)
            if not expected.ambient_rank:
                continue
            actual = tower.lattice_at(j, a, s)
            if not actual.ambient_rank:
                actual = Lattice.zero(p, expected.ambient_rank, actual.prec)
            ok = actual == expected
            blocks += 1
            report.add('lattice_equal', ok, j, a,
                       '' if ok else f"η_p: {actual.pivot_valuations}, формы: {expected.pivot_valuations}")
    report.data.update({'kind': kind, 'n': n, 'p': p, 's': s, 'blocks': blocks,
                        'precision_left': tower.final.prec})
    logger.info(f"Сверка Sat {kind} n={n} p={p} s={s}: {blocks} блоков, {len(report.failures)} расхождений")
    return report


def frobenius_isogeny_check(D: DieudonneStructure, exponent: int = None) -> CheckReport:
    """
    p^e M_{pa} ⊆ p^n F(M^n_a) поблочно; по умолчанию e - верхняя степень комплекса
    """
    C = D.complex
    e = C.degree_range[1] if exponent is None else exponent
    report = CheckReport(name='drw.frobenius_isogeny')
    for a in C.weights:
        pa = D.up(a)
        if not C.has_weight(pa):
            continue
        for n in C.degrees:
            rank = C.rank(n, pa)
            if not rank:
                continue
            image = Lattice.full(D.p, C.rank(n, a), D.prec).image(D.F(n, a).scale_p(n))
            target = Lattice.full(D.p, rank, D.prec).scaled(e)
            ok = image.contains_lattice(target)
            report.add('p^e_in_alpha_image', ok, n, pa, '' if ok else f"p^{e} M не лежит в образе α_F")
    return report
