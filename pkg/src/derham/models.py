"""
Модели де Рама мономиальных колец и мономиальный подъем Фробениуса
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence

from .forms import MonomialForm
from .rings import AFFINE, CUSP, FP, LAURENT, ZP, MonomialRing, cusp_form_gcd, cusp_monomial_text, cusp_normal_form
from ..complexes.based import BasedComplex
from ..complexes.windows import box_window
from ..dieudonne.structure import AlgebraHooks, DieudonneStructure
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, make_weight, scale_weight
from ..utils.exceptions import ValidationError, WindowTooSmall
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)

CUSP_RELATION_WEIGHT = 6


@dataclass
class DeRhamModel:
    """
    Ω*_A на окне весов в базисе x^a dlog x_S (для кубики - образ в Ω*_{Z_p[t]})

    Для кубики вложение блока задает координаты базиса в t^w dlog t.
    """
    ring: MonomialRing
    complex: BasedComplex
    frobenius_lift: str = 'monomial'

    @property
    def p(self) -> int:
        return self.ring.p

    def subsets(self, degree: int, weight: Weight):
        return self.ring.form_subsets(weight, degree)

    def form_vector(self, form: MonomialForm, degree: int, weight: Weight):
        return form.coordinates(weight, self.subsets(degree, weight))


def _label(weight: Weight, S) -> str:
    monomial = '*'.join(f"x{i + 1}^{e}" for i, e in enumerate(weight) if e) or '1'
    return monomial + ''.join(f" dlog x{i + 1}" for i in S)


def _is_integral_weight(weight: Weight) -> bool:
    return all(c.denominator == 1 for c in weight)


def _smooth_complex(ring: MonomialRing, weights: List[Weight], prec: int) -> BasedComplex:
    ranks, diff, labels = {}, {}, {}
    for a in weights:
        for j in range(ring.n + 1):
            subsets = ring.form_subsets(a, j)
            if subsets and ring.has_monomial(a):
                ranks[(j, a)] = len(subsets)
                labels[(j, a)] = [_label(a, S) for S in subsets]
        for j in range(ring.n):
            source, target = ranks.get((j, a), 0), ranks.get((j + 1, a), 0)
            if not source or not target:
                continue
            sources = ring.form_subsets(a, j)
            targets = ring.form_subsets(a, j + 1)
            columns = [MonomialForm.monomial(ring.n, a, S).d().coordinates(a, targets) for S in sources]
            diff[(j, a)] = PMatrix.from_columns(ring.p, prec, columns, len(targets))
    return BasedComplex(ring.p, prec, (0, ring.n), weights, ranks, diff, labels=labels, weight_depth=0,
                        meta={'ring': str(ring)})


def _cusp_complex(ring: MonomialRing, weights: List[Weight], prec: int) -> BasedComplex:
    ranks, diff, embedding, labels = {}, {}, {}, {}
    p = ring.p
    for a in weights:
        w = int(a[0])
        if cusp_normal_form(w) is None:
            continue
        ranks[(0, a)] = 1
        labels[(0, a)] = [cusp_monomial_text(w)]
        g = cusp_form_gcd(w)
        if g is None:
            continue
        ranks[(1, a)] = 1
        labels[(1, a)] = [f"{g}*t^{w} dlog t"]
        embedding[(1, a)] = PMatrix(p, prec, [[g]])
        diff[(0, a)] = PMatrix(p, prec, [[Fraction(w, g)]])
    return BasedComplex(p, prec, (0, 1), weights, ranks, diff, embedding, labels, weight_depth=0,
                        meta={'ring': str(ring)})


def cusp_ambient_form(monomial_weight: int, differential: str, coeff=1) -> MonomialForm:
    """c · m · d(x) или c · m · d(y) в координатах t^w dlog t (m - моном веса monomial_weight)"""
    shift, factor = {'x': (3, 3), 'y': (2, 2)}[differential]
    return MonomialForm(1, {((Fraction(monomial_weight + shift),), (0,)): Fraction(coeff) * factor})


def cusp_relation_report(model: DeRhamModel) -> CheckReport:
    """
    2x dx = 3y² dy в образе Ω¹_R ⊂ Ω¹_{Z_p[t]}

    Raises:
        WindowTooSmall: Если вес 6 вне окна
    """
    weight = make_weight(CUSP_RELATION_WEIGHT)
    C = model.complex
    if not C.has_weight(weight):
        raise WindowTooSmall("Соотношение 2x dx = 3y² dy живет в весе 6", weight=weight)
    report = CheckReport(name='derham.cusp_relation')
    left = cusp_ambient_form(3, 'x', 2)
    right = cusp_ambient_form(4, 'y', 3)
    report.add('relation', left == right, 1, weight, '' if left == right else f"{left} ≠ {right}")
    ambient = PMatrix(model.p, C.prec, [left.coordinates(weight, [(0,)])])
    coords = C.embedding_of(1, weight).solve(ambient.transpose())
    ok = coords.is_integral()
    report.add('relation_in_image', ok, 1, weight)
    return report


def derham_complex(ring: MonomialRing, weights: Iterable[Sequence], prec: int) -> DeRhamModel:
    """
    Весовые блоки Ω*_A на окне; над F_p точность 1

    Raises:
        WindowTooSmall: Для кубики без веса 6 (замыкание соотношения)
        ValidationError: Вес не той размерности
    """
    window = []
    for a in weights:
        weight = make_weight(*a)
        if len(weight) != ring.n:
            raise ValidationError(f"Вес {a} не из Z^{ring.n}")
        if _is_integral_weight(weight):
            window.append(weight)
    if ring.coeff == FP:
        prec = 1
    if ring.kind == CUSP:
        complex_ = _cusp_complex(ring, window, prec)
        model = DeRhamModel(ring, complex_)
        cusp_relation_report(model)
    else:
        model = DeRhamModel(ring, _smooth_complex(ring, window, prec))
    logger.debug(f"Комплекс де Рама {ring}: {len(window)} весов")
    return model


def _power_hook(p: int):
    def power(w: Weight, x: Sequence) -> List[Fraction]:
        return [Fraction(x[0]) ** p]
    return power


def algebra_hooks(ring: MonomialRing) -> AlgebraHooks:
    """Образующие как мономы (вектор [1] в M^0_w) и x ↦ x^p"""
    return AlgebraHooks([(g, [Fraction(1)]) for g in ring.generators()], _power_hook(ring.p))


def frobenius_lift_structure(model: DeRhamModel) -> DieudonneStructure:
    """
    F от φ(x_i) = x_i^p: тождественный на коэффициентах в dlog-базисе

    Для кубики F(dx) = x^{p-1}dx, F(dy) = y^{p-1}dy; в базисе g_w t^w dlog t
    блок степени 1 равен g_w / g_{pw}.

    Raises:
        ValidationError: Если коэффициенты F_p
    """
    ring = model.ring
    if ring.coeff == FP:
        raise ValidationError("Подъем Фробениуса требует коэффициентов Z/p^N")
    C = model.complex
    p = ring.p
    blocks = {}
    for a in C.weights:
        pa = scale_weight(a, p)
        if not C.has_weight(pa):
            continue
        for n in C.degrees:
            rank = C.rank(n, a)
            if not rank:
                continue
            if ring.kind == CUSP and n == 1:
                w = int(a[0])
                ratio = Fraction(cusp_form_gcd(w), cusp_form_gcd(p * w))
                blocks[(n, a)] = PMatrix(p, C.prec, [[ratio]])
            else:
                blocks[(n, a)] = PMatrix.identity(p, C.prec, rank)
    return DieudonneStructure(C, blocks, algebra_hooks(ring), name=f"Omega[{ring.kind}]")


def laurent_model(n: int, p: int, bound: int, prec: int, coeff: str = ZP) -> DeRhamModel:
    return derham_complex(MonomialRing(LAURENT, n, p, coeff), box_window(p, n, bound), prec)


def affine_model(n: int, p: int, bound: int, prec: int, coeff: str = ZP) -> DeRhamModel:
    return derham_complex(MonomialRing(AFFINE, n, p, coeff), box_window(p, n, bound, nonnegative=True), prec)


def cusp_model(p: int, w_max: int, prec: int) -> DeRhamModel:
    return derham_complex(MonomialRing(CUSP, 1, p), [(w,) for w in range(w_max + 1)], prec)
