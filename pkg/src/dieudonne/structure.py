"""
Комплексы Дьедонне: базированный комплекс с полулинейным Фробениусом F
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..complexes.based import BasedComplex, BlockKey, validate
from ..padic.lattice import Lattice
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, scale_weight, vp, weight_to_json
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class AlgebraHooks:
    """
    Данные для проверки сравнения Fx ≡ x^p (mod p) в степени 0

    Attributes:
        generators: Мультипликативные образующие (вес, вектор коэффициентов в M^0_w)
        power: (w, x) ↦ x^p как вектор в M^0_{p·w}
    """
    generators: List[Tuple[Weight, List]]
    power: Callable[[Weight, Sequence], List]


@dataclass
class DieudonneStructure:
    """
    (M*, d, F): блок F[(n, w)] отображает M^n_w в M^n_{p·w}
    """
    complex: BasedComplex
    frobenius: Dict[BlockKey, PMatrix] = field(default_factory=dict)
    algebra: Optional[AlgebraHooks] = None
    name: str = ''

    @property
    def p(self) -> int:
        return self.complex.p

    @property
    def prec(self) -> int:
        return self.complex.prec

    @property
    def weights(self):
        return self.complex.weights

    def up(self, w: Weight) -> Weight:
        return scale_weight(w, self.p)

    def down(self, w: Weight) -> Weight:
        return scale_weight(w, Fraction(1, self.p))

    def F(self, n: int, w: Weight) -> Optional[PMatrix]:
        """Блок F на (n, w) или None, если p·w вне окна"""
        target = self.up(w)
        if not self.complex.has_weight(target):
            return None
        matrix = self.frobenius.get((n, w))
        if matrix is None:
            return PMatrix.zeros(self.p, self.prec, self.complex.rank(n, target), self.complex.rank(n, w))
        return matrix

    def F_power(self, n: int, w: Weight, r: int) -> Optional[PMatrix]:
        """F^r: M^n_w -> M^n_{p^r w} (None, если промежуточный вес вне окна)"""
        result = PMatrix.identity(self.p, self.prec, self.complex.rank(n, w))
        current = w
        for _ in range(r):
            block = self.F(n, current)
            if block is None:
                return None
            result = block @ result
            current = self.up(current)
        return result

    def restrict(self, weights: Iterable[Weight]) -> 'DieudonneStructure':
        C = self.complex.restrict(weights)
        blocks = {k: m for k, m in self.frobenius.items()
                  if C.has_weight(k[1]) and C.has_weight(self.up(k[1]))}
        return replace(self, complex=C, frobenius=blocks)

    def to_json(self):
        blocks = [{'degree': n, 'weight': weight_to_json(w), 'F': matrix.to_json()}
                  for (n, w), matrix in sorted(self.frobenius.items(), key=lambda item: (item[0][1], item[0][0]))]
        return {'name': self.name, 'complex': self.complex.to_json(), 'frobenius': blocks}

    def __repr__(self):
        return f"DieudonneStructure({self.name or 'M'}, {self.complex!r})"


def _algebra_congruence(D: DieudonneStructure, report: CheckReport):
    p = D.p
    for w, x in D.algebra.generators:
        F = D.F(0, w)
        if F is None:
            report.untestable('algebra.frobenius_congruence', 0, w, "p·w вне окна")
            continue
        fx = F.apply(x)
        xp = D.algebra.power(w, x)
        diff = [a - b for a, b in zip(fx, xp)]
        ok = all(c == 0 or vp(c, p) >= 1 for c in diff)
        if ok:
            report.add('algebra.frobenius_congruence', True, 0, w)
            continue
        # Ослабленная форма: Fx - x^p ∈ V M^0_{p²w}, V = p F^{-1} с веса p²w
        source = D.up(D.up(w))
        F_up = D.F(0, D.up(w))
        if F_up is None or not D.complex.has_weight(source) or F_up.rows != F_up.cols:
            report.add('algebra.frobenius_congruence', False, 0, w, "Fx ≢ x^p (mod p), V недоступен")
            continue
        v_block = F_up.inverse().scale(p)
        image = Lattice.full(p, F_up.cols, D.prec).image(v_block)
        ok = image.contains(diff)
        report.add('algebra.frobenius_congruence_mod_V', ok, 0, w,
                   '' if ok else "Fx - x^p не лежит в V M^0")


def validate_dieudonne(D: DieudonneStructure) -> CheckReport:
    """
    dF = pFd поблочно, целочисленность F и (для алгебр) Fx ≡ x^p mod p на образующих
    """
    C = D.complex
    p = D.p
    report = CheckReport(name='dieudonne.validate')
    report.extend(validate(C), prefix='complex')
    for w in C.weights:
        pw = D.up(w)
        if not C.has_weight(pw):
            if any(C.rank(n, w) for n in C.degrees):
                report.untestable('dF=pFd', None, w, "p·w вне окна")
            continue
        for n in C.degrees:
            F_n = D.F(n, w)
            if C.rank(n, w):
                ok = F_n.is_integral()
                if not ok:
                    report.add('frobenius.integral', False, n, w, "F имеет знаменатели")
            if not (C.rank(n, w) or C.rank(n + 1, w)):
                continue
            left = C.d(n, pw) @ F_n
            right = (D.F(n + 1, w) @ C.d(n, w)).scale(p)
            if not (left.rows and left.cols):
                continue
            ok = left.equals_at(right, D.prec)
            report.add('dF=pFd', ok, n, w, '' if ok else f"dF - pFd ≠ 0 mod {p}^{D.prec}")
    if D.algebra is not None:
        _algebra_congruence(D, report)
    if not report.ok:
        logger.warning(f"Структура Дьедонне {D.name}: {len(report.failures)} нарушений")
    return report


def frobenius_image_check(D: DieudonneStructure, exponent: int = 1) -> CheckReport:
    """F инъективен и p^e M_{pw} ⊆ F(M_w) в каждом блоке с весом p·w в окне"""
    C = D.complex
    report = CheckReport(name='dieudonne.frobenius_image')
    for w in C.weights:
        for n in C.degrees:
            if not C.rank(n, w) and not C.rank(n, D.up(w)):
                continue
            F = D.F(n, w)
            if F is None:
                report.untestable('injective', n, w, "p·w вне окна")
                continue
            report.add('injective', F.rank() == F.cols, n, w)
            image = Lattice.full(D.p, F.cols, D.prec).image(F)
            target = Lattice.full(D.p, F.rows, D.prec).scaled(exponent)
            ok = image.contains_lattice(target)
            report.add('image_contains_pM', ok, n, w, '' if ok else f"p^{exponent} M не лежит в образе F")
    return report
