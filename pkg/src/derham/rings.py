"""
Мономиальные кольца: тор (Лоран), аффинное пространство и каспидальная кубика
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import List, Optional, Tuple

from ..padic.scalars import Weight
from ..utils.exceptions import ValidationError

LAURENT = 'laurent'
AFFINE = 'affine'
CUSP = 'cusp'
KINDS = (LAURENT, AFFINE, CUSP)

FP = 'Fp'
ZP = 'Zp'


@dataclass(frozen=True)
class MonomialRing:
    """
    Градуированное мономами кольцо над F_p или Z/p^N

    Для каспа n = 1, переменная t, образующие x = t³, y = t² и соотношение x² = y³;
    нормальный базис {y^j, x·y^j}.
    """
    kind: str
    n: int
    p: int
    coeff: str = ZP

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"Неизвестный тип кольца: {self.kind}")
        if self.kind == CUSP and self.n != 1:
            raise ValidationError("Каспидальная кубика - кольцо от одной переменной t")
        if self.coeff not in (FP, ZP):
            raise ValidationError(f"Неизвестные коэффициенты: {self.coeff}")

    @property
    def is_smooth(self) -> bool:
        return self.kind != CUSP

    def has_monomial(self, weight: Weight) -> bool:
        """Есть ли моном данного веса в кольце"""
        if any(c.denominator != 1 for c in weight):
            return False
        if self.kind == LAURENT:
            return True
        if self.kind == AFFINE:
            return all(c >= 0 for c in weight)
        w = weight[0]
        return w == 0 or w >= 2

    def form_subsets(self, weight: Weight, degree: int) -> List[Tuple[int, ...]]:
        """Множества S базиса x^a dlog x_S степени degree на весе a"""
        if self.kind == CUSP:
            return []
        if self.kind == LAURENT:
            support = range(self.n)
        else:
            support = [i for i in range(self.n) if weight[i] > 0]
        return list(combinations(support, degree))

    def generators(self) -> List[Weight]:
        """Мультипликативные образующие как веса мономов"""
        if self.kind == CUSP:
            return [(Fraction(3),), (Fraction(2),)]
        result = [tuple(Fraction(int(i == j)) for j in range(self.n)) for i in range(self.n)]
        if self.kind == LAURENT:
            result += [tuple(Fraction(-int(i == j)) for j in range(self.n)) for i in range(self.n)]
        return result

    def __str__(self):
        return f"{self.kind}(n={self.n}, p={self.p}, {self.coeff})"


def cusp_normal_form(w: int) -> Optional[Tuple[int, int]]:
    """Моном x^i y^j (i ∈ {0, 1}) веса 3i + 2j = w или None"""
    if w < 0 or w == 1:
        return None
    if w % 2 == 0:
        return 0, w // 2
    return 1, (w - 3) // 2


def cusp_monomial_text(w: int) -> str:
    """Запись нормального монома веса w: '1', 'x', 'y^2', 'x*y' ..."""
    i, j = cusp_normal_form(w)
    parts = []
    if i:
        parts.append('x')
    if j == 1:
        parts.append('y')
    elif j > 1:
        parts.append(f"y^{j}")
    return '*'.join(parts) or '1'


def cusp_form_gcd(w: int) -> Optional[int]:
    """
    Образующая образа Ω¹_R в Ω¹_{Z[t]} на весе w в базисе t^w dlog t

    y^j dy = 2 t^{2j+2} dlog t, x y^j dy = 2 t^{2j+5} dlog t,
    y^j dx = 3 t^{2j+3} dlog t, x y^j dx = 3 t^{2j+6} dlog t.
    """
    coefficients = []
    if w >= 2 and w % 2 == 0:
        coefficients.append(2)
    if w >= 5 and w % 2 == 1:
        coefficients.append(2)
    if w >= 3 and w % 2 == 1:
        coefficients.append(3)
    if w >= 6 and w % 2 == 0:
        coefficients.append(3)
    if not coefficients:
        return None
    result = 0
    for c in coefficients:
        result = gcd(result, c)
    return result
