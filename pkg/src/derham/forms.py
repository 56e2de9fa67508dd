"""
Явное исчисление мономиальных форм c · x^a dlog x_S
"""
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..padic.scalars import Weight, scale_weight, to_fraction
from ..utils.exceptions import ShapeMismatch

Term = Tuple[Weight, Tuple[int, ...]]


def sort_sign(indices: Sequence[int]) -> int:
    """Знак сортирующей перестановки; 0 при повторе индекса"""
    if len(set(indices)) != len(indices):
        return 0
    inversions = sum(1 for i in range(len(indices)) for j in range(i + 1, len(indices))
                     if indices[i] > indices[j])
    return -1 if inversions % 2 else 1


@dataclass
class MonomialForm:
    """
    Сумма Σ c · x^a dlog x_S; множители dlog хранятся по возрастанию индекса

    Attributes:
        n: Число переменных
        terms: (a, S) -> c
    """
    n: int
    terms: Dict[Term, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for (a, S), c in self.terms.items():
            c = to_fraction(c)
            if len(a) != self.n:
                raise ShapeMismatch(f"Вес {a} не из Z^{self.n}")
            if c:
                cleaned[(tuple(to_fraction(x) for x in a), tuple(S))] = c
        self.terms = cleaned

    @staticmethod
    def monomial(n: int, a: Sequence, S: Sequence[int] = (), c=1) -> 'MonomialForm':
        sign = sort_sign(list(S))
        return MonomialForm(n, {(tuple(a), tuple(sorted(S))): to_fraction(c) * sign})

    @property
    def degrees(self) -> List[int]:
        return sorted({len(S) for _, S in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: 'MonomialForm') -> 'MonomialForm':
        result = defaultdict(Fraction, self.terms)
        for key, c in other.terms.items():
            result[key] += c
        return MonomialForm(self.n, dict(result))

    def __neg__(self) -> 'MonomialForm':
        return self.scale(-1)

    def __sub__(self, other: 'MonomialForm') -> 'MonomialForm':
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialForm) and self.n == other.n and self.terms == other.terms

    def scale(self, c) -> 'MonomialForm':
        c = to_fraction(c)
        return MonomialForm(self.n, {key: v * c for key, v in self.terms.items()})

    def d(self) -> 'MonomialForm':
        """d(x^a dlog_S) = Σ_{i∉S} a_i x^a dlog x_i ∧ dlog_S"""
        result = defaultdict(Fraction)
        for (a, S), c in self.terms.items():
            for i in range(self.n):
                if i in S or not a[i]:
                    continue
                sign = -1 if sum(1 for s in S if s < i) % 2 else 1
                result[(a, tuple(sorted(S + (i,))))] += sign * a[i] * c
        return MonomialForm(self.n, dict(result))

    def wedge(self, other: 'MonomialForm') -> 'MonomialForm':
        result = defaultdict(Fraction)
        for (a, S), c in self.terms.items():
            for (b, T), e in other.terms.items():
                sign = sort_sign(list(S + T))
                if not sign:
                    continue
                weight = tuple(x + y for x, y in zip(a, b))
                result[(weight, tuple(sorted(S + T)))] += sign * c * e
        return MonomialForm(self.n, dict(result))

    def frobenius(self, p: int) -> 'MonomialForm':
        """Мономиальный подъем: x^a dlog_S ↦ x^{pa} dlog_S"""
        return MonomialForm(self.n, {(scale_weight(a, p), S): c for (a, S), c in self.terms.items()})

    def cartier(self, p: int) -> 'MonomialForm':
        """Представитель Cart(c x^a dlog_S) = c^p x^{pa} dlog_S; для F_p c^p = c"""
        return self.frobenius(p)

    def coordinates(self, weight: Weight, subsets: List[Tuple[int, ...]]) -> List[Fraction]:
        """Координаты компоненты веса weight в базисе subsets"""
        index = {S: i for i, S in enumerate(subsets)}
        vector = [Fraction(0)] * len(subsets)
        for (a, S), c in self.terms.items():
            if a != tuple(weight):
                continue
            if S not in index:
                raise ShapeMismatch(f"dlog_{S} вне базиса веса {weight}")
            vector[index[S]] += c
        return vector

    @staticmethod
    def from_coordinates(n: int, weight: Weight, subsets: List[Tuple[int, ...]], vector) -> 'MonomialForm':
        return MonomialForm(n, {(tuple(weight), S): c for S, c in zip(subsets, vector)})

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for (a, S), c in sorted(self.terms.items(), key=lambda item: (len(item[0][1]), item[0])):
            monomial = '*'.join(f"x{i + 1}^{e}" for i, e in enumerate(a) if e) or '1'
            dlogs = '^'.join(f"dlog x{i + 1}" for i in S)
            parts.append(f"{c}*{monomial}" + (f" {dlogs}" if dlogs else ''))
        return ' + '.join(parts)
