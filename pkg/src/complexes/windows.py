"""
Окна весов: прямоугольные окна заданной глубины и замыкание по a ↦ p·a, a ↦ a/p
"""
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Set

from ..padic.scalars import Weight, scale_weight, weight_sort_key


def box_window(p: int, n: int, bound, depth: int = 0, nonnegative: bool = False,
               lower=None) -> List[Weight]:
    """
    Веса a ∈ p^{-depth} Z^n с |a_i| <= bound (или lower <= a_i <= bound)

    Args:
        nonnegative: Только a_i >= 0 (аффинное пространство)
    """
    bound = Fraction(bound)
    low = Fraction(0) if nonnegative else (-bound if lower is None else Fraction(lower))
    scale = p ** depth
    numerators = range(int(low * scale) - 1, int(bound * scale) + 2)
    values = sorted({Fraction(k, scale) for k in numerators if low <= Fraction(k, scale) <= bound})
    return sorted(product(values, repeat=n), key=weight_sort_key)


def closure_window(p: int, weights: Iterable[Weight], up: int = 0, down: int = 0) -> List[Weight]:
    """Веса p^k·a для -down <= k <= up по всем a из weights"""
    result: Set[Weight] = set()
    for w in weights:
        for k in range(-down, up + 1):
            result.add(scale_weight(w, Fraction(p) ** k))
    return sorted(result, key=weight_sort_key)
