"""
Усеченные векторы Витта и операции над ними
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from .polynomials import WittPolySet, structure_polys
from .rings import CoefficientRing, IntegersModPN
from ..utils.exceptions import ShapeMismatch
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WittVector:
    """Вектор Витта длины r с компонентами в кольце ring"""
    p: int
    ring: CoefficientRing
    components: Tuple[Any, ...]

    @property
    def r(self) -> int:
        return len(self.components)

    def __add__(self, other: 'WittVector') -> 'WittVector':
        return witt_add(self, other)

    def __mul__(self, other: 'WittVector') -> 'WittVector':
        return witt_mul(self, other)

    def __neg__(self) -> 'WittVector':
        return witt_neg(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WittVector) or other.r != self.r or other.p != self.p:
            return False
        return all(self.ring.eq(a, b) for a, b in zip(self.components, other.components))

    def __hash__(self):
        return hash((self.p, self.r, repr(self.components)))


def _evaluate(polyset: WittPolySet, ring: CoefficientRing, values: Sequence[Any]) -> List[Any]:
    """Значения многочленов набора на элементах кольца"""
    powers: Dict[Tuple[int, int], Any] = {}

    def power(index: int, e: int):
        key = (index, e)
        if key not in powers:
            powers[key] = ring.power(values[index], e)
        return powers[key]

    results = []
    for poly in polyset.polys:
        total = ring.zero()
        for monom, coeff in poly.terms():
            term = ring.from_int(int(coeff))
            if ring.is_zero(term):
                continue
            for index, e in enumerate(monom):
                if e:
                    term = ring.mul(term, power(index, e))
            total = ring.add(total, term)
        results.append(total)
    return results


def _check_pair(a: WittVector, b: WittVector):
    if a.p != b.p or a.r != b.r or a.ring is not b.ring:
        raise ShapeMismatch(f"Несовместимые векторы Витта: (p={a.p}, r={a.r}) и (p={b.p}, r={b.r})")


def witt_add(a: WittVector, b: WittVector) -> WittVector:
    _check_pair(a, b)
    polys = structure_polys(a.p, a.r, 'sum')
    return WittVector(a.p, a.ring, tuple(_evaluate(polys, a.ring, a.components + b.components)))


def witt_mul(a: WittVector, b: WittVector) -> WittVector:
    _check_pair(a, b)
    polys = structure_polys(a.p, a.r, 'product')
    return WittVector(a.p, a.ring, tuple(_evaluate(polys, a.ring, a.components + b.components)))


def witt_neg(a: WittVector) -> WittVector:
    polys = structure_polys(a.p, a.r, 'neg')
    return WittVector(a.p, a.ring, tuple(_evaluate(polys, a.ring, a.components)))


def witt_zero(p: int, ring: CoefficientRing, r: int) -> WittVector:
    return WittVector(p, ring, tuple(ring.zero() for _ in range(r)))


def teichmuller(x, p: int, ring: CoefficientRing, r: int) -> WittVector:
    """[x] = (x, 0, ..., 0)"""
    if r < 1:
        raise ShapeMismatch("Тейхмюллеровский представитель требует r >= 1")
    return WittVector(p, ring, (x,) + tuple(ring.zero() for _ in range(r - 1)))


def witt_scalar(n: int, p: int, ring: CoefficientRing, r: int) -> WittVector:
    """n * 1 в W_r(ring)"""
    one = teichmuller(ring.one(), p, ring, r)
    result = witt_zero(p, ring, r)
    base = one
    k = abs(n)
    while k:
        if k & 1:
            result = witt_add(result, base)
        k >>= 1
        if k:
            base = witt_add(base, base)
    return witt_neg(result) if n < 0 else result


def frobenius_w(a: WittVector) -> WittVector:
    """F: W_r -> W_{r-1} по многочленам Фробениуса"""
    if a.r < 1:
        raise ShapeMismatch("Фробениус требует r >= 1")
    polys = structure_polys(a.p, a.r - 1, 'frobenius')
    return WittVector(a.p, a.ring, tuple(_evaluate(polys, a.ring, a.components)))


def frobenius_char_p(a: WittVector) -> WittVector:
    """F в характеристике p: покомпонентная p-я степень с последующим сужением"""
    if not a.ring.char_p:
        raise ShapeMismatch("Покомпонентный Фробениус определен только в характеристике p")
    return restrict_w(WittVector(a.p, a.ring, tuple(a.ring.pth_power(c) for c in a.components)))


def verschiebung_w(a: WittVector) -> WittVector:
    """V: W_r -> W_{r+1}, сдвиг (0, a_0, ..., a_{r-1})"""
    return WittVector(a.p, a.ring, (a.ring.zero(),) + a.components)


def restrict_w(a: WittVector) -> WittVector:
    """R: W_r -> W_{r-1}"""
    if a.r < 1:
        raise ShapeMismatch("Сужение требует r >= 1")
    return WittVector(a.p, a.ring, a.components[:-1])


def ghost_vector(a: WittVector) -> List[Any]:
    """Духовные компоненты w_n = Σ p^j a_j^{p^{n-j}}"""
    ring = a.ring
    result = []
    for n in range(a.r):
        total = ring.zero()
        for j in range(n + 1):
            term = ring.mul(ring.from_int(a.p ** j), ring.power(a.components[j], a.p ** (n - j)))
            total = ring.add(total, term)
        result.append(total)
    return result


def check_wr_fp_isomorphism(p: int, r: int) -> CheckReport:
    """
    Перебором проверяет, что n -> n*1 задает изоморфизм колец Z/p^r -> W_r(F_p)
    """
    report = CheckReport(name=f'witt.wr_fp[p={p},r={r}]')
    ring = IntegersModPN(p, 1)
    order = p ** r
    one = teichmuller(1, p, ring, r)
    elements = [witt_zero(p, ring, r)]
    for _ in range(order - 1):
        elements.append(witt_add(elements[-1], one))

    distinct = len({e.components for e in elements}) == order
    report.add('injective', distinct, message=f"{order} различных элементов" if distinct else "совпадения")
    report.add('order', witt_add(elements[-1], one) == elements[0], message=f"{order}*1 = 0")

    additive = all(elements[(m + n) % order] == witt_add(elements[m], elements[n])
                   for m in range(order) for n in range(order))
    report.add('additive', additive)
    multiplicative = all(elements[(m * n) % order] == witt_mul(elements[m], elements[n])
                         for m in range(order) for n in range(order))
    report.add('multiplicative', multiplicative)
    logger.info(f"W_{r}(F_{p}) ≅ Z/{p}^{r}: {'да' if report.ok else 'нет'}")
    return report
