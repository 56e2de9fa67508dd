"""
Комплекс Бокштейна на H*(M/p) и отображение γ: (η_p M)/p -> (H*(M/p), β)
"""
import logging
from dataclasses import dataclass, field
from typing import Dict

from .based import BasedComplex, BlockKey, validate
from .chain_maps import ChainMap, chain_map_report, mod_p_quasi_iso_report
from .cohomology import mod_p_cohomology
from .eta import eta_p
from ..padic.fp import FpSubquotient, fp_reduce
from ..padic.matrix import PMatrix
from ..padic.scalars import reduce_mod_p
from ..utils.exceptions import PrecisionExhausted, ShapeMismatch
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class BocksteinComplex:
    """
    Комплекс над F_p: степень n - H^n(M/p) в базисе представителей, дифференциал β

    complex хранится как BasedComplex с prec = 1 (сравнение по модулю p).
    """
    complex: BasedComplex
    subquotients: Dict[BlockKey, FpSubquotient] = field(default_factory=dict)

    def beta(self, n: int, w) -> PMatrix:
        return self.complex.d(n, w)

    def report(self) -> CheckReport:
        """β∘β = 0 по всем блокам"""
        return validate(self.complex)


def _lift_quotient(C: BasedComplex, n: int, w, vector) -> list:
    """Целый подъем x вектора по модулю p и вектор p^{-1} d x по модулю p"""
    image = C.d(n, w).apply(vector)
    return [reduce_mod_p(y / C.p, C.p) for y in image]


def bockstein(complex_: BasedComplex) -> BocksteinComplex:
    """
    β([x]) = [p^{-1} d x̃] для подъема x̃ представителя коцикла x из M/p

    Raises:
        PrecisionExhausted: Если prec < 2
    """
    C = complex_
    if C.prec < 2:
        raise PrecisionExhausted(f"Бокштейн требует точности >= 2, получено {C.prec}")
    p = C.p
    hs = mod_p_cohomology(C)
    ranks, diff = {}, {}
    for w in C.weights:
        for n in C.degrees:
            h = hs[(n, w)]
            ranks[(n, w)] = h.size
            if n + 1 > C.degree_range[1]:
                continue
            target = hs[(n + 1, w)]
            columns = []
            for rep in h.representatives:
                y = _lift_quotient(C, n, w, rep)
                coords = target.class_of(y)
                if coords is None:
                    raise ShapeMismatch(f"p^(-1)dx не является коциклом по модулю p (степень {n})")
                columns.append(coords)
            if h.size and target.size:
                diff[(n, w)] = PMatrix.from_columns(p, 1, columns, target.size)
    result = C.derive(prec=1, ranks=ranks, diff=diff, embedding={}, labels={}, meta={})
    logger.debug(f"Бокштейн: размерности {sum(ranks.values())} по {len(C.weights)} весам")
    return BocksteinComplex(result, hs)


def gamma_map(complex_: BasedComplex, eta: BasedComplex = None, bock: BocksteinComplex = None) -> ChainMap:
    """
    γ: (η_p C)/p -> Bockstein(C), p^n y ↦ [y mod p]

    Raises:
        PrecisionExhausted: Из η_p или bockstein
    """
    C = complex_
    p = C.p
    eta = eta or eta_p(C)
    bock = bock or bockstein(C)
    blocks = {}
    for w in C.weights:
        for n in C.degrees:
            r = eta.rank(n, w)
            if not r:
                continue
            h = bock.subquotients[(n, w)]
            ys = fp_reduce(eta.embedding_of(n, w).scale_p(-n), p)
            columns = []
            for j in range(r):
                coords = h.class_of([row[j] for row in ys])
                if coords is None:
                    raise ShapeMismatch(f"Столбец базиса η_p не дает коцикла по модулю p (степень {n})")
                columns.append(coords)
            blocks[(n, w)] = PMatrix.from_columns(p, 1, columns, h.size)
    return ChainMap(eta.with_prec(1), bock.complex, blocks, name='gamma')


def gamma_report(complex_: BasedComplex) -> CheckReport:
    """γ - цепное отображение и квазиизоморфизм по модулю p"""
    C = complex_
    bock = bockstein(C)
    gamma = gamma_map(C, bock=bock)
    report = CheckReport(name='gamma')
    report.extend(bock.report(), prefix='beta')
    report.extend(chain_map_report(gamma), prefix='gamma')
    report.extend(mod_p_quasi_iso_report(gamma), prefix='gamma')
    return report
