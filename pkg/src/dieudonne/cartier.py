"""
Проверка типа Картье: F индуцирует изоморфизм M/p -> H*(M/p)
"""
import logging

from .structure import DieudonneStructure
from ..complexes.cohomology import mod_p_cohomology
from ..padic.fp import fp_reduce, is_bijective
from ..utils.exceptions import WindowTooSmall
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


def cartier_type_check(D: DieudonneStructure) -> CheckReport:
    """
    Полулинейное отображение (M/p)^n_a -> H^n(M/p)_{pa}, x ↦ [F x], биективно

    Веса b без допустимого b/p требуют H^n(M/p)_b = 0; веса, у которых
    a или p·a вне окна, непроверяемы.

    Raises:
        WindowTooSmall: Если в окне нет ни одного проверяемого веса
    """
    C = D.complex
    p = D.p
    hs = mod_p_cohomology(C)
    report = CheckReport(name='dieudonne.cartier_type')
    tested = 0
    for b in C.weights:
        a = D.down(b)
        for n in C.degrees:
            h = hs[(n, b)]
            if not C.is_legit_weight(a):
                tested += 1
                ok = h.size == 0
                report.add('cartier_bijective', ok, n, b, '' if ok else f"H^{n}(M/p) ≠ 0 без прообраза веса")
                continue
            if not C.has_weight(a):
                if h.size or C.rank(n, b):
                    report.untestable('cartier_bijective', n, b, "вес b/p вне окна")
                continue
            rank = C.rank(n, a)
            if not rank and not h.size:
                tested += 1
                continue
            tested += 1
            F = fp_reduce(D.F(n, a), p)
            images = [[row[j] for row in F] for j in range(rank)]
            matrix = h.induced_matrix(images)
            if matrix is None:
                report.add('cartier_bijective', False, n, b, "F x не является коциклом по модулю p")
                continue
            ok = is_bijective(matrix, h.size, rank, p)
            report.add('cartier_bijective', ok, n, b,
                       '' if ok else f"dim (M/p)_a = {rank}, dim H = {h.size}")
    if not tested:
        raise WindowTooSmall("Нет весов, для которых проверка типа Картье определена")
    if not report.ok:
        logger.info(f"{D.name} не типа Картье: {len(report.failures)} блоков")
    return report
