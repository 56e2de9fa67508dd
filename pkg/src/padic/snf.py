"""
Нормальная форма Смита над Z_(p)
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .matrix import PMatrix
from .scalars import vp, pow_p
from ..utils.exceptions import PrecisionExhausted

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SNFResult:
    """
    Результат snf: left * M * right = diagonal

    diag_valuations отсортированы по возрастанию, None - точный ноль
    (всегда в конце списка).
    """
    diag_valuations: List[Optional[int]]
    left: PMatrix
    right: PMatrix
    diagonal: PMatrix
    prec: int

    @property
    def rank(self) -> int:
        return sum(1 for v in self.diag_valuations if v is not None)

    @property
    def unresolved(self) -> List[int]:
        """Индексы диагональных элементов с нормированием >= prec"""
        return [i for i, v in enumerate(self.diag_valuations) if v is not None and v >= self.prec]

    def reconstruction_ok(self, source: PMatrix) -> bool:
        """Проверка тождества left * M * right = diagonal с точностью prec"""
        return (self.left @ source @ self.right).equals_at(self.diagonal, self.prec)


def snf(matrix: PMatrix) -> SNFResult:
    """
    Нормальная форма Смита над Z_(p)

    Опорный элемент - элемент минимального нормирования, при равенстве
    первый в построчном порядке. Элементы могут иметь знаменатели p^k:
    исключение использует только множители из Z_(p).

    Raises:
        PrecisionExhausted: Если prec < 1
    """
    if matrix.prec < 1:
        raise PrecisionExhausted(f"snf: точность {matrix.prec} < 1")

    p = matrix.p
    rows, cols = matrix.rows, matrix.cols
    a = matrix.to_lists()
    left = [[Fraction(int(i == j)) for j in range(rows)] for i in range(rows)]
    right = [[Fraction(int(i == j)) for j in range(cols)] for i in range(cols)]
    valuations: List[Optional[int]] = []

    for t in range(min(rows, cols)):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0:
                    v = vp(a[i][j], p)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        v, pi, pj = best

        # Перестановка опорного элемента в позицию (t, t)
        a[t], a[pi] = a[pi], a[t]
        left[t], left[pi] = left[pi], left[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        for row in right:
            row[t], row[pj] = row[pj], row[t]

        # Нормировка опорного элемента до p^v
        unit = a[t][t] / pow_p(p, v)
        a[t] = [x / unit for x in a[t]]
        left[t] = [x / unit for x in left[t]]
        pivot = a[t][t]

        for i in range(t + 1, rows):
            if a[i][t] != 0:
                factor = a[i][t] / pivot
                a[i] = [x - factor * y for x, y in zip(a[i], a[t])]
                left[i] = [x - factor * y for x, y in zip(left[i], left[t])]
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                factor = a[t][j] / pivot
                for row in a:
                    row[j] -= factor * row[t]
                for row in right:
                    row[j] -= factor * row[t]
        valuations.append(v)

    valuations.extend([None] * (min(rows, cols) - len(valuations)))
    diagonal = PMatrix(p, matrix.prec, a, cols=cols)
    result = SNFResult(
        diag_valuations=valuations,
        left=PMatrix(p, matrix.prec, left, cols=rows),
        right=PMatrix(p, matrix.prec, right, cols=cols),
        diagonal=diagonal,
        prec=matrix.prec,
    )
    if result.unresolved:
        logger.debug(f"snf: {len(result.unresolved)} диагональных элементов за пределом точности {matrix.prec}")
    return result
