"""
Плотные матрицы над Z_(p) с общей рабочей точностью
"""
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

from .scalars import PScalar, to_fraction, vp, is_integral, pow_p
from ..utils.exceptions import ShapeMismatch


class PMatrix:
    """
    Неизменяемая матрица rows x cols с точными элементами Z_(p) (или Q)

    Элементы хранятся как Fraction; prec - сертифицированная точность, по
    которой сравниваются значения ("ноль" = нормирование >= prec).
    """

    __slots__ = ('p', 'prec', 'rows', 'cols', '_data')

    def __init__(self, p: int, prec: int, data: Sequence[Sequence[Any]], cols: int = None):
        if prec <= 0:
            raise ShapeMismatch(f"Точность должна быть положительной, получено {prec}")
        rows = [tuple(to_fraction(x) for x in row) for row in data]
        width = len(rows[0]) if rows else (cols or 0)
        for row in rows:
            if len(row) != width:
                raise ShapeMismatch("Строки матрицы разной длины")
        self.p = p
        self.prec = prec
        self.rows = len(rows)
        self.cols = width
        self._data = tuple(rows)

    # --- Конструкторы ---

    @staticmethod
    def zeros(p: int, prec: int, rows: int, cols: int) -> 'PMatrix':
        return PMatrix(p, prec, [[0] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(p: int, prec: int, n: int) -> 'PMatrix':
        return PMatrix(p, prec, [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @staticmethod
    def diagonal(p: int, prec: int, entries: Sequence[Any]) -> 'PMatrix':
        n = len(entries)
        return PMatrix(p, prec, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @staticmethod
    def from_columns(p: int, prec: int, columns: Sequence[Sequence[Any]], rows: int) -> 'PMatrix':
        if not columns:
            return PMatrix.zeros(p, prec, rows, 0)
        return PMatrix(p, prec, [[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    # --- Доступ ---

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return self._data[i][j]

    def entry(self, i: int, j: int) -> PScalar:
        return PScalar.from_rational(self.p, self._data[i][j], self.prec)

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self._data]

    def row(self, i: int) -> List[Fraction]:
        return list(self._data[i])

    def column(self, j: int) -> List[Fraction]:
        return [row[j] for row in self._data]

    def columns(self) -> List[List[Fraction]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def with_prec(self, prec: int) -> 'PMatrix':
        return PMatrix(self.p, prec, self._data, cols=self.cols)

    # --- Арифметика ---

    def _same(self, other: 'PMatrix'):
        if self.p != other.p:
            raise ShapeMismatch(f"Разные простые: {self.p} и {other.p}")

    def __matmul__(self, other: 'PMatrix') -> 'PMatrix':
        self._same(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"Нельзя умножить {self.shape} на {other.shape}")
        other_cols = other.columns()
        data = [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in other_cols]
                for row in self._data]
        return PMatrix(self.p, min(self.prec, other.prec), data, cols=other.cols)

    def __add__(self, other: 'PMatrix') -> 'PMatrix':
        self._same(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"Нельзя сложить {self.shape} и {other.shape}")
        data = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._data, other._data)]
        return PMatrix(self.p, min(self.prec, other.prec), data, cols=self.cols)

    def __neg__(self) -> 'PMatrix':
        return self.scale(-1)

    def __sub__(self, other: 'PMatrix') -> 'PMatrix':
        return self + (-other)

    def scale(self, c) -> 'PMatrix':
        c = to_fraction(c)
        return PMatrix(self.p, self.prec, [[c * a for a in row] for row in self._data], cols=self.cols)

    def scale_p(self, k: int) -> 'PMatrix':
        """Умножение на p^k"""
        return self.scale(pow_p(self.p, k))

    def transpose(self) -> 'PMatrix':
        return PMatrix(self.p, self.prec, [list(col) for col in zip(*self._data)] if self.rows else [],
                       cols=self.rows)

    def hstack(self, other: 'PMatrix') -> 'PMatrix':
        if self.rows != other.rows:
            raise ShapeMismatch("hstack: разное число строк")
        data = [list(a) + list(b) for a, b in zip(self._data, other._data)]
        return PMatrix(self.p, min(self.prec, other.prec), data, cols=self.cols + other.cols)

    def vstack(self, other: 'PMatrix') -> 'PMatrix':
        if self.cols != other.cols:
            raise ShapeMismatch("vstack: разное число столбцов")
        return PMatrix(self.p, min(self.prec, other.prec), list(self._data) + list(other._data),
                       cols=self.cols)

    def apply(self, vector: Sequence[Any]) -> List[Fraction]:
        """Умножение на вектор-столбец"""
        if len(vector) != self.cols:
            raise ShapeMismatch("Длина вектора не совпадает с числом столбцов")
        vector = [to_fraction(x) for x in vector]
        return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self._data]

    # --- Свойства ---

    def min_valuation(self) -> Optional[int]:
        vals = [vp(a, self.p) for row in self._data for a in row if a != 0]
        return min(vals) if vals else None

    def denominator_depth(self) -> int:
        """Наименьшее s >= 0, при котором p^s * M целая над Z_(p)"""
        v = self.min_valuation()
        return max(0, -v) if v is not None else 0

    def is_integral(self) -> bool:
        return all(is_integral(a, self.p) for row in self._data for a in row)

    def is_zero(self, at_prec: int = None) -> bool:
        """Все элементы имеют нормирование >= at_prec (по умолчанию prec)"""
        bound = self.prec if at_prec is None else at_prec
        for row in self._data:
            for a in row:
                if a != 0 and vp(a, self.p) < bound:
                    return False
        return True

    def is_exact_zero(self) -> bool:
        return all(a == 0 for row in self._data for a in row)

    def equals_at(self, other: 'PMatrix', at_prec: int = None) -> bool:
        if self.shape != other.shape:
            return False
        return (self - other).is_zero(at_prec)

    def __eq__(self, other) -> bool:
        return isinstance(other, PMatrix) and self.p == other.p and self.shape == other.shape \
            and self._data == other._data

    def __hash__(self):
        return hash((self.p, self.shape, self._data))

    def __repr__(self):
        body = '; '.join(' '.join(str(a) for a in row) for row in self._data)
        return f"PMatrix(p={self.p}, {self.rows}x{self.cols}, [{body}])"

    # --- Точная линейная алгебра над Q ---

    def rank(self) -> int:
        return len(_rref(self.to_lists())[1])

    def solve(self, rhs: 'PMatrix') -> 'PMatrix':
        """
        Точное решение self * X = rhs для совместной системы

        Raises:
            ShapeMismatch: Если система несовместна или решение не единственно
        """
        if rhs.rows != self.rows:
            raise ShapeMismatch("solve: разное число строк")
        augmented = [list(a) + list(b) for a, b in zip(self._data, rhs._data)]
        reduced, pivots = _rref(augmented, limit=self.cols)
        if len(pivots) != self.cols:
            raise ShapeMismatch("solve: матрица не имеет полного столбцового ранга")
        for i in range(len(pivots), self.rows):
            if any(x != 0 for x in reduced[i][self.cols:]):
                raise ShapeMismatch("solve: система несовместна")
        solution = [reduced[i][self.cols:] for i in range(self.cols)]
        return PMatrix(self.p, min(self.prec, rhs.prec), solution, cols=rhs.cols)

    def inverse(self) -> 'PMatrix':
        if self.rows != self.cols:
            raise ShapeMismatch("Обратная матрица только для квадратных")
        return self.solve(PMatrix.identity(self.p, self.prec, self.rows))

    # --- Сериализация ---

    def to_json(self) -> Dict[str, Any]:
        return {
            'rows': self.rows,
            'cols': self.cols,
            'prec': self.prec,
            'entries': [[self.entry(i, j).to_json() for j in range(self.cols)] for i in range(self.rows)],
        }

    @staticmethod
    def from_json(p: int, data: Dict[str, Any]) -> 'PMatrix':
        entries = [[PScalar.from_json(p, x).to_fraction() for x in row] for row in data['entries']]
        return PMatrix(p, int(data['prec']), entries, cols=int(data['cols']))


def _rref(rows: List[List[Fraction]], limit: int = None):
    """Приведенный ступенчатый вид над Q; limit - число столбцов для поиска опорных"""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    width = len(rows[0]) if limit is None else limit
    pivots = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def stack_columns(p: int, prec: int, blocks: Iterable[PMatrix], rows: int) -> PMatrix:
    """Горизонтальная склейка списка матриц (пустой список - матрица rows x 0)"""
    result = PMatrix.zeros(p, prec, rows, 0)
    for block in blocks:
        result = result.hstack(block) if result.cols else block
    return result
