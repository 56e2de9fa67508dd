"""
Решетки над Z_(p) в Q^n в каноническом эрмитовом виде
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from .matrix import PMatrix
from .scalars import vp, pow_p, residue, to_fraction
from .snf import snf
from ..utils.exceptions import NotASublattice, PrecisionExhausted, ShapeMismatch

logger = logging.getLogger(__name__)


class Lattice:
    """
    Конечно порожденный Z_(p)-подмодуль Q^ambient_rank

    Базис хранится в столбцовой эрмитовой форме: у каждого столбца есть
    опорная строка (выше нее нули), опорный элемент равен p^v, опорные строки
    возрастают, а элементы в опорной строке у предыдущих столбцов приведены
    к каноническому остатку по модулю p^v.
    """

    def __init__(self, p: int, ambient_rank: int, generators: Sequence[Sequence], prec: int):
        self.p = p
        self.ambient_rank = ambient_rank
        self.prec = prec
        columns = [[to_fraction(x) for x in col] for col in generators]
        for col in columns:
            if len(col) != ambient_rank:
                raise ShapeMismatch(f"Образующая длины {len(col)} в пространстве ранга {ambient_rank}")
        self._columns, self._pivots = _hermite(p, ambient_rank, columns)

    # --- Конструкторы ---

    @staticmethod
    def full(p: int, ambient_rank: int, prec: int) -> 'Lattice':
        return Lattice(p, ambient_rank, [[int(i == j) for i in range(ambient_rank)]
                                         for j in range(ambient_rank)], prec)

    @staticmethod
    def zero(p: int, ambient_rank: int, prec: int) -> 'Lattice':
        return Lattice(p, ambient_rank, [], prec)

    @staticmethod
    def from_matrix(matrix: PMatrix, prec: int = None) -> 'Lattice':
        """Решетка, порожденная столбцами матрицы"""
        return Lattice(matrix.p, matrix.rows, matrix.columns(), matrix.prec if prec is None else prec)

    # --- Доступ ---

    @property
    def rank(self) -> int:
        return len(self._columns)

    @property
    def basis(self) -> PMatrix:
        return PMatrix.from_columns(self.p, self.prec, self._columns, self.ambient_rank)

    def columns(self) -> List[List[Fraction]]:
        return [list(col) for col in self._columns]

    @property
    def pivot_valuations(self) -> List[int]:
        return [v for _, v in self._pivots]

    def is_full(self) -> bool:
        return self.rank == self.ambient_rank

    # --- Принадлежность ---

    def coordinates(self, vector: Sequence) -> Optional[List[Fraction]]:
        """Координаты вектора в базисе решетки или None, если вектор не лежит в решетке"""
        remaining = [to_fraction(x) for x in vector]
        if len(remaining) != self.ambient_rank:
            raise ShapeMismatch("Длина вектора не совпадает с рангом пространства")
        coords = []
        for col, (row, v) in zip(self._columns, self._pivots):
            c = remaining[row] / pow_p(self.p, v)
            if c != 0 and vp(c, self.p) < 0:
                return None
            coords.append(c)
            if c != 0:
                remaining = [x - c * y for x, y in zip(remaining, col)]
        if any(x != 0 for x in remaining):
            return None
        return coords

    def contains(self, vector: Sequence) -> bool:
        return self.coordinates(vector) is not None

    def contains_lattice(self, other: 'Lattice') -> bool:
        return all(self.contains(col) for col in other._columns)

    def coordinate_matrix(self, matrix: PMatrix) -> PMatrix:
        """
        Координаты столбцов матрицы в базисе решетки

        Raises:
            NotASublattice: Если какой-то столбец не лежит в решетке
        """
        coords = []
        for j, col in enumerate(matrix.columns()):
            c = self.coordinates(col)
            if c is None:
                raise NotASublattice(f"Столбец {j} не лежит в решетке")
            coords.append(c)
        return PMatrix.from_columns(self.p, min(self.prec, matrix.prec), coords, self.rank)

    # --- Операции ---

    def sum(self, other: 'Lattice') -> 'Lattice':
        self._check(other)
        return Lattice(self.p, self.ambient_rank, self._columns + other._columns,
                       min(self.prec, other.prec))

    def scaled(self, k: int) -> 'Lattice':
        """p^k * L"""
        factor = pow_p(self.p, k)
        return Lattice(self.p, self.ambient_rank, [[factor * x for x in col] for col in self._columns],
                       self.prec)

    def image(self, matrix: PMatrix) -> 'Lattice':
        """Образ решетки под линейным отображением"""
        if matrix.cols != self.ambient_rank:
            raise ShapeMismatch("image: число столбцов не совпадает с рангом пространства")
        return Lattice(self.p, matrix.rows, [matrix.apply(col) for col in self._columns],
                       min(self.prec, matrix.prec))

    def intersect(self, other: 'Lattice') -> 'Lattice':
        self._check(other)
        if self.rank == 0 or other.rank == 0:
            return Lattice.zero(self.p, self.ambient_rank, min(self.prec, other.prec))
        coords = preimage(self.basis, other)
        return Lattice(self.p, self.ambient_rank, [self.basis.apply(c) for c in coords.columns()],
                       min(self.prec, other.prec))

    def _check(self, other: 'Lattice'):
        if self.p != other.p or self.ambient_rank != other.ambient_rank:
            raise ShapeMismatch("Решетки в разных пространствах")

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.p == other.p \
            and self.ambient_rank == other.ambient_rank and self._columns == other._columns

    def __hash__(self):
        return hash((self.p, self.ambient_rank, tuple(tuple(c) for c in self._columns)))

    def __repr__(self):
        return f"Lattice(p={self.p}, rank={self.rank}/{self.ambient_rank}, basis={self._columns})"

    def to_json(self):
        return {
            'ambient_rank': self.ambient_rank,
            'rank': self.rank,
            'basis': self.basis.to_json(),
        }


def _hermite(p: int, n: int, columns: List[List[Fraction]]):
    """Столбцовая эрмитова форма над Z_(p): (столбцы, [(опорная строка, v)])"""
    cols = [list(c) for c in columns if any(x != 0 for x in c)]
    done: List[List[Fraction]] = []
    pivots = []
    for row in range(n):
        best = None
        for j, col in enumerate(cols):
            if col[row] != 0:
                v = vp(col[row], p)
                if best is None or v < best[0]:
                    best = (v, j)
        if best is None:
            continue
        v, j = best
        pivot_col = cols.pop(j)
        unit = pivot_col[row] / pow_p(p, v)
        pivot_col = [x / unit for x in pivot_col]
        pivot = pivot_col[row]
        rest = []
        for col in cols:
            if col[row] != 0:
                factor = col[row] / pivot
                col = [x - factor * y for x, y in zip(col, pivot_col)]
            if any(x != 0 for x in col):
                rest.append(col)
        cols = rest
        # Канонический остаток в опорной строке у уже готовых столбцов
        for k, col in enumerate(done):
            r = residue(col[row], p, v)
            q = (col[row] - r) / pivot
            if q != 0:
                done[k] = [x - q * y for x, y in zip(col, pivot_col)]
        done.append(pivot_col)
        pivots.append((row, v))
    return done, pivots


def kernel_lattice(matrix: PMatrix) -> Lattice:
    """Насыщенная решетка ker(M) ∩ Z_(p)^cols"""
    result = snf(matrix)
    right = result.right
    cols = [right.column(j) for j in range(result.rank, matrix.cols)]
    return Lattice(matrix.p, matrix.cols, cols, matrix.prec)


def solve_integrality(matrix: PMatrix, prec: int = None) -> Lattice:
    """
    Решетка {c ∈ Z_(p)^cols : M c ∈ Z_(p)^rows}

    Элементы M имеют вид p^{-s} * (целое); тратит s разрядов точности.

    Raises:
        PrecisionExhausted: Если точность N <= s
    """
    prec = matrix.prec if prec is None else prec
    depth = matrix.denominator_depth()
    if prec <= depth:
        raise PrecisionExhausted(f"solve_integrality: точность {prec} не превышает глубину знаменателя {depth}")
    result = snf(matrix)
    right = result.right
    gens = []
    for j in range(matrix.cols):
        v = result.diag_valuations[j] if j < len(result.diag_valuations) else None
        shift = max(0, -v) if v is not None else 0
        factor = pow_p(matrix.p, shift)
        gens.append([factor * x for x in right.column(j)])
    return Lattice(matrix.p, matrix.cols, gens, prec - depth)


def preimage(matrix: PMatrix, target: Lattice) -> Lattice:
    """
    Решетка {x ∈ Z_(p)^cols : M x ∈ target}

    Через snf базиса target: L B R = D, условие распадается на
    делимость верхних координат и равенство нулю нижних.
    """
    if matrix.rows != target.ambient_rank:
        raise ShapeMismatch("preimage: размерность образа не совпадает с решеткой")
    p = matrix.p
    prec = min(matrix.prec, target.prec)
    m = target.rank
    if m == 0:
        return kernel_lattice(matrix)
    result = snf(target.basis)
    transformed = result.left @ matrix
    rows = transformed.to_lists()
    top = [[x / pow_p(p, result.diag_valuations[i]) for x in rows[i]] for i in range(m)]
    bottom = rows[m:]
    if bottom:
        kernel = kernel_lattice(PMatrix(p, prec, bottom, cols=matrix.cols))
    else:
        kernel = Lattice.full(p, matrix.cols, prec)
    if kernel.rank == 0:
        return Lattice.zero(p, matrix.cols, prec)
    k_basis = kernel.basis
    restricted = PMatrix(p, prec, top, cols=matrix.cols) @ k_basis
    inner = solve_integrality(restricted, prec=prec + restricted.denominator_depth())
    gens = [k_basis.apply(col) for col in inner.columns()]
    return Lattice(p, matrix.cols, gens, prec)


def cokernel_invariants(sub: Lattice, amb: Lattice) -> List[Optional[int]]:
    """
    Инвариантные множители amb/sub: показатели e (слагаемые Z/p^e) по
    возрастанию, затем None для каждого свободного слагаемого

    Raises:
        NotASublattice: Если sub не содержится в amb
    """
    if sub.ambient_rank != amb.ambient_rank:
        raise ShapeMismatch("cokernel_invariants: разные объемлющие пространства")
    for j, col in enumerate(sub.columns()):
        if not amb.contains(col):
            raise NotASublattice(f"Образующая {j} подрешетки не лежит в объемлющей решетке")
    free = amb.rank - sub.rank
    if sub.rank == 0:
        return [None] * free
    coords = amb.coordinate_matrix(sub.basis)
    result = snf(coords)
    exponents = sorted(v for v in result.diag_valuations if v is not None and v > 0)
    return exponents + [None] * free


def index_exponent(sub: Lattice, amb: Lattice) -> Optional[int]:
    """log_p [amb : sub] или None, если индекс бесконечен"""
    invariants = cokernel_invariants(sub, amb)
    if any(e is None for e in invariants):
        return None
    return sum(invariants)
