"""
Линейная алгебра над F_p: ранги, ядра, подфакторы
"""
from typing import List, Optional, Sequence

from .scalars import reduce_mod_p

FpMatrix = List[List[int]]


def fp_reduce(matrix, p: int) -> FpMatrix:
    """Редукция PMatrix или списка строк по модулю p"""
    rows = matrix.to_lists() if hasattr(matrix, 'to_lists') else matrix
    return [[reduce_mod_p(x, p) for x in row] for row in rows]


def fp_rref(rows: FpMatrix, p: int, limit: int = None):
    """Приведенный ступенчатый вид; возвращает (строки, опорные столбцы)"""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    width = len(rows[0]) if limit is None else limit
    pivots = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def fp_rank(rows: FpMatrix, p: int) -> int:
    return len(fp_rref(rows, p)[1])


def fp_columns(rows: FpMatrix, cols: int) -> List[List[int]]:
    return [[row[j] for row in rows] for j in range(cols)]


def fp_kernel(rows: FpMatrix, p: int, cols: int) -> List[List[int]]:
    """Базис ядра (векторы длины cols)"""
    if not rows:
        return [[int(i == j) for i in range(cols)] for j in range(cols)]
    reduced, pivots = fp_rref(rows, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-reduced[i][f]) % p
        basis.append(v)
    return basis


def fp_apply(rows: FpMatrix, vector: Sequence[int], p: int) -> List[int]:
    return [sum(a * b for a, b in zip(row, vector)) % p for row in rows]


def fp_solve(columns: List[List[int]], target: Sequence[int], p: int) -> Optional[List[int]]:
    """Коэффициенты разложения target по столбцам или None"""
    n = len(target)
    if not columns:
        return [] if all(x % p == 0 for x in target) else None
    k = len(columns)
    augmented = [[columns[j][i] for j in range(k)] + [target[i] % p] for i in range(n)]
    reduced, pivots = fp_rref(augmented, p, limit=k)
    for i in range(len(pivots), n):
        if reduced[i][k] % p:
            return None
    solution = [0] * k
    for i, c in enumerate(pivots):
        solution[c] = reduced[i][k]
    return solution


def fp_span_basis(vectors: List[List[int]], p: int, dim: int) -> List[List[int]]:
    """Базис линейной оболочки (строки приведенного вида)"""
    if not vectors:
        return []
    reduced, pivots = fp_rref(vectors, p, limit=dim)
    return [reduced[i] for i in range(len(pivots))]


class FpSubquotient:
    """
    Подфактор Z/B пространства F_p^dim с выбранными представителями классов

    Используется для когомологий: Z = ker d_n, B = im d_{n-1}.
    """

    def __init__(self, p: int, dim: int, cycles: List[List[int]], boundaries: List[List[int]]):
        self.p = p
        self.dim = dim
        self.boundaries = fp_span_basis(boundaries, p, dim)
        self.cycles = fp_span_basis(cycles, p, dim)
        reps = []
        current = list(self.boundaries)
        for z in self.cycles:
            if fp_solve(current, z, p) is None:
                reps.append(z)
                current.append(z)
        self.representatives = reps

    @property
    def size(self) -> int:
        return len(self.representatives)

    def is_cycle(self, vector: Sequence[int]) -> bool:
        return fp_solve(self.cycles, vector, self.p) is not None

    def class_of(self, vector: Sequence[int]) -> Optional[List[int]]:
        """Координаты класса вектора-цикла в базисе представителей"""
        if not self.is_cycle(vector):
            return None
        coords = fp_solve(self.boundaries + self.representatives, vector, self.p)
        if coords is None:
            return None
        return coords[len(self.boundaries):]

    def induced_matrix(self, images: List[List[int]]) -> Optional[FpMatrix]:
        """Матрица отображения в этот подфактор по образам представителей источника"""
        columns = []
        for image in images:
            coords = self.class_of(image)
            if coords is None:
                return None
            columns.append(coords)
        return [[col[i] for col in columns] for i in range(self.size)]


def cohomology_fp(d_prev: FpMatrix, d_next: FpMatrix, p: int, dim: int) -> FpSubquotient:
    """H = ker(d_next) / im(d_prev) в F_p^dim; d_prev: dim x k, d_next: m x dim"""
    cycles = fp_kernel(d_next, p, dim) if d_next else [[int(i == j) for i in range(dim)] for j in range(dim)]
    k = len(d_prev[0]) if d_prev else 0
    boundaries = fp_columns(d_prev, k) if d_prev else []
    return FpSubquotient(p, dim, cycles, boundaries)


def is_bijective(matrix: Optional[FpMatrix], rows: int, cols: int, p: int) -> bool:
    """Квадратная матрица полного ранга (пустая 0x0 - биекция)"""
    if matrix is None or rows != cols:
        return False
    if rows == 0:
        return True
    return fp_rank(matrix, p) == rows
