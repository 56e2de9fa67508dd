"""
Базированные весовые коцепные комплексы над Z_(p)
"""
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..padic.lattice import kernel_lattice
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, weight_depth, weight_sort_key, format_weight_text, weight_to_json
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)

BlockKey = Tuple[int, Weight]


class BasedComplex:
    """
    Комплекс свободных модулей, разложенный по весам

    Attributes:
        p: Простое число
        prec: Рабочая точность N
        degree_range: (d_min, d_max)
        weights: Упорядоченный кортеж весов окна
        ranks: Ранг блока (степень, вес); отсутствующий ключ - ноль
        diff: Дифференциал из блока (n, w) в (n+1, w)
        embedding: Координаты базиса блока в объемлющем комплексе (если есть)
        weight_depth: None - допустимы все веса из Z[1/p]^n, k - только p^{-k}Z^n
    """

    def __init__(self, p: int, prec: int, degree_range: Tuple[int, int], weights: Iterable[Weight],
                 ranks: Dict[BlockKey, int], diff: Dict[BlockKey, PMatrix] = None,
                 embedding: Dict[BlockKey, PMatrix] = None, labels: Dict[BlockKey, List[str]] = None,
                 weight_depth: Optional[int] = 0, meta: Dict[str, Any] = None):
        self.p = p
        self.prec = prec
        self.degree_range = (int(degree_range[0]), int(degree_range[1]))
        self.weights = tuple(sorted(set(weights), key=weight_sort_key))
        self._weight_set = set(self.weights)
        self.ranks = {k: v for k, v in ranks.items() if v}
        self.diff = dict(diff or {})
        self.embedding = dict(embedding or {})
        self.labels = dict(labels or {})
        self.weight_depth = weight_depth
        self.meta = dict(meta or {})

    # --- Доступ к блокам ---

    @property
    def degrees(self) -> range:
        return range(self.degree_range[0], self.degree_range[1] + 1)

    def rank(self, n: int, w: Weight) -> int:
        return self.ranks.get((n, w), 0)

    def d(self, n: int, w: Weight) -> PMatrix:
        matrix = self.diff.get((n, w))
        if matrix is None:
            return PMatrix.zeros(self.p, self.prec, self.rank(n + 1, w), self.rank(n, w))
        return matrix

    def embedding_of(self, n: int, w: Weight) -> PMatrix:
        matrix = self.embedding.get((n, w))
        if matrix is None:
            return PMatrix.identity(self.p, self.prec, self.rank(n, w))
        return matrix

    def labels_of(self, n: int, w: Weight) -> List[str]:
        return self.labels.get((n, w), [f"e{i}" for i in range(self.rank(n, w))])

    def has_weight(self, w: Weight) -> bool:
        return w in self._weight_set

    def is_legit_weight(self, w: Weight) -> bool:
        """Вес допустим для модели (может лежать вне окна)"""
        if self.weight_depth is None:
            return True
        try:
            return weight_depth(w, self.p) <= self.weight_depth
        except ValueError:
            return False

    def is_zero(self) -> bool:
        return not self.ranks

    def total_rank(self, n: int) -> int:
        return sum(self.rank(n, w) for w in self.weights)

    # --- Построение новых комплексов ---

    def derive(self, **changes) -> 'BasedComplex':
        fields = dict(p=self.p, prec=self.prec, degree_range=self.degree_range, weights=self.weights,
                      ranks=self.ranks, diff=self.diff, embedding=self.embedding, labels=self.labels,
                      weight_depth=self.weight_depth, meta=self.meta)
        fields.update(changes)
        return BasedComplex(**fields)

    def restrict(self, weights: Iterable[Weight]) -> 'BasedComplex':
        keep = set(weights) & self._weight_set
        pick = lambda data: {k: v for k, v in data.items() if k[1] in keep}
        return self.derive(weights=keep, ranks=pick(self.ranks), diff=pick(self.diff),
                           embedding=pick(self.embedding), labels=pick(self.labels))

    def with_prec(self, prec: int) -> 'BasedComplex':
        return self.derive(prec=prec, diff={k: m.with_prec(prec) for k, m in self.diff.items()})

    def to_json(self) -> Dict[str, Any]:
        blocks = []
        for w in self.weights:
            for n in self.degrees:
                if not self.rank(n, w) and not self.rank(n + 1, w):
                    continue
                entry = {
                    'degree': n,
                    'weight': weight_to_json(w),
                    'rank': self.rank(n, w),
                    'd': self.d(n, w).to_json(),
                }
                if (n, w) in self.embedding:
                    entry['embedding'] = self.embedding[(n, w)].to_json()
                if (n, w) in self.labels:
                    entry['labels'] = self.labels[(n, w)]
                blocks.append(entry)
        return {
            'p': self.p,
            'prec': self.prec,
            'degree_range': list(self.degree_range),
            'weight_depth': 'any' if self.weight_depth is None else self.weight_depth,
            'blocks': blocks,
        }

    def __repr__(self):
        return (f"BasedComplex(p={self.p}, prec={self.prec}, degrees={self.degree_range}, "
                f"weights={len(self.weights)}, blocks={len(self.ranks)})")


def zero_complex(p: int, prec: int, degree_range=(0, 0), weights=((),)) -> BasedComplex:
    return BasedComplex(p, prec, degree_range, weights, {})


def single_weight_complex(p: int, prec: int, degree_start: int, matrices: Sequence[Sequence[Sequence]],
                          ranks: Sequence[int], weight: Weight = ()) -> BasedComplex:
    """
    Комплекс одного веса из списка матриц

    Args:
        degree_start: Степень первого модуля
        matrices: d_n как списки строк, len(matrices) == len(ranks) - 1
        ranks: Ранги модулей подряд
    """
    d_min = degree_start
    d_max = degree_start + len(ranks) - 1
    block_ranks = {(d_min + i, weight): r for i, r in enumerate(ranks)}
    diff = {}
    for i, rows in enumerate(matrices):
        diff[(d_min + i, weight)] = PMatrix(p, prec, rows, cols=ranks[i])
    return BasedComplex(p, prec, (d_min, d_max), [weight], block_ranks, diff)


def validate(complex_: BasedComplex) -> CheckReport:
    """
    Проверяет d∘d = 0 с точностью prec и согласованность блоков по весам
    """
    report = CheckReport(name='complex.validate')
    C = complex_
    for key in C.diff:
        if key[1] not in C._weight_set:
            report.add('weight.preserved', False, key[0], key[1], "блок дифференциала вне окна весов")
    for w in C.weights:
        for n in C.degrees:
            d = C.d(n, w)
            if d.shape != (C.rank(n + 1, w), C.rank(n, w)):
                report.add('shape', False, n, w, f"d имеет размер {d.shape}, ожидалось "
                                                  f"{(C.rank(n + 1, w), C.rank(n, w))}")
                continue
            if n + 1 > C.degree_range[1]:
                continue
            d_next = C.d(n + 1, w)
            if d_next.cols != d.rows:
                continue
            square = d_next @ d
            ok = square.is_zero(C.prec)
            if not ok or square.rows * square.cols:
                report.add('d_squared', ok, n, w,
                           '' if ok else f"d∘d ≠ 0 mod {C.p}^{C.prec} (мин. нормирование {square.min_valuation()})")
    if not report.ok:
        logger.warning(f"Комплекс не прошел проверку: {len(report.failures)} нарушений")
    return report


def truncate_leq(complex_: BasedComplex, k: int) -> BasedComplex:
    """
    Каноническое усечение τ^{≤k}: степени > k обнуляются, степень k заменяется на ker d
    """
    C = complex_
    d_min, d_max = C.degree_range
    if k >= d_max:
        return C
    ranks, diff, embedding = {}, {}, {}
    if k >= d_min:
        for w in C.weights:
            for n in range(d_min, k):
                ranks[(n, w)] = C.rank(n, w)
                if n < k - 1 and (n, w) in C.diff:
                    diff[(n, w)] = C.diff[(n, w)]
                if (n, w) in C.embedding:
                    embedding[(n, w)] = C.embedding[(n, w)]
            kernel = kernel_lattice(C.d(k, w))
            ranks[(k, w)] = kernel.rank
            if kernel.rank:
                basis = kernel.basis
                embedding[(k, w)] = C.embedding_of(k, w) @ basis
                if k - 1 >= d_min and C.rank(k - 1, w):
                    diff[(k - 1, w)] = kernel.coordinate_matrix(C.d(k - 1, w))
    result = C.derive(ranks=ranks, diff=diff, embedding=embedding, labels={})
    logger.debug(f"τ^(≤{k}): {sum(ranks.values())} базисных векторов")
    return result


def complexes_equal(a: BasedComplex, b: BasedComplex) -> bool:
    """Совпадение рангов и дифференциалов по всем блокам"""
    if a.p != b.p or set(a.weights) != set(b.weights):
        return False
    for w in a.weights:
        for n in range(min(a.degree_range[0], b.degree_range[0]), max(a.degree_range[1], b.degree_range[1]) + 1):
            if a.rank(n, w) != b.rank(n, w):
                return False
            if a.d(n, w).to_lists() != b.d(n, w).to_lists():
                return False
    return True
