"""
Насыщенные модели: решетки по (степень, вес) в объемлющих dlog-координатах
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from ..complexes.based import BasedComplex
from ..complexes.windows import box_window
from ..derham.forms import MonomialForm
from ..derham.rings import AFFINE, LAURENT, MonomialRing
from ..dieudonne.saturation import SaturationTower
from ..dieudonne.structure import DieudonneStructure
from ..padic.lattice import Lattice, solve_integrality
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, scale_weight, weight_depth, weight_sort_key, weight_to_json
from ..utils.exceptions import PrecisionExhausted, ValidationError, WindowTooSmall

logger = logging.getLogger(__name__)

TORUS = 'torus'
LINE = 'line'
CUSP_KIND = 'cusp'
RING_KINDS = {TORUS: LAURENT, LINE: AFFINE}


def ambient_ring(kind: str, n: int, p: int) -> MonomialRing:
    """Объемлющее мономиальное кольцо модели (для кубики - Z_p[t])"""
    if kind == CUSP_KIND:
        return MonomialRing(AFFINE, 1, p)
    if kind not in RING_KINDS:
        raise ValidationError(f"Неизвестный тип модели: {kind}")
    if kind == LINE and n != 1:
        raise ValidationError("Аффинная прямая - модель от одной переменной")
    return MonomialRing(RING_KINDS[kind], n, p)


def ambient_differential(ring: MonomialRing, j: int, a: Weight, prec: int) -> PMatrix:
    """Рациональная матрица d: x^a dlog_S (|S| = j) -> степень j+1"""
    sources = ring.form_subsets(a, j)
    targets = ring.form_subsets(a, j + 1)
    columns = [MonomialForm.monomial(ring.n, a, S).d().coordinates(a, targets) for S in sources]
    return PMatrix.from_columns(ring.p, prec, columns, len(targets))


@dataclass
class SaturatedModel:
    """
    Sat(Ω*) как набор решеток в Q-пространствах форм x^a dlog_S

    F действует тождественно на коэффициентах (вес a ↦ pa), V = p F^{-1}.
    """
    ring: MonomialRing
    kind: str
    depth: int
    weights: Tuple[Weight, ...]
    lattices: Dict[Tuple[int, Weight], Lattice] = field(default_factory=dict)
    prec: int = 8
    name: str = ''

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def degree_range(self) -> Tuple[int, int]:
        return 0, self.ring.n

    def lattice(self, j: int, a: Weight) -> Lattice:
        return self.lattices[(j, a)]

    def to_dieudonne(self) -> DieudonneStructure:
        """
        Комплекс с базисом решеток: d' = L^{-1} d L, F = L_{pa}^{-1} L_a

        Допустимы все веса Z[1/p]^n, так что вес a/p вне окна - непроверяемый.
        """
        p, prec = self.p, self.prec
        ranks, diff, embedding, frobenius = {}, {}, {}, {}
        weight_set = set(self.weights)
        for a in self.weights:
            for j in range(self.ring.n + 1):
                L = self.lattices.get((j, a))
                if L is None or not L.rank:
                    continue
                ranks[(j, a)] = L.rank
                embedding[(j, a)] = L.basis
            for j in range(self.ring.n):
                if not ranks.get((j, a)) or not ranks.get((j + 1, a)):
                    continue
                d = ambient_differential(self.ring, j, a, prec)
                coords = embedding[(j + 1, a)].solve(d @ embedding[(j, a)])
                if not coords.is_integral():
                    raise ValidationError(f"d не сохраняет решетку в степени {j}")
                diff[(j, a)] = coords.with_prec(prec)
        # F читает базис веса pa, поэтому второй проход после всех весов
        for a in self.weights:
            pa = scale_weight(a, p)
            if pa not in weight_set:
                continue
            for j in range(self.ring.n + 1):
                if not ranks.get((j, a)):
                    continue
                target = embedding.get((j, pa))
                if target is None:
                    raise ValidationError(f"F: ненулевой блок степени {j} переходит в нулевой")
                coords = target.solve(embedding[(j, a)])
                if not coords.is_integral():
                    raise ValidationError(f"F не сохраняет решетку в степени {j}")
                frobenius[(j, a)] = coords.with_prec(prec)
        C = BasedComplex(p, prec, self.degree_range, self.weights, ranks, diff, embedding,
                         weight_depth=None, meta={'model': self.kind, 'depth': self.depth})
        return DieudonneStructure(C, frobenius, name=self.name or f"Sat[{self.kind}]")

    def to_json(self) -> Dict[str, Any]:
        blocks = []
        for (j, a), L in sorted(self.lattices.items(), key=lambda item: (weight_sort_key(item[0][1]), item[0][0])):
            if not L.ambient_rank:
                continue
            blocks.append({'degree': j, 'weight': weight_to_json(a), 'lattice': L.to_json()})
        return {'kind': self.kind, 'p': self.p, 'n': self.ring.n, 'depth': self.depth, 'blocks': blocks}


class IntegralFormModel(SaturatedModel):
    """
    Формы с показателями из p^{-s}Z^n, у которых коэффициенты и d целые
    """


def integral_forms(kind: str, n: int, p: int, s: int, bound, prec: int = 8, lower=None) -> IntegralFormModel:
    """
    L_{j,a} = {c целый : d(Σ c_S x^a dlog_S) целый} на окне |a_i| <= bound глубины s

    Нижняя граница lower заменяет -bound (для прямой окно всегда неотрицательное).

    Raises:
        PrecisionExhausted: Если prec <= s (из solve_integrality)
        WindowTooSmall: Пустое окно
    """
    ring = ambient_ring(kind, n, p)
    if kind == CUSP_KIND:
        raise ValidationError("Для кубики замкнутой формулы нет, используйте cusp_saturation")
    if prec <= s:
        raise PrecisionExhausted(f"Интегральные формы глубины {s} требуют точности больше {s}")
    weights = box_window(p, n, bound, depth=s, nonnegative=(kind == LINE), lower=lower)
    if not weights:
        raise WindowTooSmall("Пустое окно весов")
    lattices = {}
    for a in weights:
        for j in range(n + 1):
            rank = len(ring.form_subsets(a, j))
            targets = len(ring.form_subsets(a, j + 1)) if j < n else 0
            if not targets:
                lattices[(j, a)] = Lattice.full(p, rank, prec - s)
                continue
            lattices[(j, a)] = solve_integrality(ambient_differential(ring, j, a, prec), prec=prec)
    prec_left = prec - s
    lattices = {k: Lattice(p, L.ambient_rank, L.columns(), prec_left) for k, L in lattices.items()}
    logger.info(f"Интегральные формы {kind} n={n} p={p} s={s}: {len(weights)} весов")
    return IntegralFormModel(ring, kind, s, tuple(weights), lattices, prec_left, name=f"IF[{kind},n={n},s={s}]")


def saturated_from_tower(tower: SaturationTower, ring: MonomialRing, kind: str, weights, base_stage: int,
                         name: str = '') -> SaturatedModel:
    """
    Решетки Sat по стадиям: вес глубины e читается со стадии base_stage + e

    Raises:
        WindowTooSmall: Если вес p^s·a вне окна стадии
    """
    p = ring.p
    lattices = {}
    depth = 0
    for a in weights:
        e = weight_depth(a, p)
        depth = max(depth, e)
        stage = base_stage + e
        if stage > tower.depth:
            raise WindowTooSmall(f"Нужна стадия {stage}, построено {tower.depth}", weight=a)
        for j in range(ring.n + 1):
            L = tower.lattice_at(j, a, stage)
            if not L.ambient_rank:
                L = Lattice.zero(p, len(ring.form_subsets(a, j)), L.prec)
            lattices[(j, a)] = L
    prec = tower.final.prec
    lattices = {k: Lattice(p, L.ambient_rank, L.columns(), prec) for k, L in lattices.items()}
    return SaturatedModel(ring, kind, depth, tuple(weights), lattices, prec, name=name)
