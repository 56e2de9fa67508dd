"""
Фильтрация Нюгора 𝒩^k M^i и сравнение gr^k с τ^{≤k}(M/p)
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .structure import DieudonneStructure
from .verschiebung import Verschiebung, derive_verschiebung
from ..padic.fp import fp_kernel, fp_reduce, fp_solve, fp_span_basis
from ..padic.lattice import Lattice, preimage, solve_integrality
from ..padic.scalars import Weight, weight_sort_key, weight_to_json
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class NygaardFiltration:
    """Решетки 𝒩^k M^i_a для k = k_min..k_max (None - вес p·a вне окна)"""
    base: DieudonneStructure
    verschiebung: Verschiebung
    k_range: Tuple[int, int]
    lattices: Dict[Tuple[int, int, Weight], Optional[Lattice]] = field(default_factory=dict)

    def get(self, k: int, i: int, a: Weight) -> Optional[Lattice]:
        return self.lattices.get((k, i, a))

    def to_json(self):
        rows = []
        for (k, i, a), lattice in sorted(self.lattices.items(),
                                         key=lambda item: (item[0][0], weight_sort_key(item[0][2]), item[0][1])):
            if lattice is None or not lattice.ambient_rank:
                continue
            rows.append({'k': k, 'degree': i, 'weight': weight_to_json(a),
                         'pivots': lattice.pivot_valuations})
        return rows


def _level(D: DieudonneStructure, V: Verschiebung, k: int, i: int, a: Weight) -> Optional[Lattice]:
    C = D.complex
    full = Lattice.full(D.p, C.rank(i, a), D.prec)
    if i >= k:
        return full
    Vb = V.V(i, D.up(a))
    if Vb is None:
        return None
    return Lattice.full(D.p, Vb.cols, D.prec).image(Vb).scaled(k - i - 1)


def nygaard(D: DieudonneStructure, k_max: int, k_min: int = 0, V: Verschiebung = None) -> NygaardFiltration:
    """
    𝒩^k M^i = M^i при i >= k, иначе p^{k-i-1} V(M^i)

    Raises:
        NotSaturated: Из derive_verschiebung
    """
    V = V or derive_verschiebung(D)
    C = D.complex
    result = NygaardFiltration(D, V, (k_min, k_max))
    for k in range(k_min, k_max + 2):
        for a in C.weights:
            for i in C.degrees:
                result.lattices[(k, i, a)] = _level(D, V, k, i, a)
    logger.debug(f"Фильтрация Нюгора {D.name}: k = {k_min}..{k_max}")
    return result


def nygaard_graded_compare(N: NygaardFiltration, k: int) -> CheckReport:
    """
    Для уровня k: вложение 𝒩^{k+1} ⊆ 𝒩^k, 𝒩^k = α_F^{-1}(p^k M), сэндвич при i < k
    и x ↦ p^{-k} α_F(x) индуцирует gr^k ≅ τ^{≤k}(M/p) на весе p·a
    """
    D = N.base
    C = D.complex
    p = D.p
    report = CheckReport(name=f"nygaard.k{k}")
    for a in C.weights:
        pa = D.up(a)
        for i in C.degrees:
            rank = C.rank(i, a)
            if not rank and not (C.has_weight(pa) and C.rank(i, pa)):
                continue
            level, level_next = N.get(k, i, a), N.get(k + 1, i, a)
            if level is None or level_next is None or not C.has_weight(pa):
                report.untestable('graded', i, a, "p·a вне окна")
                continue
            full = Lattice.full(p, rank, D.prec)
            report.add('decreasing', level.contains_lattice(level_next), i, a)
            if i < k:
                report.add('sandwich', level.contains_lattice(full.scaled(k - i))
                           and full.scaled(k - i - 1).contains_lattice(level), i, a)
            F = D.F(i, a)
            phi = F.scale_p(i - k)
            via_alpha = solve_integrality(phi) if rank else full
            report.add('alpha_preimage', via_alpha == level, i, a)
            if not rank:
                continue
            # gr^k: образ 𝒩^k под φ = p^{i-k} F по модулю p
            restricted = phi @ level.basis
            if not restricted.is_integral():
                report.add('graded_image', False, i, a, "p^{-k} α_F(𝒩^k) не целый")
                continue
            image = fp_reduce(restricted, p)
            columns = [[row[j] for row in image] for j in range(level.rank)]
            span = fp_span_basis(columns, p, C.rank(i, pa))
            dim_target = C.rank(i, pa)
            if i < k:
                ok = len(span) == dim_target
            elif i == k:
                cycles = fp_kernel(fp_reduce(C.d(i, pa), p), p, dim_target) if C.rank(i + 1, pa) \
                    else [[int(r == c) for r in range(dim_target)] for c in range(dim_target)]
                ok = len(span) == len(cycles) and all(fp_solve(cycles, v, p) is not None for v in span)
            else:
                ok = not span
            report.add('graded_image', ok, i, a, f"dim образа {len(span)}")
            kernel = preimage(phi, Lattice.full(p, C.rank(i, pa), D.prec).scaled(1)).intersect(level)
            report.add('graded_kernel', kernel == level_next, i, a)
    return report
