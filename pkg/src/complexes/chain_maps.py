"""
Цепные отображения между базированными комплексами
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from .based import BasedComplex, BlockKey
from .cohomology import mod_p_cohomology
from ..padic.fp import FpMatrix, fp_apply, fp_reduce, is_bijective
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, scale_weight
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class ChainMap:
    """
    Отображение source -> target; блок (n, w) ведет в (n, weight_factor * w)

    weight_factor = p для полулинейных отображений вроде α_F.
    """
    source: BasedComplex
    target: BasedComplex
    blocks: Dict[BlockKey, PMatrix] = field(default_factory=dict)
    weight_factor: Fraction = Fraction(1)
    name: str = ''

    def target_weight(self, w: Weight) -> Weight:
        return scale_weight(w, self.weight_factor)

    def block(self, n: int, w: Weight) -> Optional[PMatrix]:
        """Матрица блока или None, если целевой вес вне окна"""
        tw = self.target_weight(w)
        if not self.target.has_weight(tw):
            return None
        matrix = self.blocks.get((n, w))
        if matrix is None:
            return PMatrix.zeros(self.source.p, min(self.source.prec, self.target.prec),
                                 self.target.rank(n, tw), self.source.rank(n, w))
        return matrix


def chain_map_report(f: ChainMap) -> CheckReport:
    """d_T ∘ f = f ∘ d_S по всем блокам с определенным целевым весом"""
    report = CheckReport(name=f"chain_map{('.' + f.name) if f.name else ''}")
    S, T = f.source, f.target
    prec = min(S.prec, T.prec)
    for w in S.weights:
        tw = f.target_weight(w)
        if not T.has_weight(tw):
            report.untestable('commutes', None, w, "целевой вес вне окна")
            continue
        for n in S.degrees:
            if not (S.rank(n, w) or S.rank(n + 1, w)):
                continue
            left = T.d(n, tw) @ f.block(n, w)
            right = f.block(n + 1, w) @ S.d(n, w)
            ok = left.equals_at(right, prec)
            report.add('commutes', ok, n, w, '' if ok else "d∘f ≠ f∘d")
    return report


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g ∘ f (блоки определены, где определены оба)"""
    blocks = {}
    for w in f.source.weights:
        mid = f.target_weight(w)
        for n in f.source.degrees:
            fb = f.block(n, w)
            if fb is None or not f.target.has_weight(mid):
                continue
            gb = g.block(n, mid)
            if gb is None:
                continue
            blocks[(n, w)] = gb @ fb
    return ChainMap(f.source, g.target, blocks, f.weight_factor * g.weight_factor,
                    name=f"{g.name}∘{f.name}")


def induced_mod_p_map(f: ChainMap) -> Dict[BlockKey, Optional[FpMatrix]]:
    """Матрицы H(source/p) -> H(target/p) по блокам (None вне окна)"""
    p = f.source.p
    source_h = mod_p_cohomology(f.source)
    target_h = mod_p_cohomology(f.target)
    result = {}
    for (n, w), h in source_h.items():
        block = f.block(n, w)
        if block is None:
            result[(n, w)] = None
            continue
        target = target_h[(n, f.target_weight(w))]
        matrix = fp_reduce(block, p)
        images = [fp_apply(matrix, rep, p) for rep in h.representatives]
        result[(n, w)] = target.induced_matrix(images)
    return result


def mod_p_quasi_iso_report(f: ChainMap) -> CheckReport:
    """Индуцированное отображение на H(-/p) биективно в каждом блоке"""
    report = CheckReport(name=f"mod_p_quasi_iso{('.' + f.name) if f.name else ''}")
    source_h = mod_p_cohomology(f.source)
    target_h = mod_p_cohomology(f.target)
    induced = induced_mod_p_map(f)
    for (n, w), matrix in induced.items():
        tw = f.target_weight(w)
        if matrix is None and not f.target.has_weight(tw):
            report.untestable('bijective', n, w, "целевой вес вне окна")
            continue
        rows, cols = target_h[(n, tw)].size, source_h[(n, w)].size
        if not rows and not cols:
            continue
        ok = is_bijective(matrix, rows, cols, f.source.p)
        report.add('bijective', ok, n, w, f"{cols} -> {rows}")
    return report
