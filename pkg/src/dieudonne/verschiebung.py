"""
Вершибунг V = p F^{-1} на насыщенных комплексах
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from .alpha import is_saturated
from .structure import DieudonneStructure
from ..complexes.based import BlockKey
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight
from ..utils.exceptions import NotSaturated
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class Verschiebung:
    """Блок blocks[(n, b)] отображает M^n_b в M^n_{b/p}"""
    structure: DieudonneStructure
    blocks: Dict[BlockKey, PMatrix] = field(default_factory=dict)

    def V(self, n: int, b: Weight) -> Optional[PMatrix]:
        """Блок V на (n, b); нулевая матрица, если M_{b/p} = 0 по допустимости; None вне окна"""
        D = self.structure
        C = D.complex
        a = D.down(b)
        if (n, b) in self.blocks:
            return self.blocks[(n, b)]
        if not C.is_legit_weight(a) or (C.has_weight(a) and C.has_weight(b)):
            rows = C.rank(n, a) if C.has_weight(a) else 0
            return PMatrix.zeros(D.p, D.prec, rows, C.rank(n, b))
        return None

    def V_power(self, n: int, b: Weight, r: int) -> Optional[PMatrix]:
        """V^r: M^n_b -> M^n_{b/p^r}"""
        D = self.structure
        result = PMatrix.identity(D.p, D.prec, D.complex.rank(n, b))
        current = b
        for _ in range(r):
            block = self.V(n, current)
            if block is None:
                return None
            result = block @ result
            current = D.down(current)
        return result


def derive_verschiebung(D: DieudonneStructure, check: bool = True) -> Verschiebung:
    """
    Единственный V с FV = p: V_{pa -> a} = p · F_{n,a}^{-1}

    Raises:
        NotSaturated: Если D не насыщен или p F^{-1} не целый
    """
    C = D.complex
    if check:
        saturated = is_saturated(D)
        if not saturated.ok:
            raise NotSaturated(f"{D.name}: α_F не изоморфизм ({len(saturated.failures)} блоков)")
    blocks = {}
    for a in C.weights:
        b = D.up(a)
        if not C.has_weight(b):
            continue
        for n in C.degrees:
            F = D.F(n, a)
            if not F.rows and not F.cols:
                continue
            if F.rows != F.cols or F.rank() != F.cols:
                raise NotSaturated(f"F не обратим над Q в степени {n}")
            V = F.inverse().scale(D.p)
            if not V.is_integral():
                raise NotSaturated(f"p F^(-1) не целый в степени {n}: F не покрывает pM")
            blocks[(n, b)] = V
    for b in C.weights:
        if C.is_legit_weight(D.down(b)):
            continue
        for n in C.degrees:
            if C.rank(n, b):
                raise NotSaturated(f"Ненулевой блок степени {n} без p-прообраза веса")
    logger.debug(f"V построен: {len(blocks)} блоков")
    return Verschiebung(D, blocks)


def verschiebung_report(V: Verschiebung) -> CheckReport:
    """FV = p, VF = p, FdV = d, Vd = p dV поблочно"""
    D = V.structure
    C = D.complex
    p = D.p
    report = CheckReport(name='dieudonne.verschiebung')
    for a in C.weights:
        b = D.up(a)
        if not C.has_weight(b):
            continue
        for n in C.degrees:
            F, Vb = D.F(n, a), V.V(n, b)
            if C.rank(n, a) or C.rank(n, b):
                report.add('FV=p', (F @ Vb).equals_at(PMatrix.identity(p, D.prec, C.rank(n, b)).scale(p)), n, a)
                report.add('VF=p', (Vb @ F).equals_at(PMatrix.identity(p, D.prec, C.rank(n, a)).scale(p)), n, a)
            if not (C.rank(n, b) or C.rank(n + 1, a)):
                continue
            F_next = D.F(n + 1, a)
            fdv = F_next @ C.d(n, a) @ Vb
            report.add('FdV=d', fdv.equals_at(C.d(n, b)), n, a)
            V_next = V.V(n + 1, b)
            report.add('Vd=pdV', (V_next @ C.d(n, b)).equals_at((C.d(n, a) @ Vb).scale(p)), n, a)
    return report
