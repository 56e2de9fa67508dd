"""
Насыщение: итерации M -> η_p M -> η_p² M -> ... с индуцированным F
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from .alpha import alpha_F
from .structure import DieudonneStructure
from ..complexes.chain_maps import ChainMap, compose, mod_p_quasi_iso_report
from ..complexes.cohomology import mod_p_dimensions
from ..complexes.eta import eta_p
from ..padic.lattice import Lattice
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, pow_p, scale_weight, weight_to_json
from ..utils.exceptions import ValidationError, WindowTooSmall
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class SaturationTower:
    """
    Стадии η_p^k(M) с переходами α_F

    stages[0] - исходная структура; transitions[k] отображает стадию k в k+1.
    Вложение стадии k+1 хранится в координатах стадии k.
    """
    stages: List[DieudonneStructure]
    transitions: List[ChainMap] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.stages) - 1

    @property
    def final(self) -> DieudonneStructure:
        return self.stages[-1]

    @property
    def p(self) -> int:
        return self.stages[0].p

    def composite_embedding(self, n: int, b: Weight, stage: int) -> PMatrix:
        """Базис стадии stage на весе b в объемлющих координатах стадии 0"""
        result = self.stages[0].complex.embedding_of(n, b)
        for k in range(1, stage + 1):
            result = result @ self.stages[k].complex.embedding_of(n, b)
        return result

    def lattice_at(self, n: int, a: Weight, stage: Optional[int] = None) -> Lattice:
        """
        Решетка Sat(M)^n_a: p^{-ns} · (базис стадии s на весе p^s a)

        Координаты - объемлющие координаты стадии 0, в которых F действует
        тождественно на коэффициентах.

        Raises:
            WindowTooSmall: Если вес p^s a вне окна
        """
        s = self.depth if stage is None else stage
        b = scale_weight(a, self.p ** s)
        C = self.stages[s].complex
        if not C.has_weight(b):
            raise WindowTooSmall(f"Вес p^{s}·a вне окна стадии {s}", weight=b)
        basis = self.composite_embedding(n, b, s).scale(pow_p(self.p, -n * s))
        ambient = basis.rows
        return Lattice(self.p, ambient, basis.columns(), C.prec)

    def composite_transition(self, k: int) -> ChainMap:
        """Стадия 0 -> стадия k"""
        result = self.transitions[0]
        for step in self.transitions[1:k]:
            result = compose(step, result)
        return result

    def mod_p_stage_report(self) -> CheckReport:
        """Переходы стадия 0 -> стадия k индуцируют изоморфизмы H(-/p) (вес a -> p^k a)"""
        report = CheckReport(name='saturation.mod_p_stages')
        for k in range(1, self.depth + 1):
            report.extend(mod_p_quasi_iso_report(self.composite_transition(k)), prefix=f"stage{k}")
        report.data['mod_p_dimensions'] = [
            [{'degree': n, 'weight': weight_to_json(w), 'dim': dim}
             for (n, w), dim in sorted(mod_p_dimensions(stage.complex).items(),
                                       key=lambda item: (item[0][1], item[0][0]))]
            for stage in self.stages
        ]
        return report

    def to_json(self) -> Dict[str, Any]:
        return {
            'depth': self.depth,
            'precision': [stage.prec for stage in self.stages],
            'final': self.final.complex.to_json(),
        }


def _induced_frobenius(D: DieudonneStructure, eta) -> Dict:
    """F на η_p M: B_{pw}^{-1} F B_w"""
    blocks = {}
    for w in eta.weights:
        pw = D.up(w)
        if not eta.has_weight(pw):
            continue
        for n in eta.degrees:
            if not eta.rank(n, w):
                continue
            image = D.F(n, w) @ eta.embedding_of(n, w)
            coords = eta.embedding_of(n, pw).solve(image)
            if not coords.is_integral():
                raise ValidationError(f"F не сохраняет η_p M в блоке степени {n}")
            blocks[(n, w)] = coords.with_prec(eta.prec)
    return blocks


def window_guard(D: DieudonneStructure, weights: Iterable[Weight], stage: int):
    """
    Веса p^stage·a должны быть в окне, иначе Sat на весе a не считать

    Raises:
        WindowTooSmall: Первый вес p^stage·a вне окна
    """
    for a in weights:
        b = scale_weight(a, D.p ** stage)
        if not D.complex.has_weight(b):
            raise WindowTooSmall(f"Окно не содержит вес p^{stage}·a для a = {weight_to_json(a)}", weight=b)


def saturate(D: DieudonneStructure, depth: int, threads: int = None,
             targets: Optional[Iterable[Weight]] = None) -> SaturationTower:
    """
    Стадия depth ряда M -> η_p M -> ... вместе с переходами α_F

    Каждая стадия тратит d_max - d_min разрядов точности. targets - веса Sat,
    которые будут читаться со стадии depth; окно проверяется до η_p.

    Raises:
        WindowTooSmall: Если для веса из targets нет p^depth·a
        PrecisionExhausted: Если точности не хватает на очередную стадию
    """
    if targets is not None:
        window_guard(D, targets, depth)
    stages = [D]
    transitions = []
    for k in range(depth):
        current = stages[-1]
        eta = eta_p(current.complex, threads=threads)
        transitions.append(alpha_F(current, eta))
        frobenius = _induced_frobenius(current, eta)
        stages.append(DieudonneStructure(eta, frobenius, name=f"{D.name}/eta^{k + 1}"))
        logger.info(f"Насыщение {D.name}: стадия {k + 1}, точность {eta.prec}")
    return SaturationTower(stages, transitions)
