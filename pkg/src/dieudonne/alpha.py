"""
α_F: M -> η_p M, x ↦ p^n F(x), и критерий насыщенности
"""
import logging
from typing import Optional

from .structure import DieudonneStructure
from ..complexes.based import BasedComplex
from ..complexes.chain_maps import ChainMap
from ..complexes.eta import eta_p
from ..padic.lattice import Lattice, cokernel_invariants
from ..padic.scalars import weight_to_json
from ..padic.snf import snf
from ..utils.exceptions import ValidationError
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


def alpha_F(D: DieudonneStructure, eta: Optional[BasedComplex] = None) -> ChainMap:
    """
    Цепное отображение α_F в координатах базиса η_p M

    Блок (n, w): B_{pw}^{-1} · p^n F_{n,w}, где B - вложение η_p M в M.

    Raises:
        PrecisionExhausted: Из η_p
        ValidationError: Если образ не лежит в η_p M (нарушено dF = pFd)
    """
    C = D.complex
    eta = eta or eta_p(C)
    blocks = {}
    for w in C.weights:
        pw = D.up(w)
        if not C.has_weight(pw):
            continue
        for n in C.degrees:
            if not C.rank(n, w):
                continue
            scaled = D.F(n, w).scale_p(n)
            coords = eta.embedding_of(n, pw).solve(scaled)
            if not coords.is_integral():
                raise ValidationError(f"α_F не попадает в η_p M в блоке степени {n}")
            blocks[(n, w)] = coords.with_prec(eta.prec)
    return ChainMap(C, eta, blocks, weight_factor=D.p, name='alpha_F')


def is_saturated(D: DieudonneStructure, alpha: ChainMap = None) -> CheckReport:
    """
    α_F - изоморфизм по блокам; дефект - инварианты коядра

    Для целевого веса b: если b/p допустим и в окне, блок α_F должен быть
    унимодулярным; если b/p недопустим, M_b обязан быть нулем; если b/p вне
    окна, блок непроверяем.
    """
    C = D.complex
    alpha = alpha or alpha_F(D)
    eta = alpha.target
    report = CheckReport(name='dieudonne.saturated')
    defects = []
    for b in C.weights:
        a = D.down(b)
        for n in C.degrees:
            r_b, r_a = eta.rank(n, b), C.rank(n, a) if C.has_weight(a) else 0
            if not r_b and not r_a:
                continue
            if not C.is_legit_weight(a):
                ok = r_b == 0
                report.add('alpha_iso', ok, n, b, '' if ok else "у веса нет p-прообраза, а блок ненулевой")
                if not ok:
                    defects.append({'degree': n, 'weight': b, 'cokernel': [None] * r_b})
                continue
            if not C.has_weight(a):
                report.untestable('alpha_iso', n, b, "вес b/p вне окна")
                continue
            block = alpha.block(n, a)
            if block.rows != block.cols:
                report.add('alpha_iso', False, n, b, f"блок α_F размера {block.shape}")
                continue
            valuations = snf(block).diag_valuations if block.rows else []
            ok = all(v == 0 for v in valuations)
            if not ok:
                invariants = cokernel_invariants(Lattice.from_matrix(block),
                                                 Lattice.full(D.p, block.rows, block.prec))
                defects.append({'degree': n, 'weight': b, 'cokernel': invariants})
                report.add('alpha_iso', False, n, b, f"коядро α_F: {invariants}")
            else:
                report.add('alpha_iso', True, n, b)
    report.data['defects'] = [dict(d, weight=weight_to_json(d['weight'])) for d in defects]
    logger.debug(f"Насыщенность {D.name}: {len(defects)} дефектных блоков")
    return report
