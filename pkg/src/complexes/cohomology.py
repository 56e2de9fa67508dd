"""
Когомологии базированных комплексов через нормальную форму Смита
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from .based import BasedComplex, BlockKey
from ..padic.fp import FpSubquotient, cohomology_fp, fp_reduce
from ..padic.scalars import Weight, weight_to_json
from ..padic.snf import snf
from ..utils.parallel import map_blocks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockCohomology:
    """H^n одного весового блока: Z^free ⊕ ⊕ Z/p^e"""
    free_rank: int
    torsion: Tuple[int, ...] = ()
    unresolved: Tuple[int, ...] = ()

    def mod_torsion_p(self) -> 'BlockCohomology':
        """H / H[p]: каждое Z/p^e превращается в Z/p^{e-1}"""
        return BlockCohomology(self.free_rank, tuple(e - 1 for e in self.torsion if e > 1), self.unresolved)

    def mod_p_dimension_contribution(self) -> int:
        return self.free_rank + len(self.torsion)

    def to_json(self) -> Dict[str, Any]:
        data = {'free_rank': self.free_rank, 'torsion': list(self.torsion)}
        if self.unresolved:
            data['unresolved'] = [f">={e}" for e in self.unresolved]
        return data


@dataclass
class CohomologyProfile:
    """Когомологии по блокам (степень, вес); нулевые блоки не хранятся"""
    p: int
    prec: int
    blocks: Dict[BlockKey, BlockCohomology] = field(default_factory=dict)

    def get(self, n: int, w: Weight) -> BlockCohomology:
        return self.blocks.get((n, w), BlockCohomology(0))

    def mod_torsion_p(self) -> 'CohomologyProfile':
        blocks = {k: v.mod_torsion_p() for k, v in self.blocks.items()}
        return CohomologyProfile(self.p, self.prec, {k: v for k, v in blocks.items() if v.free_rank or v.torsion})

    def has_unresolved(self) -> bool:
        return any(b.unresolved for b in self.blocks.values())

    def same_groups(self, other: 'CohomologyProfile') -> bool:
        """Совпадение мультимножеств инвариантных множителей во всех блоках"""
        keys = set(self.blocks) | set(other.blocks)
        return all(self.get(*k).free_rank == other.get(*k).free_rank
                   and sorted(self.get(*k).torsion) == sorted(other.get(*k).torsion) for k in keys)

    def to_json(self) -> List[Dict[str, Any]]:
        return [dict(degree=n, weight=weight_to_json(w), **block.to_json())
                for (n, w), block in sorted(self.blocks.items(), key=lambda item: (item[0][1], item[0][0]))]


def _weight_cohomology(C: BasedComplex, w: Weight) -> Dict[BlockKey, BlockCohomology]:
    ranks = {}
    valuations = {}
    for n in C.degrees:
        result = snf(C.d(n, w))
        valuations[n] = result.diag_valuations
        ranks[n] = result.rank
    blocks = {}
    for n in C.degrees:
        r = C.rank(n, w)
        if not r:
            continue
        incoming = valuations.get(n - 1, [])
        free = r - ranks[n] - ranks.get(n - 1, 0)
        torsion = tuple(sorted(v for v in incoming if v is not None and v > 0))
        unresolved = tuple(v for v in torsion if v >= C.prec)
        if free or torsion:
            blocks[(n, w)] = BlockCohomology(free, torsion, unresolved)
    return blocks


def cohomology(complex_: BasedComplex, threads: int = None) -> CohomologyProfile:
    """
    Когомологии по весам: ранг свободной части r_n - rk d_n - rk d_{n-1},
    кручение - положительные нормирования snf(d_{n-1})

    Raises:
        PrecisionExhausted: Из snf
    """
    C = complex_
    parts = map_blocks(lambda w: _weight_cohomology(C, w), C.weights, threads)
    profile = CohomologyProfile(C.p, C.prec)
    for part in parts:
        profile.blocks.update(part)
    if profile.has_unresolved():
        logger.warning("Часть кручения не разрешена при текущей точности")
    return profile


def mod_p_cohomology(complex_: BasedComplex) -> Dict[BlockKey, FpSubquotient]:
    """H^n(C/p) по блокам как подфакторы F_p^{rank}"""
    C = complex_
    result = {}
    for w in C.weights:
        for n in C.degrees:
            dim = C.rank(n, w)
            d_prev = fp_reduce(C.d(n - 1, w), C.p) if C.rank(n - 1, w) else [[] for _ in range(dim)]
            d_next = fp_reduce(C.d(n, w), C.p) if C.rank(n + 1, w) else []
            result[(n, w)] = cohomology_fp(d_prev, d_next, C.p, dim)
    return result


def mod_p_dimensions(complex_: BasedComplex) -> Dict[BlockKey, int]:
    return {k: h.size for k, h in mod_p_cohomology(complex_).items() if h.size}
