"""
Оператор η_p: (η_p M)^n = {x ∈ p^n M^n : dx ∈ p^{n+1} M^{n+1}}
"""
import logging
from typing import Dict, Tuple

from .based import BasedComplex, BlockKey
from .chain_maps import ChainMap
from ..padic.lattice import solve_integrality
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, pow_p
from ..utils.exceptions import PrecisionExhausted, ShapeMismatch
from ..utils.parallel import map_blocks

logger = logging.getLogger(__name__)


def eta_consumption(complex_: BasedComplex) -> int:
    """Разряды точности, расходуемые одним применением η_p"""
    d_min, d_max = complex_.degree_range
    return d_max - d_min


def _eta_weight(C: BasedComplex, w: Weight) -> Tuple[Dict[BlockKey, PMatrix], Dict[BlockKey, PMatrix]]:
    p = C.p
    bases: Dict[int, PMatrix] = {}
    for n in C.degrees:
        r = C.rank(n, w)
        if not r:
            continue
        shifted = C.d(n, w).scale_p(-1)
        lattice = solve_integrality(shifted, prec=C.prec + 1)
        bases[n] = lattice.basis.scale_p(n)
    embedding = {(n, w): b for n, b in bases.items()}
    diff = {}
    for n in C.degrees:
        if n not in bases or (n + 1) not in bases:
            continue
        image = C.d(n, w) @ bases[n]
        diff[(n, w)] = bases[n + 1].solve(image)
    return embedding, diff


def eta_p(complex_: BasedComplex, threads: int = None) -> BasedComplex:
    """
    η_p C с собственным базисом; embedding хранит базис в координатах C

    Расходует d_max - d_min разрядов точности.

    Raises:
        PrecisionExhausted: Если prec <= d_max - d_min
    """
    C = complex_
    cost = eta_consumption(C)
    if C.prec <= cost:
        raise PrecisionExhausted(f"η_p: точность {C.prec} не превышает расход {cost}")
    parts = map_blocks(lambda w: _eta_weight(C, w), C.weights, threads)
    embedding, diff = {}, {}
    for emb, d in parts:
        embedding.update(emb)
        diff.update(d)
    new_prec = C.prec - cost
    diff = {k: m.with_prec(new_prec) for k, m in diff.items()}
    logger.debug(f"η_p: {len(C.weights)} весов, точность {C.prec} -> {new_prec}")
    return C.derive(prec=new_prec, diff=diff, embedding=embedding, labels={})


def eta_p_map(f: ChainMap, source_eta: BasedComplex = None, target_eta: BasedComplex = None) -> ChainMap:
    """
    η_p(f): η_p(source) -> η_p(target), ограничение f[1/p]

    Raises:
        ShapeMismatch: Если ограничение не целое (f не цепное отображение)
    """
    source_eta = source_eta or eta_p(f.source)
    target_eta = target_eta or eta_p(f.target)
    blocks = {}
    for w in f.source.weights:
        tw = f.target_weight(w)
        if not f.target.has_weight(tw):
            continue
        for n in f.source.degrees:
            if not f.source.rank(n, w) or not f.target.rank(n, tw):
                continue
            image = f.block(n, w) @ source_eta.embedding_of(n, w)
            coords = target_eta.embedding_of(n, tw).solve(image)
            if not coords.is_integral():
                raise ShapeMismatch(f"η_p(f) не целое в блоке (степень {n})")
            blocks[(n, w)] = coords
    return ChainMap(source_eta, target_eta, blocks, f.weight_factor, name=f"eta({f.name})")
