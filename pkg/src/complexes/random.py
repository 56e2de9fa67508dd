"""
Воспроизводимый корпус случайных комплексов без кручения

Комплекс собирается из элементарных кусков Z (d = 0) и Z --p^e--> Z и
сопрягается в каждой степени унимодулярной целой матрицей.
"""
import logging
import random
from typing import List, Tuple

from .based import BasedComplex
from .chain_maps import ChainMap
from .cohomology import BlockCohomology, CohomologyProfile
from ..padic.matrix import PMatrix
from ..padic.scalars import UNTWISTED

logger = logging.getLogger(__name__)

MAX_RANK = 6
DEGREES = (0, 3)
MAX_EXPONENT = 3

Piece = Tuple[str, int, int]


def _random_pieces(rng: random.Random) -> List[Piece]:
    ranks = {n: 0 for n in range(DEGREES[0], DEGREES[1] + 1)}
    pieces = []
    for n in range(DEGREES[0], DEGREES[1] + 1):
        for _ in range(rng.randint(0, 3)):
            arrow = n < DEGREES[1] and rng.random() < 0.6
            if arrow:
                if ranks[n] >= MAX_RANK or ranks[n + 1] >= MAX_RANK:
                    continue
                e = rng.randint(0, MAX_EXPONENT)
                pieces.append(('arrow', n, e))
                ranks[n] += 1
                ranks[n + 1] += 1
            else:
                if ranks[n] >= MAX_RANK:
                    continue
                pieces.append(('free', n, 0))
                ranks[n] += 1
    return pieces


def _base_differential(p: int, pieces: List[Piece]):
    """Ранги и матрицы d_n для прямой суммы кусков"""
    slots = {}
    positions = []
    for kind, n, e in pieces:
        source = slots.get(n, 0)
        slots[n] = source + 1
        if kind == 'arrow':
            target = slots.get(n + 1, 0)
            slots[n + 1] = target + 1
            positions.append((n, source, target, p ** e))
    d = {}
    for n, source, target, value in positions:
        rows = d.setdefault(n, [[0] * slots.get(n, 0) for _ in range(slots.get(n + 1, 0))])
        rows[target][source] = value
    return slots, d


def _unimodular(p: int, size: int, rng: random.Random):
    """Пара (U, U^{-1}) из элементарных операций с множителями в [-p², p²]"""
    u = [[int(i == j) for j in range(size)] for i in range(size)]
    inv = [[int(i == j) for j in range(size)] for i in range(size)]
    if size == 0:
        return u, inv
    for _ in range(3 * size):
        i, j = rng.randrange(size), rng.randrange(size)
        if i == j:
            if rng.random() < 0.3:
                u[i] = [-x for x in u[i]]
                for row in inv:
                    row[i] = -row[i]
            continue
        c = rng.randint(-p * p, p * p)
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]
        for row in inv:
            row[j] -= c * row[i]
    return u, inv


def _conjugate(p: int, prec: int, slots, d, rng: random.Random):
    transforms = {n: _unimodular(p, slots.get(n, 0), rng) for n in range(DEGREES[0], DEGREES[1] + 1)}
    diff = {}
    for n, rows in d.items():
        source, target = slots.get(n, 0), slots.get(n + 1, 0)
        if not source or not target:
            continue
        u_next = PMatrix(p, prec, transforms[n + 1][0], cols=target)
        inv = PMatrix(p, prec, transforms[n][1], cols=source)
        diff[(n, UNTWISTED)] = u_next @ PMatrix(p, prec, rows, cols=source) @ inv
    return transforms, diff


def random_complex(p: int, seed: int, prec: int = 8) -> BasedComplex:
    """
    Случайный комплекс в степенях 0..3 с рангами <= 6

    Описание кусков сохраняется в meta['pieces'] для оракула expected_cohomology.
    """
    rng = random.Random(seed * 1009 + p)
    pieces = _random_pieces(rng)
    slots, d = _base_differential(p, pieces)
    _, diff = _conjugate(p, prec, slots, d, rng)
    ranks = {(n, UNTWISTED): r for n, r in slots.items()}
    return BasedComplex(p, prec, DEGREES, [UNTWISTED], ranks, diff, meta={'pieces': pieces, 'seed': seed})


def expected_cohomology(complex_: BasedComplex) -> CohomologyProfile:
    """Когомологии, прочитанные по кускам: Z дает свободное слагаемое, Z --p^e--> Z дает Z/p^e"""
    free, torsion = {}, {}
    for kind, n, e in complex_.meta['pieces']:
        if kind == 'free':
            free[n] = free.get(n, 0) + 1
        elif e > 0:
            torsion.setdefault(n + 1, []).append(e)
    profile = CohomologyProfile(complex_.p, complex_.prec)
    for n in set(free) | set(torsion):
        profile.blocks[(n, UNTWISTED)] = BlockCohomology(free.get(n, 0), tuple(sorted(torsion.get(n, []))))
    return profile


def random_quasi_iso_pair(p: int, seed: int, prec: int = 8) -> ChainMap:
    """
    Отображение f: C -> C' ⊕ (Z --u--> Z), u - единица; f индуцирует изоморфизм H(-/p)
    """
    rng = random.Random(seed * 2003 + p)
    pieces = _random_pieces(rng)
    slots, d = _base_differential(p, pieces)
    transforms, diff = _conjugate(p, prec, slots, d, rng)
    degree = rng.randint(DEGREES[0], DEGREES[1] - 1)
    unit = rng.choice([u for u in range(1, p * p) if u % p])
    extended = pieces + [('arrow', degree, 0)]
    ext_slots, ext_d = _base_differential(p, extended)
    ext_d[degree][ext_slots[degree + 1] - 1][ext_slots[degree] - 1] = unit
    ext_transforms, ext_diff = _conjugate(p, prec, ext_slots, ext_d, rng)
    source = BasedComplex(p, prec, DEGREES, [UNTWISTED], {(n, UNTWISTED): r for n, r in slots.items()},
                          diff, meta={'pieces': pieces, 'seed': seed})
    target = BasedComplex(p, prec, DEGREES, [UNTWISTED],
                          {(n, UNTWISTED): r for n, r in ext_slots.items()}, ext_diff,
                          meta={'pieces': extended, 'seed': seed, 'unit': unit})
    blocks = {}
    for n in range(DEGREES[0], DEGREES[1] + 1):
        r, r_ext = slots.get(n, 0), ext_slots.get(n, 0)
        if not r:
            continue
        inclusion = PMatrix(p, prec, [[int(i == j) for j in range(r)] for i in range(r_ext)], cols=r)
        u_ext = PMatrix(p, prec, ext_transforms[n][0], cols=r_ext)
        inv = PMatrix(p, prec, transforms[n][1], cols=r)
        blocks[(n, UNTWISTED)] = u_ext @ inclusion @ inv
    return ChainMap(source, target, blocks, name='inclusion')
