"""
Уровни 𝒲_r(M) = M / (im V^r + im dV^r) и строгие башни Дьедонне

Уровень r хранится решеткой K_r ⊆ M поблочно; Res индуцирован тождеством
на M, а F и V - матрицами на M.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .structure import DieudonneStructure, validate_dieudonne
from .verschiebung import Verschiebung, derive_verschiebung, verschiebung_report
from ..padic.lattice import Lattice, cokernel_invariants, preimage, solve_integrality
from ..padic.matrix import PMatrix
from ..padic.scalars import Weight, scale_weight, weight_sort_key, weight_to_json
from ..utils.exceptions import AxiomViolation, WindowTooSmall
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)

KernelKey = Tuple[int, int, Weight]


def tower_weights(D: DieudonneStructure, levels: int) -> List[Weight]:
    """Веса a, для которых a, pa, ..., p^levels a лежат в окне"""
    C = D.complex
    result = []
    for a in C.weights:
        if all(C.has_weight(scale_weight(a, D.p ** k)) for k in range(levels + 1)):
            result.append(a)
    return result


def _kernel(D: DieudonneStructure, V: Verschiebung, r: int, n: int, a: Weight,
            include_dv: bool = True) -> Lattice:
    """K_r(n, a) = V^r M^n_{p^r a} + d V^r M^{n-1}_{p^r a}"""
    C = D.complex
    p = D.p
    rank = C.rank(n, a)
    if r == 0:
        return Lattice.full(p, rank, D.prec)
    b = scale_weight(a, p ** r)
    gens = []
    vr = V.V_power(n, b, r)
    if vr is None:
        raise WindowTooSmall(f"Вес p^{r}·a вне окна", weight=b)
    gens.extend(vr.columns())
    if include_dv and C.rank(n - 1, b):
        vr_prev = V.V_power(n - 1, b, r)
        if vr_prev is None:
            raise WindowTooSmall(f"Вес p^{r}·a вне окна", weight=b)
        gens.extend((C.d(n - 1, a) @ vr_prev).columns())
    return Lattice(p, rank, gens, D.prec)


def _boundaries(D: DieudonneStructure, r: int, n: int, b: Weight) -> Lattice:
    """p^r M^n_b + d M^{n-1}_b"""
    C = D.complex
    result = Lattice.full(D.p, C.rank(n, b), D.prec).scaled(r)
    if C.rank(n - 1, b):
        result = result.sum(Lattice.full(D.p, C.rank(n - 1, b), D.prec).image(C.d(n - 1, b)))
    return result


def frobenius_kernel(D: DieudonneStructure, r: int, n: int, a: Weight) -> Lattice:
    """
    K_r(n, a) без V: прообраз p^r M + dM под F^r: M_a -> M_{p^r a}

    Raises:
        WindowTooSmall: Если промежуточный вес p^k·a вне окна
    """
    b = scale_weight(a, D.p ** r)
    Fr = D.F_power(n, a, r)
    if Fr is None:
        raise WindowTooSmall(f"Вес p^{r}·a вне окна", weight=b)
    if not Fr.rows or not Fr.cols:
        return Lattice.full(D.p, Fr.cols, D.prec)
    return preimage(Fr, _boundaries(D, r, n, b))


@dataclass
class WrLevel:
    """Уровень 𝒲_r(M): решетки K_r и инварианты M/K_r по блокам"""
    r: int
    kernels: Dict[Tuple[int, Weight], Lattice] = field(default_factory=dict)

    def invariants(self, n: int, a: Weight) -> List[Optional[int]]:
        kernel = self.kernels[(n, a)]
        return cokernel_invariants(kernel, Lattice.full(kernel.p, kernel.ambient_rank, kernel.prec))

    def is_zero(self) -> bool:
        return all(not self.invariants(*key) for key in self.kernels)

    def to_json(self) -> List[Dict[str, Any]]:
        rows = []
        for (n, a) in sorted(self.kernels, key=lambda key: (weight_sort_key(key[1]), key[0])):
            invariants = self.invariants(n, a)
            if not self.kernels[(n, a)].ambient_rank:
                continue
            rows.append({'degree': n, 'weight': weight_to_json(a),
                         'invariants': ['free' if e is None else e for e in invariants]})
        return rows


def quotient_Wr(D: DieudonneStructure, r: int, V: Verschiebung = None,
                include_dv: bool = True) -> WrLevel:
    """
    𝒲_r(M) по блокам (n, a) для весов с p^r a в окне

    Raises:
        NotSaturated: Из derive_verschiebung
    """
    V = V or derive_verschiebung(D)
    C = D.complex
    level = WrLevel(r)
    for a in tower_weights(D, r):
        for n in C.degrees:
            level.kernels[(n, a)] = _kernel(D, V, r, n, a, include_dv)
    return level


@dataclass
class StrictTower:
    """Башня 𝒲_0 <- 𝒲_1 <- ... <- 𝒲_R над насыщенным M"""
    structure: DieudonneStructure
    verschiebung: Verschiebung
    levels: int
    weights: Tuple[Weight, ...]
    kernels: Dict[KernelKey, Lattice] = field(default_factory=dict)

    def kernel(self, r: int, n: int, a: Weight) -> Lattice:
        return self.kernels[(r, n, a)]

    def level(self, r: int) -> WrLevel:
        return WrLevel(r, {(n, a): k for (rr, n, a), k in self.kernels.items() if rr == r})

    def restriction(self, r: int, n: int, a: Weight) -> PMatrix:
        """Res: 𝒲_{r+1} -> 𝒲_r в координатах M"""
        return PMatrix.identity(self.structure.p, self.structure.prec, self.structure.complex.rank(n, a))

    def to_json(self) -> Dict[str, Any]:
        return {
            'levels': self.levels,
            'tower': [{'r': r, 'blocks': self.level(r).to_json()} for r in range(self.levels + 1)],
        }


def build_tower(D: DieudonneStructure, levels: int, strict: bool = False,
                include_dv: bool = True) -> StrictTower:
    """
    Башня уровней 𝒲_r(M), r = 0..levels, на весах с p^levels a в окне

    Args:
        strict: Сразу проверить аксиомы и бросить AxiomViolation при нарушении
        include_dv: Включать образующие dV^r в K_r

    Raises:
        NotSaturated: Из derive_verschiebung
        AxiomViolation: При strict=True и нарушенных аксиомах
    """
    V = derive_verschiebung(D)
    weights = tuple(tower_weights(D, levels))
    if not weights:
        raise WindowTooSmall(f"Нет весов a с p^{levels}·a в окне")
    kernels = {}
    for r in range(levels + 1):
        for a in weights:
            for n in D.complex.degrees:
                kernels[(r, n, a)] = _kernel(D, V, r, n, a, include_dv)
    tower = StrictTower(D, V, levels, weights, kernels)
    logger.info(f"Башня {D.name}: {levels + 1} уровней, {len(weights)} весов")
    if strict:
        report = validate_tower(tower)
        if not report.ok:
            raise AxiomViolation(f"Нарушены аксиомы башни: {len(report.failures)}", report.failures)
    return tower


def _contains(big: Lattice, small: Lattice) -> bool:
    return big.contains_lattice(small)


def validate_tower(T: StrictTower) -> CheckReport:
    """
    Восемь аксиом строгой башни, корректность F, V, d на уровнях и
    независимая сборка K_r через F^r
    """
    D = T.structure
    V = T.verschiebung
    C = D.complex
    p = D.p
    report = CheckReport(name='tower.validate')
    weights = set(T.weights)
    for a in T.weights:
        for n in C.degrees:
            rank = C.rank(n, a)
            full = Lattice.full(p, rank, D.prec)
            # (1) 𝒲_0 = 0
            report.add('axiom1.level0_zero', T.kernel(0, n, a) == full, n, a)
            for r in range(T.levels + 1):
                K = T.kernel(r, n, a)
                # d корректен на уровне r
                if C.rank(n + 1, a) and (r, n + 1, a) in T.kernels:
                    image = K.image(C.d(n, a))
                    report.add('levels.d_well_defined', _contains(T.kernel(r, n + 1, a), image), n, a,
                               f"r={r}")
                if r == T.levels:
                    continue
                K_next = T.kernel(r + 1, n, a)
                # (2) Res сюръективен и корректен: K_{r+1} ⊆ K_r
                report.add('axiom2.res_surjective', _contains(K, K_next), n, a, f"r={r}")
                # (4) F: 𝒲_{r+1}(a) -> 𝒲_r(pa), V: 𝒲_r(pa) -> 𝒲_{r+1}(a)
                pa = D.up(a)
                if pa in weights:
                    F = D.F(n, a)
                    report.add('axiom4.F_well_defined', _contains(T.kernel(r, n, pa), K_next.image(F)), n, a,
                               f"r={r}")
                    Vb = V.V(n, pa)
                    report.add('axiom4.V_well_defined',
                               _contains(K_next, T.kernel(r, n, pa).image(Vb)), n, a, f"r={r}")
                else:
                    report.untestable('axiom4.commute', n, a, f"p·a вне весов башни, r={r}")
                # (7) ker Res = 𝒲_{r+1}[p]
                torsion = K_next.scaled(-1).intersect(full)
                report.add('axiom7.ker_res_p_torsion', torsion == K, n, a, f"r={r}")
                # (8) ker Res = im V^r + im dV^r + K_{r+1}
                spanned = _kernel(D, V, r, n, a).sum(K_next) if r else full
                report.add('axiom8.ker_res_span', spanned == K, n, a, f"r={r}")
                # (6) x с dx ∈ pM + K_r лежит в F(M_{a/p}) + K_r
                _axiom6(D, T, r, n, a, report)
    # (3), (5): тождества на M
    report.extend(validate_dieudonne(D), prefix='axiom3')
    report.extend(verschiebung_report(V), prefix='axiom5')
    # Уровни заново, без V: прообраз p^r M + dM под F^r
    for r in range(T.levels + 1):
        for a in T.weights:
            for n in C.degrees:
                ok = frobenius_kernel(D, r, n, a) == T.kernel(r, n, a)
                report.add('converse.rebuild', ok, n, a, f"r={r}")
    if not report.ok:
        logger.warning(f"Башня {D.name}: {len(report.failures)} нарушений")
    return report


def _axiom6(D: DieudonneStructure, T: StrictTower, r: int, n: int, a: Weight, report: CheckReport):
    C = D.complex
    p = D.p
    rank = C.rank(n, a)
    if not rank:
        return
    if C.rank(n + 1, a):
        target = Lattice.full(p, C.rank(n + 1, a), D.prec).scaled(1).sum(T.kernel(r, n + 1, a))
        candidates = preimage(C.d(n, a), target)
    else:
        candidates = Lattice.full(p, rank, D.prec)
    a_down = D.down(a)
    if not C.is_legit_weight(a_down):
        image = Lattice.zero(p, rank, D.prec)
    elif C.has_weight(a_down):
        image = Lattice.full(p, C.rank(n, a_down), D.prec).image(D.F(n, a_down))
    else:
        report.untestable('axiom6.divisible_in_image_F', n, a, f"a/p вне окна, r={r}")
        return
    ok = image.sum(T.kernel(r, n, a)).contains_lattice(candidates)
    report.add('axiom6.divisible_in_image_F', ok, n, a, f"r={r}")


def frobenius_power_check(D: DieudonneStructure, r: int) -> CheckReport:
    """F^r: M_a ≅ {x ∈ M_{p^r a} : dx ∈ p^r M}"""
    C = D.complex
    report = CheckReport(name='dieudonne.frobenius_power_image')
    for a in tower_weights(D, r):
        b = scale_weight(a, D.p ** r)
        for n in C.degrees:
            if not C.rank(n, a) and not C.rank(n, b):
                continue
            Fr = D.F_power(n, a, r)
            cocycles = solve_integrality(C.d(n, b).scale_p(-r), prec=D.prec)
            image = Lattice.full(D.p, Fr.cols, D.prec).image(Fr)
            ok = Fr.rank() == Fr.cols and image == cocycles
            report.add('F^r_onto_cocycles', ok, n, a, f"r={r}")
    return report


def wr_cohomology_check(D: DieudonneStructure, r: int, V: Verschiebung = None) -> CheckReport:
    """F^r индуцирует 𝒲_r(M) ≅ H*(M/p^r): образ в коциклах, сюръекция, ядро K_r"""
    V = V or derive_verschiebung(D)
    C = D.complex
    p = D.p
    level = quotient_Wr(D, r, V)
    report = CheckReport(name='dieudonne.wr_cohomology')
    for a in tower_weights(D, r):
        b = scale_weight(a, p ** r)
        for n in C.degrees:
            if not C.rank(n, a) and not C.rank(n, b):
                continue
            Fr = D.F_power(n, a, r)
            cocycles = solve_integrality(C.d(n, b).scale_p(-r), prec=D.prec)
            boundaries = _boundaries(D, r, n, b)
            image = Lattice.full(p, Fr.cols, D.prec).image(Fr)
            report.add('image_in_cocycles', cocycles.contains_lattice(image), n, a, f"r={r}")
            report.add('surjective', image.sum(boundaries) == cocycles, n, a, f"r={r}")
            kernel = preimage(Fr, boundaries)
            report.add('kernel_is_Kr', kernel == level.kernels[(n, a)], n, a, f"r={r}")
    return report
