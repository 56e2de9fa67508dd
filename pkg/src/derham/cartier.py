"""
Отображение Картье Ω*_A -> H*(Ω*_A) над F_p и проверка изоморфизма
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

from .forms import MonomialForm
from .models import DeRhamModel, derham_complex, frobenius_lift_structure
from .rings import FP, MonomialRing
from ..complexes.based import BlockKey
from ..complexes.cohomology import mod_p_cohomology
from ..padic.fp import FpMatrix, FpSubquotient, fp_reduce, is_bijective
from ..padic.scalars import scale_weight, weight_to_json
from ..utils.exceptions import WindowTooSmall
from ..utils.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class CartierMap:
    """Блок (n, a): матрица в базисе представителей H^n(Ω/p)_{pa}"""
    model: DeRhamModel
    blocks: Dict[BlockKey, Optional[FpMatrix]] = field(default_factory=dict)
    cohomology: Dict[BlockKey, FpSubquotient] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {
            'blocks': [
                {'degree': n, 'weight': weight_to_json(a),
                 'matrix': None if m is None else [[str(c) for c in row] for row in m]}
                for (n, a), m in self.blocks.items()
            ]
        }


def _reduction(model: DeRhamModel) -> DeRhamModel:
    if model.ring.coeff == FP:
        return model
    ring = MonomialRing(model.ring.kind, model.ring.n, model.ring.p, FP)
    return derham_complex(ring, model.complex.weights, 1)


def cartier_map(model: DeRhamModel) -> CartierMap:
    """
    x^a dlog_S ↦ [x^{pa} dlog_S]; Cart(x) = x^p, Cart(dy) = [y^{p-1} dy]

    Raises:
        WindowTooSmall: Если ни для одного веса a вес p·a не лежит в окне
    """
    A = _reduction(model)
    C = A.complex
    p = A.p
    hs = mod_p_cohomology(C)
    blocks = {}
    for a in C.weights:
        pa = scale_weight(a, p)
        if not C.has_weight(pa):
            continue
        for n in C.degrees:
            sources = A.subsets(n, a) if C.rank(n, a) else []
            targets = A.subsets(n, pa) if C.rank(n, pa) else []
            images = []
            for S in sources:
                image = MonomialForm.monomial(A.ring.n, a, S).cartier(p)
                images.append([c.numerator % p for c in image.coordinates(pa, targets)])
            blocks[(n, a)] = hs[(n, pa)].induced_matrix(images)
    if not blocks:
        raise WindowTooSmall("Окно не замкнуто относительно a ↦ p·a ни для одного веса")
    return CartierMap(A, blocks, hs)


def verify_cartier_iso(model: DeRhamModel) -> CheckReport:
    """
    Биективность Cart: (Ω^n)_a -> H^n_{pa} по блокам; веса вне p·Z^n обязаны иметь H = 0

    Для негладкого кольца (кубика) вердикт не выносится.

    Raises:
        WindowTooSmall: Из cartier_map
    """
    report = CheckReport(name='derham.cartier_iso')
    if not model.ring.is_smooth:
        report.untestable('cartier_bijective', None, None, "hypothesis unmet: кольцо не гладкое")
        return report
    cart = cartier_map(model)
    C = cart.model.complex
    p = model.p
    dimensions = []
    for b in C.weights:
        a = scale_weight(b, Fraction(1, p))
        for n in C.degrees:
            h = cart.cohomology[(n, b)]
            if any(c.denominator != 1 for c in a):
                if h.size or C.rank(n, b):
                    ok = h.size == 0
                    report.add('cartier_bijective', ok, n, b, '' if ok else "H ≠ 0 вне образа Cart")
                continue
            if not C.has_weight(a):
                if h.size:
                    report.untestable('cartier_bijective', n, b, "вес b/p вне окна")
                continue
            rank = C.rank(n, a)
            if not rank and not h.size:
                continue
            matrix = cart.blocks.get((n, a))
            ok = is_bijective(matrix, h.size, rank, p)
            report.add('cartier_bijective', ok, n, b, '' if ok else f"dim Ω = {rank}, dim H = {h.size}")
            dimensions.append({'degree': n, 'weight': weight_to_json(b), 'omega': rank, 'cohomology': h.size})
    report.data['dimensions'] = dimensions
    _multiplicativity(cart, report)
    return report


def _multiplicativity(cart: CartierMap, report: CheckReport, limit: int = 12):
    """Cart(ω ∧ η) = Cart(ω) ∧ Cart(η) на парах базисных мономов"""
    A = cart.model
    C = A.complex
    p = A.p
    basis = []
    for a in C.weights:
        for n in C.degrees:
            if C.rank(n, a):
                basis.extend(MonomialForm.monomial(A.ring.n, a, S) for S in A.subsets(n, a))
    for i, omega in enumerate(basis[:limit]):
        for eta in basis[i:limit]:
            left = omega.wedge(eta).cartier(p)
            right = omega.cartier(p).wedge(eta.cartier(p))
            report.add('cartier_multiplicative', left == right, None, None, f"{omega} ∧ {eta}")


def cartier_vs_frobenius(model: DeRhamModel) -> CheckReport:
    """F мономиального подъема по модулю p индуцирует на когомологиях ровно Cart"""
    D = frobenius_lift_structure(model)
    cart = cartier_map(model)
    p = model.p
    report = CheckReport(name='derham.cartier_vs_frobenius')
    for (n, a), expected in cart.blocks.items():
        F = D.F(n, a)
        if F is None or not F.cols:
            continue
        F_bar = fp_reduce(F, p)
        images = [[row[j] for row in F_bar] for j in range(F.cols)]
        actual = cart.cohomology[(n, scale_weight(a, p))].induced_matrix(images)
        report.add('F_mod_p=Cart', actual is not None and actual == expected, n, a)
    return report
