"""
Структурные многочлены Витта через духовные компоненты
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from sympy import Poly, ZZ, symbols
from sympy.polys.polyerrors import ExactQuotientFailed

from ..config import config
from ..utils.exceptions import CostGuard, ValidationError

logger = logging.getLogger(__name__)

OPERATIONS = ('sum', 'product', 'neg', 'frobenius')


@dataclass(frozen=True)
class WittPolySet:
    """Набор из r целочисленных многочленов S_0..S_{r-1} для операции op"""
    p: int
    r: int
    op: str
    polys: Tuple[Poly, ...]
    x_vars: tuple
    y_vars: tuple

    @property
    def gens(self) -> tuple:
        return self.x_vars + self.y_vars

    def as_strings(self) -> List[str]:
        return [str(poly.as_expr()) for poly in self.polys]


def _gens(p: int, r: int, op: str):
    count = r + 1 if op == 'frobenius' else r
    x_vars = symbols(f'x0:{count}') if count else ()
    y_vars = symbols(f'y0:{r}') if op in ('sum', 'product') and r else ()
    return tuple(x_vars), tuple(y_vars)


def ghost_poly(p: int, n: int, variables, gens) -> Poly:
    """w_n = sum_{j<=n} p^j v_j^{p^{n-j}}"""
    total = Poly(0, *gens, domain=ZZ)
    for j in range(n + 1):
        total += Poly(variables[j], *gens, domain=ZZ) ** (p ** (n - j)) * (p ** j)
    return total


def _ghost_target(p: int, n: int, op: str, x_vars, y_vars, gens) -> Poly:
    if op == 'sum':
        return ghost_poly(p, n, x_vars, gens) + ghost_poly(p, n, y_vars, gens)
    if op == 'product':
        return ghost_poly(p, n, x_vars, gens) * ghost_poly(p, n, y_vars, gens)
    if op == 'neg':
        return -ghost_poly(p, n, x_vars, gens)
    return ghost_poly(p, n + 1, x_vars, gens)


@lru_cache(maxsize=None)
def structure_polys(p: int, r: int, op: str) -> WittPolySet:
    """
    Многочлены S_n из рекурсии S_n = (Φ_n - Σ_{j<n} p^j S_j^{p^{n-j}}) / p^n

    Args:
        p: Простое число (не больше WITT_MAX_PRIME)
        r: Длина (не больше WITT_MAX_LENGTH)
        op: sum | product | neg | frobenius

    Raises:
        CostGuard: При слишком больших p или r
        ValidationError: При неизвестной операции
    """
    if op not in OPERATIONS:
        raise ValidationError(f"Неизвестная операция Витта: {op}")
    if r > config.WITT_MAX_LENGTH or p > config.WITT_MAX_PRIME:
        raise CostGuard(f"Многочлены Витта для p={p}, r={r} слишком дороги "
                        f"(пределы: r <= {config.WITT_MAX_LENGTH}, p <= {config.WITT_MAX_PRIME})")
    if r < 0:
        raise ValidationError("Длина вектора Витта не может быть отрицательной")

    x_vars, y_vars = _gens(p, r, op)
    gens = x_vars + y_vars
    polys: List[Poly] = []
    for n in range(r):
        target = _ghost_target(p, n, op, x_vars, y_vars, gens)
        for j, s_j in enumerate(polys):
            target -= (s_j ** (p ** (n - j))) * (p ** j)
        try:
            polys.append(target.exquo_ground(p ** n))
        except ExactQuotientFailed:
            raise ValidationError(f"Неточное деление на {p}^{n} в многочлене S_{n} ({op})")

    logger.debug(f"Построены многочлены Витта p={p}, r={r}, op={op}")
    return WittPolySet(p=p, r=r, op=op, polys=tuple(polys), x_vars=x_vars, y_vars=y_vars)


def verify_ghost_identity(polyset: WittPolySet) -> bool:
    """Подстановка в духовные компоненты воспроизводит операцию точно над Z"""
    p, gens = polyset.p, polyset.gens
    for n in range(polyset.r):
        left = Poly(0, *gens, domain=ZZ)
        for j in range(n + 1):
            left += (polyset.polys[j] ** (p ** (n - j))) * (p ** j)
        target = _ghost_target(p, n, polyset.op, polyset.x_vars, polyset.y_vars, gens)
        if left != target:
            logger.warning(f"Духовное тождество нарушено: p={p}, op={polyset.op}, n={n}")
            return False
    return True
