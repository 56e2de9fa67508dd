"""
Подъем Фробениуса φ(x) = x^p + p·θ(x) над Z[x] и его F на Ω*
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List

import sympy

from ..utils.report import CheckReport

logger = logging.getLogger(__name__)

x = sympy.Symbol('x')


@dataclass
class GeneralLift:
    """
    F(g) = g(φ), F(h dx) = h(φ) · (x^{p-1} + θ') dx

    Формы степени 1 хранятся коэффициентом при dx.
    """
    p: int
    theta: sympy.Expr

    @property
    def phi(self) -> sympy.Expr:
        return sympy.expand(x ** self.p + self.p * self.theta)

    def F0(self, g) -> sympy.Expr:
        return sympy.expand(sympy.sympify(g).subs(x, self.phi))

    def F1(self, h) -> sympy.Expr:
        factor = x ** (self.p - 1) + sympy.diff(self.theta, x)
        return sympy.expand(sympy.sympify(h).subs(x, self.phi) * factor)

    @staticmethod
    def d(g) -> sympy.Expr:
        return sympy.expand(sympy.diff(sympy.sympify(g), x))


def general_lift_frobenius(p: int, theta='0') -> GeneralLift:
    """θ - многочлен от x с целыми коэффициентами (строка или выражение sympy)"""
    theta = sympy.sympify(theta)
    if theta.free_symbols - {x}:
        raise ValueError(f"θ должен зависеть только от x: {theta}")
    return GeneralLift(p, sympy.expand(theta))


def _coeffs(expr) -> List:
    if expr == 0:
        return []
    return sympy.Poly(expr, x).all_coeffs()


def lift_report(lift: GeneralLift, samples: Iterable = None) -> CheckReport:
    """dF = pFd, Fg ≡ g^p (mod p) и целочисленность F(dx) на образцах"""
    samples = list(samples or [1, x, x ** 2 + 1, 3 * x ** 3 - x, x ** 5 + 2 * x ** 2])
    p = lift.p
    report = CheckReport(name='derham.general_lift')
    for g in samples:
        g = sympy.sympify(g)
        left = lift.d(lift.F0(g))
        right = sympy.expand(p * lift.F1(lift.d(g)))
        report.add('dF=pFd', sympy.expand(left - right) == 0, 0, None, f"g = {g}")
        diff = sympy.expand(lift.F0(g) - g ** p)
        ok = all(c.is_integer and c % p == 0 for c in _coeffs(diff))
        report.add('frobenius_congruence', ok, 0, None, f"g = {g}")
    dx_image = lift.F1(1)
    report.add('F(dx)_integral', all(c.is_integer for c in _coeffs(dx_image)), 1, None,
               f"F(dx) = ({dx_image}) dx")
    logger.debug(f"Подъем φ = {lift.phi}: {report.counts()}")
    return report
