"""
Кольца коэффициентов для векторов Витта
"""
from abc import ABC, abstractmethod
from typing import Dict, Tuple

Monomial = Tuple[int, ...]


class CoefficientRing(ABC):
    """Минимальный интерфейс коммутативного кольца"""

    p: int
    char_p: bool = False

    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def one(self): ...

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    @abstractmethod
    def from_int(self, n: int): ...

    @abstractmethod
    def eq(self, a, b) -> bool: ...

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def power(self, a, e: int):
        result = self.one()
        base = a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def pth_power(self, a):
        return self.power(a, self.p)


class IntegersModPN(CoefficientRing):
    """Z/p^N; при N = 1 это поле F_p"""

    def __init__(self, p: int, n: int = 1):
        self.p = p
        self.n = n
        self.modulus = p ** n
        self.char_p = n == 1

    def zero(self):
        return 0

    def one(self):
        return 1 % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def from_int(self, n: int):
        return n % self.modulus

    def eq(self, a, b) -> bool:
        return (a - b) % self.modulus == 0

    def power(self, a, e: int):
        return pow(a, e, self.modulus)

    def __repr__(self):
        return f"Z/{self.p}^{self.n}"


class LaurentFp(CoefficientRing):
    """
    F_p[x_1^{±1}, ..., x_n^{±1}]: элемент - словарь {показатели: коэффициент}

    Нулевые коэффициенты не хранятся.
    """

    char_p = True

    def __init__(self, p: int, n: int = 1):
        self.p = p
        self.n = n

    def _clean(self, data: Dict[Monomial, int]) -> Dict[Monomial, int]:
        return {e: c % self.p for e, c in data.items() if c % self.p}

    def monomial(self, coeff: int, exponents: Monomial) -> Dict[Monomial, int]:
        if len(exponents) != self.n:
            raise ValueError(f"Ожидалось {self.n} показателей, получено {len(exponents)}")
        return self._clean({tuple(exponents): coeff})

    def zero(self):
        return {}

    def one(self):
        return {(0,) * self.n: 1}

    def add(self, a, b):
        result = dict(a)
        for e, c in b.items():
            result[e] = result.get(e, 0) + c
        return self._clean(result)

    def mul(self, a, b):
        result: Dict[Monomial, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                result[e] = result.get(e, 0) + c1 * c2
        return self._clean(result)

    def neg(self, a):
        return self._clean({e: -c for e, c in a.items()})

    def from_int(self, n: int):
        return self._clean({(0,) * self.n: n})

    def eq(self, a, b) -> bool:
        return self._clean(a) == self._clean(b)

    def pth_power(self, a):
        # Фробениус в характеристике p: (Σ c x^e)^p = Σ c x^{pe}
        return {tuple(self.p * x for x in e): c for e, c in a.items()}

    def homogeneous_weight(self, a):
        """Единственный показатель однородного элемента или None"""
        if len(a) != 1:
            return None
        return next(iter(a))

    def __repr__(self):
        return f"F_{self.p}[x^±1; n={self.n}]"
