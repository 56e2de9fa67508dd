"""
p-адические скаляры конечной точности и вспомогательные функции над Z_(p)
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

Weight = Tuple[Fraction, ...]
UNTWISTED: Weight = ()


def to_fraction(x) -> Fraction:
    """Приведение int/Fraction/строки к Fraction"""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vp(x, p: int) -> Optional[int]:
    """p-адическое нормирование рационального числа (None для нуля)"""
    x = to_fraction(x)
    if x == 0:
        return None
    num, den = x.numerator, x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def is_integral(x, p: int) -> bool:
    """x лежит в Z_(p)"""
    x = to_fraction(x)
    return x.denominator % p != 0


def residue(x, p: int, k: int) -> Fraction:
    """
    Канонический представитель x по модулю p^k Z_(p)

    Args:
        x: Рациональное число без простых делителей знаменателя кроме p и взаимно простых
        p: Простое число
        k: Показатель (может быть отрицательным)

    Returns:
        Fraction: r = m / p^e с 0 <= m < p^(k+e), x - r лежит в p^k Z_(p)
    """
    x = to_fraction(x)
    if x == 0:
        return Fraction(0)
    v = vp(x, p)
    if v >= k:
        return Fraction(0)
    den = x.denominator
    e = 0
    while den % p == 0:
        den //= p
        e += 1
    modulus = p ** (k + e)
    m = (x.numerator * pow(den, -1, modulus)) % modulus
    return Fraction(m, p ** e)


def pow_p(p: int, k: int) -> Fraction:
    """p^k как Fraction (k может быть отрицательным)"""
    return Fraction(p) ** k


def reduce_mod_p(x, p: int) -> int:
    """Редукция элемента Z_(p) в F_p"""
    x = to_fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} не лежит в Z_({p})")
    return (x.numerator * pow(x.denominator, -1, p)) % p


def teichmuller_lift(c: int, p: int, r: int) -> int:
    """Тейхмюллеровский представитель c из F_p в Z/p^r"""
    modulus = p ** r
    c %= p
    if c == 0:
        return 0
    return pow(c, p ** max(r - 1, 0), modulus)


# --- Веса -----------------------------------------------------------------

def make_weight(*components) -> Weight:
    """Вес как кортеж Fraction"""
    return tuple(to_fraction(c) for c in components)


def scale_weight(weight: Weight, factor) -> Weight:
    """Умножение веса на число (p или 1/p)"""
    factor = to_fraction(factor)
    return tuple(c * factor for c in weight)


def weight_depth(weight: Weight, p: int) -> int:
    """Глубина знаменателя: наименьшее s, при котором p^s * weight целый"""
    depth = 0
    for c in weight:
        den = c.denominator
        s = 0
        while den % p == 0:
            den //= p
            s += 1
        if den != 1:
            raise ValueError(f"Вес {weight} содержит знаменатель, не являющийся степенью {p}")
        depth = max(depth, s)
    return depth


def _prime_power_exponent(den: int) -> Tuple[int, int]:
    """Для den = q^k возвращает (q, k)"""
    if den == 1:
        return 1, 0
    q = 2
    while den % q != 0:
        q += 1
    k = 0
    while den % q == 0:
        den //= q
        k += 1
    return q, k


def weight_to_json(weight: Weight) -> Any:
    """Вес в схеме drw-lab/1: массив {"num": строка, "denexp": int}"""
    result = []
    for c in weight:
        c = to_fraction(c)
        _, k = _prime_power_exponent(c.denominator)
        result.append({'num': str(c.numerator), 'denexp': k})
    return result


def weight_from_json(data, p: int) -> Weight:
    """Обратное преобразование веса"""
    return tuple(Fraction(int(item['num']), p ** int(item['denexp'])) for item in data)


def weight_sort_key(weight: Weight):
    """Детерминированный порядок весов"""
    return (len(weight), tuple(weight))


def format_weight_text(weight: Weight) -> str:
    """Вес для логов и сообщений"""
    if weight == UNTWISTED:
        return 'untwisted'
    return '(' + ', '.join(str(c) for c in weight) + ')'


# --- Скаляры ---------------------------------------------------------------

@dataclass(frozen=True)
class PScalar:
    """
    p-адический скаляр p^val * unit, известный по модулю p^prec

    val = None означает точный ноль; val = prec с unit = 0 означает
    "ноль по модулю p^prec" (кольцо единиц тривиально).
    """
    p: int
    val: Optional[int]
    unit: int
    prec: int

    @staticmethod
    def from_rational(p: int, x, prec: int) -> 'PScalar':
        x = to_fraction(x)
        if x == 0:
            return PScalar(p, None, 0, prec)
        v = vp(x, p)
        if v >= prec:
            return PScalar(p, prec, 0, prec)
        u = x / pow_p(p, v)
        modulus = p ** (prec - v)
        unit = (u.numerator * pow(u.denominator, -1, modulus)) % modulus
        return PScalar(p, v, unit, prec)

    @staticmethod
    def exact_zero(p: int, prec: int) -> 'PScalar':
        return PScalar(p, None, 0, prec)

    def to_fraction(self) -> Fraction:
        if self.val is None or self.unit == 0:
            return Fraction(0)
        return pow_p(self.p, self.val) * self.unit

    def is_exact_zero(self) -> bool:
        return self.val is None

    def is_zero(self) -> bool:
        """Ноль с точностью prec"""
        return self.val is None or self.val >= self.prec

    def _check(self, other: 'PScalar'):
        if self.p != other.p:
            from ..utils.exceptions import ShapeMismatch
            raise ShapeMismatch(f"Разные простые: {self.p} и {other.p}")

    def __add__(self, other: 'PScalar') -> 'PScalar':
        self._check(other)
        if self.is_exact_zero():
            return other
        if other.is_exact_zero():
            return self
        prec = min(self.prec, other.prec)
        total = self.to_fraction() + other.to_fraction()
        if total == 0:
            return PScalar(self.p, prec, 0, prec)
        return PScalar.from_rational(self.p, total, prec)

    def __neg__(self) -> 'PScalar':
        if self.is_exact_zero():
            return self
        return PScalar.from_rational(self.p, -self.to_fraction(), self.prec)

    def __sub__(self, other: 'PScalar') -> 'PScalar':
        return self + (-other)

    def __mul__(self, other: 'PScalar') -> 'PScalar':
        self._check(other)
        if self.is_exact_zero() or other.is_exact_zero():
            return PScalar.exact_zero(self.p, min(self.prec, other.prec))
        # Абсолютная точность произведения
        prec = min(self.prec + other.val, other.prec + self.val)
        product = self.to_fraction() * other.to_fraction()
        if product == 0:
            return PScalar(self.p, prec, 0, prec)
        return PScalar.from_rational(self.p, product, prec)

    def shift(self, k: int) -> 'PScalar':
        """Умножение на p^k, точное"""
        if self.val is None:
            return PScalar(self.p, None, 0, self.prec + k)
        return PScalar(self.p, self.val + k, self.unit, self.prec + k)

    def div_p(self) -> 'PScalar':
        return self.shift(-1)

    def equals_at(self, other: 'PScalar') -> bool:
        """Равенство с точностью min(prec)"""
        return (self - other).is_zero()

    def to_json(self) -> Dict[str, Any]:
        return {
            'v': 'inf' if self.val is None else self.val,
            'u': str(self.unit),
            'prec': self.prec,
        }

    @staticmethod
    def from_json(p: int, data: Dict[str, Any]) -> 'PScalar':
        val = None if data['v'] == 'inf' else int(data['v'])
        return PScalar(p, val, int(data['u']), int(data['prec']))

    def __str__(self):
        if self.val is None:
            return '0'
        if self.unit == 0:
            return f"O({self.p}^{self.prec})"
        return f"{self.p}^{self.val}*{self.unit} + O({self.p}^{self.prec})"
