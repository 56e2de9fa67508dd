"""
Описание задания: команда, цель, параметры модели и окна весов
"""
import json
import logging
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

import sympy

from ..config import config
from ..drw.cusp import default_w_max
from ..padic.scalars import Weight, make_weight
from ..utils.exceptions import ConfigurationError
from ..witt.polynomials import OPERATIONS

logger = logging.getLogger(__name__)

COMPUTE = 'compute'
VERIFY = 'verify'
COMPUTE_TARGETS = ('torus', 'line', 'cusp', 'witt-polys', 'cusp-witness', 'derham', 'tower', 'nygaard')
SUITES = ('etap', 'gamma', 'cartier', 'tower', 'nygaard', 'nu', 'oracle', 'cusp', 'witt', 'criterion')
MODEL_KINDS = ('torus', 'line', 'cusp')

# Поля, которые хранятся как рациональные числа
RATIONAL_FIELDS = ('wmin', 'wmax', 'weight_bound')
# Поля запуска, не влияющие на результат
RUN_FIELDS = ('out', 'archive', 'timing')


@dataclass
class JobConfig:
    """
    Параметры одного прогона

    depth, levels, count и окно весов имеют значения по умолчанию, зависящие
    от цели (см. effective_depth, effective_levels, effective_count, window).
    """
    command: str
    target: str
    p: int = 2
    prec: int = config.DEFAULT_PREC
    kind: str = 'torus'
    n: int = 1
    depth: Optional[int] = None
    levels: Optional[int] = None
    wmin: Optional[Fraction] = None
    wmax: Optional[Fraction] = None
    weight_bound: Optional[Fraction] = None
    window_auto: bool = False
    seed: int = config.DEFAULT_SEED
    count: Optional[int] = None
    r: int = 2
    op: str = 'sum'
    k: int = 2
    block: Optional[str] = None
    out: Optional[str] = None
    archive: bool = False
    timing: bool = False

    def __post_init__(self):
        for name in RATIONAL_FIELDS:
            value = getattr(self, name)
            if value is not None:
                setattr(self, name, _rational(name, value))

    # --- Значения по умолчанию, зависящие от цели ---------------------------

    @property
    def model_kind(self) -> str:
        """Тип модели: для compute torus/line/cusp совпадает с целью"""
        if self.command == COMPUTE and self.target in MODEL_KINDS:
            return self.target
        return self.kind

    @property
    def effective_levels(self) -> int:
        if self.levels is not None:
            return self.levels
        if self.command == COMPUTE and self.target in ('torus', 'line'):
            return 0
        return 2

    @property
    def effective_depth(self) -> int:
        if self.depth is not None:
            return self.depth
        if self.target in ('tower', 'torus', 'line'):
            return max(self.effective_levels, 1)
        if self.target == 'nygaard':
            return max(self.k, 1)
        if self.target == 'criterion':
            return 2
        return 1

    @property
    def effective_count(self) -> int:
        if self.count is not None:
            return self.count
        return 20 if self.target == 'witt' else 50

    def window(self) -> Tuple[Fraction, Fraction]:
        """
        Окно (lower, upper) для |a_i|

        С --window-auto запрошенные веса растягиваются на p^max(s, R): веса p^s·a
        и p^R·a должны лежать в окне.
        """
        if self.weight_bound is not None:
            lower, upper = -self.weight_bound, self.weight_bound
        elif self.wmin is not None or self.wmax is not None:
            upper = self.wmax if self.wmax is not None else -self.wmin
            lower = self.wmin if self.wmin is not None else -self.wmax
        else:
            upper = Fraction(_default_bound(self))
            lower = -upper
        if self.window_auto:
            scale = self.p ** max(self.effective_depth, self.effective_levels if self.target == 'tower' else 0)
            lower, upper = lower * scale, upper * scale
        return lower, upper

    def bound(self) -> Fraction:
        """Симметричная граница окна для моделей без нижней границы"""
        lower, upper = self.window()
        return max(abs(lower), abs(upper))

    def cusp_w_max(self) -> int:
        if self.wmax is not None or self.weight_bound is not None:
            return int(self.window()[1])
        return default_w_max(self.p)

    def block_key(self) -> Optional[Tuple[int, Weight]]:
        """--block DEGREE:WEIGHT, вес через запятую ('1:1/2,-3'); 'untwisted' - пустой вес"""
        if self.block is None:
            return None
        degree, _, weight = self.block.partition(':')
        try:
            degree = int(degree)
            if weight.strip() in ('', 'untwisted'):
                return degree, ()
            return degree, make_weight(*(Fraction(c.strip()) for c in weight.split(',')))
        except ValueError as e:
            raise ConfigurationError(f"Неверный формат --block '{self.block}': {e}")

    # --- Проверка и сериализация -------------------------------------------

    def validate(self) -> 'JobConfig':
        """
        Raises:
            ConfigurationError: При неверных или несовместимых параметрах
        """
        if self.command not in (COMPUTE, VERIFY):
            raise ConfigurationError(f"Неизвестная команда: {self.command}")
        targets = COMPUTE_TARGETS if self.command == COMPUTE else SUITES
        if self.target not in targets:
            raise ConfigurationError(f"Неизвестная цель {self.command}: {self.target}")
        if not isinstance(self.p, int) or not sympy.isprime(self.p):
            raise ConfigurationError(f"p должно быть простым, получено {self.p}")
        if self.prec < 1:
            raise ConfigurationError("Точность должна быть положительной")
        if self.kind not in MODEL_KINDS:
            raise ConfigurationError(f"Неизвестный тип модели: {self.kind}")
        if self.n < 1:
            raise ConfigurationError("Число переменных n должно быть >= 1")
        if self.model_kind in ('line', 'cusp') and self.n != 1:
            raise ConfigurationError(f"Модель {self.model_kind} определена только для n = 1")
        for name in ('depth', 'levels', 'r', 'k'):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ConfigurationError(f"{name} не может быть отрицательным")
        if self.count is not None and self.count < 1:
            raise ConfigurationError("count должен быть >= 1")
        if self.r < 1 and self.target in ('witt-polys', 'witt'):
            raise ConfigurationError("Длина векторов Витта r должна быть >= 1")
        if self.op not in OPERATIONS:
            raise ConfigurationError(f"Неизвестная операция: {self.op}")
        if self.weight_bound is not None and (self.wmin is not None or self.wmax is not None):
            raise ConfigurationError("--weight-bound несовместим с --wmin/--wmax")
        if self.weight_bound is not None and self.weight_bound < 0:
            raise ConfigurationError("--weight-bound должен быть неотрицательным")
        if self.wmin is not None and self.wmax is not None and self.wmin > self.wmax:
            raise ConfigurationError("wmin больше wmax")
        if self.target in ('tower', 'torus', 'line') and self.effective_depth < self.effective_levels:
            raise ConfigurationError(f"Глубина s={self.effective_depth} меньше числа уровней R={self.effective_levels}")
        if self.block is not None:
            if self.command != VERIFY:
                raise ConfigurationError("--block применим только к verify")
            self.block_key()
        return self

    def to_json(self) -> Dict[str, Any]:
        """Эхо задания для отчета; поля запуска не входят (детерминизм)"""
        data = asdict(self)
        data['kind'] = self.model_kind
        for name in RATIONAL_FIELDS:
            if data[name] is not None:
                data[name] = str(data[name])
        for name in RUN_FIELDS:
            data.pop(name)
        return data

    def to_file_json(self) -> Dict[str, Any]:
        """Полный вид для --config"""
        data = self.to_json()
        for name in RUN_FIELDS:
            data[name] = getattr(self, name)
        return {'schema': config.SCHEMA, 'job': data}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'JobConfig':
        """
        Принимает {"schema": "drw-lab/1", "job": {...}} или плоский словарь

        Raises:
            ConfigurationError: Чужая схема, неизвестные или отсутствующие поля
        """
        if 'job' in data:
            if data.get('schema') != config.SCHEMA:
                raise ConfigurationError(f"Ожидалась схема {config.SCHEMA}, получено {data.get('schema')}")
            data = data['job']
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigurationError(f"Неизвестные поля задания: {sorted(unknown)}")
        if 'command' not in data or 'target' not in data:
            raise ConfigurationError("В задании нужны поля command и target")
        values = {}
        for name, value in data.items():
            if value is not None and name not in RATIONAL_FIELDS and isinstance(value, str) \
                    and name not in ('command', 'target', 'kind', 'op', 'block', 'out'):
                value = _integer(name, value)
            values[name] = value
        return cls(**values)

    @classmethod
    def load(cls, path: str) -> 'JobConfig':
        try:
            with open(path, encoding='utf-8') as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"Не удалось прочитать конфигурацию {path}: {e}")
        if not isinstance(data, dict):
            raise ConfigurationError("Конфигурация должна быть JSON-объектом")
        return cls.from_json(data)


def _rational(name: str, value) -> Fraction:
    try:
        return Fraction(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{name}: ожидалось рациональное число, получено {value!r}")


def _integer(name: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigurationError(f"{name}: ожидалось целое число, получено {value!r}")


def _default_bound(job: JobConfig) -> int:
    if job.target == 'cartier':
        return 8 if job.n == 1 else 4
    if job.target in ('tower', 'nygaard'):
        return 1
    return 2 if job.n == 1 else 1
