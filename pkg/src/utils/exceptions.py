"""
Кастомные исключения для приложения
"""


class DrwLabError(Exception):
    """Базовое исключение для приложения"""
    pass


class ConfigurationError(DrwLabError):
    """Ошибки конфигурации"""
    pass


class ValidationError(DrwLabError):
    """Ошибки валидации входных данных"""
    pass


class PrecisionExhausted(DrwLabError):
    """Рабочей точности p^N не хватает для операции"""
    pass


class WindowTooSmall(DrwLabError):
    """Нужный вес отсутствует в окне весов"""

    def __init__(self, message: str, weight=None):
        super().__init__(message)
        self.weight = weight


class NotASublattice(DrwLabError):
    """Подрешетка не содержится в объемлющей решетке"""
    pass


class NotSaturated(DrwLabError):
    """Комплекс Дьедонне не насыщен"""
    pass


class AxiomViolation(DrwLabError):
    """Нарушены аксиомы строгой башни Дьедонне"""

    def __init__(self, message: str, findings=None):
        super().__init__(message)
        self.findings = list(findings or [])


class CostGuard(DrwLabError):
    """Параметры превышают допустимую стоимость вычисления"""
    pass


class ShapeMismatch(DrwLabError):
    """Несовместимые размеры или параметры объектов"""
    pass
