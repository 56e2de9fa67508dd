from .logger import setup_logging, get_logger
from .exceptions import (
    DrwLabError, ConfigurationError, ValidationError,
    PrecisionExhausted, WindowTooSmall, NotASublattice, NotSaturated,
    AxiomViolation, CostGuard, ShapeMismatch
)
from .report import CheckReport, Finding, PASS, FAIL, UNTESTABLE

__all__ = [
    'setup_logging', 'get_logger',
    'DrwLabError', 'ConfigurationError', 'ValidationError',
    'PrecisionExhausted', 'WindowTooSmall', 'NotASublattice', 'NotSaturated',
    'AxiomViolation', 'CostGuard', 'ShapeMismatch',
    'CheckReport', 'Finding', 'PASS', 'FAIL', 'UNTESTABLE'
]
