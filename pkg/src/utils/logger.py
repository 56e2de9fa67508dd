"""
Настройка логирования drwlab

stdout занят JSON-отчетом, поэтому консольный handler пишет только в stderr.
"""
import logging
import os
import sys
from logging.handlers import RotatingFileHandler

from ..config import config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# Сторонние логгеры, которые приглушаются до WARNING
QUIET_LOGGERS = ('sqlalchemy.engine', 'sqlalchemy.pool')


def _resolve_level(level: str) -> int:
    value = logging.getLevelName((level or 'INFO').upper())
    return value if isinstance(value, int) else logging.INFO


def setup_logging(level: str = None, log_file: str = None):
    """
    Настройка корневого логгера

    Args:
        level: Уровень логирования (по умолчанию DRWLAB_LOG_LEVEL)
        log_file: Путь к файлу логов; пустая строка отключает файловый handler
    """
    numeric = _resolve_level(level or config.LOG_LEVEL)
    log_file = config.LOG_FILE if log_file is None else log_file

    root = logging.getLogger()
    root.setLevel(numeric)
    root.handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = RotatingFileHandler(log_file, maxBytes=10 * 1024 * 1024, backupCount=5,
                                           encoding='utf-8')
        file_handler.setLevel(numeric)
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)

    # консоль: WARNING и выше, кроме уровня DEBUG
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG if numeric <= logging.DEBUG else logging.WARNING)
    console_handler.setFormatter(formatter)
    root.addHandler(console_handler)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)

    root.debug(f"Логирование drwlab: уровень {logging.getLevelName(numeric)}, файл {log_file or '-'}")


def get_logger(name: str = None) -> logging.Logger:
    return logging.getLogger(name)
