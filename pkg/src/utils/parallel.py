"""
Распределение независимых весовых блоков по потокам
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

import psutil

from ..config import config

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def resolve_threads(threads: int = None) -> int:
    """Число потоков: 0 означает автоопределение по числу ядер"""
    threads = config.THREADS if threads is None else threads
    if threads and threads > 0:
        return threads
    return psutil.cpu_count(logical=False) or 1


def map_blocks(func: Callable[[T], R], items: Iterable[T], threads: int = None) -> List[R]:
    """
    Применяет func к блокам, порядок результата совпадает с порядком items

    Args:
        func: Чистая функция от одного блока
        items: Блоки (обычно веса)
        threads: Число потоков (None - из конфигурации)

    Returns:
        List: Результаты в исходном порядке
    """
    items = list(items)
    workers = min(resolve_threads(threads), max(len(items), 1))
    if workers <= 1:
        return [func(item) for item in items]
    logger.debug(f"Параллельная обработка {len(items)} блоков в {workers} потоках")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
