"""
Конфигурация приложения
"""
import os
from dotenv import load_dotenv

# Загружаем переменные окружения из .env файла
load_dotenv()


class Config:
    """Основные настройки приложения"""

    # Вычисления
    THREADS = int(os.getenv('DRWLAB_THREADS', 0))  # 0 = определить автоматически
    DEFAULT_PREC = int(os.getenv('DRWLAB_DEFAULT_PREC', 8))
    DEFAULT_SEED = int(os.getenv('DRWLAB_DEFAULT_SEED', 7))

    # Ограничения на структурные многочлены Витта
    WITT_MAX_LENGTH = 4
    WITT_MAX_PRIME = 13

    # Архив прогонов
    DATABASE_URL = os.getenv('DRWLAB_DATABASE_URL', 'sqlite:///drwlab_runs.db')
    ARCHIVE_RUNS = os.getenv('DRWLAB_ARCHIVE', '0') == '1'

    # Логирование
    LOG_LEVEL = os.getenv('DRWLAB_LOG_LEVEL', 'INFO')
    LOG_FILE = os.getenv('DRWLAB_LOG_FILE', 'logs/drwlab.log')

    # Версия схемы JSON
    SCHEMA = 'drw-lab/1'


config = Config()
