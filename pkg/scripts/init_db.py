#!/usr/bin/env python3
"""
Создание таблиц архива прогонов drwlab

    python scripts/init_db.py [--url sqlite:///drwlab_runs.db]
"""
import argparse
import sys
import os

# Добавляем корневую директорию в путь
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.utils.logger import setup_logging, get_logger
from src.database.connection import db_manager
from src.config import config


def init_database(url: str = None) -> bool:
    logger = get_logger(__name__)
    url = url or config.DATABASE_URL
    if not url:
        logger.error("Не указан DRWLAB_DATABASE_URL и не передан --url")
        return False

    if not db_manager.ensure_ready(url):
        logger.error("Архив прогонов не создан")
        return False

    logger.info("Таблицы verification_runs и error_logs готовы")
    db_manager.dispose()
    return True


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description='Инициализация архива прогонов drwlab')
    parser.add_argument('--url', default=None, help='URL базы (по умолчанию DRWLAB_DATABASE_URL)')
    args = parser.parse_args()
    setup_logging()
    sys.exit(0 if init_database(args.url) else 1)
