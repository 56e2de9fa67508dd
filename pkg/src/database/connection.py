"""
Подключение к архиву прогонов
"""
from contextlib import contextmanager
import logging

from sqlalchemy import create_engine
from sqlalchemy.engine import make_url
from sqlalchemy.orm import sessionmaker, Session

from ..config import config
from .models import Base

logger = logging.getLogger(__name__)


class DatabaseManager:
    """Архив прогонов: движок, фабрика сессий и схема"""

    def __init__(self):
        self.engine = None
        self.SessionLocal = None

    @property
    def is_ready(self) -> bool:
        return self.SessionLocal is not None

    def init_connection(self, url: str = None) -> bool:
        """Подключение к архиву (по умолчанию DRWLAB_DATABASE_URL)"""
        url = url or config.DATABASE_URL
        try:
            options = {}
            if make_url(url).get_backend_name() == 'sqlite':
                # сессия может открываться не в потоке, создавшем движок
                options['connect_args'] = {'check_same_thread': False}
            else:
                options['pool_pre_ping'] = True
            self.engine = create_engine(url, echo=False, **options)
            self.SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=self.engine)
            logger.info(f"Архив прогонов подключен: {make_url(url).render_as_string(hide_password=True)}")
            return True
        except Exception as e:
            logger.error(f"Ошибка подключения к архиву: {e}")
            self.engine = None
            self.SessionLocal = None
            return False

    def create_tables(self) -> bool:
        """Создание таблиц verification_runs и error_logs, если их нет"""
        try:
            Base.metadata.create_all(bind=self.engine)
            logger.debug("Таблицы архива на месте")
            return True
        except Exception as e:
            logger.error(f"Ошибка создания таблиц архива: {e}")
            return False

    def ensure_ready(self, url: str = None) -> bool:
        """Ленивое подключение: соединение и схема создаются при первой записи"""
        if self.is_ready:
            return True
        return self.init_connection(url) and self.create_tables()

    def get_session(self) -> Session:
        if not self.is_ready:
            raise RuntimeError("Архив прогонов не инициализирован")
        return self.SessionLocal()

    @contextmanager
    def session_scope(self):
        """Сессия с commit при успехе и rollback при ошибке"""
        session = self.get_session()
        try:
            yield session
            session.commit()
        except Exception as e:
            session.rollback()
            logger.error(f"Ошибка при работе с архивом: {e}")
            raise
        finally:
            session.close()

    def dispose(self):
        if self.engine is not None:
            self.engine.dispose()
        self.engine = None
        self.SessionLocal = None


# Глобальный архив, используется CLI
db_manager = DatabaseManager()
