"""
CRUD операции для работы с архивом прогонов
"""
from typing import List, Optional
from sqlalchemy.orm import Session
from sqlalchemy import desc, and_

from .models import VerificationRun, ErrorLog


class VerificationRunCRUD:
    """CRUD операции для прогонов"""

    @staticmethod
    def create_run(session: Session, **kwargs) -> VerificationRun:
        """Создание записи о прогоне"""
        run = VerificationRun(**kwargs)
        session.add(run)
        session.flush()
        return run

    @staticmethod
    def get_latest_run(session: Session, command: str, suite: str) -> Optional[VerificationRun]:
        """Последний прогон заданного набора"""
        return session.query(VerificationRun).filter(
            and_(VerificationRun.command == command, VerificationRun.suite == suite)
        ).order_by(desc(VerificationRun.created_at), desc(VerificationRun.id)).first()

    @staticmethod
    def get_runs_history(session: Session, suite: str = None, limit: int = 10) -> List[VerificationRun]:
        """История прогонов (по набору или все)"""
        query = session.query(VerificationRun)
        if suite:
            query = query.filter(VerificationRun.suite == suite)
        return query.order_by(desc(VerificationRun.created_at), desc(VerificationRun.id)).limit(limit).all()

    @staticmethod
    def get_failed_runs(session: Session, limit: int = 10) -> List[VerificationRun]:
        """Прогоны с провалами или ошибками"""
        return session.query(VerificationRun).filter(
            VerificationRun.status.in_(['fail', 'error'])
        ).order_by(desc(VerificationRun.created_at), desc(VerificationRun.id)).limit(limit).all()

    @staticmethod
    def find_by_digest(session: Session, digest: str) -> List[VerificationRun]:
        """Прогоны с тем же отчетом (проверка воспроизводимости)"""
        return session.query(VerificationRun).filter(VerificationRun.report_digest == digest).all()


class ErrorLogCRUD:
    """CRUD операции для логов ошибок"""

    @staticmethod
    def log_error(session: Session, source: str, message: str):
        """Запись ошибки в лог"""
        error_log = ErrorLog(source=source, message=message)
        session.add(error_log)

    @staticmethod
    def get_recent_errors(session: Session, limit: int = 20) -> List[ErrorLog]:
        """Последние ошибки"""
        return session.query(ErrorLog).order_by(desc(ErrorLog.created_at), desc(ErrorLog.id)).limit(limit).all()
