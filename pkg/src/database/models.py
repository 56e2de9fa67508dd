"""
SQLAlchemy модели архива прогонов
"""
from datetime import datetime
from sqlalchemy import Column, Integer, String, Float, DateTime, Text, Index
from sqlalchemy.orm import declarative_base

Base = declarative_base()


class VerificationRun(Base):
    """Один прогон compute/verify"""
    __tablename__ = 'verification_runs'

    id = Column(Integer, primary_key=True)
    command = Column(String(20), nullable=False)  # compute или verify
    suite = Column(String(30), nullable=False)  # набор проверок или цель вычисления
    config_json = Column(Text, nullable=False)
    status = Column(String(10), nullable=False)  # pass, fail, error
    passed = Column(Integer, default=0)
    failed = Column(Integer, default=0)
    untestable = Column(Integer, default=0)
    precision_consumed = Column(Integer)
    elapsed_seconds = Column(Float)
    report_digest = Column(String(64))  # sha256 канонического JSON
    created_at = Column(DateTime, default=datetime.utcnow)

    __table_args__ = (
        Index('idx_runs_suite', 'command', 'suite'),
        Index('idx_runs_created_at', 'created_at'),
    )

    def __repr__(self):
        return f"<VerificationRun(command='{self.command}', suite='{self.suite}', status='{self.status}')>"


class ErrorLog(Base):
    """Логи ошибок"""
    __tablename__ = 'error_logs'

    id = Column(Integer, primary_key=True)
    source = Column(String(50))  # cli, archive, ...
    message = Column(Text)
    created_at = Column(DateTime, default=datetime.utcnow)

    def __repr__(self):
        return f"<ErrorLog(source='{self.source}', created_at='{self.created_at}')>"
