from .models import Base, VerificationRun, ErrorLog
from .connection import DatabaseManager, db_manager
from .crud import VerificationRunCRUD, ErrorLogCRUD

__all__ = [
    'Base', 'VerificationRun', 'ErrorLog',
    'DatabaseManager', 'db_manager',
    'VerificationRunCRUD', 'ErrorLogCRUD'
]
