import pytest

from src.database import DatabaseManager, ErrorLogCRUD, VerificationRunCRUD


def make_manager(url):
    manager = DatabaseManager()
    assert manager.init_connection(url)
    assert manager.create_tables()
    return manager


def record(session, suite, status, digest='0' * 64):
    return VerificationRunCRUD.create_run(
        session, command='verify', suite=suite, config_json='{}', status=status,
        passed=1, failed=int(status == 'fail'), untestable=0, report_digest=digest,
    )


def test_runs_history(sqlite_url):
    manager = make_manager(sqlite_url)
    with manager.session_scope() as session:
        record(session, 'etap', 'pass')
        record(session, 'etap', 'fail', digest='a' * 64)
        record(session, 'cusp', 'pass')
    with manager.session_scope() as session:
        assert len(VerificationRunCRUD.get_runs_history(session)) == 3
        assert len(VerificationRunCRUD.get_runs_history(session, suite='etap')) == 2
        latest = VerificationRunCRUD.get_latest_run(session, 'verify', 'etap')
        assert latest.status == 'fail'
        failed = VerificationRunCRUD.get_failed_runs(session)
        assert [run.suite for run in failed] == ['etap']
        assert len(VerificationRunCRUD.find_by_digest(session, '0' * 64)) == 2


def test_error_log(sqlite_url):
    manager = make_manager(sqlite_url)
    with manager.session_scope() as session:
        ErrorLogCRUD.log_error(session, 'cli', 'нет точности')
    with manager.session_scope() as session:
        errors = ErrorLogCRUD.get_recent_errors(session)
        assert [e.message for e in errors] == ['нет точности']


def test_ensure_ready_is_lazy(sqlite_url):
    manager = DatabaseManager()
    assert not manager.is_ready
    assert manager.ensure_ready(sqlite_url)
    engine = manager.engine
    assert manager.ensure_ready(sqlite_url)
    assert manager.engine is engine
    manager.dispose()
    assert not manager.is_ready


def test_rollback_on_error(sqlite_url):
    manager = make_manager(sqlite_url)
    with pytest.raises(ValueError):
        with manager.session_scope() as session:
            record(session, 'gamma', 'pass')
            raise ValueError('прервано')
    with manager.session_scope() as session:
        assert VerificationRunCRUD.get_runs_history(session) == []


def test_session_requires_connection():
    with pytest.raises(RuntimeError):
        DatabaseManager().get_session()
