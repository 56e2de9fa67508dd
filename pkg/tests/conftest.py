"""
Общие фикстуры тестов
"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.config import config  # noqa: E402


@pytest.fixture(autouse=True)
def no_log_file(monkeypatch):
    """Тесты не пишут в logs/ и не трогают архив по умолчанию"""
    monkeypatch.setattr(config, 'LOG_FILE', '')
    monkeypatch.setattr(config, 'ARCHIVE_RUNS', False)


@pytest.fixture
def sqlite_url(tmp_path):
    return f"sqlite:///{tmp_path / 'runs.db'}"
