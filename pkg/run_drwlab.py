#!/usr/bin/env python3
"""
Главный файл для запуска drwlab: compute и verify
"""
import sys
from pathlib import Path

# Добавляем корень проекта в путь для импортов
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import main

if __name__ == '__main__':
    sys.exit(main())
