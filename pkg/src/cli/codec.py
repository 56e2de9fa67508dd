"""
Канонический JSON схемы drw-lab/1
"""
import hashlib
import json
import logging
import os
from fractions import Fraction
from typing import Any, Dict, Optional

from ..config import config
from ..padic.scalars import weight_to_json
from ..utils.exceptions import DrwLabError

logger = logging.getLogger(__name__)


def _default(obj):
    """Точные значения, не имеющие JSON-типа"""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=str)
    raise TypeError(f"Объект типа {type(obj).__name__} не сериализуется в JSON")


def dumps(payload: Dict[str, Any]) -> str:
    """Сортированные ключи и фиксированные отступы: одинаковый вход дает одинаковые байты"""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, default=_default) + '\n'


def envelope(job: Dict[str, Any], result: Dict[str, Any], status: str,
             meta: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    document = {
        'schema': config.SCHEMA,
        'job': job,
        'status': status,
        'result': result,
    }
    if meta is not None:
        document['meta'] = meta
    return document


def error_object(error: Exception, exit_code: int, job: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Машиночитаемая ошибка: тип, сообщение, код выхода и вес (для WindowTooSmall)"""
    body = {
        'type': type(error).__name__,
        'message': str(error),
        'exit_code': exit_code,
    }
    weight = getattr(error, 'weight', None)
    if weight is not None:
        body['weight'] = weight_to_json(weight)
    findings = getattr(error, 'findings', None)
    if findings:
        body['findings'] = [f.to_json() for f in findings]
    document = {'schema': config.SCHEMA, 'status': 'error', 'error': body}
    if job is not None:
        document['job'] = job
    return document


def digest(text: str) -> str:
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def write_output(text: str, out: Optional[str] = None):
    """В файл --out или в stdout"""
    if not out:
        print(text, end='')
        return
    directory = os.path.dirname(out)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    try:
        with open(out, 'w', encoding='utf-8') as handle:
            handle.write(text)
    except OSError as e:
        raise DrwLabError(f"Не удалось записать {out}: {e}")
    logger.info(f"Отчет записан в {out}")
