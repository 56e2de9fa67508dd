"""
Отчеты проверок: находки со статусом и местом (степень, вес)
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = 'pass'
FAIL = 'fail'
UNTESTABLE = 'untestable'


def format_weight(weight) -> Any:
    """Вес в JSON-виде: список {"num", "denexp"} или None"""
    if weight is None:
        return None
    from ..padic.scalars import weight_to_json
    return weight_to_json(weight)


@dataclass
class Finding:
    """Одна проверка на одном блоке"""
    check_id: str
    status: str
    degree: Optional[int] = None
    weight: Any = None
    message: str = ''

    def to_json(self) -> Dict[str, Any]:
        return {
            'check': self.check_id,
            'status': self.status,
            'degree': self.degree,
            'weight': format_weight(self.weight),
            'message': self.message,
        }


@dataclass
class CheckReport:
    """Отчет проверки, не бросает исключений на математических неудачах"""
    name: str
    findings: List[Finding] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def add(self, check_id: str, ok: bool, degree: int = None, weight=None, message: str = '') -> bool:
        self.findings.append(Finding(check_id, PASS if ok else FAIL, degree, weight, message))
        return ok

    def untestable(self, check_id: str, degree: int = None, weight=None, message: str = ''):
        self.findings.append(Finding(check_id, UNTESTABLE, degree, weight, message))

    def extend(self, other: 'CheckReport', prefix: str = None):
        for finding in other.findings:
            check_id = f"{prefix}.{finding.check_id}" if prefix else finding.check_id
            self.findings.append(Finding(check_id, finding.status, finding.degree,
                                         finding.weight, finding.message))

    @property
    def ok(self) -> bool:
        return not any(f.status == FAIL for f in self.findings)

    @property
    def failures(self) -> List[Finding]:
        return [f for f in self.findings if f.status == FAIL]

    def counts(self) -> Dict[str, int]:
        result = {PASS: 0, FAIL: 0, UNTESTABLE: 0}
        for finding in self.findings:
            result[finding.status] += 1
        return result

    def to_json(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'status': PASS if self.ok else FAIL,
            'counts': self.counts(),
            'findings': [f.to_json() for f in self.findings],
            'data': self.data,
        }
