"""
Отчет verify в JSON: выбор блока и подсказки для перезапуска
"""
from typing import Any, Dict, Optional, Tuple

from ..padic.scalars import Weight
from ..utils.report import FAIL, CheckReport


def block_text(degree: int, weight: Weight) -> str:
    """Обратная запись к --block DEGREE:WEIGHT"""
    if not weight:
        return f"{degree}:untwisted"
    return f"{degree}:" + ','.join(str(c) for c in weight)


def restrict_to_block(report: CheckReport, block: Tuple[int, Weight]) -> CheckReport:
    """Находки только одного блока (степень, вес)"""
    degree, weight = block
    result = CheckReport(name=report.name, data=dict(report.data))
    result.findings = [f for f in report.findings
                       if f.degree == degree and f.weight is not None and tuple(f.weight) == weight]
    result.data['block'] = block_text(degree, weight)
    return result


def report_payload(report: CheckReport, block: Optional[Tuple[int, Weight]] = None) -> Dict[str, Any]:
    if block is not None:
        report = restrict_to_block(report, block)
    payload = report.to_json()
    reruns = sorted({block_text(f.degree, f.weight) for f in report.findings
                     if f.status == FAIL and f.degree is not None and f.weight is not None})
    if reruns:
        payload['rerun_blocks'] = reruns
    return payload
