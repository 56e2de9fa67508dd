"""
Точка входа drwlab: compute и verify, коды выхода и архив прогонов
"""
import argparse
import json
import logging
import time
from dataclasses import dataclass, fields
from typing import Any, Dict, List, Optional

from .codec import digest, dumps, envelope, error_object, write_output
from .compute import run_compute
from .formatting import report_payload
from .job import COMPUTE, COMPUTE_TARGETS, MODEL_KINDS, SUITES, VERIFY, JobConfig
from .suites import run_suite
from ..config import config
from ..database import ErrorLogCRUD, VerificationRunCRUD, db_manager
from ..utils.exceptions import (
    ConfigurationError, CostGuard, DrwLabError, PrecisionExhausted, ValidationError, WindowTooSmall
)
from ..utils.logger import setup_logging
from ..utils.report import FAIL, PASS, UNTESTABLE

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_RESOURCE = 3

CONFIG_ERRORS = (ConfigurationError, ValidationError)
RESOURCE_ERRORS = (PrecisionExhausted, WindowTooSmall, CostGuard)


@dataclass
class RunOutcome:
    """Результат прогона до сериализации"""
    status: str
    result: Dict[str, Any]
    counts: Dict[str, int]
    prec_left: Optional[int] = None


def exit_code_for(error: Exception) -> int:
    if isinstance(error, CONFIG_ERRORS):
        return EXIT_CONFIG
    if isinstance(error, RESOURCE_ERRORS):
        return EXIT_RESOURCE
    return EXIT_FAIL


def run_job(job: JobConfig) -> RunOutcome:
    """
    Выполняет задание без вывода

    Raises:
        DrwLabError: Ошибки конфигурации, ресурсов и структурные ошибки модулей
    """
    if job.command == COMPUTE:
        result = run_compute(job)
        return RunOutcome(PASS, result, {PASS: 0, FAIL: 0, UNTESTABLE: 0}, result.get('prec'))
    report = run_suite(job)
    payload = report_payload(report, job.block_key())
    status = payload['status']
    return RunOutcome(status, payload, payload['counts'], report.data.get('precision_left'))


def render(job: JobConfig, outcome: RunOutcome, elapsed: float) -> str:
    """Канонический JSON; время и расход точности - только в meta и только с --timing"""
    meta = None
    if job.timing:
        meta = {'elapsed_seconds': round(elapsed, 3), 'prec_requested': job.prec}
        if outcome.prec_left is not None:
            meta['precision_consumed'] = job.prec - outcome.prec_left
    return dumps(envelope(job.to_json(), outcome.result, outcome.status, meta))


def archive_run(job: JobConfig, status: str, counts: Dict[str, int], text: str, elapsed: float,
                prec_left: Optional[int] = None, error: str = None):
    """Запись прогона в архив; сбои архива только логируются"""
    try:
        if not db_manager.ensure_ready():
            logger.error("Архив недоступен, прогон не записан")
            return
        with db_manager.session_scope() as session:
            VerificationRunCRUD.create_run(
                session,
                command=job.command,
                suite=job.target,
                config_json=json.dumps(job.to_file_json(), sort_keys=True, default=str),
                status=status,
                passed=counts.get(PASS, 0),
                failed=counts.get(FAIL, 0),
                untestable=counts.get(UNTESTABLE, 0),
                precision_consumed=None if prec_left is None else job.prec - prec_left,
                elapsed_seconds=elapsed,
                report_digest=digest(text),
            )
            if error:
                ErrorLogCRUD.log_error(session, 'cli', error)
        logger.info(f"Прогон {job.command} {job.target} записан в архив")
    except Exception as e:
        logger.error(f"Ошибка записи в архив: {e}")


def _add_job_flags(parser: argparse.ArgumentParser):
    # default=None: явные флаги перекрывают --config
    parser.add_argument('--p', type=int, default=None, help='Простое p')
    parser.add_argument('--prec', type=int, default=None, help='Рабочая точность N (по модулю p^N)')
    parser.add_argument('--kind', choices=MODEL_KINDS, default=None, help='Тип модели для derham/tower/nygaard/verify')
    parser.add_argument('--n', type=int, default=None, help='Число переменных')
    parser.add_argument('--depth', type=int, default=None, help='Глубина насыщения s')
    parser.add_argument('--levels', type=int, default=None, help='Число уровней башни R')
    parser.add_argument('--wmin', default=None, help='Нижняя граница окна весов')
    parser.add_argument('--wmax', default=None, help='Верхняя граница окна весов')
    parser.add_argument('--weight-bound', dest='weight_bound', default=None, help='Симметричная граница |a_i|')
    parser.add_argument('--window-auto', dest='window_auto', action='store_true', default=None,
                        help='Растянуть окно на p^max(s, R)')
    parser.add_argument('--seed', type=int, default=None, help='Зерно случайного корпуса')
    parser.add_argument('--count', type=int, default=None, help='Размер случайного корпуса')
    parser.add_argument('--r', type=int, default=None, help='Длина векторов Витта')
    parser.add_argument('--op', default=None, help='Операция Витта: sum, product, neg, frobenius')
    parser.add_argument('--k', type=int, default=None, help='Верхний уровень фильтрации Нюгора')
    parser.add_argument('--block', default=None, help='Один блок DEGREE:WEIGHT, например 1:1/2,0')
    parser.add_argument('--out', default=None, help='Файл для JSON (по умолчанию stdout)')
    parser.add_argument('--config', default=None, help='JSON-файл задания схемы drw-lab/1')
    parser.add_argument('--archive', action='store_true', default=None, help='Записать прогон в архив')
    parser.add_argument('--timing', action='store_true', default=None, help='Добавить meta со временем')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='drwlab', description='Точные насыщенные комплексы де Рама-Витта')
    parser.add_argument('--log-level', dest='log_level', default=None, help='Уровень логирования')
    commands = parser.add_subparsers(dest='command', required=True)
    compute = commands.add_parser(COMPUTE, help='Построить модель и вывести JSON')
    compute.add_argument('target', choices=COMPUTE_TARGETS)
    _add_job_flags(compute)
    verify = commands.add_parser(VERIFY, help='Запустить набор проверок')
    verify.add_argument('target', choices=SUITES)
    _add_job_flags(verify)
    return parser


def job_from_args(args: argparse.Namespace) -> JobConfig:
    """
    Флаги поверх --config; результат проверен

    Raises:
        ConfigurationError: Несовместимые параметры или чужой файл конфигурации
    """
    overrides = {f.name: getattr(args, f.name) for f in fields(JobConfig)
                 if f.name not in ('command', 'target') and getattr(args, f.name, None) is not None}
    if args.config:
        job = JobConfig.load(args.config)
        if (job.command, job.target) != (args.command, args.target):
            raise ConfigurationError(f"Файл задания описывает {job.command} {job.target}, "
                                     f"а запрошено {args.command} {args.target}")
        values = {f.name: getattr(job, f.name) for f in fields(JobConfig)}
        values.update(overrides)
        job = JobConfig(**values)
    else:
        job = JobConfig(args.command, args.target, **overrides)
    return job.validate()


def main(argv: List[str] = None) -> int:
    """Возвращает код выхода: 0 pass, 1 fail, 2 конфигурация, 3 ресурсы"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(level=args.log_level)

    started = time.perf_counter()
    job = None
    try:
        job = job_from_args(args)
        outcome = run_job(job)
    except DrwLabError as e:
        code = exit_code_for(e)
        logger.error(f"Прогон {args.command} {args.target} прерван ({type(e).__name__}): {e}")
        text = dumps(error_object(e, code, job.to_json() if job else None))
        write_output(text)
        if job is not None and (job.archive or config.ARCHIVE_RUNS):
            archive_run(job, 'error', {}, text, time.perf_counter() - started, error=str(e))
        return code

    elapsed = time.perf_counter() - started
    text = render(job, outcome, elapsed)
    write_output(text, job.out)
    if job.archive or config.ARCHIVE_RUNS:
        archive_run(job, outcome.status, outcome.counts, text, elapsed, outcome.prec_left)
    logger.info(f"{job.command} {job.target}: {outcome.status} за {elapsed:.2f} с")
    return EXIT_PASS if outcome.status == PASS else EXIT_FAIL
