from .job import JobConfig, COMPUTE, VERIFY, COMPUTE_TARGETS, SUITES, MODEL_KINDS
from .codec import dumps, envelope, error_object, digest, write_output
from .formatting import report_payload, restrict_to_block, block_text
from .suites import SUITE_RUNNERS, run_suite, derham_model
from .compute import COMPUTE_RUNNERS, run_compute
from .commands import (
    RunOutcome, run_job, render, archive_run, build_parser, job_from_args, main, exit_code_for,
    EXIT_PASS, EXIT_FAIL, EXIT_CONFIG, EXIT_RESOURCE
)

__all__ = [
    'JobConfig', 'COMPUTE', 'VERIFY', 'COMPUTE_TARGETS', 'SUITES', 'MODEL_KINDS',
    'dumps', 'envelope', 'error_object', 'digest', 'write_output',
    'report_payload', 'restrict_to_block', 'block_text',
    'SUITE_RUNNERS', 'run_suite', 'derham_model',
    'COMPUTE_RUNNERS', 'run_compute',
    'RunOutcome', 'run_job', 'render', 'archive_run', 'build_parser', 'job_from_args', 'main', 'exit_code_for',
    'EXIT_PASS', 'EXIT_FAIL', 'EXIT_CONFIG', 'EXIT_RESOURCE'
]
