import json
from fractions import Fraction

import pytest

from src.cli import EXIT_CONFIG, EXIT_PASS, EXIT_RESOURCE, JobConfig, block_text, main
from src.cli import commands
from src.database import DatabaseManager, VerificationRunCRUD
from src.utils.exceptions import ConfigurationError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cusp_witness_golden(capsys):
    code, out = run(capsys, 'compute', 'cusp-witness', '--p', '3')
    assert code == EXIT_PASS
    document = json.loads(out)
    assert document['schema'] == 'drw-lab/1'
    assert document['status'] == 'pass'
    assert document['result'] == {
        'p': 3, 'n': 2, 'expression': '(1/2)*x*y^2*dy', 'weight': '9', 'coefficient': '1/2', 'verified': True,
    }


def test_output_is_deterministic(capsys):
    first = run(capsys, 'compute', 'witt-polys', '--p', '3', '--r', '2', '--op', 'product')
    second = run(capsys, 'compute', 'witt-polys', '--p', '3', '--r', '2', '--op', 'product')
    assert first == second
    result = json.loads(first[1])['result']
    assert result['ghost_identity'] is True
    assert len(result['polys']) == 2


def test_verify_output_is_deterministic(capsys):
    first = run(capsys, 'verify', 'etap', '--p', '3', '--count', '3', '--seed', '5')
    second = run(capsys, 'verify', 'etap', '--p', '3', '--count', '3', '--seed', '5')
    assert first == second
    assert first[0] == EXIT_PASS
    assert 'meta' not in json.loads(first[1])


def test_timing_goes_to_meta(capsys):
    code, out = run(capsys, 'compute', 'torus', '--p', '2', '--timing')
    document = json.loads(out)
    assert code == EXIT_PASS
    assert document['meta']['prec_requested'] == 8
    assert document['meta']['precision_consumed'] == 1
    assert 'timing' not in document['job']


def test_config_error_exit_code(capsys):
    code, out = run(capsys, 'compute', 'torus', '--p', '4')
    assert code == EXIT_CONFIG
    error = json.loads(out)['error']
    assert error['type'] == 'ConfigurationError'
    assert error['exit_code'] == EXIT_CONFIG


def test_usage_error_exits_with_two(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['compute', 'sphere'])
    assert excinfo.value.code == 2


def test_cost_guard_exit_code(capsys):
    code, out = run(capsys, 'compute', 'witt-polys', '--r', '5')
    assert code == EXIT_RESOURCE
    assert json.loads(out)['error']['type'] == 'CostGuard'


def test_precision_exhausted_exit_code(capsys):
    code, out = run(capsys, 'compute', 'torus', '--prec', '1', '--depth', '1')
    assert code == EXIT_RESOURCE
    assert json.loads(out)['error']['type'] == 'PrecisionExhausted'


def test_block_filter(capsys):
    code, out = run(capsys, 'verify', 'nu', '--p', '2', '--block', '0:1')
    assert code == EXIT_PASS
    result = json.loads(out)['result']
    assert result['data']['block'] == '0:1'
    assert result['findings']
    assert all(f['degree'] == 0 for f in result['findings'])


def test_block_only_for_verify(capsys):
    code, _ = run(capsys, 'compute', 'torus', '--block', '0:1')
    assert code == EXIT_CONFIG


def test_out_file(tmp_path, capsys):
    target = tmp_path / 'reports' / 'witness.json'
    code, out = run(capsys, 'compute', 'cusp-witness', '--p', '5', '--out', str(target))
    assert code == EXIT_PASS
    assert out == ''
    assert json.loads(target.read_text(encoding='utf-8'))['result']['expression'] == '(1/2)*x*dy'


def test_config_file_round_trip(tmp_path, capsys):
    job = JobConfig('compute', 'witt-polys', p=3, r=2, op='neg').validate()
    path = tmp_path / 'job.json'
    path.write_text(json.dumps(job.to_file_json()), encoding='utf-8')
    from_file = run(capsys, 'compute', 'witt-polys', '--config', str(path))
    direct = run(capsys, 'compute', 'witt-polys', '--p', '3', '--r', '2', '--op', 'neg')
    assert from_file == direct


def test_config_file_for_other_target(tmp_path, capsys):
    path = tmp_path / 'job.json'
    path.write_text(json.dumps(JobConfig('compute', 'torus').to_file_json()), encoding='utf-8')
    code, _ = run(capsys, 'compute', 'line', '--config', str(path))
    assert code == EXIT_CONFIG


def test_verify_witt_suite(capsys):
    code, out = run(capsys, 'verify', 'witt', '--p', '2', '--r', '2', '--count', '3')
    assert code == EXIT_PASS
    assert json.loads(out)['result']['counts']['fail'] == 0


def test_archive_records_run(monkeypatch, sqlite_url, capsys):
    manager = DatabaseManager()
    assert manager.init_connection(sqlite_url)
    assert manager.create_tables()
    monkeypatch.setattr(commands, 'db_manager', manager)
    code, _ = run(capsys, 'compute', 'cusp-witness', '--p', '2', '--archive')
    assert code == EXIT_PASS
    with manager.session_scope() as session:
        latest = VerificationRunCRUD.get_latest_run(session, 'compute', 'cusp-witness')
        assert latest.status == 'pass'
        assert len(latest.report_digest) == 64


def test_job_defaults():
    assert JobConfig('compute', 'torus').effective_levels == 0
    assert JobConfig('compute', 'torus').effective_depth == 1
    assert JobConfig('verify', 'tower').effective_depth == 2
    assert JobConfig('verify', 'nygaard', k=3).effective_depth == 3
    assert JobConfig('verify', 'witt').effective_count == 20
    assert JobConfig('verify', 'cartier').window() == (Fraction(-8), Fraction(8))
    assert JobConfig('verify', 'cartier', n=2).window() == (Fraction(-4), Fraction(4))


def test_window_options():
    assert JobConfig('compute', 'torus', wmin='-1/2', wmax=3).window() == (Fraction(-1, 2), Fraction(3))
    assert JobConfig('compute', 'torus', wmax=3).window() == (Fraction(-3), Fraction(3))
    auto = JobConfig('verify', 'tower', p=3, weight_bound=1, window_auto=True)
    assert auto.window() == (Fraction(-9), Fraction(9))


def test_job_echo_reports_model_kind():
    assert JobConfig('compute', 'cusp').to_json()['kind'] == 'cusp'
    assert JobConfig('compute', 'line').to_json()['kind'] == 'line'
    assert JobConfig('verify', 'tower', kind='line').to_json()['kind'] == 'line'
    echoed = JobConfig.from_json(JobConfig('compute', 'cusp', p=3).to_file_json())
    assert echoed.model_kind == 'cusp'


@pytest.mark.parametrize('options', [
    {'p': 6},
    {'kind': 'line', 'n': 2},
    {'weight_bound': 1, 'wmin': 0},
    {'wmin': 2, 'wmax': 1},
    {'depth': 1, 'levels': 2},
    {'block': 'x:1'},
])
def test_job_validation(options):
    with pytest.raises(ConfigurationError):
        JobConfig('verify', 'tower', **options).validate()


def test_block_key_and_text():
    job = JobConfig('verify', 'tower', block='1:1/2,-3')
    degree, weight = job.block_key()
    assert degree == 1
    assert weight == (Fraction(1, 2), Fraction(-3))
    assert block_text(degree, weight) == '1:1/2,-3'
    assert JobConfig('verify', 'etap', block='2:untwisted').block_key() == (2, ())


def test_job_from_json_rejects_foreign_input():
    with pytest.raises(ConfigurationError):
        JobConfig.from_json({'schema': 'other/1', 'job': {'command': 'compute', 'target': 'torus'}})
    with pytest.raises(ConfigurationError):
        JobConfig.from_json({'command': 'compute', 'target': 'torus', 'colour': 'red'})
    job = JobConfig.from_json({'command': 'compute', 'target': 'torus', 'p': '3', 'wmax': '5/3'})
    assert job.p == 3
    assert job.wmax == Fraction(5, 3)
