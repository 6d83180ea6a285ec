import csv
import io
import json

from click.testing import CliRunner
import pytest

from csecs import CsEcsGroup
from csecs.errors import DegenerateState, InvalidParams


def _csv_rows(output):
    return list(csv.DictReader(io.StringIO(output)))


def test_help_lists_subcommands(runner, cli):
    result = runner.invoke(cli, ['--help'])
    assert result.exit_code == 0
    for name in ('point', 'sweep', 'figure', 'threshold', 'verify'):
        assert name in result.output


def test_point_prints_json(runner, cli):
    result = runner.invoke(cli, ['point', '--alpha-re', '1.0', '--m', '1', '--n', '1', '--r-a', '0.7071067811865476'])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload['concurrence']['c'] == pytest.approx(0.99854, abs=1e-5)
    assert payload['params']['r_b'] == payload['params']['r_a']
    assert 'oracle' not in payload


def test_point_with_oracle(runner, cli):
    result = runner.invoke(cli, ['point', '--alpha-re', '0.5', '--r-a', '0.3', '--r-b', '0.6', '--oracle-check'])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload['oracle']['concurrence'] == pytest.approx(payload['concurrence']['c'], abs=1e-8)
    assert payload['oracle']['inv_square'] == pytest.approx(payload['normalization']['inv_square'], rel=1e-9)


def test_point_degenerate_state_exit_code(runner, cli):
    result = runner.invoke(cli, ['point', '--alpha-re', '0', '--r-a', '0', '--m', '1', '--n', '0'])
    assert result.exit_code == 4


def test_invalid_parity_is_usage_error(runner, cli):
    result = runner.invoke(cli, ['point', '--parity', 'sideways'])
    assert result.exit_code == 2


def test_sweep_csv(runner, cli):
    result = runner.invoke(cli, [
        'sweep', '--quantity', 'concurrence',
        '--grid', 'alpha_re', '0.5', '1.5', '3',
        '--grid', 'r', '0.2', '0.8', '2',
        '--oracle-check'
    ])
    assert result.exit_code == 0, result.output
    rows = _csv_rows(result.stdout)
    assert len(rows) == 6
    assert all(float(row['oracle_delta']) < 1e-7 for row in rows)
    assert rows[0]['parity'] == 'even'


def test_sweep_json_to_file(runner, cli, tmp_path):
    out = tmp_path / 'sv.json'
    result = runner.invoke(cli, [
        'sweep', '--quantity', 'sv', '--grid', 'alpha_re', '0.0', '1.5', '4',
        '--format', 'json', '--out', str(out)
    ])
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text())
    assert payload['header'][:2] == ['alpha_re', 'alpha_im']
    assert len(payload['rows']) == 4


def test_sweep_rejects_r_and_t_together(runner, cli):
    result = runner.invoke(cli, [
        'sweep', '--quantity', 'sv', '--grid', 'r', '0', '1', '2', '--grid', 't', '0', '1', '2'
    ])
    assert result.exit_code == 2


def test_sweep_row_errors_do_not_abort(runner, cli):
    result = runner.invoke(cli, [
        'sweep', '--quantity', 'normalization', '--grid', 'alpha_re', '0', '1', '2', '--r-a', '0'
    ])
    assert result.exit_code == 0
    rows = _csv_rows(result.stdout)
    assert rows[0]['error'].startswith('DegenerateState')
    assert rows[0]['inv_square'] == ''


def test_sweep_reads_quadrature_order_from_config(runner, cli, config, monkeypatch):
    monkeypatch.setattr(config, 'QUAD_ORDER', 10)
    result = runner.invoke(cli, [
        'sweep', '--quantity', 'fidelity', '--alpha-re', '0.5', '--oracle-check'
    ])
    assert result.exit_code == 0, result.output
    rows = _csv_rows(result.stdout)
    assert rows[0]['error'].startswith('InvalidParams')


def test_point_reports_fidelity_term_args(runner, cli):
    result = runner.invoke(cli, ['point', '--alpha-re', '0.5', '--r-a', '0.3'])
    assert result.exit_code == 0, result.output
    term_args = json.loads(result.stdout)['fidelity']['term_args']
    assert sorted(term_args) == ['aa', 'am', 'ma', 'mm']
    assert len(term_args['aa']['n1']) == 2


def test_threshold(runner, cli):
    result = runner.invoke(cli, ['threshold', '--t', '0.6'])
    assert result.exit_code == 0, result.output
    rows = _csv_rows(result.stdout)
    assert rows[0]['curve'] == 'EECS'
    assert 0.562 <= float(rows[0]['alpha_star']) <= 0.572
    assert abs(float(rows[0]['residual'])) < 1e-8
    assert float(rows[1]['alpha_star']) < float(rows[0]['alpha_star'])


def test_figure_is_deterministic(runner, cli):
    first = runner.invoke(cli, ['figure', 'Fig3'])
    second = runner.invoke(cli, ['figure', 'fig3'])
    assert first.exit_code == 0
    assert first.stdout == second.stdout


def test_unknown_figure(runner, cli):
    result = runner.invoke(cli, ['figure', 'Fig8'])
    assert result.exit_code == 2


def test_verify_bad_tolerance(runner, cli):
    result = runner.invoke(cli, ['verify', '--tolerance=-1'])
    assert result.exit_code == 2


@pytest.mark.slow
def test_verify_exit_codes(runner, cli, tmp_path):
    out = tmp_path / 'report.json'
    passed = runner.invoke(cli, ['verify', '--tolerance', '1e-7', '--out', str(out)])
    assert passed.exit_code == 0, passed.output
    assert json.loads(out.read_text())['passed'] is True
    failed = runner.invoke(cli, ['verify', '--tolerance', '1e-15'])
    assert failed.exit_code == 3


def test_error_handlers_resolve_by_class():
    group = CsEcsGroup(name='handlers')
    seen = []

    @group.errorhandler(InvalidParams)
    def invalid(error):
        seen.append('invalid')
        return 2

    @group.command('boom')
    def boom():
        raise InvalidParams('bad')

    @group.command('degenerate')
    def degenerate():
        raise DegenerateState('gone')

    runner = CliRunner()
    assert runner.invoke(group, ['boom']).exit_code == 2
    assert seen == ['invalid']
    result = runner.invoke(group, ['degenerate'])
    assert isinstance(result.exception, DegenerateState)
