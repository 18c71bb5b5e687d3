import json
import sys

import pytest
from typer.testing import CliRunner

from latticeburgers.__main__ import run
from latticeburgers.base.exceptions import InvalidArgumentError
from latticeburgers.cli import app

runner = CliRunner()


def _invoke(*args):
    result = runner.invoke(app, [str(a) for a in args])
    assert result.exit_code == 0, result.output
    return result


def _rows(result):
    rows = []
    for line in result.stdout.splitlines():
        tokens = line.split()
        if tokens and tokens[0].isdigit():
            rows.append(tokens)
    return rows


def _value(result, key):
    for line in result.stdout.splitlines():
        for token in line.split():
            if token.startswith(key + '='):
                return token.split('=', 1)[1]
    raise AssertionError(f'{key} not in {result.stdout!r}')


def test_lattice():
    flags = ('--lattice', 'exponential', '--c', 0.15, '--n', 4, '--m', 3)
    result = _invoke('lattice', *flags)
    assert 'n m x y' in result.stdout
    rows = {(int(r[0]), int(r[1])): (float(r[2]), float(r[3])) for r in _rows(result)}
    assert len(rows) == 12
    assert rows[(1, 1)] == pytest.approx((1.15 * 2.35, 2.35))


def test_lattice_to_a_file(tmp_path):
    _invoke('lattice', '--out', tmp_path / 'lattice.txt')
    lines = (tmp_path / 'lattice.txt').read_text().splitlines()
    assert lines[0] == 'n m x y'
    assert len(lines) == 65


def test_check_schwarz():
    result = _invoke('check-schwarz', '--lattice', 'exponential', '--c', 0.15)
    assert _value(result, 'is_schwarzian') == 'false'
    assert float(_value(result, 'max_sx_violation')) > 0.0

    result = _invoke('check-schwarz')
    assert _value(result, 'is_schwarzian') == 'true'
    assert _value(result, 'max_sx_violation') == '0'


def test_invariants():
    result = _invoke('invariants', '--n', 4, '--m', 4)
    rows = _rows(result)
    assert len(rows) == 4
    assert all(len(r) == 13 for r in rows)
    assert float(rows[0][2]) == pytest.approx(1.0)


def test_flow_test():
    result = _invoke('flow-test', 'V1', 'V4')
    assert float(_value(result, 'error')) <= 1e-2
    assert len(_value(result, 'expected').split(',')) == 3


def test_evolve_and_chi(tmp_path):
    field = tmp_path / 'field.txt'
    flags = ('--b', 0.004, '--solution', 'affine')
    result = _invoke('evolve', *flags, '--out', field)
    assert float(_value(result, 'max_residual')) <= 1e-12
    assert len(field.read_text().splitlines()) == 65

    result = _invoke('chi', '--field', field, *flags)
    assert float(_value(result, 'chi')) <= 1e-12
    assert _value(result, 'sites') == '64'
    assert _value(result, 'excluded') == '0'


def test_evolve_in_shrink_mode():
    flags = ('--boundary', 'shrink', '--steps', 3)
    rows = _rows(_invoke('evolve', *flags, '--marching', 'rows'))
    assert len(rows) == 64
    assert sum(r[2] != 'nan' for r in rows) == 8 + 6 + 4 + 2

    rows = _rows(_invoke('evolve', *flags))
    assert sum(r[2] != 'nan' for r in rows) == 8 + 8 + 7 + 7 + 6


def test_chi_with_a_grid_table(tmp_path):
    _invoke('lattice', '--out', tmp_path / 'lattice.txt')
    flags = ('--solution', 'f2', '--steps', 1, '--marching', 'rows')
    _invoke('evolve', *flags, '--out', tmp_path / 'u.txt')
    result = _invoke(
        'chi',
        '--field',
        tmp_path / 'u.txt',
        '--grid',
        tmp_path / 'lattice.txt',
        '--solution',
        'f2',
    )
    assert float(_value(result, 'chi')) >= 0.0
    assert _value(result, 'sites') == '16'


def test_table2(tmp_path):
    config = tmp_path / 'table2.cfg'
    config.write_text('x0 = 0.0\ny0 = 0.1\nboundary = shrink\n')
    out = tmp_path / 'out'
    out.mkdir()
    result = _invoke('table2', '--config', config, '--out', out)
    rows = _rows(result)
    assert len(rows) == 10
    assert all(float(r[6]) == 0.0 and float(r[7]) == 0.1 for r in rows)
    assert all(r[11] == '52' for r in rows)
    assert 'coverage' in result.stdout
    assert len((out / 'table2.txt').read_text().splitlines()) == 11
    assert (out / 'case1_f1_field.txt').exists()

    rows = _rows(_invoke('table2', '--config', config, '--x0', 1.0))
    assert all(float(r[6]) == 1.0 for r in rows)


def test_table2_rejects_unknown_keys(tmp_path):
    config = tmp_path / 'table2.cfg'
    config.write_text('a=0.1\n')
    result = runner.invoke(app, ['table2', '--config', str(config)])
    assert result.exit_code != 0
    assert isinstance(result.exception, InvalidArgumentError)


def test_sweep(tmp_path):
    result = _invoke('sweep', '--x0', 0.0, '--y0', 0.1, '--y0', 2.25)
    assert len(_rows(result)) == 2
    assert float(_value(result, 'best_x0')) == 0.0
    assert float(_value(result, 'best_y0')) in (0.1, 2.25)

    config = tmp_path / 'sweep.cfg'
    config.write_text('x0=2.25\ny0=2.25\nmarching=columns\n')
    result = _invoke('sweep', '--config', config)
    assert len(_rows(result)) == 1
    assert float(_value(result, 'best_x0')) == 2.25
    assert 3.0 < float(_value(result, 'score')) < 3.7
    assert _value(result, 'within_factor') == 'false'


def test_flow_test_from_a_file(tmp_path):
    config = tmp_path / 'point.cfg'
    config.write_text('x=0.5\ny=0.2\ndelta=0.01\n')
    result = _invoke('flow-test', 'V2', 'V5', '--config', config)
    assert float(_value(result, 'error')) <= 0.1
    assert float(_value(result, 'expected').split(',')[0]) == pytest.approx(2.0)


def test_config():
    result = _invoke('config')
    cfg = json.loads(result.stdout)
    assert cfg['experiment']['n_sites'] == 8
    assert cfg['cluster']['compute'] == 'local'


def test_config_file(tmp_path):
    config = tmp_path / 'lattice.cfg'
    config.write_text('# exponential\nlattice = exponential\nc=0.15\nn=4\nm=3\n')
    assert len(_rows(_invoke('lattice', '--config', config))) == 12
    assert len(_rows(_invoke('lattice', '--config', config, '--n', 5))) == 15


def test_unknown_config_key(tmp_path):
    config = tmp_path / 'lattice.cfg'
    config.write_text('spacing=0.1\n')
    result = runner.invoke(app, ['lattice', '--config', str(config)])
    assert result.exit_code != 0
    assert isinstance(result.exception, InvalidArgumentError)


def test_run_reports_errors(tmp_path, monkeypatch):
    monkeypatch.setattr(sys, 'argv', ['latticeburgers', 'flow-test', 'V1', 'V9'])
    assert run().startswith('InvalidArgumentError: Unknown generator')

    monkeypatch.setattr(sys, 'argv', ['latticeburgers', 'lattice', '--bogus'])
    message = run()
    assert '--bogus' in message


def test_run_succeeds(monkeypatch, capsys):
    monkeypatch.setattr(sys, 'argv', ['latticeburgers', 'check-schwarz'])
    assert run() is None
    assert 'is_schwarzian=true' in capsys.readouterr().out
