# -*- coding: utf-8 -*-
#
# test_cli.py - tests of the command-line program
#
# Copyright (C) 2024-2026 The fhlab authors
#
# This file is part of fhlab, a verification laboratory for
# Fisher-Hartwig asymptotics.
#
# fhlab is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 3 of the License, or
# (at your option) any later version.
#
# fhlab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with fhlab.  If not, see <http://www.gnu.org/licenses/>.
#

import json
import math
import sys

import pytest

from fhlab import fhlab

SYMBOL = {'singularities': [{'theta': math.pi, 'a': 0.5}]}


@pytest.fixture
def run(monkeypatch, capsys):
    monkeypatch.delenv('FHLAB_OPTIONS', raising=False)
    monkeypatch.delenv('FHLAB_PRECISION', raising=False)

    def run_main(*args):
        monkeypatch.setattr(sys, 'argv', ['fhlab'] + [str(a) for a in args])
        with pytest.raises(SystemExit) as exc:
            fhlab.main()
        return exc.value.code, capsys.readouterr().out
    return run_main


@pytest.fixture
def symbol_file(tmp_path):
    path = tmp_path / 'sym.json'
    path.write_text(json.dumps(SYMBOL))
    return path


def test_list_cases(run):
    code, out = run('list-cases')
    assert code == 0
    assert 'szego-2tcos' in out
    assert 'lenard-X0.5' in out


def test_help_without_arguments(run):
    code, out = run()
    assert code == 0
    assert 'list-cases' in out


def test_verify_writes_records(run, tmp_path):
    code, out = run('verify', '--case', 'szego-2tcos', '--out', tmp_path)
    assert code == 0
    assert 'PASS' in out
    lines = (tmp_path / 'szego-2tcos.csv').read_text().splitlines()
    assert lines[0] == ('case,n,log_exact,phase_exact,log_pred,ratio,'
                        'stderr,seconds')
    assert len(lines) == 4
    assert all(line.endswith(',') for line in lines[1:])
    summary = json.loads((tmp_path / 'szego-2tcos.json').read_text())
    assert summary['passed']
    assert summary['formula'] == 'szego'
    assert summary['reference'].startswith('strong Szego limit theorem')
    assert summary['spec']['case_id'] == 'szego-2tcos'
    assert summary['spec']['sizes'] == [8, 16, 32]
    assert [r['n'] for r in summary['records']] == [8, 16, 32]


def test_verify_reruns_are_identical(run, tmp_path):
    run('verify', '--case', 'szego-2tcos', '--out', tmp_path / 'a')
    run('verify', '--case', 'szego-2tcos', '--out', tmp_path / 'b')
    assert (tmp_path / 'a' / 'szego-2tcos.csv').read_bytes() == \
        (tmp_path / 'b' / 'szego-2tcos.csv').read_bytes()


def test_verify_failing_case(run, tmp_path):
    case = tmp_path / 'case.json'
    case.write_text(json.dumps({'case_id': 'tight', 'kind': 'toeplitz',
                                'params': {'symbol': SYMBOL}, 'sizes': [8],
                                'tolerance': 1e-12}))
    code, out = run('verify', '--config', case, '--out', tmp_path)
    assert code == 1
    assert 'failed: tight' in out


def test_verify_unknown_case(run, tmp_path):
    code, _ = run('verify', '--case', 'no-such-case', '--out', tmp_path)
    assert code == 3


def test_verify_factorization_document(run, tmp_path):
    document = tmp_path / 'split.json'
    document.write_text(json.dumps({
        'kind': 'ff2', 'sizes': [4, 8],
        'params': {'symbol': {'singularities': [
            {'theta': 0.0, 'a': 0.5}, {'theta': math.pi / 2, 'a': 0.5}]}}}))
    code, out = run('verify', '--probe', document)
    assert code == 0
    assert out.count('ratio') == 2


def test_predict(run, symbol_file):
    code, out = run('predict', '--config', symbol_file, '--n', 64)
    assert code == 0
    doc = json.loads(out)
    assert doc['formula'] == 'fisher-hartwig'
    assert doc['coeff_logn'] == pytest.approx(0.25)
    assert doc['n'] == 64
    assert not doc['value']['zero']
    assert doc['symbol']['singularities'][0]['theta'] == pytest.approx(
        math.pi)


def test_exact(run, symbol_file):
    code, out = run('exact', '--config', symbol_file, '--n', 4,
                    '--ensemble', 'U')
    assert code == 0
    doc = json.loads(out)
    assert doc['ensemble'] == 'U(4)'
    assert doc['log_modulus'] > 0


def test_sample(run, tmp_path):
    code, _ = run('sample', '--ensemble', 'gue', '--n', 3, '--count', 5,
                  '--seed', 1, '--out', tmp_path)
    assert code == 0
    lines = (tmp_path / 'samples-gue-n3.csv').read_text().splitlines()
    assert lines[0] == 'chain,weight,x1,x2,x3'
    assert len(lines) == 6


def test_physics_density(run, tmp_path):
    code, out = run('physics', 'density', '--n', 4, 8, '--X', 0.0,
                    '--Y', 0.0, '--out', tmp_path)
    assert code == 0
    assert "geometry: 'circle'" in out
    lines = (tmp_path / 'physics-density.csv').read_text().splitlines()
    assert lines[0] == 'N,exact,predicted,ratio'
    assert [line.split(',')[0] for line in lines[1:]] == ['4', '8']
    # no leading form at X = Y
    assert all(line.endswith(',,') for line in lines[1:])
    params = json.loads((tmp_path / 'physics-density.json').read_text())
    assert params['subject'] == 'density'
    assert params['sizes'] == [4, 8]


def test_physics_density_ratio(run, tmp_path):
    code, _ = run('physics', 'density', '--n', 64, '--X', 0.5,
                  '--out', tmp_path)
    assert code == 0
    row = (tmp_path / 'physics-density.csv').read_text().splitlines()[1]
    size, exact, predicted, ratio = row.split(',')
    assert size == '64'
    assert float(ratio) == pytest.approx(float(exact) / float(predicted))
    assert float(ratio) == pytest.approx(1.0, abs=0.08)


def test_physics_ising_high_temperature(run, tmp_path):
    code, _ = run('physics', 'ising', '--alpha1', 0.2, '--alpha2', 2,
                  '--n', 16, 32, '--out', tmp_path)
    assert code == 0
    lines = (tmp_path / 'physics-ising.csv').read_text().splitlines()
    assert lines[0] == 'n,exact,predicted,ratio'
    for line in lines[1:]:
        assert float(line.split(',')[3]) == pytest.approx(1.0, abs=0.08)
    params = json.loads((tmp_path / 'physics-ising.json').read_text())
    assert params['direction'] == 'row'
    assert params['alpha2'] == 2.0


def test_config_set_writes_file(run, tmp_path):
    conf = tmp_path / 'fhlab.conf'
    code, out = run('config', '--conf', conf, '--set', 'precision.dps=40')
    assert code == 0
    assert 'precision.dps = 40' in out
    assert 'dps = 40' in conf.read_text()
    code, out = run('config', '--conf', conf)
    assert code == 0
    assert 'precision.dps = 40' in out


def test_config_unknown_option(run, tmp_path):
    conf = tmp_path / 'fhlab.conf'
    code, _ = run('config', '--conf', conf, '--set', 'precision.digits=40')
    assert code == 3
    assert not conf.exists()
    code, _ = run('config', '--conf', conf, '--set', 'precision.tier=quad')
    assert code == 3
    assert not conf.exists()


def test_bad_symbol_document(run, tmp_path):
    path = tmp_path / 'sym.json'
    path.write_text(json.dumps({'smooth': {'type': 'bessel'}}))
    code, _ = run('predict', '--config', path)
    assert code == 3
