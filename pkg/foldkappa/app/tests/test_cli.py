"""
FoldKappa app tests test_cli module
"""

import json
import os

import jsonschema
from click.testing import CliRunner

from foldkappa.app.cli import cli
from foldkappa.common import foldkappa_path
from foldkappa.version import VERSION


def _invoke(args):
    return CliRunner().invoke(cli, args, obj=dict())


def _reports(result):
    return [json.loads(line) for line in result.output.splitlines() if line.startswith('{')]


def _validate(reports):
    with open(os.path.join(foldkappa_path, 'report.schema.json'), 'r') as f:
        schema = json.load(f)
    for report in reports:
        jsonschema.validate(instance=report, schema=schema)
    return reports


def _lines(result):
    return [line for line in result.output.splitlines() if line and not line.startswith('{')]


def test_version():
    """Test the --version option"""
    result = _invoke(['--version'])
    assert result.exit_code == 0
    assert VERSION in result.output


def test_gen():
    """Test exporting topologies"""
    result = _invoke(['gen', '--kind', 'fq', '--n', '4', '--format', 'edgelist'])
    assert result.exit_code == 0
    lines = [line for line in result.output.splitlines() if line]
    assert lines[0] == '# kind=fq n=4'
    assert len(lines) == 41
    result = _invoke(['gen', '--kind', 'q', '--n', '3'])
    assert len([line for line in result.output.splitlines() if line]) == 13
    result = _invoke(['gen', '--kind', 'q', '--n', '2', '--format', 'json'])
    adjacency = _reports(result)[0]
    assert adjacency['adjacency']['0'] == [1, 2]
    # FQ_1 is K_2
    result = _invoke(['gen', '--kind', 'fq', '--n', '1'])
    assert result.exit_code == 0
    assert [line for line in result.output.splitlines() if line] == ['# kind=fq n=1', '0 1']


def test_gen_errors(tmp_path):
    """Test exit codes of gen"""
    # n out of range
    assert _invoke(['gen', '--kind', 'fq', '--n', '0']).exit_code == 2
    # unknown kind
    assert _invoke(['gen', '--kind', 'cube', '--n', '3']).exit_code == 2
    # missing directory
    missing = tmp_path / 'missing' / 'q3.txt'
    assert _invoke(['gen', '--kind', 'q', '--n', '3', '--out', str(missing)]).exit_code == 3
    out = tmp_path / 'q3.txt'
    assert _invoke(['gen', '--kind', 'q', '--n', '3', '--out', str(out)]).exit_code == 0
    assert out.read_text().startswith('# kind=q n=3\n0 1\n')


def test_theta():
    """Test the theta command in its three modes"""
    result = _invoke(['theta', '--kind', 'fq', '--n', '5', '--g', '2', '--mode', 'exact', '--workers', '1'])
    assert result.exit_code == 0
    report = _validate(_reports(result))[0]
    assert report['computed'] == 10
    assert report['verdict'] == 'PASS'
    assert report['certified']
    assert report['claim_id'] == 'thm/theta/fq/n=5/g=2'

    report = _reports(_invoke(['theta', '--kind', 'fq', '--n', '8', '--g', '9', '--mode', 'star']))[0]
    assert report['computed'] == 37
    assert report['verdict'] == 'UPPER_BOUND_ONLY'

    report = _reports(_invoke(['theta', '--kind', 'q', '--n', '4', '--g', '6', '--mode', 'formula']))[0]
    assert report['computed'] == 7
    assert report['parameters']['branch']


def test_theta_below_the_closed_form():
    """Test that an exact theta below f_5(3) = 13 is reported as a failure with its set"""
    result = _invoke(['theta', '--kind', 'fq', '--n', '5', '--g', '3', '--mode', 'exact', '--workers', '1'])
    assert result.exit_code == 1
    report = _validate(_reports(result))[0]
    assert report['expected'] == 13
    assert report['computed'] == 12
    assert report['verdict'] == 'FAIL'
    assert report['certified']
    assert report['witness'] == {'set': [0, 3, 12]}

def test_ckappa():
    """Test the ckappa command, where --g G asks for G + 1 components"""
    result = _invoke(['ckappa', '--kind', 'fq', '--n', '4', '--g', '1', '--workers', '1'])
    assert result.exit_code == 0
    report = _reports(result)[0]
    assert report['computed'] == 5
    assert report['verdict'] == 'PASS'
    assert report['parameters']['components'] == 2

    report = _reports(_invoke(['ckappa', '--kind', 'fq', '--n', '5', '--g', '2', '--workers', '1',
                               '--max-union-size', '3']))[0]
    assert report['computed'] == 10
    assert not report['certified']
    assert report['verdict'] == 'FINDING'

    report = _reports(_invoke(['ckappa', '--kind', 'fq', '--n', '8', '--g', '3', '--mode', 'upper']))[0]
    assert report['computed'] == 22
    assert report['verdict'] == 'UPPER_BOUND_ONLY'
    assert report['witness']['components_certified']
    # g must be positive
    assert _invoke(['ckappa', '--kind', 'fq', '--n', '4', '--g', '0']).exit_code == 2


def test_ckappa_theta_floor():
    """Test that the theta floor keeps the exact value and does not add expansions"""
    args = ['ckappa', '--kind', 'fq', '--n', '4', '--g', '2', '--workers', '1']
    plain = _validate(_reports(_invoke(args)))[0]
    result = _invoke(args + ['--theta-floor'])
    assert result.exit_code == 0
    floored = _validate(_reports(result))[0]
    assert floored['computed'] == plain['computed']
    assert floored['certified'] == plain['certified']
    assert floored['parameters']['expansions'] <= plain['parameters']['expansions']
    assert floored['witness']['cut']


def test_verify():
    """Test the verify command"""
    result = _invoke(['verify', '--suite', 'structure', '--n', '3', '--trials', '10'])
    assert result.exit_code == 0
    reports = _validate(_reports(result))
    assert reports
    assert all(report['verdict'] != 'FAIL' for report in reports)
    assert {'claim_id', 'verdict', 'tool_version', 'elapsed_ms'} <= set(reports[0])
    assert _invoke(['verify', '--suite', 'structure', '--n', 'x']).exit_code == 2
    assert _invoke(['verify', '--suite', 'bogus']).exit_code == 2


def test_faultsim(tmp_path):
    """Test the faultsim CSV output"""
    result = _invoke(['faultsim', '--kind', 'fq', '--n', '4', '--faults', '3', '--faults', '4',
                      '--trials', '20', '--seed', '1', '--workers', '1'])
    assert result.exit_code == 0
    lines = _lines(result)
    assert lines[0] == 'n,kind,fault_count,trials,seed,g,prob_geq_g_components,largest_p50,largest_p99'
    assert lines[1].startswith('4,fq,3,20,1,1,1.0,')
    assert any(line.startswith('4,fq,4,20,1,') for line in lines)

    out = tmp_path / 'stats.csv'
    result = _invoke(['faultsim', '--kind', 'fq', '--n', '4', '--faults', '3', '--trials', '10',
                      '--g-max', '1', '--out', str(out), '--workers', '1'])
    assert result.exit_code == 0
    assert out.read_text().splitlines()[0].startswith('n,kind,fault_count')
    report = _reports(result)[0]
    assert report['claim_id'] == 'faultsim/threshold/fq/n=4'
    assert report['verdict'] == 'FINDING'
    # neither faults nor g-max
    assert _invoke(['faultsim', '--kind', 'fq', '--n', '4']).exit_code == 2
    # more faults than vertices
    assert _invoke(['faultsim', '--kind', 'fq', '--n', '4', '--faults', '16', '--trials', '5']).exit_code == 2
