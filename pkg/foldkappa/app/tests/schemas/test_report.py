"""
FoldKappa app tests schemas test_report module
"""

import json
import os
import time

import jsonschema
import pytest
from pydantic import ValidationError

from foldkappa.common import foldkappa_path
from foldkappa.app.schemas.report import Report, VerdictEnum, build_report
from foldkappa.version import VERSION


def test_report_schema():
    """Test creating an instance of Report"""
    report = Report(claim_id='thm/theta/fq/n=5/g=2', parameters={'kind': 'fq', 'n': 5, 'g': 2},
                    expected=10, computed=10, verdict='PASS', witness={'set': [0, 1]})
    assert report.verdict == VerdictEnum.passed
    assert report.tool_version == VERSION
    assert report.is_failure is False
    assert report.to_json_dict()['verdict'] == 'PASS'
    assert Report(claim_id='a', verdict='FINDING').parameters == dict()

    with pytest.raises(ValidationError):
        # space in the claim id
        Report(claim_id='thm theta', expected=1, computed=1, verdict='PASS')
    with pytest.raises(ValidationError):
        # PASS without agreement
        Report(claim_id='a', expected=1, computed=2, verdict='PASS')
    with pytest.raises(ValidationError):
        # PASS without an expected value
        Report(claim_id='a', computed=2, verdict='PASS')
    with pytest.raises(ValidationError):
        # PASS on an uncertified value
        Report(claim_id='a', expected=2, computed=2, certified=False, verdict='PASS')
    with pytest.raises(ValidationError):
        # FAIL without a witness
        Report(claim_id='a', expected=1, computed=2, verdict='FAIL')
    with pytest.raises(ValidationError):
        # unknown field
        Report(claim_id='a', verdict='FINDING', extra_field=1)
    with pytest.raises(ValidationError):
        # negative seed
        Report(claim_id='a', verdict='FINDING', seed=-1)


def test_build_report_verdicts():
    """Test deriving verdicts"""
    assert build_report('a', {}, expected=13, computed=13).verdict == VerdictEnum.passed
    failed = build_report('a', {}, expected=13, computed=12, witness={'set': [0, 3, 12]})
    assert failed.verdict == VerdictEnum.failed
    assert failed.witness == {'set': [0, 3, 12]}
    assert failed.is_failure
    with pytest.raises(ValidationError):
        # a failing claim without a counterexample
        build_report('a', {}, expected=13, computed=12)
    assert build_report('a', {}, expected=None, computed=12).verdict == VerdictEnum.finding
    assert build_report('a', {}, expected=13, computed=14, certified=False).verdict == \
        VerdictEnum.upper_bound_only
    assert build_report('a', {}, expected=13, computed=13, certified=False).verdict == \
        VerdictEnum.upper_bound_only
    assert build_report('a', {}, expected=13, computed=12, certified=False,
                        witness={'set': [0, 3, 12]}).verdict == VerdictEnum.failed
    assert build_report('a', {}, expected=13, computed=13, in_range=False).verdict == VerdictEnum.finding
    assert build_report('a', {}, expected=13, computed=15, in_range=False).verdict == VerdictEnum.out_of_range


def test_build_report_boolean_claims():
    """Test that uncertified boolean claims are never compared as numbers"""
    assert build_report('a', {}, expected=True, computed=False, certified=False).verdict == \
        VerdictEnum.upper_bound_only
    assert build_report('a', {}, expected=1, computed=False, certified=False).verdict == \
        VerdictEnum.upper_bound_only
    assert build_report('a', {}, expected=True, computed=False, witness={'cut': [1, 2]}).verdict == \
        VerdictEnum.failed
    assert build_report('a', {}, expected=True, computed=True).verdict == VerdictEnum.passed


def test_build_report_timing_and_seed():
    """Test the elapsed time and the seed of a built report"""
    started = time.perf_counter()
    report = build_report('a', {'n': 4}, expected=1, computed=1, started=started, seed=7, note='sampled')
    assert report.elapsed_ms >= 0
    assert report.seed == 7
    assert report.note == 'sampled'
    assert build_report('a', {}, expected=1, computed=1).elapsed_ms == 0.0


def test_report_json_schema_in_sync():
    """Test that report.schema.json lists exactly the Report fields and verdicts"""
    with open(os.path.join(foldkappa_path, 'report.schema.json'), 'r') as f:
        schema = json.load(f)
    assert set(schema['properties']) == set(Report.__fields__)
    assert set(schema['required']) == set(Report.__fields__)
    assert schema['additionalProperties'] is False
    assert schema['properties']['verdict']['enum'] == [verdict.value for verdict in VerdictEnum]
    line = build_report('a', {'n': 4}, expected=1, computed=2, witness={'set': [3]}).to_json_dict()
    assert set(line) == set(schema['properties'])


def test_reports_validate_against_the_schema_file():
    """Test JSON reports against report.schema.json"""
    with open(os.path.join(foldkappa_path, 'report.schema.json'), 'r') as f:
        schema = json.load(f)
    reports = [build_report('thm/theta/fq/n=5/g=3', {'kind': 'fq', 'n': 5, 'g': 3}, expected=13, computed=12,
                            witness={'set': [0, 3, 12]}, started=time.perf_counter()),
               build_report('a', {}, expected=None, computed=[1, 2]),
               build_report('b', {'n': 4}, expected=3, computed=4, certified=False, seed=11),
               ]
    for report in reports:
        jsonschema.validate(instance=json.loads(json.dumps(report.to_json_dict())), schema=schema)
    line = reports[0].to_json_dict()
    with pytest.raises(jsonschema.ValidationError):
        # FAIL without a witness
        jsonschema.validate(instance=dict(line, witness=None), schema=schema)
    with pytest.raises(jsonschema.ValidationError):
        # unknown verdict
        jsonschema.validate(instance=dict(line, verdict='MAYBE'), schema=schema)
    with pytest.raises(jsonschema.ValidationError):
        # missing field
        jsonschema.validate(instance={key: value for key, value in line.items() if key != 'seed'}, schema=schema)
