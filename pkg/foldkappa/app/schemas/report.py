"""
FoldKappa app schemas verification report module
"""

import time
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, validator

from foldkappa.version import VERSION


class VerdictEnum(str, Enum):
    """
    The supported report verdicts
    """
    passed = 'PASS'
    failed = 'FAIL'
    upper_bound_only = 'UPPER_BOUND_ONLY'
    out_of_range = 'OUT_OF_RANGE'
    finding = 'FINDING'


class Report(BaseModel):
    """
    A structured verification result, one per checked claim.

    Examples::

        Report(claim_id='thm/theta/fq/n=5/g=2',
               parameters={'kind': 'fq', 'n': 5, 'g': 2},
               expected=10,
               computed=10,
               verdict='PASS',
               witness={'set': [0, 1]})
    """
    claim_id: str = Field(..., min_length=1, max_length=255, title='A stable claim identifier')
    parameters: Dict[str, Any] = Field(None, title='The claim parameters')
    expected: Optional[Any] = Field(None, title='The expected value, if one is defined')
    computed: Optional[Any] = Field(None, title='The computed value')
    certified: bool = Field(True, title='Whether the computed value is exact (exhaustive search or construction)')
    verdict: VerdictEnum = Field(..., title='The verdict')
    witness: Optional[Dict[str, Any]] = Field(None, title='Serialized witnesses or counterexamples')
    elapsed_ms: float = Field(0.0, ge=0, title='Elapsed wall time in milliseconds')
    tool_version: str = Field(VERSION, max_length=50, title='The FoldKappa version')
    seed: Optional[int] = Field(None, ge=0, title='The RNG seed, for randomized claims')
    note: Optional[str] = Field(None, max_length=2000, title='A free text remark')

    class Config:
        extra = "forbid"

    @validator('claim_id')
    def check_claim_id(cls, value):
        """Report.claim_id validator"""
        if ' ' in value:
            raise ValueError(f'A claim id cannot contain spaces, got: {value}')
        return value

    @validator('parameters', pre=True, always=True)
    def check_parameters(cls, value):
        """Report.parameters validator"""
        return value or dict()

    @validator('verdict')
    def check_verdict(cls, value, values):
        """Report.verdict validator"""
        if value == VerdictEnum.passed:
            if values.get('expected') is None:
                raise ValueError(f'A PASS verdict requires an expected value, claim: {values.get("claim_id")}')
            if values.get('computed') != values.get('expected'):
                raise ValueError(f'A PASS verdict requires computed == expected, got {values.get("computed")} '
                                 f'and {values.get("expected")} for claim {values.get("claim_id")}')
            if not values.get('certified', True):
                raise ValueError(f'A PASS verdict requires a certified computed value, '
                                 f'claim: {values.get("claim_id")}')
        return value

    @validator('witness', always=True)
    def check_witness(cls, value, values):
        """Report.witness validator"""
        if values.get('verdict') == VerdictEnum.failed and not value:
            raise ValueError(f'A FAIL verdict must carry a counterexample witness, claim: {values.get("claim_id")}')
        return value

    @property
    def is_failure(self) -> bool:
        """Whether this report fails its claim"""
        return self.verdict == VerdictEnum.failed

    def to_json_dict(self) -> Dict[str, Any]:
        """
        A JSON compatible dictionary with enum members rendered as their values.
        """
        content = self.dict()
        content['verdict'] = self.verdict.value
        return content


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def build_report(claim_id: str,
                 parameters: Dict[str, Any],
                 expected: Optional[Any],
                 computed: Any,
                 certified: bool = True,
                 in_range: bool = True,
                 witness: Optional[Dict[str, Any]] = None,
                 started: Optional[float] = None,
                 seed: Optional[int] = None,
                 note: Optional[str] = None,
                 ) -> Report:
    """
    Derive a verdict and build a Report.

    Verdicts:
        - outside the claim's stated range: FINDING on agreement, OUT_OF_RANGE otherwise;
        - no expected value: FINDING;
        - an uncertified value: FAIL if it undercuts a numeric expected value, UPPER_BOUND_ONLY otherwise;
        - else PASS on equality and FAIL on disagreement.

    Args:
        claim_id (str): The stable claim identifier.
        parameters (dict): The claim parameters.
        expected (Any): The expected value, ``None`` if the claim has none.
        computed (Any): The computed value.
        certified (bool, optional): Whether ``computed`` is exact.
        in_range (bool, optional): Whether the parameters lie in the claim's stated range.
        witness (dict, optional): Serialized witnesses or counterexamples, required for a FAIL verdict.
        started (float, optional): A ``time.perf_counter()`` reading taken when the check started.
        seed (int, optional): The RNG seed of a randomized check.
        note (str, optional): A free text remark.

    Raises:
        ValidationError: If the verdict is FAIL and no witness is given.

    Returns:
        Report: The report.
    """
    if not in_range:
        verdict = VerdictEnum.finding if computed == expected else VerdictEnum.out_of_range
    elif expected is None:
        verdict = VerdictEnum.finding
    elif not certified:
        undercut = _is_number(computed) and _is_number(expected) and computed < expected
        verdict = VerdictEnum.failed if undercut else VerdictEnum.upper_bound_only
    else:
        verdict = VerdictEnum.passed if computed == expected else VerdictEnum.failed
    elapsed_ms = (time.perf_counter() - started) * 1000 if started is not None else 0.0
    return Report(claim_id=claim_id,
                  parameters=parameters,
                  expected=expected,
                  computed=computed,
                  certified=certified,
                  verdict=verdict,
                  witness=witness,
                  elapsed_ms=max(elapsed_ms, 0.0),
                  seed=seed,
                  note=note,
                  )
