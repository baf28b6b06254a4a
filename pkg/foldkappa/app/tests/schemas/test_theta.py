"""
FoldKappa app tests schemas test_theta module
"""

import pytest
from pydantic import ValidationError

from foldkappa.app.schemas.common import TopologyKindEnum
from foldkappa.app.schemas.theta import ThetaResult


def test_theta_result_schema():
    """Test creating an instance of ThetaResult"""
    result = ThetaResult(kind='fq', n=5, g=3, value=13, witness=[0, 1, 3], exhaustive=True)
    assert result.kind == TopologyKindEnum.folded
    assert result.value == 13
    assert result.witness == [0, 1, 3]
    assert result.expansions == 0

    with pytest.raises(ValidationError):
        # witness size differs from g
        ThetaResult(kind='fq', n=5, g=3, value=13, witness=[0, 1], exhaustive=True)
    with pytest.raises(ValidationError):
        # witness not ascending
        ThetaResult(kind='fq', n=5, g=3, value=13, witness=[0, 3, 1], exhaustive=True)
    with pytest.raises(ValidationError):
        # label out of range
        ThetaResult(kind='fq', n=5, g=3, value=13, witness=[0, 1, 32], exhaustive=True)
    with pytest.raises(ValidationError):
        # unknown kind
        ThetaResult(kind='x', n=5, g=3, value=13, witness=[0, 1, 3], exhaustive=True)
    with pytest.raises(ValidationError):
        # negative value
        ThetaResult(kind='q', n=5, g=3, value=-1, witness=[0, 1, 3], exhaustive=True)
