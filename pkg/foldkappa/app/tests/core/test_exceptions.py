"""
FoldKappa app tests core test_exceptions module
"""

import pytest

from foldkappa.app.core.exceptions import FoldKappaError, InputError, VertexBudgetError


def test_exception_hierarchy():
    """Test that FoldKappa errors can be caught both as FoldKappaError and as builtin errors"""
    assert issubclass(InputError, FoldKappaError)
    assert issubclass(InputError, ValueError)
    assert issubclass(VertexBudgetError, FoldKappaError)
    assert issubclass(VertexBudgetError, MemoryError)
    with pytest.raises(ValueError):
        raise InputError('g out of range')
    with pytest.raises(FoldKappaError):
        raise VertexBudgetError('too many vertices')
