"""
FoldKappa app tests schemas test_formula module
"""

import pytest
from pydantic import ValidationError

from foldkappa.app.schemas.formula import FormulaFamilyEnum, FormulaValue


def test_formula_value_schema():
    """Test creating an instance of FormulaValue"""
    value = FormulaValue(family='f_n_g', n=5, g=3, value=13, branch='g(n+1)-g(g+1)/2+1')
    assert value.family == FormulaFamilyEnum.f_n_g
    assert value.in_stated_domain is True

    with pytest.raises(ValidationError):
        FormulaValue(family='kappa', n=5, g=3, value=13, branch='x')
    with pytest.raises(ValidationError):
        FormulaValue(family='theta_qn', n=0, g=3, value=13, branch='x')
    with pytest.raises(ValidationError):
        FormulaValue(family='theta_qn', n=5, g=3, value=-2, branch='x')
