"""
FoldKappa app schemas closed form formula module
"""

from enum import Enum

from pydantic import BaseModel, Field


class FormulaFamilyEnum(str, Enum):
    """
    The supported closed form families
    """
    f_n_g = 'f_n_g'
    theta_qn = 'theta_qn'
    ckappa_qn = 'ckappa_qn'


class FormulaValue(BaseModel):
    """
    A closed form evaluated at (n, g), with the piecewise branch that applied
    """
    family: FormulaFamilyEnum = Field(..., title='The formula family')
    n: int = Field(..., ge=1, title='The dimension')
    g: int = Field(..., ge=0, title='The argument')
    value: int = Field(..., ge=0, title='The exact integer value')
    branch: str = Field(..., max_length=100, title='The piecewise branch applied')
    in_stated_domain: bool = Field(True, title='Whether (n, g) lies in the range the closed form is stated for')

    class Config:
        extra = "forbid"
