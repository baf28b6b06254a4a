"""
FoldKappa app schemas extremal neighbourhood (theta) module
"""

from typing import List

from pydantic import BaseModel, Field, conint, validator

from foldkappa.app.schemas.common import TopologyKindEnum, is_sorted_label_list


class ThetaResult(BaseModel):
    """
    The outcome of a minimum neighbourhood search over g-subsets.
    ``witness`` always certifies ``value`` as an upper bound on theta(g);
    ``exhaustive`` states that every orbit of g-subsets was covered, making ``value`` exact.
    """
    kind: TopologyKindEnum = Field(..., title='The topology kind')
    n: int = Field(..., ge=1, title='The dimension')
    g: int = Field(..., ge=1, title='The set size')
    value: int = Field(..., ge=0, title='The minimum |N(V\')| found')
    witness: List[conint(ge=0)] = Field(..., title='A minimizing vertex set, ascending labels')
    exhaustive: bool = Field(..., title='Whether the search provably covered all orbits')
    expansions: int = Field(0, ge=0, title='The number of partial sets expanded')

    class Config:
        extra = "forbid"

    @validator('witness')
    def check_witness(cls, value, values):
        """ThetaResult.witness validator"""
        is_valid, err = is_sorted_label_list(value)
        if not is_valid:
            raise ValueError(err)
        if 'g' in values and len(value) != values['g']:
            raise ValueError(f'The witness must have g = {values["g"]} vertices, got {len(value)}: {value}')
        if 'n' in values and any(label >= 2 ** values['n'] for label in value):
            raise ValueError(f'Witness labels must be below 2^{values["n"]}, got {value}')
        return value
