"""
FoldKappa app schemas component cut module
"""

from typing import List

from pydantic import BaseModel, Field, conint, validator

from foldkappa.app.schemas.common import is_sorted_label_list


class ComponentProfile(BaseModel):
    """
    The component structure of a graph after deleting a vertex set F
    """
    component_count: int = Field(..., ge=0, title='The number of components')
    sizes: List[conint(ge=1)] = Field(..., title='Component orders, descending')
    largest: int = Field(..., ge=0, title='The order of the largest component (0 if none)')
    singleton_count: int = Field(..., ge=0, title='The number of order-1 components')

    class Config:
        extra = "forbid"

    @validator('sizes')
    def check_sizes(cls, value, values):
        """ComponentProfile.sizes validator"""
        if any(a < b for a, b in zip(value, value[1:])):
            raise ValueError(f'Component sizes must be in descending order, got {value}')
        if 'component_count' in values and len(value) != values['component_count']:
            raise ValueError(f'Got {len(value)} component sizes for a component count of '
                             f'{values["component_count"]}: {value}')
        return value

    @validator('largest')
    def check_largest(cls, value, values):
        """ComponentProfile.largest validator"""
        sizes = values.get('sizes')
        if sizes is not None and value != (sizes[0] if sizes else 0):
            raise ValueError(f'The largest component order {value} does not match the sizes {sizes}')
        return value

    @validator('singleton_count')
    def check_singleton_count(cls, value, values):
        """ComponentProfile.singleton_count validator"""
        sizes = values.get('sizes')
        if sizes is not None and value != sizes.count(1):
            raise ValueError(f'The singleton count {value} does not match the sizes {sizes}')
        return value

    @property
    def remaining(self) -> int:
        """The number of surviving vertices, i.e., 2^n - |F|"""
        return sum(self.sizes)


class CutWitness(BaseModel):
    """
    A certified record of a vertex cut F, the components of G - F, and the targeted component count
    """
    cut: List[conint(ge=0)] = Field(..., title='The deleted vertex set F, ascending labels')
    profile: ComponentProfile = Field(..., title='The component profile of G - F')
    target_g: int = Field(..., ge=1, title='The targeted number of components')
    certified: bool = Field(..., title='Whether G - F has at least target_g components')

    class Config:
        extra = "forbid"

    @validator('cut')
    def check_cut(cls, value):
        """CutWitness.cut validator"""
        is_valid, err = is_sorted_label_list(value)
        if not is_valid:
            raise ValueError(err)
        return value

    @validator('certified')
    def check_certified(cls, value, values):
        """CutWitness.certified validator"""
        if 'profile' in values and 'target_g' in values:
            expected = values['profile'].component_count >= values['target_g']
            if value != expected:
                raise ValueError(f'certified must be {expected} for {values["profile"].component_count} '
                                 f'components and a target of {values["target_g"]}')
        return value

    @property
    def size(self) -> int:
        """|F|"""
        return len(self.cut)
