"""
FoldKappa app schemas fault simulation module
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, conint, confloat, validator

from foldkappa.app.schemas.common import TopologyKindEnum


class FaultTrialStats(BaseModel):
    """
    Aggregated component statistics over random vertex fault trials
    """
    n: int = Field(..., ge=1, title='The dimension')
    kind: TopologyKindEnum = Field(..., title='The topology kind')
    fault_count: int = Field(..., ge=0, title='|F|, the number of faulty vertices per trial')
    trials: int = Field(..., ge=1, title='The number of trials')
    seed: int = Field(..., ge=0, title='The root seed')
    component_count_histogram: Dict[conint(ge=0), conint(ge=0)] = \
        Field(..., title='Number of trials per observed component count')
    largest_component_quantiles: Dict[str, float] = \
        Field(..., title='Quantiles of the largest component order, keyed as p50, p99')
    prob_at_least_g_components: Dict[conint(ge=1), confloat(ge=0, le=1)] = \
        Field(..., title='Empirical probability of at least g components, for g = 1 ... max observed + 1')
    mass_conserved: bool = Field(True, title='Whether every trial had component orders summing to 2^n - |F|')
    disconnecting_faults: Dict[conint(ge=2), List[conint(ge=0)]] = \
        Field(default_factory=dict, title='The first fault set per observed component count of at least 2')
    unconserved_faults: Optional[List[conint(ge=0)]] = \
        Field(None, title='The first fault set whose component orders do not sum to 2^n - |F|')

    class Config:
        extra = "forbid"

    @validator('component_count_histogram')
    def check_histogram(cls, value, values):
        """FaultTrialStats.component_count_histogram validator"""
        if 'trials' in values and sum(value.values()) != values['trials']:
            raise ValueError(f'The histogram mass {sum(value.values())} must equal the number of trials '
                             f'{values["trials"]}: {value}')
        return value

    @validator('prob_at_least_g_components')
    def check_probabilities(cls, value):
        """FaultTrialStats.prob_at_least_g_components validator"""
        probabilities = [value[g] for g in sorted(value)]
        if any(a < b for a, b in zip(probabilities, probabilities[1:])):
            raise ValueError(f'Probabilities must be non-increasing in g, got {value}')
        return value

    @validator('disconnecting_faults')
    def check_disconnecting_faults(cls, value, values):
        """FaultTrialStats.disconnecting_faults validator"""
        histogram = values.get('component_count_histogram', dict())
        if 'component_count_histogram' in values and any(count not in histogram for count in value):
            raise ValueError(f'Every component count with a fault set must be in the histogram {histogram}, '
                             f'got {sorted(value)}')
        return value

    @validator('unconserved_faults', always=True)
    def check_unconserved_faults(cls, value, values):
        """FaultTrialStats.unconserved_faults validator"""
        if values.get('mass_conserved', True) != (value is None):
            raise ValueError('A fault set is listed exactly when some trial did not conserve mass')
        return value
