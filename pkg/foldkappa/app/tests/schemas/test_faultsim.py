"""
FoldKappa app tests schemas test_faultsim module
"""

import pytest
from pydantic import ValidationError

from foldkappa.app.schemas.faultsim import FaultTrialStats


def test_fault_trial_stats_schema():
    """Test creating an instance of FaultTrialStats"""
    stats = FaultTrialStats(n=8, kind='fq', fault_count=20, trials=10, seed=1,
                            component_count_histogram={1: 9, 2: 1},
                            largest_component_quantiles={'p50': 236.0, 'p99': 236.0},
                            prob_at_least_g_components={1: 1.0, 2: 0.1, 3: 0.0})
    assert stats.mass_conserved is True
    assert stats.prob_at_least_g_components[2] == 0.1

    with pytest.raises(ValidationError):
        # the histogram mass differs from trials
        FaultTrialStats(n=8, kind='fq', fault_count=20, trials=10, seed=1,
                        component_count_histogram={1: 9},
                        largest_component_quantiles={'p50': 236.0, 'p99': 236.0},
                        prob_at_least_g_components={1: 1.0, 2: 0.0})
    with pytest.raises(ValidationError):
        # increasing probabilities
        FaultTrialStats(n=8, kind='fq', fault_count=20, trials=10, seed=1,
                        component_count_histogram={1: 10},
                        largest_component_quantiles={'p50': 236.0, 'p99': 236.0},
                        prob_at_least_g_components={1: 0.5, 2: 1.0})
    with pytest.raises(ValidationError):
        # a probability above 1
        FaultTrialStats(n=8, kind='fq', fault_count=20, trials=10, seed=1,
                        component_count_histogram={1: 10},
                        largest_component_quantiles={'p50': 236.0, 'p99': 236.0},
                        prob_at_least_g_components={1: 1.5})


def test_fault_trial_stats_witness_fields():
    """Test the disconnecting and unconserved fault sets"""
    stats = FaultTrialStats(n=4, kind='fq', fault_count=2, trials=3, seed=0,
                            component_count_histogram={1: 2, 2: 1},
                            largest_component_quantiles={'p50': 14.0, 'p99': 14.0},
                            prob_at_least_g_components={1: 1.0, 2: 1 / 3, 3: 0.0},
                            disconnecting_faults={2: [0, 15]})
    assert stats.disconnecting_faults == {2: [0, 15]}
    assert stats.unconserved_faults is None
    with pytest.raises(ValidationError):
        # a component count which was never observed
        FaultTrialStats(n=4, kind='fq', fault_count=2, trials=3, seed=0,
                        component_count_histogram={1: 3},
                        largest_component_quantiles={'p50': 14.0, 'p99': 14.0},
                        prob_at_least_g_components={1: 1.0, 2: 0.0},
                        disconnecting_faults={2: [0, 15]})
    with pytest.raises(ValidationError):
        # mass was not conserved, but no fault set is given
        FaultTrialStats(n=4, kind='fq', fault_count=2, trials=3, seed=0,
                        component_count_histogram={1: 3},
                        largest_component_quantiles={'p50': 14.0, 'p99': 14.0},
                        prob_at_least_g_components={1: 1.0, 2: 0.0},
                        mass_conserved=False)
