"""
FoldKappa app tests schemas test_search module
"""

import pytest
from pydantic import ValidationError

from foldkappa.app.core import config
from foldkappa.app.schemas.search import SearchBudget


def test_search_budget_schema():
    """Test creating an instance of SearchBudget"""
    budget = SearchBudget()
    assert budget.max_expansions == config.MAX_EXPANSIONS
    assert budget.wall_clock_seconds == config.WALL_CLOCK_SECONDS
    assert budget.workers == config.WORKERS
    assert budget.max_union_size is None
    assert budget.union_cap(5) == 8

    budget = SearchBudget(max_expansions=100, wall_clock_seconds=1.5, max_union_size=4, workers=2)
    assert budget.max_expansions == 100
    assert budget.wall_clock_seconds == 1.5
    assert budget.workers == 2
    assert budget.union_cap(5) == 4

    with pytest.raises(ValidationError):
        # zero expansions
        SearchBudget(max_expansions=0)
    with pytest.raises(ValidationError):
        # non-positive wall clock
        SearchBudget(wall_clock_seconds=0)
    with pytest.raises(ValidationError):
        # zero workers
        SearchBudget(workers=0)
    with pytest.raises(ValidationError):
        # unknown field
        SearchBudget(max_depth=3)
