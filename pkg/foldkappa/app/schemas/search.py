"""
FoldKappa app schemas search budget module
"""

from typing import Optional

from pydantic import BaseModel, Field, validator

from foldkappa.app.core import config


class SearchBudget(BaseModel):
    """
    Limits for the exhaustive searches in ``extremal`` and ``cutfinder``.
    Exceeding ``max_expansions`` or ``wall_clock_seconds`` degrades a result to a certified
    upper bound (``exhaustive = False``) instead of failing.
    """
    max_expansions: int = Field(None, ge=1, title='Maximal number of partial sets expanded')
    wall_clock_seconds: float = Field(None, gt=0, title='Wall clock ceiling in seconds')
    max_union_size: Optional[int] = Field(None, ge=1, title='Cap on |U| in the component union search '
                                                            '(None means n + 3)')
    workers: int = Field(None, ge=1, title='Number of worker processes')

    class Config:
        extra = "forbid"

    @validator('max_expansions', pre=True, always=True)
    def check_max_expansions(cls, value):
        """SearchBudget.max_expansions validator"""
        return value if value is not None else config.MAX_EXPANSIONS

    @validator('wall_clock_seconds', pre=True, always=True)
    def check_wall_clock_seconds(cls, value):
        """SearchBudget.wall_clock_seconds validator"""
        return value if value is not None else config.WALL_CLOCK_SECONDS

    @validator('workers', pre=True, always=True)
    def check_workers(cls, value):
        """SearchBudget.workers validator"""
        return value if value is not None else config.WORKERS

    def union_cap(self, n: int) -> int:
        """
        The effective cap on |U| for dimension ``n``.
        """
        return self.max_union_size if self.max_union_size is not None else n + 3
