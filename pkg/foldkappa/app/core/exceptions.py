"""
FoldKappa app core exceptions module
"""


class FoldKappaError(Exception):
    """
    The base class for FoldKappa errors
    """
    pass


class InputError(FoldKappaError, ValueError):
    """
    An argument violates a precondition (dimension, set size, vertex label, cycle)
    """
    pass


class VertexBudgetError(FoldKappaError, MemoryError):
    """
    A topology would exceed the configured vertex budget
    """
    pass
