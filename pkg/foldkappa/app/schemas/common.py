"""
FoldKappa app schemas common module
"""

from enum import Enum
from typing import Iterable, Optional, Tuple


class TopologyKindEnum(str, Enum):
    """
    The supported topology kinds
    """
    hypercube = 'q'
    folded = 'fq'


def is_valid_dimension(n: int,
                       minimum: int = 1,
                       raise_error: bool = False,
                       ) -> Tuple[bool, str]:
    """
    Check whether a dimension is a valid integer not below ``minimum``.

    Args:
        n (int): The dimension to be checked.
        minimum (int, optional): The smallest allowed dimension.
        raise_error (bool): Whether to raise a ValueError if the dimension is invalid.

    Returns:
        Tuple[bool, str]:
            - Whether the dimension is valid.
            - A reason for invalidating the argument.
    """
    reason = ''
    if isinstance(n, bool) or not isinstance(n, int):
        reason = f'A dimension must be an integer, got "{n}" which is a {type(n)}.'
    elif n < minimum:
        reason = f'The dimension must be at least {minimum}, got {n}.'
    if reason:
        if raise_error:
            raise ValueError(reason)
        return False, reason
    return True, ''


def is_valid_label(label: int,
                   n: int,
                   raise_error: bool = False,
                   ) -> Tuple[bool, str]:
    """
    Check whether a vertex label is valid for dimension ``n``, i.e., an integer in [0, 2^n).

    Args:
        label (int): The vertex label to be checked.
        n (int): The dimension.
        raise_error (bool): Whether to raise a ValueError if the label is invalid.

    Returns:
        Tuple[bool, str]:
            - Whether the vertex label is valid.
            - A reason for invalidating the argument.
    """
    reason = ''
    if isinstance(label, bool) or not isinstance(label, int):
        reason = f'A vertex label must be an integer, got "{label}" which is a {type(label)}.'
    elif not 0 <= label < 2 ** n:
        reason = f'A vertex label in dimension {n} must be in [0, {2 ** n}), got {label}.'
    if reason:
        if raise_error:
            raise ValueError(reason)
        return False, reason
    return True, ''


def is_valid_size(g: int,
                  low: int,
                  high: Optional[int] = None,
                  name: str = 'g',
                  raise_error: bool = False,
                  ) -> Tuple[bool, str]:
    """
    Check whether a set size (or a component count) lies in [low, high].

    Args:
        g (int): The value to be checked.
        low (int): The smallest allowed value.
        high (int, optional): The largest allowed value, ``None`` for no upper limit.
        name (str, optional): The argument name used in the reason.
        raise_error (bool): Whether to raise a ValueError if the value is out of range.

    Returns:
        Tuple[bool, str]:
            - Whether the value is in range.
            - A reason for invalidating the argument.
    """
    reason = ''
    if isinstance(g, bool) or not isinstance(g, int):
        reason = f'{name} must be an integer, got "{g}" which is a {type(g)}.'
    elif g < low or (high is not None and g > high):
        upper = high if high is not None else 'inf'
        reason = f'{name} must be in [{low}, {upper}], got {g}.'
    if reason:
        if raise_error:
            raise ValueError(reason)
        return False, reason
    return True, ''


def is_sorted_label_list(labels: Iterable[int]) -> Tuple[bool, str]:
    """
    Check whether serialized vertex labels are non-negative, strictly ascending integers.

    Args:
        labels (Iterable[int]): The labels to be checked.

    Returns:
        Tuple[bool, str]:
            - Whether the labels are a valid serialized vertex set.
            - A reason for invalidating the argument.
    """
    labels = list(labels)
    if any(label < 0 for label in labels):
        return False, f'Vertex labels must be non-negative, got {labels}.'
    if any(a >= b for a, b in zip(labels, labels[1:])):
        return False, f'Vertex labels must be strictly ascending, got {labels}.'
    return True, ''
