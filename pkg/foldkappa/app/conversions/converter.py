"""
FoldKappa app conversions converter module
This module is used for converting in between vertex label representations:
integer labels, n-bit binary strings, and integer bitsets over the vertex set
"""

from typing import Iterable, List


def popcount(x: int) -> int:
    """
    Count the set bits of a non-negative integer.

    Args:
        x (int): The integer.

    Returns:
        int: The number of set bits.
    """
    return bin(x).count('1')


def label_to_bitstring(label: int,
                       n: int,
                       ) -> str:
    """
    Render a vertex label as an n-bit binary string, most significant bit first.

    Args:
        label (int): The vertex label.
        n (int): The dimension.

    Raises:
        ValueError: If the label does not fit in n bits.

    Returns:
        str: The binary string, e.g., ``'0011'`` for label 3 in dimension 4.
    """
    if not 0 <= label < 2 ** n:
        raise ValueError(f'The label {label} does not fit in {n} bits')
    return format(label, f'0{n}b')


def bitstring_to_label(bitstring: str,
                       n: int,
                       ) -> int:
    """
    Parse an n-bit binary string into a vertex label.

    Args:
        bitstring (str): The binary string.
        n (int): The dimension.

    Raises:
        ValueError: If the string is not an n-character string of zeros and ones.

    Returns:
        int: The vertex label.
    """
    if not isinstance(bitstring, str):
        raise ValueError(f'Expected a string, got {bitstring} which is a {type(bitstring)}')
    bitstring = bitstring.strip()
    if len(bitstring) != n or any(char not in '01' for char in bitstring):
        raise ValueError(f'Expected a binary string of length {n}, got "{bitstring}"')
    return int(bitstring, 2)


def labels_to_bits(labels: Iterable[int]) -> int:
    """
    Pack vertex labels into an integer bitset (bit ``v`` is set iff ``v`` is a member).

    Args:
        labels (Iterable[int]): The vertex labels.

    Returns:
        int: The bitset.
    """
    bits = 0
    for label in labels:
        bits |= 1 << label
    return bits


def bits_to_labels(bits: int) -> List[int]:
    """
    Unpack an integer bitset into ascending vertex labels.

    Args:
        bits (int): The bitset.

    Returns:
        List[int]: The member labels in ascending order.
    """
    labels = list()
    while bits:
        low = bits & -bits
        labels.append(low.bit_length() - 1)
        bits ^= low
    return labels
