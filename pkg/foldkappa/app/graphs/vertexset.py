"""
FoldKappa app graphs vertex set module

A dense, immutable bitset over the 2^n vertex labels of a topology.
Bit ``v`` of ``bits`` is set iff vertex ``v`` is a member.
"""

from typing import Iterable, Iterator, List

from foldkappa.app.conversions.converter import bits_to_labels, popcount
from foldkappa.app.core.exceptions import InputError


class VertexSet(object):
    """
    A class for representing a set of vertices of an n-dimensional (folded) hypercube

    Examples::

        VertexSet.from_labels(4, [0, 3])

        VertexSet.full(4) - VertexSet.from_labels(4, [0])

    Attributes:
        n (int)
            The dimension the labels belong to
        bits (int)
            The membership bitset
    """
    __slots__ = ('n', 'bits', '_size')

    def __init__(self,
                 n: int,
                 bits: int = 0,
                 ):
        if bits < 0 or bits >> (1 << n):
            raise InputError(f'The bitset has members outside [0, 2^{n})')
        self.n = n
        self.bits = bits
        self._size = None

    @classmethod
    def from_labels(cls,
                    n: int,
                    labels: Iterable[int],
                    ) -> 'VertexSet':
        """
        Build a vertex set from labels, rejecting labels outside [0, 2^n).
        """
        bits = 0
        limit = 1 << n
        for label in labels:
            if isinstance(label, bool) or not isinstance(label, int) or not 0 <= label < limit:
                raise InputError(f'Invalid vertex label {label} for dimension {n}')
            bits |= 1 << label
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> 'VertexSet':
        """The empty set"""
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> 'VertexSet':
        """The whole vertex set"""
        return cls(n, (1 << (1 << n)) - 1)

    def __len__(self) -> int:
        if self._size is None:
            self._size = popcount(self.bits)
        return self._size

    def __iter__(self) -> Iterator[int]:
        return iter(bits_to_labels(self.bits))

    def __contains__(self, label: int) -> bool:
        return label >= 0 and bool(self.bits >> label & 1)

    def __bool__(self) -> bool:
        return bool(self.bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def _check(self, other: 'VertexSet') -> None:
        if not isinstance(other, VertexSet) or other.n != self.n:
            raise InputError(f'Cannot combine vertex sets of dimensions {self.n} and {getattr(other, "n", None)}')

    def __or__(self, other: 'VertexSet') -> 'VertexSet':
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: 'VertexSet') -> 'VertexSet':
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: 'VertexSet') -> 'VertexSet':
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> 'VertexSet':
        """V minus this set"""
        return VertexSet(self.n, ((1 << (1 << self.n)) - 1) & ~self.bits)

    def with_label(self, label: int) -> 'VertexSet':
        """This set with ``label`` added"""
        return self | VertexSet.from_labels(self.n, [label])

    def without_label(self, label: int) -> 'VertexSet':
        """This set with ``label`` removed"""
        return VertexSet(self.n, self.bits & ~(1 << label))

    def issubset(self, other: 'VertexSet') -> bool:
        self._check(other)
        return not self.bits & ~other.bits

    def isdisjoint(self, other: 'VertexSet') -> bool:
        self._check(other)
        return not self.bits & other.bits

    def to_list(self) -> List[int]:
        """Ascending decimal labels, the serialized form of a vertex set"""
        return bits_to_labels(self.bits)

    def __repr__(self) -> str:
        return f'VertexSet(n={self.n}, {self.to_list()})'
