"""
FoldKappa app graphs topology module

The n-dimensional hypercube Q_n and folded hypercube FQ_n on integer labels [0, 2^n).
Two labels are hypercube-adjacent iff they differ in exactly one bit; FQ_n adds the
perfect matching joining every label to its bitwise complement.

Whole vertex sets are expanded bit-parallel: flipping bit ``i`` of every label in a bitset
swaps adjacent blocks of 2^i bit positions, and complementing every label reverses the
2^n-bit string.
"""

import json
import logging
from collections import deque
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from foldkappa.app.conversions.converter import bitstring_to_label, label_to_bitstring
from foldkappa.app.core import config
from foldkappa.app.core.exceptions import InputError, VertexBudgetError
from foldkappa.app.graphs.vertexset import VertexSet
from foldkappa.app.schemas.common import TopologyKindEnum, is_valid_dimension, is_valid_label


logger = logging.getLogger(__name__)


class Topology(object):
    """
    A class for representing an immutable Q_n or FQ_n.
    Use :func:`build` to construct instances.

    Attributes:
        kind (TopologyKindEnum)
            Either hypercube ('q') or folded ('fq')
        n (int)
            The dimension
        vertex_count (int)
            2^n
        degree (int)
            n for the hypercube, n + 1 for the folded hypercube with n >= 2
        full_label (int)
            2^n - 1, the label XORed to complement a vertex
    """
    __slots__ = ('kind', 'n', 'vertex_count', 'degree', 'full_label', 'full_bits', '_block_masks', '_closed_masks')

    def __init__(self,
                 kind: TopologyKindEnum,
                 n: int,
                 ):
        self.kind = TopologyKindEnum(kind)
        self.n = n
        self.vertex_count = 1 << n
        self.degree = n + 1 if self.has_matching else n
        self.full_label = self.vertex_count - 1
        self.full_bits = (1 << self.vertex_count) - 1
        self._block_masks = None
        self._closed_masks = None

    @property
    def is_folded(self) -> bool:
        return self.kind == TopologyKindEnum.folded

    @property
    def has_matching(self) -> bool:
        """Whether the complementary matching adds edges; in FQ_1 it coincides with Q_1 (K_2)"""
        return self.kind == TopologyKindEnum.folded and self.n >= 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Topology):
            return NotImplemented
        return self.kind == other.kind and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.kind, self.n))

    def __repr__(self) -> str:
        return f"<Topology(kind='{self.kind.value}', n={self.n})>"

    def __str__(self) -> str:
        return f"{'FQ' if self.is_folded else 'Q'}_{self.n}"

    def __reduce__(self):
        return build, (self.kind, self.n)

    def check_label(self, v: int) -> int:
        """
        Validate a vertex label.

        Raises:
            InputError: If ``v`` is not a label of this topology.
        """
        is_valid, err = is_valid_label(v, self.n)
        if not is_valid:
            raise InputError(err)
        return v

    def neighbor_labels(self, v: int) -> Tuple[int, ...]:
        """
        The neighbours of ``v``: bit flips in ascending dimension order, then the complement for FQ_n.
        """
        labels = tuple(v ^ (1 << i) for i in range(self.n))
        if self.has_matching:
            labels += (v ^ self.full_label,)
        return labels

    def closed_mask(self, v: int) -> int:
        """
        The bitset of ``v`` and its neighbours.
        Cached per vertex when n <= ``config.ADJACENCY_CACHE_MAX_N``, computed from bits otherwise.
        """
        if self.n <= config.ADJACENCY_CACHE_MAX_N:
            if self._closed_masks is None:
                self._closed_masks = tuple(self._closed_mask(u) for u in range(self.vertex_count))
            return self._closed_masks[v]
        return self._closed_mask(v)

    def _closed_mask(self, v: int) -> int:
        mask = 1 << v
        for u in self.neighbor_labels(v):
            mask |= 1 << u
        return mask

    def neighbor_mask(self, v: int) -> int:
        """The bitset of the neighbours of ``v``"""
        return self.closed_mask(v) & ~(1 << v)

    @property
    def block_masks(self) -> Tuple[int, ...]:
        """
        ``block_masks[i]`` has bit p set iff bit i of the label p is zero.
        """
        if self._block_masks is None:
            masks = list()
            for i in range(self.n):
                width = 1 << i
                block = (1 << width) - 1
                repeat = self.full_bits // ((1 << (2 * width)) - 1)
                masks.append(block * repeat)
            self._block_masks = tuple(masks)
        return self._block_masks

    def flip_bits(self, bits: int, i: int) -> int:
        """The image of a bitset under v -> v XOR 2^i"""
        width = 1 << i
        mask = self.block_masks[i]
        return ((bits & mask) << width) | ((bits >> width) & mask)

    def complement_bits(self, bits: int) -> int:
        """The image of a bitset under v -> v XOR (2^n - 1)"""
        for i in range(self.n):
            bits = self.flip_bits(bits, i)
        return bits

    def expand(self, bits: int) -> int:
        """
        The union of the neighbourhoods of all members of a bitset (members themselves are
        included only if adjacent to another member).
        """
        result = 0
        for i in range(self.n):
            result |= self.flip_bits(bits, i)
        if self.has_matching:
            result |= self.complement_bits(bits)
        return result


@lru_cache(maxsize=64)
def _build(kind: TopologyKindEnum, n: int) -> Topology:
    return Topology(kind, n)


def build(kind: Union[TopologyKindEnum, str],
          n: int,
          ) -> Topology:
    """
    Construct Q_n or FQ_n.

    Args:
        kind (TopologyKindEnum, str): 'q' for the hypercube, 'fq' for the folded hypercube.
        n (int): The dimension.

    Raises:
        InputError: If the kind is unknown or n <= 0.
                    FQ_1 is the simple graph K_2, the same as Q_1.
        VertexBudgetError: If 2^n exceeds ``config.MAX_VERTICES``.

    Returns:
        Topology: The (cached, immutable) topology.
    """
    try:
        kind = TopologyKindEnum(kind)
    except ValueError:
        raise InputError(f'Unknown topology kind "{kind}", expected one of {[k.value for k in TopologyKindEnum]}')
    is_valid, err = is_valid_dimension(n)
    if not is_valid:
        raise InputError(err)
    if 2 ** n > config.MAX_VERTICES:
        raise VertexBudgetError(f'{kind.value}_{n} has 2^{n} vertices, above the vertex budget of '
                                f'{config.MAX_VERTICES}')
    return _build(kind, n)


def neighbors(t: Topology, v: int) -> VertexSet:
    """
    N(v): the bit-flip neighbours of ``v``, plus its complement in FQ_n.

    Raises:
        InputError: If ``v`` is not a label of ``t``.
    """
    t.check_label(v)
    return VertexSet(t.n, t.neighbor_mask(v))


def complement(t: Topology, v: int) -> int:
    """The complementary label of ``v``"""
    return t.check_label(v) ^ t.full_label


def is_adjacent(t: Topology, u: int, v: int) -> bool:
    """Whether ``u`` and ``v`` are adjacent in ``t``"""
    t.check_label(u)
    t.check_label(v)
    return bool(t.neighbor_mask(u) >> v & 1)


def is_complementary_edge(t: Topology, u: int, v: int) -> bool:
    """Whether {u, v} is a matching edge {u, complement(u)} of FQ_n"""
    return t.is_folded and t.check_label(u) ^ t.check_label(v) == t.full_label


def edges(t: Topology) -> Iterator[Tuple[int, int]]:
    """
    Iterate over the edges (u, v), u < v, ascending by u then by v.
    """
    for u in range(t.vertex_count):
        for v in sorted(set(label for label in t.neighbor_labels(u) if label > u)):
            yield u, v


def edge_count(t: Topology) -> int:
    """n 2^(n-1), plus 2^(n-1) matching edges for FQ_n with n >= 2"""
    count = t.n << (t.n - 1)
    if t.has_matching:
        count += 1 << (t.n - 1)
    return count


def bfs_levels(t: Topology, source: int) -> List[int]:
    """
    Breadth-first distances from ``source`` to every vertex, grown level by level on bitsets.

    Returns:
        List[int]: ``distances[v]``, or -1 for unreachable vertices.
    """
    t.check_label(source)
    distances = [-1] * t.vertex_count
    frontier = visited = 1 << source
    level = 0
    while frontier:
        for v in VertexSet(t.n, frontier):
            distances[v] = level
        frontier = t.expand(frontier) & ~visited
        visited |= frontier
        level += 1
    return distances


def distance(t: Topology, u: int, v: int) -> int:
    """
    The length of a shortest u-v path, by breadth-first search.

    Raises:
        InputError: If a label is invalid or ``v`` is unreachable from ``u``.
    """
    t.check_label(u)
    t.check_label(v)
    if u == v:
        return 0
    target = 1 << v
    frontier = visited = 1 << u
    level = 0
    while frontier:
        level += 1
        frontier = t.expand(frontier) & ~visited
        if frontier & target:
            return level
        visited |= frontier
    raise InputError(f'{v} is not reachable from {u} in {t}')


def diameter(t: Topology) -> int:
    """The eccentricity of vertex 0; every vertex has the same eccentricity since translations are automorphisms"""
    return max(bfs_levels(t, 0))


def is_bipartite(t: Topology) -> bool:
    """
    Whether ``t`` has no odd cycle, by two-colouring the breadth-first levels from vertex 0.
    """
    distances = bfs_levels(t, 0)
    for u, v in edges(t):
        if distances[u] % 2 == distances[v] % 2:
            return False
    return True


def shortest_odd_cycles(t: Topology,
                        limit: Optional[int] = None,
                        ) -> Iterator[List[int]]:
    """
    Iterate over shortest odd cycles through vertex 0.
    Vertex 0 lies on a shortest odd cycle since ``t`` is vertex-transitive, so every
    same-level edge (u, w) at the lowest such level k closes two shortest paths from 0
    into a cycle of length 2k + 1 that meets only at 0.

    Args:
        t (Topology): The topology.
        limit (int, optional): Stop after this many cycles.

    Yields:
        List[int]: A closed vertex sequence [0, ..., u, w, ..., 0].
    """
    distances = bfs_levels(t, 0)
    level_edges = [(u, w) for u, w in edges(t) if distances[u] == distances[w]]
    if not level_edges:
        return
    k = min(distances[u] for u, _ in level_edges)
    count = 0
    for u, w in level_edges:
        if distances[u] != k:
            continue
        for path_u in _shortest_paths_from_zero(t, distances, u):
            for path_w in _shortest_paths_from_zero(t, distances, w):
                if set(path_u[1:]) & set(path_w[1:]):
                    continue
                yield path_u + path_w[::-1]
                count += 1
                if limit is not None and count >= limit:
                    return


def _shortest_paths_from_zero(t: Topology,
                              distances: Sequence[int],
                              target: int,
                              ) -> Iterator[List[int]]:
    """Iterate over all shortest paths [0, ..., target]"""
    if distances[target] == 0:
        yield [target]
        return
    for parent in sorted(set(t.neighbor_labels(target))):
        if distances[parent] == distances[target] - 1:
            for path in _shortest_paths_from_zero(t, distances, parent):
                yield path + [target]


def shortest_odd_cycle(t: Topology) -> Optional[List[int]]:
    """A shortest odd cycle as a closed vertex sequence, or ``None`` if ``t`` is bipartite"""
    return next(shortest_odd_cycles(t, limit=1), None)


def odd_girth(t: Topology) -> Optional[int]:
    """
    The length of a shortest odd cycle, or ``None`` if ``t`` is bipartite.
    """
    cycle = shortest_odd_cycle(t)
    return len(cycle) - 1 if cycle is not None else None


def validate_cycle(t: Topology, cycle: Sequence[int]) -> None:
    """
    Check that a vertex sequence is a closed cycle of ``t``: at least three distinct vertices,
    first = last, consecutive vertices adjacent, no repeated interior vertex.

    Raises:
        InputError: If the sequence is not a valid cycle.
    """
    cycle = list(cycle)
    if len(cycle) < 4 or cycle[0] != cycle[-1]:
        raise InputError(f'A cycle must be closed (first = last) and have at least 3 vertices, got {cycle}')
    for v in cycle:
        t.check_label(v)
    interior = cycle[:-1]
    if len(set(interior)) != len(interior):
        raise InputError(f'A cycle cannot repeat a vertex, got {cycle}')
    for u, v in zip(cycle, cycle[1:]):
        if not is_adjacent(t, u, v):
            raise InputError(f'{u} and {v} are not adjacent in {t}, got {cycle}')


def count_complementary_edges_on_cycle(t: Topology, cycle: Sequence[int]) -> int:
    """
    The number of matching edges {u, complement(u)} on a cycle of FQ_n.

    Raises:
        InputError: If ``t`` is not a folded hypercube or ``cycle`` is not a valid cycle of ``t``.
    """
    if not t.is_folded:
        raise InputError(f'Complementary edges only exist in folded hypercubes, got {t}')
    validate_cycle(t, cycle)
    return sum(1 for u, v in zip(cycle, cycle[1:]) if u ^ v == t.full_label)


def to_networkx(t: Topology) -> nx.Graph:
    """The topology as a networkx graph on integer nodes"""
    graph = nx.Graph(kind=t.kind.value, n=t.n)
    graph.add_nodes_from(range(t.vertex_count))
    graph.add_edges_from(edges(t))
    return graph


def format_label(t: Topology, v: int) -> str:
    """Render ``v`` as an n-bit binary string"""
    return label_to_bitstring(t.check_label(v), t.n)


def parse_label(t: Topology, bitstring: str) -> int:
    """Parse an n-bit binary string into a label of ``t``"""
    return bitstring_to_label(bitstring, t.n)


def edgelist_text(t: Topology) -> str:
    """
    The edge-list export: a ``# kind=<fq|q> n=<n>`` header, then one ``u v`` line per edge,
    ascending u then v, LF line endings.
    """
    lines = [f'# kind={t.kind.value} n={t.n}']
    lines.extend(f'{u} {v}' for u, v in edges(t))
    return '\n'.join(lines) + '\n'


def adjacency_json_text(t: Topology) -> str:
    """
    The JSON adjacency export: ``{"kind": ..., "n": ..., "adjacency": {"<u>": [v, ...]}}``.
    """
    adjacency: Dict[str, List[int]] = {str(u): sorted(set(t.neighbor_labels(u))) for u in range(t.vertex_count)}
    return json.dumps({'kind': t.kind.value, 'n': t.n, 'adjacency': adjacency}) + '\n'
