"""
FoldKappa app graphs set calculus module

Open and closed neighbourhoods, common and private neighbours, and the star set
(a vertex with g - 1 of its neighbours) over :class:`VertexSet` bitsets.
"""

import logging
import time
from typing import Iterable, Optional

import numpy as np

from foldkappa.app.core.exceptions import InputError
from foldkappa.app.graphs.topology import Topology, bfs_levels
from foldkappa.app.graphs.vertexset import VertexSet
from foldkappa.app.schemas.common import TopologyKindEnum, is_valid_size
from foldkappa.app.schemas.report import Report, build_report


logger = logging.getLogger(__name__)


def _check_set(t: Topology, a: VertexSet) -> None:
    if not isinstance(a, VertexSet) or a.n != t.n:
        raise InputError(f'Expected a vertex set of dimension {t.n}, got {a!r}')


def neighborhood(t: Topology, a: VertexSet) -> VertexSet:
    """
    N(A): every vertex adjacent to a member of ``a``, minus ``a`` itself.
    The neighbourhood of the empty set is empty.
    """
    _check_set(t, a)
    return VertexSet(t.n, t.expand(a.bits) & ~a.bits)


def closed_neighborhood(t: Topology, a: VertexSet) -> VertexSet:
    """C(A) = N(A) | A"""
    _check_set(t, a)
    return VertexSet(t.n, t.expand(a.bits) | a.bits)


def common_neighbors(t: Topology, u: int, v: int) -> VertexSet:
    """
    N(u) & N(v) for two distinct vertices.

    Raises:
        InputError: If a label is invalid or ``u == v``.
    """
    t.check_label(u)
    t.check_label(v)
    if u == v:
        raise InputError(f'Common neighbours need two distinct vertices, got {u} twice')
    return VertexSet(t.n, t.neighbor_mask(u) & t.neighbor_mask(v))


def private_neighbors(t: Topology, v: int, vprime: VertexSet) -> VertexSet:
    """
    PN(v) = N(v) - N(V' - {v}) - V', the neighbours only ``v`` contributes to N(V').

    Raises:
        InputError: If ``v`` is not a member of ``vprime``.
    """
    _check_set(t, vprime)
    t.check_label(v)
    if v not in vprime:
        raise InputError(f'The vertex {v} is not a member of {vprime!r}')
    others = vprime.bits & ~(1 << v)
    return VertexSet(t.n, t.neighbor_mask(v) & ~t.expand(others) & ~vprime.bits)


def star_set(t: Topology, v: int, g: int) -> VertexSet:
    """
    The star set: ``v`` together with its g - 1 lowest-labelled neighbours.

    Raises:
        InputError: If g is not in [1, degree + 1].
    """
    t.check_label(v)
    is_valid, err = is_valid_size(g, low=1, high=t.degree + 1)
    if not is_valid:
        raise InputError(err)
    return VertexSet.from_labels(t.n, [v] + sorted(set(t.neighbor_labels(v)))[:g - 1])


def multi_covered_neighbors(t: Topology, vertices: Iterable[int]) -> VertexSet:
    """
    The vertices outside ``vertices`` that are adjacent to at least two of them.
    """
    members = VertexSet.from_labels(t.n, vertices)
    once = twice = 0
    for v in members:
        mask = t.neighbor_mask(v)
        twice |= once & mask
        once |= mask
    return VertexSet(t.n, twice & ~members.bits)


def distance_two_mask(t: Topology, v: int) -> int:
    """The bitset of vertices at distance exactly 2 from ``v``"""
    closed = t.closed_mask(v)
    return t.expand(closed & ~(1 << v)) & ~closed


def check_common_neighbor_lemma(t: Topology) -> Report:
    """
    Check over all vertex pairs of a folded hypercube with n >= 4 that two vertices have
    exactly two common neighbours when at distance 2 and none otherwise.
    Distances come from one breadth-first search, since d(u, v) = d(0, u XOR v).

    Returns:
        Report: ``computed`` is the number of violating pairs, expected 0.
    """
    started = time.perf_counter()
    levels = bfs_levels(t, 0)
    violations, first = 0, None
    pairs = 0
    for u in range(t.vertex_count):
        mask_u = t.neighbor_mask(u)
        for v in range(u + 1, t.vertex_count):
            pairs += 1
            count = len(VertexSet(t.n, mask_u & t.neighbor_mask(v)))
            expected = 2 if levels[u ^ v] == 2 else 0
            if count != expected:
                violations += 1
                if first is None:
                    first = {'pair': [u, v], 'distance': levels[u ^ v],
                             'common_neighbors': VertexSet(t.n, mask_u & t.neighbor_mask(v)).to_list()}
    in_range = t.kind == TopologyKindEnum.folded and t.n >= 4
    logger.info(f'Checked {pairs} pairs of {t} for the common neighbour property, {violations} violations')
    return build_report(claim_id=f'lemma/common-neighbors/{t.kind.value}/n={t.n}',
                        parameters={'kind': t.kind.value, 'n': t.n, 'pairs': pairs},
                        expected=0,
                        computed=violations,
                        in_range=in_range,
                        witness=first,
                        started=started,
                        )


def check_triple_lemma(t: Topology,
                       mode: str = 'exhaustive',
                       seed: Optional[int] = None,
                       draws: int = 10_000,
                       ) -> Report:
    """
    Check that three vertices at pairwise distance 2 in a folded hypercube with n >= 5 have
    exactly four vertices which are common neighbours of at least two of them.

    Args:
        t (Topology): The topology.
        mode (str, optional): 'exhaustive' checks every triple, 'sampled' draws ``draws`` random triples.
        seed (int, optional): The RNG seed for the sampled mode.
        draws (int, optional): The number of sampled triples.

    Raises:
        InputError: If the mode is unknown.

    Returns:
        Report: ``computed`` is the number of violating triples, expected 0.
    """
    if mode not in ('exhaustive', 'sampled'):
        raise InputError(f'The mode must be "exhaustive" or "sampled", got "{mode}"')
    started = time.perf_counter()
    far = [distance_two_mask(t, v) for v in range(t.vertex_count)] if mode == 'exhaustive' else None
    violations, first, checked = 0, None, 0

    def check(triple):
        nonlocal violations, first, checked
        checked += 1
        covered = multi_covered_neighbors(t, triple)
        if len(covered) != 4:
            violations += 1
            if first is None:
                first = {'triple': sorted(triple), 'multi_covered': covered.to_list()}

    if mode == 'exhaustive':
        for u in range(t.vertex_count):
            for v in VertexSet(t.n, far[u] & ~((2 << u) - 1)):
                for w in VertexSet(t.n, far[u] & far[v] & ~((2 << v) - 1)):
                    check((u, v, w))
    else:
        rng = np.random.default_rng(seed)
        for _ in range(draws):
            u = int(rng.integers(t.vertex_count))
            second = VertexSet(t.n, distance_two_mask(t, u)).to_list()
            v = second[int(rng.integers(len(second)))] if second else None
            third = VertexSet(t.n, distance_two_mask(t, u) & distance_two_mask(t, v)).to_list() \
                if v is not None else list()
            if not third:
                continue
            check((u, v, third[int(rng.integers(len(third)))]))
    in_range = t.kind == TopologyKindEnum.folded and t.n >= 5
    logger.info(f'Checked {checked} distance-2 triples of {t} ({mode}), {violations} violations')
    return build_report(claim_id=f'lemma/triple-common-neighbors/{t.kind.value}/n={t.n}',
                        parameters={'kind': t.kind.value, 'n': t.n, 'mode': mode, 'triples': checked},
                        expected=0,
                        computed=violations,
                        in_range=in_range,
                        witness=first,
                        started=started,
                        seed=seed if mode == 'sampled' else None,
                        )
