"""
FoldKappa app graphs extremal module

theta(g), the minimum of |N(V')| over all g-subsets V', by a symmetry-reduced branch and bound.

Canonical sets: XOR translations and bit permutations are automorphisms of both Q_n and FQ_n.
If w is the minimum pairwise Hamming distance in a set U, a translation and a permutation map
U onto a set containing 0 and 2^w - 1 whose members are all at Hamming distance >= w apart.
Every further member is then larger than 2^w - 1, so the search enumerates, per w, the sets
{0, 2^w - 1} + (ascending labels above 2^w - 1). Sorted canonical sets come out in
lexicographic order, branch by branch.

Pruning: adding a vertex x to a partial set P removes at most x from N(P), so with s slots left
and a pool of admissible labels, |N(final)| >= |N(P)| - min(|N(P) & pool|, s).
"""

import logging
import time
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np

from foldkappa.app.conversions.converter import bits_to_labels, labels_to_bits, popcount
from foldkappa.app.core.exceptions import InputError
from foldkappa.app.core.workers import map_tasks
from foldkappa.app.graphs.setcalc import neighborhood, star_set
from foldkappa.app.graphs.topology import Topology, bfs_levels, build
from foldkappa.app.graphs.vertexset import VertexSet
from foldkappa.app.schemas.common import TopologyKindEnum, is_valid_size
from foldkappa.app.schemas.report import Report, build_report
from foldkappa.app.schemas.search import SearchBudget
from foldkappa.app.schemas.theta import ThetaResult


logger = logging.getLogger(__name__)


def hamming_ball(t: Topology, radius: int) -> int:
    """The bitset of labels with at most ``radius`` set bits"""
    return labels_to_bits(v for v in range(t.vertex_count) if popcount(v) <= radius)


def translate(t: Topology, bits: int, a: int) -> int:
    """The image of a bitset under v -> v XOR a"""
    i = 0
    while a:
        if a & 1:
            bits = t.flip_bits(bits, i)
        a >>= 1
        i += 1
    return bits


def canonical_branches(t: Topology, g: int) -> List[Tuple[int, Optional[int]]]:
    """
    The independent search branches for g >= 2: (w, third member), or (w, None) when g == 2.
    Listed in the lexicographic order of the canonical sets they contain.
    """
    branches = list()
    for w in range(1, t.n + 1):
        if g == 2:
            branches.append((w, None))
        else:
            branches.extend((w, x) for x in bits_to_labels(initial_pool(t, w)))
    return branches


def initial_pool(t: Topology, w: int) -> int:
    """Labels above 2^w - 1 at Hamming distance >= w from both 0 and 2^w - 1"""
    base = (1 << w) - 1
    ball = hamming_ball(t, w - 1)
    far = t.full_bits & ~ball & ~translate(t, ball, base)
    return far & ~((2 << base) - 1)


class _Incumbent(object):
    """The best set found so far in a branch"""
    __slots__ = ('value', 'witness')

    def __init__(self, value: int, witness: Optional[Tuple[int, ...]] = None):
        self.value = value
        self.witness = witness


def _search_branch(task: tuple) -> Tuple[int, Optional[Tuple[int, ...]], bool, int]:
    """
    Depth first search of one canonical branch.

    Args:
        task (tuple): (kind, n, g, w, third, incumbent value, max expansions, deadline).

    Returns:
        Tuple: (best value, best witness or None, whether the branch completed, expansions).
    """
    kind, n, g, w, third, incumbent_value, max_expansions, deadline = task
    t = build(kind, n)
    base = (1 << w) - 1
    ball = hamming_ball(t, w - 1)
    pool = initial_pool(t, w)
    members = 1 | (1 << base)
    size = 2
    if third is not None:
        pool &= ~((2 << third) - 1) & ~translate(t, ball, third)
        members |= 1 << third
        size = 3
    best = _Incumbent(incumbent_value)
    expansions = 0
    stack = [(members, size, pool)]
    while stack:
        members, size, pool = stack.pop()
        expansions += 1
        if expansions > max_expansions or (expansions % 4096 == 0 and time.time() > deadline):
            return best.value, best.witness, False, expansions
        boundary = t.expand(members) & ~members
        boundary_size = popcount(boundary)
        if size == g:
            if boundary_size < best.value:
                best.value, best.witness = boundary_size, tuple(bits_to_labels(members))
            continue
        slots = g - size
        if boundary_size - min(popcount(boundary & pool), slots) >= best.value:
            continue
        candidates = bits_to_labels(pool)
        if len(candidates) < slots:
            continue
        # the last slots - 1 candidates cannot start a completion
        candidates = candidates[:len(candidates) - slots + 1]
        for x in reversed(candidates):
            child_pool = pool & ~((2 << x) - 1) & ~translate(t, ball, x)
            stack.append((members | (1 << x), size + 1, child_pool))
    return best.value, best.witness, True, expansions


def fallback_witness(t: Topology, g: int) -> VertexSet:
    """
    An explicit g-subset seeding the search: the star set of vertex 0 for g <= degree + 1,
    otherwise the first g vertices in breadth-first order from 0.
    """
    if g <= t.degree + 1:
        return star_set(t, 0, g)
    levels = bfs_levels(t, 0)
    return VertexSet.from_labels(t.n, sorted(range(t.vertex_count), key=lambda v: (levels[v], v))[:g])


def _check_g(t: Topology, g: int) -> None:
    is_valid, err = is_valid_size(g, low=1, high=t.vertex_count - 1)
    if not is_valid:
        raise InputError(err)


def theta_exact(t: Topology,
                g: int,
                budget: Optional[SearchBudget] = None,
                ) -> ThetaResult:
    """
    Compute theta(g) = min |N(V')| over g-subsets V' by canonical branch and bound.

    Branches run in parallel over ``budget.workers`` processes. Each branch may expand at most
    ``budget.max_expansions`` partial sets and all branches share the wall clock ceiling.
    A branch cut short by the budget degrades the result to ``exhaustive = False``; the witness
    still certifies the value as an upper bound. Results do not depend on the worker count.

    Args:
        t (Topology): The topology.
        g (int): The set size, 1 <= g <= 2^n - 1.
        budget (SearchBudget, optional): The search limits.

    Raises:
        InputError: If g is out of range.

    Returns:
        ThetaResult: The minimum found and a lexicographically first witness among the visited sets.
    """
    _check_g(t, g)
    budget = budget or SearchBudget()
    if g == 1:
        return ThetaResult(kind=t.kind, n=t.n, g=1, value=t.degree, witness=[0], exhaustive=True)
    started = time.time()
    seed = fallback_witness(t, g)
    seed_value = len(neighborhood(t, seed))
    deadline = started + budget.wall_clock_seconds
    tasks = [(t.kind.value, t.n, g, w, third, seed_value + 1, budget.max_expansions, deadline)
             for w, third in canonical_branches(t, g)]
    logger.info(f'Searching theta({g}) of {t} over {len(tasks)} branches, starting from the upper bound {seed_value}')
    results = map_tasks(_search_branch, tasks, workers=budget.workers)
    value, witness = seed_value, tuple(seed.to_list())
    found = [(branch_value, branch_witness) for branch_value, branch_witness, _, _ in results
             if branch_witness is not None]
    if found:
        value, witness = min(found)
    exhaustive = all(completed for _, _, completed, _ in results)
    expansions = sum(count for _, _, _, count in results)
    if not exhaustive:
        logger.warning(f'The theta({g}) search of {t} ran out of budget after {expansions} expansions, '
                       f'{value} is an upper bound')
    logger.info(f'theta({g}) of {t} is {value} (exhaustive: {exhaustive}), {time.time() - started:.2f} s')
    return ThetaResult(kind=t.kind, n=t.n, g=g, value=value, witness=list(witness),
                       exhaustive=exhaustive, expansions=expansions)


def theta_floor(t: Topology,
                max_size: int,
                budget: Optional[SearchBudget] = None,
                ) -> Dict[int, int]:
    """
    Exact theta(g) for 1 <= g <= ``max_size``, used as lower bounds on |N(U)| per |U| by the
    g-component connectivity search. Sizes whose search ran out of budget are left out.

    Args:
        t (Topology): The topology.
        max_size (int): The largest set size, capped at 2^n - 1.
        budget (SearchBudget, optional): The search limits of every theta search.

    Returns:
        Dict[int, int]: theta(g) keyed by g.
    """
    floor = dict()
    for g in range(1, min(max_size, t.vertex_count - 1) + 1):
        result = theta_exact(t, g, budget)
        if result.exhaustive:
            floor[g] = result.value
    logger.debug(f'theta floor of {t}: {floor}')
    return floor


def theta_naive(t: Topology, g: int) -> ThetaResult:
    """
    theta(g) by enumerating every g-subset, without symmetry reduction or pruning.
    The witness is the lexicographically first minimizer.
    """
    _check_g(t, g)
    value, witness, expansions = None, None, 0
    for subset in combinations(range(t.vertex_count), g):
        expansions += 1
        bits = labels_to_bits(subset)
        size = popcount(t.expand(bits) & ~bits)
        if value is None or size < value:
            value, witness = size, subset
    return ThetaResult(kind=t.kind, n=t.n, g=g, value=value, witness=list(witness),
                       exhaustive=True, expansions=expansions)


def theta_star_upper(t: Topology, g: int) -> int:
    """
    |N(star_set(0, g))|, an upper bound on theta(g) for 1 <= g <= degree + 1.

    Raises:
        InputError: If g is out of range.
    """
    return len(neighborhood(t, star_set(t, 0, g)))


def _private_neighbor_counterexample(t: Topology, subset: Tuple[int, ...]) -> bool:
    """Whether no member of ``subset`` has enough private neighbours"""
    g = len(subset)
    masks = [t.neighbor_mask(v) for v in subset]
    members = labels_to_bits(subset)
    prefix = [0] * (g + 1)
    for i, mask in enumerate(masks):
        prefix[i + 1] = prefix[i] | mask
    suffix = 0
    for i in range(g - 1, -1, -1):
        others = prefix[i] | suffix
        private = popcount(masks[i] & ~others & ~members)
        needed = t.n - g + 2 if masks[i] & members else t.n - g + 1
        if private >= needed:
            return False
        suffix |= masks[i]
    return True


def check_private_neighbor_lemma(t: Topology,
                                 g: int,
                                 mode: str = 'exhaustive',
                                 seed: Optional[int] = None,
                                 draws: int = 100_000,
                                 ) -> Report:
    """
    Check that every g-subset V' of FQ_n (n >= 5, 1 <= g <= n + 1) has a member v with
    |PN(v)| >= n - g + 2 when v has a neighbour in V', or |PN(v)| >= n - g + 1 otherwise.

    Args:
        t (Topology): A folded hypercube with n >= 5.
        g (int): The set size.
        mode (str, optional): 'exhaustive' checks every g-subset, 'sampled' draws ``draws`` uniform ones.
        seed (int, optional): The RNG seed for the sampled mode.
        draws (int, optional): The number of sampled sets.

    Raises:
        InputError: If the topology, dimension, g or mode is out of range.

    Returns:
        Report: ``computed`` is the number of counterexample sets, expected 0; the first
                counterexample is listed verbatim.
    """
    if t.kind != TopologyKindEnum.folded or t.n < 5:
        raise InputError(f'The private neighbour check needs a folded hypercube with n >= 5, got {t}')
    is_valid, err = is_valid_size(g, low=1, high=t.n + 1)
    if not is_valid:
        raise InputError(err)
    if mode not in ('exhaustive', 'sampled'):
        raise InputError(f'The mode must be "exhaustive" or "sampled", got "{mode}"')
    started = time.perf_counter()
    if mode == 'exhaustive':
        subsets = combinations(range(t.vertex_count), g)
    else:
        rng = np.random.default_rng(seed)
        subsets = (tuple(sorted(int(v) for v in rng.choice(t.vertex_count, size=g, replace=False)))
                   for _ in range(draws))
    checked, counterexamples, first = 0, 0, None
    for subset in subsets:
        checked += 1
        if _private_neighbor_counterexample(t, subset):
            counterexamples += 1
            if first is None:
                first = {'set': list(subset)}
    logger.info(f'Checked {checked} {g}-subsets of {t} for private neighbours ({mode}), '
                f'{counterexamples} counterexamples')
    return build_report(claim_id=f'lemma/private-neighbors/n={t.n}/g={g}',
                        parameters={'kind': t.kind.value, 'n': t.n, 'g': g, 'mode': mode, 'sets': checked},
                        expected=0,
                        computed=counterexamples,
                        witness=first,
                        started=started,
                        seed=seed if mode == 'sampled' else None,
                        )
