"""
FoldKappa app graphs cut finder module

Component structure under vertex deletion, g-component cuts, and the exact g-component
connectivity ckappa_g.

ckappa_g is computed as the minimum of |N(U)| over vertex sets U such that G[U] has at least
g - 1 components and V - C(U) is not empty. Each such N(U) is a g-component cut, and a minimum
cut F contains N(U) for U the union of the g - 1 smallest components of G - F. That union has at
most floor((g - 1)(2^n - kappa)/g) vertices, so a search capped at that many is exhaustive.
"""

import logging
import time
from itertools import combinations
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import networkx as nx
import numpy as np

from foldkappa.app.conversions.converter import bits_to_labels, labels_to_bits, popcount
from foldkappa.app.core.exceptions import InputError
from foldkappa.app.core.workers import map_tasks
from foldkappa.app.graphs.closedform import theta_qn_formula
from foldkappa.app.graphs.extremal import canonical_branches, hamming_ball, translate, initial_pool
from foldkappa.app.graphs.setcalc import neighborhood
from foldkappa.app.graphs.topology import Topology, build, to_networkx
from foldkappa.app.graphs.vertexset import VertexSet
from foldkappa.app.schemas.common import TopologyKindEnum, is_valid_size
from foldkappa.app.schemas.cut import ComponentProfile, CutWitness
from foldkappa.app.schemas.report import Report, build_report
from foldkappa.app.schemas.search import SearchBudget


logger = logging.getLogger(__name__)


class CkappaOutcome(NamedTuple):
    """
    The result of an exact g-component connectivity search.
    ``value`` and ``witness`` are ``None`` only when a ``bound`` was given and no cut within it exists.
    """
    value: Optional[int]
    witness: Optional[CutWitness]
    exhaustive: bool
    expansions: int = 0

    def cut_witness(self) -> Dict[str, Any]:
        """The cut as a report witness, or the search that ruled every cut out"""
        if self.witness is not None:
            return {'cut': self.witness.cut}
        return {'cut': None, 'exhaustive': self.exhaustive, 'expansions': self.expansions}


def component_masks(t: Topology, alive: int) -> List[int]:
    """
    The components of the subgraph induced by the bitset ``alive``, as bitsets,
    ordered by their lowest label.
    """
    masks = list()
    while alive:
        component = frontier = alive & -alive
        while frontier:
            frontier = t.expand(frontier) & alive & ~component
            component |= frontier
        masks.append(component)
        alive &= ~component
    return masks


def profile_from_masks(masks: List[int]) -> ComponentProfile:
    """Summarize component bitsets as a ComponentProfile"""
    sizes = sorted((popcount(mask) for mask in masks), reverse=True)
    return ComponentProfile(component_count=len(sizes),
                            sizes=sizes,
                            largest=sizes[0] if sizes else 0,
                            singleton_count=sizes.count(1),
                            )


def components(t: Topology, f: VertexSet) -> ComponentProfile:
    """
    The component structure of t - f.
    """
    if f.n != t.n:
        raise InputError(f'Expected a vertex set of dimension {t.n}, got {f!r}')
    return profile_from_masks(component_masks(t, t.full_bits & ~f.bits))


def _check_g(g: int, low: int = 2) -> None:
    is_valid, err = is_valid_size(g, low=low)
    if not is_valid:
        raise InputError(err)


def is_g_component_cut(t: Topology, f: VertexSet, g: int) -> CutWitness:
    """
    Whether deleting ``f`` leaves at least g components. The profile is carried either way.

    Raises:
        InputError: If g < 2.
    """
    _check_g(g)
    profile = components(t, f)
    return CutWitness(cut=f.to_list(), profile=profile, target_g=g, certified=profile.component_count >= g)


def leaf_cut(t: Topology, v: int, k: int) -> CutWitness:
    """
    N(S) for S the k lowest-labelled neighbours of ``v``, targeted at k + 1 components.

    Raises:
        InputError: If k is not in [1, degree].
    """
    t.check_label(v)
    is_valid, err = is_valid_size(k, low=1, high=t.degree, name='k')
    if not is_valid:
        raise InputError(err)
    leaves = VertexSet.from_labels(t.n, sorted(set(t.neighbor_labels(v)))[:k])
    return is_g_component_cut(t, neighborhood(t, leaves), k + 1)


def star_cut(t: Topology, v: int, g: int) -> CutWitness:
    """
    The neighbourhood of the g lowest-labelled neighbours of ``v`` in FQ_n: a (g + 1)-component
    cut whose size is f_n(g) for n >= 5, with the g neighbours left as singletons.

    Raises:
        InputError: If ``t`` is not a folded hypercube or g is not in [1, n + 1].
    """
    if t.kind != TopologyKindEnum.folded:
        raise InputError(f'The star cut is built in folded hypercubes, got {t}')
    return leaf_cut(t, v, g)


def node_connectivity(t: Topology) -> int:
    """The vertex connectivity kappa of ``t``, computed by networkx"""
    return nx.node_connectivity(to_networkx(t))


def union_size_limit(t: Topology, g: int, kappa: int) -> int:
    """
    The largest |U| an exhaustive ckappa_g search must consider: floor((g - 1)(2^n - kappa)/g).
    """
    return (g - 1) * (t.vertex_count - kappa) // g


def _count_components_within(t: Topology, members: int) -> int:
    return len(component_masks(t, members))


def _search_unions(task: tuple) -> Tuple[int, Optional[Tuple[int, ...]], bool, int]:
    """
    Depth first search of one canonical branch of vertex sets U.

    Args:
        task (tuple): (kind, n, g, w, third, cap, incumbent value, theta floor, max expansions, deadline).

    Returns:
        Tuple: (best value, best U or None, whether the branch completed, expansions).
    """
    kind, n, g, w, third, cap, incumbent_value, floor, max_expansions, deadline = task
    t = build(kind, n)
    base = (1 << w) - 1
    ball = hamming_ball(t, w - 1)
    pool = initial_pool(t, w)
    members = 1 | (1 << base)
    size = 2
    if third is None:
        pool = 0
    else:
        pool &= ~((2 << third) - 1) & ~translate(t, ball, third)
        members |= 1 << third
        size = 3
    best_value, best_union = incumbent_value, None
    expansions = 0
    stack = [(members, size, pool)]
    while stack:
        members, size, pool = stack.pop()
        expansions += 1
        if expansions > max_expansions or (expansions % 4096 == 0 and time.time() > deadline):
            return best_value, best_union, False, expansions
        boundary = t.expand(members) & ~members
        boundary_size = popcount(boundary)
        pieces = _count_components_within(t, members)
        if pieces >= g - 1 and boundary_size < best_value and (boundary | members) != t.full_bits:
            best_value, best_union = boundary_size, tuple(bits_to_labels(members))
        slots = cap - size
        if not slots or not pool or pieces + slots < g - 1:
            continue
        absorbable = popcount(boundary & pool)
        bound = None
        for extra in range(1, slots + 1):
            if pieces + extra < g - 1:
                continue
            estimate = max(boundary_size - min(absorbable, extra), floor.get(size + extra, 0))
            bound = estimate if bound is None else min(bound, estimate)
        if bound is None or bound >= best_value:
            continue
        for x in reversed(bits_to_labels(pool)):
            child_pool = pool & ~((2 << x) - 1) & ~translate(t, ball, x)
            stack.append((members | (1 << x), size + 1, child_pool))
    return best_value, best_union, True, expansions


def ckappa_exact(t: Topology,
                 g: int,
                 budget: Optional[SearchBudget] = None,
                 bound: Optional[int] = None,
                 theta_floor: Optional[Dict[int, int]] = None,
                 ) -> CkappaOutcome:
    """
    The g-component connectivity ckappa_g(t).

    g = 2 is the vertex connectivity, taken from networkx with its minimum node cut as witness.
    For g >= 3 canonical vertex sets U with |U| <= ``budget.union_cap(n)`` are searched; the result is
    exhaustive when every branch completed and the cap reaches :func:`union_size_limit`.

    Args:
        t (Topology): The topology.
        g (int): The number of components, at least 2.
        budget (SearchBudget, optional): The search limits.
        bound (int, optional): Only look for cuts of size at most ``bound``.
        theta_floor (Dict[int, int], optional): Known lower bounds on |N(U)| per |U|, e.g. theta values.

    Raises:
        InputError: If g < 2.

    Returns:
        CkappaOutcome: The value, a certified witness, whether the search was exhaustive,
                       and the number of partial sets expanded.
    """
    _check_g(g)
    budget = budget or SearchBudget()
    started = time.time()
    graph = to_networkx(t)
    kappa = nx.node_connectivity(graph)
    if g == 2:
        if bound is not None and kappa > bound:
            return CkappaOutcome(None, None, True)
        cut = VertexSet.from_labels(t.n, sorted(nx.minimum_node_cut(graph)))
        witness = is_g_component_cut(t, cut, 2)
        return CkappaOutcome(witness.size, witness, True)

    cap = min(budget.union_cap(t.n), t.vertex_count - 1)
    incumbent, seed = t.vertex_count, None
    if g - 1 <= t.degree:
        seed = leaf_cut(t, 0, g - 1)
        if seed.certified:
            incumbent = seed.size
        else:
            seed = None
    if bound is not None:
        incumbent = min(incumbent, bound)
    deadline = started + budget.wall_clock_seconds
    floor = dict(theta_floor or dict())
    # (w, None) evaluates the branch root {0, 2^w - 1} alone
    branches = [(w, None) for w in range(1, t.n + 1)]
    if cap >= 3:
        branches.extend(canonical_branches(t, 3))
    tasks = [(t.kind.value, t.n, g, w, third, cap, incumbent + 1, floor, budget.max_expansions, deadline)
             for w, third in branches]
    logger.info(f'Searching ckappa_{g} of {t} over {len(tasks)} branches with |U| <= {cap}')
    results = map_tasks(_search_unions, tasks, workers=budget.workers)
    found = [(value, union) for value, union, _, _ in results if union is not None]
    completed = all(done for _, _, done, _ in results)
    expansions = sum(count for _, _, _, count in results)
    exhaustive = completed and cap >= union_size_limit(t, g, kappa)
    if not completed:
        logger.warning(f'The ckappa_{g} search of {t} ran out of budget after {expansions} expansions')
    if found:
        value, union = min(found)
        witness = is_g_component_cut(t, neighborhood(t, VertexSet.from_labels(t.n, union)), g)
    elif seed is not None and (bound is None or seed.size <= bound):
        value, witness = seed.size, seed
    else:
        value, witness = None, None
        if bound is None:
            logger.warning(f'No {g}-component cut of {t} was found with |U| <= {cap}')
    logger.info(f'ckappa_{g} of {t}: {value} (exhaustive: {exhaustive}), {time.time() - started:.2f} s')
    return CkappaOutcome(value, witness, exhaustive, expansions)


def ckappa_naive(t: Topology, g: int, max_size: int) -> Tuple[Optional[int], Optional[List[int]]]:
    """
    The minimum |F| over all F with |F| <= ``max_size`` whose deletion leaves at least g components,
    by enumerating every F in increasing size.

    Returns:
        Tuple: The minimum size and the lexicographically first such F, or (None, None).
    """
    _check_g(g)
    for size in range(0, min(max_size, t.vertex_count) + 1):
        for cut in combinations(range(t.vertex_count), size):
            alive = t.full_bits & ~labels_to_bits(cut)
            if len(component_masks(t, alive)) >= g:
                return size, list(cut)
    return None, None


def small_component_bound(n: int, g: int) -> int:
    """
    The bound on the total order of the non-largest components of Q_n - F when |F| < theta_Q_n(g):
    g - 1 for g <= n - 3 and for n + 2 <= g <= 2n - 4, n + 1 for n - 2 <= g <= n + 1.
    """
    if n - 2 <= g <= n + 1:
        return n + 1
    return g - 1


def large_component_check(t: Topology, f: VertexSet, g: int) -> Report:
    """
    Check that Q_n - F has exactly one component larger than the small component bound and that
    the other components total at most that bound.

    Args:
        t (Topology): A hypercube with n >= 4.
        f (VertexSet): The deleted set, with |F| < theta_Q_n(g).
        g (int): 1 <= g <= 2n - 4.

    Raises:
        InputError: If a precondition does not hold.

    Returns:
        Report: ``computed`` is whether the structure holds.
    """
    started = time.perf_counter()
    if t.kind != TopologyKindEnum.hypercube or t.n < 4:
        raise InputError(f'The large component check needs a hypercube with n >= 4, got {t}')
    is_valid, err = is_valid_size(g, low=1, high=2 * t.n - 4)
    if not is_valid:
        raise InputError(err)
    threshold = theta_qn_formula(t.n, g)
    if len(f) >= threshold:
        raise InputError(f'|F| = {len(f)} must be below theta_Q_{t.n}({g}) = {threshold}')
    profile = components(t, f)
    limit = small_component_bound(t.n, g)
    small = profile.remaining - profile.largest
    holds = small <= limit and profile.largest > limit
    return build_report(claim_id=f'lemma/large-component/n={t.n}/g={g}/faults={len(f)}',
                        parameters={'kind': t.kind.value, 'n': t.n, 'g': g, 'fault_count': len(f),
                                    'small_bound': limit},
                        expected=True,
                        computed=holds,
                        witness=None if holds else {'cut': f.to_list(), 'sizes': profile.sizes},
                        started=started,
                        )


def large_component_sweep(t: Topology,
                          g: int,
                          fault_count: int,
                          trials: int,
                          seed: int,
                          ) -> Report:
    """
    Run :func:`large_component_check` on ``trials`` uniform random fault sets of one size.
    Trial i draws its faults from the child seed ``SeedSequence(seed).spawn(trials)[i]``.

    Returns:
        Report: ``computed`` is the number of failing trials, expected 0; the first failing set is listed.
    """
    started = time.perf_counter()
    failures, first = 0, None
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        faults = VertexSet.from_labels(t.n, (int(v) for v in rng.choice(t.vertex_count, size=fault_count,
                                                                         replace=False)))
        report = large_component_check(t, faults, g)
        if not report.computed:
            failures += 1
            if first is None:
                first = report.witness
    return build_report(claim_id=f'lemma/large-component/n={t.n}/g={g}/faults={fault_count}/random',
                        parameters={'kind': t.kind.value, 'n': t.n, 'g': g, 'fault_count': fault_count,
                                    'trials': trials, 'small_bound': small_component_bound(t.n, g)},
                        expected=0,
                        computed=failures,
                        witness=first,
                        started=started,
                        seed=seed,
                        )
