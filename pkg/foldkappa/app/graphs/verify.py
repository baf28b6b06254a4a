"""
FoldKappa app graphs verification harness

Every property suite yields one :class:`Report` per checked claim. Claim ids are stable,
e.g. ``thm/theta/fq/n=5/g=3`` or ``thm/ckappa/upper/n=8/g=3``. Claims evaluated outside the
dimension range a result is stated for are reported as FINDING (agreement) or OUT_OF_RANGE,
never as PASS or FAIL.
"""

import logging
import time
from math import comb
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence

import networkx as nx

from foldkappa.app.core.exceptions import InputError
from foldkappa.app.graphs import closedform, cutfinder, extremal, faultsim, setcalc, topology
from foldkappa.app.graphs.topology import Topology
from foldkappa.app.schemas.faultsim import FaultTrialStats
from foldkappa.app.schemas.report import Report, build_report
from foldkappa.app.schemas.search import SearchBudget


logger = logging.getLogger(__name__)

EXACT_MAX_N = 5  # exhaustive theta and ckappa searches run up to this dimension
QN_EXACT_MAX_N = 4
EXHAUSTIVE_SUBSETS = 1_000_000  # larger subset families are sampled
SAMPLED_DRAWS = 100_000
SUITES = ('lemmas', 'theta', 'ckappa', 'structure', 'faultsim', 'all')


def _colouring_witness(t: Topology) -> Dict[str, Any]:
    """A shortest odd cycle, or the two colour classes of the breadth-first levels from vertex 0"""
    cycle = topology.shortest_odd_cycle(t)
    if cycle is not None:
        return {'cycle': cycle}
    levels = topology.bfs_levels(t, 0)
    return {'colour_classes': [[v for v in range(t.vertex_count) if levels[v] % 2 == parity] for parity in (0, 1)]}


def _differences(expected: Sequence, computed: Sequence, first: int = 1) -> Optional[Dict[str, Any]]:
    """The entries where two value lists indexed by g = first, first + 1, ... disagree"""
    rows = [{'g': g, 'expected': a, 'computed': b}
            for g, (a, b) in enumerate(zip(expected, computed), start=first) if a != b]
    if len(expected) != len(computed):
        rows.append({'expected_length': len(expected), 'computed_length': len(computed)})
    return {'differences': rows} if rows else None


def reference_graph(kind: str, n: int) -> nx.Graph:
    """Q_n from networkx on integer labels, plus the complementary matching for FQ_n"""
    graph = nx.relabel_nodes(nx.hypercube_graph(n), lambda node: int(''.join(str(bit) for bit in node), 2))
    if kind == 'fq':
        full = (1 << n) - 1
        graph.add_edges_from((v, v ^ full) for v in range(1 << n))
    return graph


def lemma_reports(n: int, seed: int, workers: int = 1, trials: int = 200) -> Iterator[Report]:
    """Common neighbours, distance-2 triples, bipartiteness, odd girth and private neighbours in FQ_n"""
    if n < 2:
        return
    t = topology.build('fq', n)
    yield setcalc.check_common_neighbor_lemma(t)
    if n >= 3:
        mode = 'exhaustive' if n <= 7 else 'sampled'
        yield setcalc.check_triple_lemma(t, mode=mode, seed=seed, draws=SAMPLED_DRAWS)

    started = time.perf_counter()
    bipartite = topology.is_bipartite(t)
    yield build_report(claim_id=f'lemma/bipartite/n={n}',
                       parameters={'kind': 'fq', 'n': n},
                       expected=n % 2 == 1,
                       computed=bipartite,
                       witness=_colouring_witness(t) if bipartite != (n % 2 == 1) else None,
                       started=started)
    started = time.perf_counter()
    oracle = nx.is_bipartite(reference_graph('fq', n))
    yield build_report(claim_id=f'oracle/bipartite/n={n}',
                       parameters={'kind': 'fq', 'n': n},
                       expected=oracle,
                       computed=bipartite,
                       witness=_colouring_witness(t) if bipartite != oracle else None,
                       started=started)

    if n % 2 == 0:
        started = time.perf_counter()
        witness = _colouring_witness(t)
        yield build_report(claim_id=f'lemma/odd-girth/n={n}',
                           parameters={'kind': 'fq', 'n': n},
                           expected=n + 1,
                           computed=topology.odd_girth(t),
                           witness=witness,
                           started=started)
        started = time.perf_counter()
        offending, checked = None, 0
        for cycle in topology.shortest_odd_cycles(t, limit=1000):
            checked += 1
            if topology.count_complementary_edges_on_cycle(t, cycle) != 1 and offending is None:
                offending = cycle
        yield build_report(claim_id=f'lemma/odd-cycle-complementary-edges/n={n}',
                           parameters={'kind': 'fq', 'n': n, 'cycles': checked},
                           expected=True,
                           computed=offending is None,
                           witness={'cycle': offending} if offending else None,
                           started=started)

    if n >= 5:
        for g in range(2, n + 2):
            exhaustive = comb(t.vertex_count, g) <= EXHAUSTIVE_SUBSETS
            yield extremal.check_private_neighbor_lemma(t, g,
                                                        mode='exhaustive' if exhaustive else 'sampled',
                                                        seed=seed,
                                                        draws=SAMPLED_DRAWS)


def theta_reports(n: int, seed: int, workers: int = 1, trials: int = 200) -> Iterator[Report]:
    """theta against f_n (FQ_n) and the hypercube closed form (Q_n)"""
    if n < 2:
        return
    budget = SearchBudget(workers=workers)
    fq = topology.build('fq', n)
    for g in range(1, n + 3):
        started = time.perf_counter()
        yield build_report(claim_id=f'thm/theta/star/n={n}/g={g}',
                           parameters={'kind': 'fq', 'n': n, 'g': g},
                           expected=closedform.f(n, g),
                           computed=extremal.theta_star_upper(fq, g),
                           in_range=n >= 5,
                           witness={'set': setcalc.star_set(fq, 0, g).to_list()},
                           started=started)
    if n <= EXACT_MAX_N:
        for g in range(1, min(n + 3, fq.vertex_count - 1) + 1):
            started = time.perf_counter()
            result = extremal.theta_exact(fq, g, budget)
            # beyond n + 2 the value is recorded without a claim
            expected = closedform.f(n, g) if g <= n + 2 else None
            yield build_report(claim_id=f'thm/theta/fq/n={n}/g={g}',
                               parameters={'kind': 'fq', 'n': n, 'g': g, 'expansions': result.expansions},
                               expected=expected,
                               computed=result.value,
                               certified=result.exhaustive,
                               in_range=n >= 5 or expected is None,
                               witness={'set': result.witness},
                               started=started)
    if n <= QN_EXACT_MAX_N:
        q = topology.build('q', n)
        for g in range(1, min(2 * n, q.vertex_count - 1) + 1):
            started = time.perf_counter()
            result = extremal.theta_exact(q, g, budget)
            yield build_report(claim_id=f'lemma/theta/q/n={n}/g={g}',
                               parameters={'kind': 'q', 'n': n, 'g': g, 'expansions': result.expansions},
                               expected=closedform.theta_qn_formula(n, g),
                               computed=result.value,
                               certified=result.exhaustive,
                               witness={'set': result.witness},
                               started=started)


def _upper_cut_report(t: Topology, g: int) -> Report:
    started = time.perf_counter()
    witness = cutfinder.star_cut(t, 0, g)
    valid = witness.certified and witness.profile.singleton_count >= g
    return build_report(claim_id=f'thm/ckappa/upper/n={t.n}/g={g}',
                        parameters={'kind': t.kind.value, 'n': t.n, 'g': g,
                                    'components': witness.profile.component_count,
                                    'singletons': witness.profile.singleton_count},
                        expected=closedform.f(t.n, g),
                        computed=witness.size if valid else None,
                        in_range=t.n >= 5,
                        witness={'cut': witness.cut, 'sizes': witness.profile.sizes},
                        started=started)


def ckappa_reports(n: int, seed: int, workers: int = 1, trials: int = 200) -> Iterator[Report]:
    """Star cut upper bounds, exact ckappa against the closed forms, and the naive definition"""
    if n < 3:
        return
    budget = SearchBudget(workers=workers)
    fq = topology.build('fq', n)
    for g in range(1, n + 2):
        yield _upper_cut_report(fq, g)
    if n > EXACT_MAX_N:
        return

    floor = extremal.theta_floor(fq, budget.union_cap(n), budget)
    exact: Dict[tuple, cutfinder.CkappaOutcome] = dict()
    for g in (2, 3):
        started = time.perf_counter()
        outcome = cutfinder.ckappa_exact(fq, g, budget, theta_floor=floor)
        exact[('fq', g)] = outcome
        claim = f'thm/connectivity/fq/n={n}' if g == 2 else f'thm/ckappa/fq/n={n}/g={g}'
        yield build_report(claim_id=claim,
                           parameters={'kind': 'fq', 'n': n, 'g': g, 'expansions': outcome.expansions},
                           expected=closedform.f(n, g - 1),
                           computed=outcome.value,
                           certified=outcome.exhaustive,
                           in_range=g == 2 or n >= 8,
                           witness=outcome.cut_witness(),
                           started=started)

    if n <= QN_EXACT_MAX_N:
        q = topology.build('q', n)
        for g in (2, 3):
            started = time.perf_counter()
            kappa = cutfinder.node_connectivity(q)
            q_budget = SearchBudget(workers=workers, max_union_size=cutfinder.union_size_limit(q, g, kappa))
            outcome = cutfinder.ckappa_exact(q, g, q_budget)
            exact[('q', g)] = outcome
            yield build_report(claim_id=f'lemma/ckappa/q/n={n}/g={g}',
                               parameters={'kind': 'q', 'n': n, 'g': g, 'expansions': outcome.expansions},
                               expected=closedform.ckappa_qn_formula(n, g - 1),
                               computed=outcome.value,
                               certified=outcome.exhaustive,
                               witness=outcome.cut_witness(),
                               started=started)

    if n == 4:
        for (kind, g), outcome in sorted(exact.items()):
            started = time.perf_counter()
            t = topology.build(kind, n)
            value, cut = cutfinder.ckappa_naive(t, g, max_size=outcome.value)
            yield build_report(claim_id=f'oracle/ckappa-naive/{kind}/n={n}/g={g}',
                               parameters={'kind': kind, 'n': n, 'g': g},
                               expected=outcome.value,
                               computed=value,
                               certified=outcome.exhaustive,
                               witness={'cut': cut, 'search_cut': outcome.cut_witness()['cut']},
                               started=started)

    started = time.perf_counter()
    low, high = exact[('fq', 2)], exact[('fq', 3)]
    yield build_report(claim_id=f'lemma/ckappa-monotone/fq/n={n}/g=2',
                       parameters={'kind': 'fq', 'n': n, 'ckappa_2': low.value, 'ckappa_3': high.value},
                       expected=True,
                       computed=None not in (low.value, high.value) and high.value >= low.value,
                       certified=low.exhaustive and high.exhaustive,
                       witness={'ckappa_2_cut': low.cut_witness()['cut'],
                                'ckappa_3_cut': high.cut_witness()['cut']},
                       started=started)

    started = time.perf_counter()
    limit = closedform.f(n, n + 2)
    chain_budget = SearchBudget(workers=workers, max_expansions=500_000, wall_clock_seconds=60)
    outcome = cutfinder.ckappa_exact(fq, n + 3, chain_budget, bound=limit, theta_floor=floor)
    yield build_report(claim_id=f'lemma/ckappa-chain/oracle/n={n}',
                       parameters={'kind': 'fq', 'n': n, 'g': n + 3, 'bound': limit,
                                   'expansions': outcome.expansions},
                       expected=True,
                       computed=outcome.value is None,
                       certified=outcome.exhaustive or outcome.value is not None,
                       in_range=n >= 5,
                       witness=outcome.cut_witness(),
                       started=started)


def structure_reports(n: int, seed: int, workers: int = 1, trials: int = 200) -> Iterator[Report]:
    """Closed form shape facts, topology invariants and the large component property of Q_n"""
    if n >= 2:
        yield closedform.f_structure_facts(n)
    yield closedform.ckappa_chain_facts(n)

    started = time.perf_counter()
    expected = [closedform.f(n, g) for g in range(1, n + 3)]
    computed = [closedform.star_neighborhood_size(n, g) for g in range(1, n + 3)]
    yield build_report(claim_id=f'closedform/star-size/n={n}',
                       parameters={'n': n},
                       expected=expected,
                       computed=computed,
                       witness=_differences(expected, computed),
                       started=started)
    if n >= 3:
        started = time.perf_counter()
        expected = [closedform.theta_qn_formula(n, g) for g in range(1, n + 1)]
        computed = [closedform.ckappa_qn_formula(n, g) for g in range(1, n + 1)]
        yield build_report(claim_id=f'closedform/ckappa-theta-q/n={n}',
                           parameters={'n': n},
                           expected=expected,
                           computed=computed,
                           witness=_differences(expected, computed),
                           started=started)
    started = time.perf_counter()
    yield build_report(claim_id=f'closedform/theta-q-seam/n={n}',
                       parameters={'n': n},
                       expected=None,
                       computed=closedform.theta_qn_seam(n),
                       started=started)

    for kind in ('q', 'fq'):
        t = topology.build(kind, n)
        graph = reference_graph(kind, n)
        started = time.perf_counter()
        count = topology.edge_count(t)
        witness = None
        if count != graph.number_of_edges():
            reference = {(min(u, v), max(u, v)) for u, v in graph.edges()}
            witness = {'symmetric_difference': sorted(reference ^ set(topology.edges(t))),
                       'edges_listed': len(list(topology.edges(t)))}
        yield build_report(claim_id=f'topology/edge-count/{kind}/n={n}',
                           parameters={'kind': kind, 'n': n},
                           expected=graph.number_of_edges(),
                           computed=count,
                           witness=witness,
                           started=started)
        started = time.perf_counter()
        levels = topology.bfs_levels(t, 0)
        lengths = nx.single_source_shortest_path_length(graph, 0)
        # one source suffices since translations are automorphisms
        vertex = max(range(t.vertex_count), key=lambda v: (levels[v] != lengths[v], lengths[v]))
        diameter = topology.diameter(t)
        expected = nx.diameter(graph)
        yield build_report(claim_id=f'topology/diameter/{kind}/n={n}',
                           parameters={'kind': kind, 'n': n},
                           expected=expected,
                           computed=diameter,
                           witness=None if diameter == expected else
                           {'vertex': vertex, 'distance': levels[vertex], 'networkx_distance': lengths[vertex]},
                           started=started)

    if n >= 4:
        q = topology.build('q', n)
        for g in range(1, 2 * n - 3):
            for fault_count in range(closedform.theta_qn_formula(n, g)):
                yield cutfinder.large_component_sweep(q, g, fault_count, trials, seed)


def _disconnecting_witness(stats: FaultTrialStats) -> Optional[Dict[str, Any]]:
    """The first fault set of the smallest observed component count above 1"""
    if not stats.disconnecting_faults:
        return None
    components = min(stats.disconnecting_faults)
    return {'components': components, 'faults': stats.disconnecting_faults[components]}


def faultsim_reports(n: int, seed: int, workers: int = 1, trials: int = 200) -> Iterator[Report]:
    """Hard zeros and mass conservation of the fault simulator in FQ_n"""
    if n < 2:
        return
    t = topology.build('fq', n)
    started = time.perf_counter()
    stats = faultsim.simulate(t, closedform.f(n, 1) - 1, trials, seed, workers=workers)
    yield build_report(claim_id=f'faultsim/connectivity-floor/n={n}',
                       parameters={'kind': 'fq', 'n': n, 'fault_count': stats.fault_count, 'trials': trials,
                                   'histogram': stats.component_count_histogram},
                       expected=0.0,
                       computed=stats.prob_at_least_g_components.get(2, 0.0),
                       witness=_disconnecting_witness(stats),
                       started=started,
                       seed=seed)
    yield build_report(claim_id=f'faultsim/mass-conservation/n={n}',
                       parameters={'kind': 'fq', 'n': n, 'fault_count': stats.fault_count, 'trials': trials},
                       expected=True,
                       computed=stats.mass_conserved,
                       witness={'faults': stats.unconserved_faults} if not stats.mass_conserved else None,
                       started=started,
                       seed=seed)
    if n >= 8:
        yield faultsim.threshold_report(t, g_max=3, trials=trials, seed=seed, workers=workers)


SUITE_FUNCTIONS: Dict[str, Callable[..., Iterator[Report]]] = {'lemmas': lemma_reports,
                                                                'theta': theta_reports,
                                                                'ckappa': ckappa_reports,
                                                                'structure': structure_reports,
                                                                'faultsim': faultsim_reports,
                                                                }


def iter_suite(name: str,
               dimensions: Iterable[int],
               seed: int = 0,
               workers: int = 1,
               trials: int = 200,
               ) -> Iterator[Report]:
    """
    Lazily run a property suite over the given dimensions.

    Args:
        name (str): One of 'lemmas', 'theta', 'ckappa', 'structure', 'faultsim', 'all'.
        dimensions (Iterable[int]): The dimensions n to check.
        seed (int, optional): The root seed of every randomized check.
        workers (int, optional): Worker processes for searches and simulations.
        trials (int, optional): Random trials per randomized cell.

    Raises:
        InputError: If the suite is unknown or a dimension is below 1.

    Yields:
        Report: One report per claim.
    """
    if name not in SUITES:
        raise InputError(f'Unknown suite "{name}", expected one of {list(SUITES)}')
    dimensions = list(dimensions)
    if any(n < 1 for n in dimensions):
        raise InputError(f'Dimensions must be at least 1, got {dimensions}')
    names = [suite for suite in SUITES if suite != 'all'] if name == 'all' else [name]
    for suite in names:
        for n in dimensions:
            logger.info(f'Running the {suite} suite at n={n}')
            yield from SUITE_FUNCTIONS[suite](n, seed=seed, workers=workers, trials=trials)


def run_suite(name: str,
              dimensions: Iterable[int],
              seed: int = 0,
              workers: int = 1,
              trials: int = 200,
              ) -> List[Report]:
    """Run a property suite, see :func:`iter_suite`"""
    return list(iter_suite(name, dimensions, seed=seed, workers=workers, trials=trials))


def parse_dimension_range(text: str) -> List[int]:
    """
    Parse ``'a..b'`` (inclusive) or a single ``'a'`` into a list of dimensions.

    Raises:
        InputError: If the text is malformed or the range is empty.
    """
    text = str(text).strip()
    try:
        if '..' in text:
            low, high = (int(part) for part in text.split('..', 1))
        else:
            low = high = int(text)
    except ValueError:
        raise InputError(f'Expected a dimension "n" or an inclusive range "a..b", got "{text}"')
    if low < 1 or high < low:
        raise InputError(f'Invalid dimension range "{text}"')
    return list(range(low, high + 1))
