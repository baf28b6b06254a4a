"""
FoldKappa app graphs fault simulation module

Uniform random vertex faults injected into Q_n / FQ_n, summarized as component statistics.
Trial i draws from ``SeedSequence(seed, spawn_key=(i,))``, the i-th child of the root seed,
so results do not depend on how trials are split over workers.
"""

import logging
import time
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from foldkappa.app.conversions.converter import bits_to_labels, popcount
from foldkappa.app.conversions.files import csv_text
from foldkappa.app.core.exceptions import InputError
from foldkappa.app.core.workers import map_tasks
from foldkappa.app.graphs.closedform import f
from foldkappa.app.graphs.cutfinder import component_masks
from foldkappa.app.graphs.topology import Topology, build
from foldkappa.app.schemas.common import TopologyKindEnum, is_valid_size
from foldkappa.app.schemas.faultsim import FaultTrialStats
from foldkappa.app.schemas.report import Report, build_report


logger = logging.getLogger(__name__)

CSV_HEADER = ('n', 'kind', 'fault_count', 'trials', 'seed', 'g',
              'prob_geq_g_components', 'largest_p50', 'largest_p99')

QUANTILES = {'p50': 50, 'p99': 99}

TrialOutcome = Tuple[int, int, bool, Optional[List[int]]]


def sample_faults(rng: np.random.Generator, vertex_count: int, fault_count: int) -> int:
    """
    A uniform random fault_count-subset of [0, vertex_count) as a bitset, by a partial
    Fisher-Yates shuffle over a sparse permutation.
    """
    swapped: Dict[int, int] = dict()
    bits = 0
    for i in range(fault_count):
        j = int(rng.integers(i, vertex_count))
        chosen = swapped.get(j, j)
        swapped[j] = swapped.get(i, i)
        bits |= 1 << chosen
    return bits


def _run_trials(task: tuple) -> List[TrialOutcome]:
    """
    Run trials [start, stop).

    Args:
        task (tuple): (kind, n, fault_count, seed, start, stop).

    Returns:
        List[TrialOutcome]: (component count, largest order, mass conserved, faults) per trial.
            The fault labels are kept only for disconnected or unconserved trials.
    """
    kind, n, fault_count, seed, start, stop = task
    t = build(kind, n)
    outcomes = list()
    for i in range(start, stop):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(i,)))
        faults = sample_faults(rng, t.vertex_count, fault_count)
        sizes = [popcount(mask) for mask in component_masks(t, t.full_bits & ~faults)]
        conserved = sum(sizes) == t.vertex_count - fault_count
        kept = bits_to_labels(faults) if len(sizes) >= 2 or not conserved else None
        outcomes.append((len(sizes), max(sizes, default=0), conserved, kept))
    return outcomes


def simulate(t: Topology,
             fault_count: int,
             trials: int,
             seed: int,
             workers: int = 1,
             ) -> FaultTrialStats:
    """
    Delete a uniform random fault_count-subset in each of ``trials`` trials and aggregate the
    component structure.

    Args:
        t (Topology): The topology.
        fault_count (int): |F|, 0 <= |F| < 2^n.
        trials (int): The number of trials, at least 1.
        seed (int): The root seed.
        workers (int, optional): The number of processes.

    Raises:
        InputError: If fault_count or trials is out of range.

    Returns:
        FaultTrialStats: The aggregated statistics, identical for any worker count.
    """
    is_valid, err = is_valid_size(fault_count, low=0, high=t.vertex_count - 1, name='fault_count')
    if not is_valid:
        raise InputError(err)
    is_valid, err = is_valid_size(trials, low=1, name='trials')
    if not is_valid:
        raise InputError(err)
    logger.debug(f'Simulating {trials} trials of {fault_count} faults in {t}')
    chunks = max(1, min(workers, trials))
    bounds = [trials * i // chunks for i in range(chunks + 1)]
    tasks = [(t.kind.value, t.n, fault_count, seed, bounds[i], bounds[i + 1]) for i in range(chunks)]
    outcomes = [outcome for chunk in map_tasks(_run_trials, tasks, workers=workers) for outcome in chunk]
    return aggregate(t, fault_count, trials, seed, outcomes)


def aggregate(t: Topology,
              fault_count: int,
              trials: int,
              seed: int,
              outcomes: List[TrialOutcome],
              ) -> FaultTrialStats:
    """Summarize per-trial (component count, largest order, mass conserved, faults) outcomes in trial order"""
    counts = [count for count, _, _, _ in outcomes]
    histogram: Dict[int, int] = dict()
    disconnecting: Dict[int, List[int]] = dict()
    unconserved = None
    for count, _, conserved, faults in outcomes:
        histogram[count] = histogram.get(count, 0) + 1
        if count >= 2 and count not in disconnecting:
            disconnecting[count] = faults
        if not conserved and unconserved is None:
            unconserved = faults
    largest = np.array([order for _, order, _, _ in outcomes], dtype=float)
    quantiles = {key: float(np.percentile(largest, q)) for key, q in QUANTILES.items()}
    probabilities = {g: sum(1 for count in counts if count >= g) / trials for g in range(1, max(counts) + 2)}
    return FaultTrialStats(n=t.n,
                           kind=t.kind,
                           fault_count=fault_count,
                           trials=trials,
                           seed=seed,
                           component_count_histogram=dict(sorted(histogram.items())),
                           largest_component_quantiles=quantiles,
                           prob_at_least_g_components=probabilities,
                           mass_conserved=unconserved is None,
                           disconnecting_faults=dict(sorted(disconnecting.items())),
                           unconserved_faults=unconserved,
                           )


def stats_rows(stats: FaultTrialStats) -> List[tuple]:
    """One CSV row per g of ``stats.prob_at_least_g_components``"""
    return [(stats.n, stats.kind.value, stats.fault_count, stats.trials, stats.seed, g,
             stats.prob_at_least_g_components[g],
             stats.largest_component_quantiles['p50'],
             stats.largest_component_quantiles['p99'])
            for g in sorted(stats.prob_at_least_g_components)]


def stats_csv(stats: Iterable[FaultTrialStats]) -> str:
    """The CSV export of several simulations"""
    return csv_text(CSV_HEADER, [row for item in stats for row in stats_rows(item)])


def threshold_report(t: Topology,
                     g_max: int,
                     trials: int,
                     seed: int,
                     offset: int = 1,
                     workers: int = 1,
                     ) -> Report:
    """
    Tabulate the empirical P(>= g + 1 components) at |F| = f(n, g) - 1, f(n, g) and f(n, g) + offset
    for g = 1 ... g_max.

    For a folded hypercube with n >= 8 and g <= n + 1 no (g + 1)-component cut is smaller than
    f(n, g), so the cells at f(n, g) - 1 are provably 0 and any positive estimate is a violation.
    Otherwise the annotations are suppressed and the table is reported as a finding.

    Returns:
        Report: ``computed`` is the number of violated provable-zero cells.
    """
    started = time.perf_counter()
    annotated = t.kind == TopologyKindEnum.folded and t.n >= 8
    table, violations, first = list(), 0, None
    for g in range(1, g_max + 1):
        threshold = f(t.n, g)
        for fault_count in (threshold - 1, threshold, threshold + offset):
            if not 0 <= fault_count < t.vertex_count:
                continue
            stats = simulate(t, fault_count, trials, seed, workers=workers)
            probability = stats.prob_at_least_g_components.get(g + 1, 0.0)
            provable_zero = annotated and g <= t.n + 1 and fault_count < threshold
            table.append({'g': g, 'fault_count': fault_count, 'prob_geq_g+1_components': probability,
                          'provable_zero': provable_zero})
            if provable_zero and probability > 0:
                violations += 1
                if first is None:
                    observed = min(count for count in stats.disconnecting_faults if count >= g + 1)
                    first = {'g': g, 'fault_count': fault_count, 'components': observed,
                             'faults': stats.disconnecting_faults[observed]}
    return build_report(claim_id=f'faultsim/threshold/{t.kind.value}/n={t.n}',
                        parameters={'kind': t.kind.value, 'n': t.n, 'g_max': g_max, 'trials': trials,
                                    'table': table},
                        expected=0 if annotated else None,
                        computed=violations,
                        witness=first,
                        started=started,
                        seed=seed,
                        note=None if annotated else 'n < 8 or not folded, no provable-zero cells',
                        )
