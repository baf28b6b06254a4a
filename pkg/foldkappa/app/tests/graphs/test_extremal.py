"""
FoldKappa app tests graphs test_extremal module
"""

from itertools import permutations

import pytest

import foldkappa.app.graphs.extremal as extremal
from foldkappa.app.conversions.converter import bits_to_labels
from foldkappa.app.core.exceptions import InputError
from foldkappa.app.graphs.closedform import f, theta_qn_formula
from foldkappa.app.graphs.setcalc import neighborhood
from foldkappa.app.graphs.topology import build
from foldkappa.app.graphs.vertexset import VertexSet
from foldkappa.app.schemas.report import VerdictEnum
from foldkappa.app.schemas.search import SearchBudget


budget = SearchBudget(workers=1)


def _check_witness(t, result):
    assert len(result.witness) == result.g
    assert len(neighborhood(t, VertexSet.from_labels(t.n, result.witness))) == result.value


def test_hamming_ball_and_translate():
    """Test the helpers of the canonical search"""
    t = build('q', 4)
    assert bits_to_labels(extremal.hamming_ball(t, 0)) == [0]
    assert bits_to_labels(extremal.hamming_ball(t, 1)) == [0, 1, 2, 4, 8]
    assert extremal.translate(t, 1 << 0, 5) == 1 << 5
    assert extremal.translate(t, (1 << 3) | (1 << 6), 3) == (1 << 0) | (1 << 5)
    assert extremal.initial_pool(t, 4) == 0
    assert bits_to_labels(extremal.initial_pool(t, 2)) == [5, 6, 9, 10, 12, 13, 14, 15]


def test_canonical_branches():
    """Test that the branches cover every pair orbit and are listed in lexicographic order"""
    t = build('fq', 4)
    assert extremal.canonical_branches(t, 2) == [(1, None), (2, None), (3, None), (4, None)]
    branches = extremal.canonical_branches(t, 3)
    assert branches[0] == (1, 2)
    assert all(third > (1 << w) - 1 for w, third in branches)
    sets = [(0, (1 << w) - 1, third) for w, third in branches]
    assert sets == sorted(sets)


def test_theta_small_values():
    """Test theta against known minimum neighbourhood sizes"""
    fq4, fq5 = build('fq', 4), build('fq', 5)
    result = extremal.theta_exact(fq4, 1, budget)
    assert result.value == 5
    assert result.witness == [0]
    assert result.exhaustive
    result = extremal.theta_exact(fq5, 2, budget)
    assert result.value == 10
    assert result.exhaustive
    assert result.witness == [0, 1]
    _check_witness(fq5, result)
    # below f_5(3) = 13: the pairwise common neighbours of {0, 3, 12} are disjoint pairs
    result = extremal.theta_exact(fq5, 3, budget)
    assert result.value == 12 < f(5, 3)
    assert result.witness == [0, 3, 12]
    assert result.exhaustive
    _check_witness(fq5, result)


def test_theta_matches_naive_enumeration():
    """Test the canonical search against plain enumeration of all g-subsets"""
    for kind, n, g in (('q', 3, 2), ('q', 3, 3), ('q', 3, 4), ('fq', 3, 3), ('fq', 4, 2), ('fq', 4, 3), ('q', 4, 4)):
        t = build(kind, n)
        exact = extremal.theta_exact(t, g, budget)
        naive = extremal.theta_naive(t, g)
        assert exact.value == naive.value
        assert exact.exhaustive
        _check_witness(t, exact)
        _check_witness(t, naive)


def test_theta_workers_do_not_change_the_result():
    """Test that the parallel search returns the same value and witness"""
    t = build('fq', 5)
    serial = extremal.theta_exact(t, 3, SearchBudget(workers=1))
    parallel = extremal.theta_exact(t, 3, SearchBudget(workers=3))
    assert (serial.value, serial.witness, serial.exhaustive) == \
        (parallel.value, parallel.witness, parallel.exhaustive)


def test_theta_qn():
    """Test theta of Q_4 against the hypercube closed form"""
    t = build('q', 4)
    for g in range(1, 9):
        result = extremal.theta_exact(t, g, budget)
        assert result.value == theta_qn_formula(4, g)
        assert result.exhaustive
        _check_witness(t, result)


def test_theta_budget_exhaustion():
    """Test that an exhausted budget degrades to a certified upper bound"""
    t = build('fq', 5)
    result = extremal.theta_exact(t, 4, SearchBudget(max_expansions=1, workers=1))
    assert not result.exhaustive
    assert result.value >= 12
    _check_witness(t, result)


def test_theta_floor():
    """Test collecting exact theta values as lower bounds per set size"""
    assert extremal.theta_floor(build('q', 2), 10, budget) == {1: 2, 2: 2, 3: 1}
    fq4 = build('fq', 4)
    floor = extremal.theta_floor(fq4, 4, budget)
    assert sorted(floor) == [1, 2, 3, 4]
    assert floor[1] == 5
    assert floor[2] == 8
    assert all(floor[g] == extremal.theta_naive(fq4, g).value for g in (3, 4))
    capped = extremal.theta_floor(build('fq', 5), 3, SearchBudget(max_expansions=1, workers=1))
    assert capped[1] == 6
    assert set(capped) <= {1, 2, 3}

def test_theta_star_upper():
    """Test the star upper bound"""
    assert extremal.theta_star_upper(build('fq', 8), 9) == 37
    assert extremal.theta_star_upper(build('fq', 5), 1) == 6
    assert extremal.theta_star_upper(build('fq', 6), 4) == 19
    with pytest.raises(InputError):
        extremal.theta_star_upper(build('fq', 5), 8)


def test_fallback_witness():
    """Test the search seed"""
    t = build('fq', 4)
    assert extremal.fallback_witness(t, 3).to_list() == [0, 1, 2]
    seed = extremal.fallback_witness(t, 8)
    assert len(seed) == 8
    # breadth-first order from 0: 0, its five neighbours, then 3 and 5
    assert seed.to_list() == [0, 1, 2, 3, 4, 5, 8, 15]


def test_theta_invalid_g():
    """Test theta input validation"""
    t = build('fq', 4)
    with pytest.raises(InputError):
        extremal.theta_exact(t, 0)
    with pytest.raises(InputError):
        extremal.theta_exact(t, 16)


def test_private_neighbor_lemma():
    """Test the private neighbour property on FQ_5 and FQ_7"""
    t = build('fq', 5)
    for g in (1, 2):
        report = extremal.check_private_neighbor_lemma(t, g)
        assert report.verdict == VerdictEnum.passed
        assert report.computed == 0
    report = extremal.check_private_neighbor_lemma(t, 3)
    assert report.verdict == VerdictEnum.failed
    assert report.computed == 480
    assert report.witness == {'set': [0, 3, 12]}
    assert extremal._private_neighbor_counterexample(t, (0, 3, 12))
    sampled = extremal.check_private_neighbor_lemma(build('fq', 7), 5, mode='sampled', seed=42, draws=2000)
    assert sampled.verdict == VerdictEnum.passed
    assert sampled.parameters['sets'] == 2000
    assert sampled.seed == 42
    with pytest.raises(InputError):
        extremal.check_private_neighbor_lemma(build('fq', 4), 2)
    with pytest.raises(InputError):
        extremal.check_private_neighbor_lemma(build('q', 5), 2)
    with pytest.raises(InputError):
        extremal.check_private_neighbor_lemma(t, 7)
    with pytest.raises(InputError):
        extremal.check_private_neighbor_lemma(t, 2, mode='random')


def test_private_neighbor_counterexample_detection():
    """Test that a set violating the private neighbour bound is recognized"""
    assert not extremal._private_neighbor_counterexample(build('fq', 5), (0, 1, 2, 3))
    # in Q_3, 0 and 3 keep one private neighbour each, below n - g + 1 = 2
    assert extremal._private_neighbor_counterexample(build('q', 3), (0, 3))


@pytest.mark.slow
def test_theta_fq5():
    """Test theta(FQ_5) for g = 1 ... 7, equal to f_5(g) only for g = 1, 2, 7"""
    t = build('fq', 5)
    values = list()
    for g in range(1, 8):
        result = extremal.theta_exact(t, g, budget)
        assert result.exhaustive
        assert result.value <= f(5, g)
        _check_witness(t, result)
        values.append(result.value)
    assert values == [6, 10, 12, 12, 14, 14, 15]
    assert [g for g in range(1, 8) if values[g - 1] == f(5, g)] == [1, 2, 7]


@pytest.mark.slow
def test_private_neighbor_lemma_exhaustive():
    """Test the private neighbour property over every subset of FQ_5 of sizes 4 to 6"""
    t = build('fq', 5)
    report = extremal.check_private_neighbor_lemma(t, 4)
    assert report.verdict == VerdictEnum.failed
    assert extremal._private_neighbor_counterexample(t, tuple(report.witness['set']))
    for g in (5, 6):
        report = extremal.check_private_neighbor_lemma(t, g)
        assert report.verdict in (VerdictEnum.passed, VerdictEnum.failed)
        if report.verdict == VerdictEnum.failed:
            assert len(report.witness['set']) == g
            assert extremal._private_neighbor_counterexample(t, tuple(report.witness['set']))


def test_translate_and_permute_preserve_neighborhood_sizes():
    """Test that the symmetries used by the canonical search are automorphisms"""
    t = build('fq', 3)
    labels = [0, 3, 5]
    size = len(neighborhood(t, VertexSet.from_labels(3, labels)))
    for a in range(8):
        image = bits_to_labels(extremal.translate(t, sum(1 << v for v in labels), a))
        assert len(neighborhood(t, VertexSet.from_labels(3, image))) == size
    for perm in permutations(range(3)):
        image = [sum(((v >> i) & 1) << perm[i] for i in range(3)) for v in labels]
        assert len(neighborhood(t, VertexSet.from_labels(3, image))) == size
