import itertools
import random

import numpy as np
import pytest

from mobisim import baselines, measures
from mobisim.clustering import (
    MEASURES,
    DissimilarityMatrix,
    build_matrix,
    kmedoids,
    resolve_measure,
)
from mobisim.errors import DomainError
from mobisim.graph import example_graph, hex_grid
from mobisim.measures import Weights
from mobisim.patterns import make_pattern
from support import random_pattern

SA = make_pattern([(1, 1), (0, 3), (2, 4), (8, 6), (7, 9)])
SB = make_pattern([(0, 3), (2, 4), (3, 5), (8, 6), (4, 8)])


def random_symmetric_matrix(rng: random.Random, n: int) -> DissimilarityMatrix:
    values = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            values[i, j] = values[j, i] = rng.uniform(0.05, 1.0)
    return DissimilarityMatrix(n=n, values=values, measure_tag="composite")


class TestResolveMeasure:
    def test_all_selectors_resolve(self):
        g = example_graph()
        for name in MEASURES:
            fn = resolve_measure(name, graph=g)
            assert callable(fn)

    def test_unknown_selector(self):
        with pytest.raises(DomainError):
            resolve_measure("euclid")

    def test_graph_required_for_net_measures(self):
        with pytest.raises(DomainError):
            resolve_measure("tiakas-net")
        with pytest.raises(DomainError):
            resolve_measure("tiakas-total")

    def test_weights_forwarded(self):
        fn = resolve_measure("composite", weights=Weights(1.0, 0.0))
        assert fn(SA, SB) == measures.spatial_dissimilarity(SA, SB)


class TestBuildMatrix:
    def test_reference_pair(self):
        m = build_matrix([SA, SB], "composite")
        assert m.n == 2
        assert m.values[0, 0] == m.values[1, 1] == 0.0
        assert abs(m.values[0, 1] - 0.2) <= 1e-12
        assert abs(m.values[1, 0] - 0.2) <= 1e-12

    def test_single_pattern(self):
        m = build_matrix([SA], "composite")
        assert m.values.shape == (1, 1)
        assert m.values[0, 0] == 0.0

    def test_empty_input_rejected(self):
        with pytest.raises(DomainError):
            build_matrix([], "composite")

    def test_entries_match_direct_calls(self):
        rng = random.Random(31)
        pats = [random_pattern(rng, 8, max_len=8) for _ in range(3)]
        m = build_matrix(pats, "oss")
        for i, j in itertools.product(range(3), repeat=2):
            assert m.values[i, j] == baselines.oss(pats[i], pats[j])

    def test_symmetric_for_every_measure(self):
        rng = random.Random(32)
        g = example_graph()
        pats = [random_pattern(rng, 12, min_len=4, max_len=4) for _ in range(4)]
        for name in MEASURES:
            m = build_matrix(pats, name, graph=g)
            assert np.array_equal(m.values, m.values.T), name

    def test_precondition_failure_names_the_pair(self):
        pats = [
            make_pattern([(0, 1), (1, 2)]),
            make_pattern([(0, 1), (1, 2)]),
            make_pattern([(0, 1)]),
        ]
        with pytest.raises(DomainError, match=r"0 and 2"):
            build_matrix(pats, "tiakas-time")

    def test_ids_length_checked(self):
        with pytest.raises(DomainError):
            build_matrix([SA, SB], "composite", ids=["only-one"])


class TestKmedoids:
    def test_k_equals_n(self):
        rng = random.Random(41)
        m = random_symmetric_matrix(rng, 6)
        result = kmedoids(m, 6, seed=0)
        assert result.medoids == tuple(range(6))
        assert result.total_cost == 0.0
        assert result.assignment == tuple(range(6))

    def test_k_one_picks_column_sum_minimizer(self):
        rng = random.Random(42)
        for trial in range(20):
            m = random_symmetric_matrix(rng, 7)
            result = kmedoids(m, 1, seed=trial)
            sums = m.values.sum(axis=0)
            assert result.medoids[0] == int(np.argmin(sums))

    def test_k_bounds(self):
        rng = random.Random(43)
        m = random_symmetric_matrix(rng, 4)
        with pytest.raises(DomainError):
            kmedoids(m, 0)
        with pytest.raises(DomainError):
            kmedoids(m, 5)

    def test_deterministic_per_seed(self):
        rng = random.Random(44)
        m = random_symmetric_matrix(rng, 9)
        a = kmedoids(m, 3, seed=5)
        b = kmedoids(m, 3, seed=5)
        assert a == b

    def test_cost_history_non_increasing(self):
        rng = random.Random(45)
        for trial in range(30):
            m = random_symmetric_matrix(rng, 10)
            result = kmedoids(m, 3, seed=trial)
            hist = result.cost_history
            assert all(x > y for x, y in zip(hist, hist[1:]))
            assert hist[-1] == pytest.approx(result.total_cost)

    def test_single_swap_optimality(self):
        rng = random.Random(46)
        for trial in range(30):
            n = rng.randint(4, 8)
            k = rng.randint(1, 3)
            m = random_symmetric_matrix(rng, n)
            result = kmedoids(m, k, seed=trial)

            def cost_of(medoids):
                return sum(
                    min(m.values[i, c] for c in medoids)
                    for i in range(n)
                    if i not in medoids
                )

            base = cost_of(result.medoids)
            for med in result.medoids:
                for cand in range(n):
                    if cand in result.medoids:
                        continue
                    trial_set = [c for c in result.medoids if c != med] + [cand]
                    assert cost_of(trial_set) >= base - 1e-12

    def test_two_separated_groups(self):
        grid = hex_grid(2, 8)
        left = {r * 8 + c for r in range(2) for c in range(4)}
        rng = random.Random(47)

        def walk(region):
            length = rng.randint(6, 10)
            slots = sorted(rng.randint(1, 11) for _ in range(length))
            cell = rng.choice(sorted(region))
            pairs = [(cell, slots[0])]
            for t in slots[1:]:
                options = [cell] + [v for v in grid.neighbors(cell) if v in region]
                cell = rng.choice(options)
                pairs.append((cell, t))
            return make_pattern(pairs)

        pats = [walk(left) for _ in range(4)]
        pats += [walk(set(range(16)) - left) for _ in range(4)]
        m = build_matrix(pats, "composite")
        result = kmedoids(m, 2, seed=0)
        groups = {}
        for i, med in enumerate(result.assignment):
            groups.setdefault(med, set()).add(i)
        assert sorted(groups.values(), key=min) == [{0, 1, 2, 3}, {4, 5, 6, 7}]

    def test_medoids_assigned_to_themselves(self):
        rng = random.Random(48)
        m = random_symmetric_matrix(rng, 8)
        result = kmedoids(m, 3, seed=1)
        for med in result.medoids:
            assert result.assignment[med] == med

    def test_assignment_ties_take_lowest_medoid(self):
        values = np.zeros((3, 3))
        values[0, 1] = values[1, 0] = 0.5
        values[0, 2] = values[2, 0] = 0.5
        values[1, 2] = values[2, 1] = 0.9
        m = DissimilarityMatrix(n=3, values=values, measure_tag="composite")
        result = kmedoids(m, 2, seed=0)
        assert result.assignment[0] == min(result.medoids)


class TestMatrixValidation:
    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            DissimilarityMatrix(n=3, values=np.zeros((2, 2)), measure_tag="oss")

    def test_non_finite_rejected(self):
        bad = np.zeros((2, 2))
        bad[0, 1] = float("nan")
        with pytest.raises(DomainError):
            DissimilarityMatrix(n=2, values=bad, measure_tag="oss")
