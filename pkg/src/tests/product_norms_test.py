from fractions import Fraction

import numpy as np
import pytest

import src.products.entry_range as entry_range
from src.core import Matrix, MatrixSet, SetConstants
from src.data.generators import jordan_block, random_connected_set, random_matrix_set, scaled_pair
from src.exceptions import BudgetExceededError, EntryRangeViolationError, OutOfRangeError
from src.products import (entry_range_check, enumerate_frontiers, frontier_at, max_component_norm, norm_table,
                          prune_dominated)
from src.validation.properties import (check_entry_range, check_pruning_equivalence, check_submultiplicativity,
                                       check_supermultiplicativity)


def test_jordan_norms_grow_linearly():
    t = norm_table(jordan_block(), 12)

    assert [t.norm(n) for n in range(1, 13)] == list(range(1, 13))
    assert all(max_component_norm(t, n) == 1 for n in range(1, 13))


def test_scaled_pair_norms():
    t = norm_table(scaled_pair(10), 10)

    assert [t.norm(n) for n in range(1, 11)] == [5 * 2 ** n for n in range(1, 11)]


def test_frontier_of_singleton_is_the_power():
    frontier = frontier_at(jordan_block(), 5, prune=False)

    assert frontier.size == 1
    assert frontier.products[0].entries == ((1, 5), (0, 1))


def test_frontier_deduplicates():
    s = MatrixSet.of([[1, 0], [0, 1]], [[1, 0], [0, 1]])

    assert frontier_at(s, 4, prune=False).size == 1


def test_prune_dominated():
    small = Matrix.from_rows([[1, 0], [0, 1]])
    large = Matrix.from_rows([[2, 0], [0, 1]])
    other = Matrix.from_rows([[0, 3], [0, 0]])

    assert prune_dominated([small, large, other]) == [large, other]


def test_zero_set_norms():
    t = norm_table(MatrixSet.of([[0, 0], [0, 0]]), 4)

    assert [t.norm(n) for n in range(1, 5)] == [0, 0, 0, 0]


def test_nilpotent_pair_components():
    s = MatrixSet.of([[0, 1], [0, 0]], [[0, 0], [1, 0]])
    t = norm_table(s, 6)

    assert t.condensation.is_strongly_connected
    assert all(t.norm(n) == 1 for n in range(1, 7))


def test_norm_table_range():
    t = norm_table(jordan_block(), 3)

    with pytest.raises(OutOfRangeError):
        t.norm(4)
    with pytest.raises(OutOfRangeError):
        enumerate_frontiers(jordan_block(), 0, True, 100)


def test_budget_exceeded_carries_partial_table():
    s = MatrixSet.of([[1, 2], [0, 1]], [[1, 0], [3, 1]], [[0, 1], [1, 1]])

    with pytest.raises(BudgetExceededError) as error:
        norm_table(s, 8, pruning=False, budget=20)

    assert error.value.exit_code == 3
    assert error.value.length_reached == error.value.partial.n_max
    assert 1 <= error.value.length_reached < 8
    assert error.value.partial.norm(1) == 3


def test_entry_range_check_jordan():
    report = entry_range_check(jordan_block(), 4)

    assert report.lower_limit == 1
    assert report.upper_limit == 8
    assert report.smallest == 1 and report.largest == 4


def test_entry_range_check_zero_set():
    assert entry_range_check(MatrixSet.of([[0]]), 3).positive_entries == 0


def test_entry_range_violation_is_raised_for_inconsistent_constants(monkeypatch):
    monkeypatch.setattr(entry_range, "set_constants", lambda s: SetConstants(U=Fraction(1), V=Fraction(2), K=1))
    with pytest.raises(EntryRangeViolationError):
        entry_range.entry_range_check(jordan_block(), 2)


@pytest.mark.parametrize("seed", range(20))
def test_submultiplicativity(seed):
    rng = np.random.default_rng(seed)
    s = random_matrix_set(rng, int(rng.integers(1, 4)), int(rng.integers(1, 3)))

    report = check_submultiplicativity(norm_table(s, 8), s.dim)
    assert report.passed, report.violations


@pytest.mark.parametrize("seed", range(20))
def test_supermultiplicativity_and_entry_range(seed):
    rng = np.random.default_rng(1000 + seed)
    s = random_connected_set(rng, int(rng.integers(1, 4)), 2)

    report = check_supermultiplicativity(s, norm_table(s, 8))
    assert report.passed, report.violations
    report = check_entry_range(s, 6)
    assert report.passed, report.violations


@pytest.mark.parametrize("seed", range(20))
def test_pruning_never_changes_the_table(seed):
    rng = np.random.default_rng(2000 + seed)
    s = random_matrix_set(rng, int(rng.integers(2, 4)), 2)

    report = check_pruning_equivalence(s, 8)
    assert report.passed, report.violations


def test_broken_pruner_is_detected():
    s = MatrixSet.of([[1, 0], [0, 0]], [[0, 0], [0, 2]], [[0, 1], [1, 0]])

    report = check_pruning_equivalence(s, 4, pruner=lambda products: list(products[:1]))
    assert not report.passed
