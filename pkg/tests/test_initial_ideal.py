"""Critical-set construction, minimal generators, and quotient counts."""

import itertools

import pytest

from acigb.hilbert import hf, hs_complete_intersection, truncate_lefschetz
from acigb.initial_ideal import (
    CriticalSets,
    MonomialIdeal,
    check_revlex_segment,
    check_strongly_m_stable,
    critical_sets,
    critical_sets_formula,
    critical_sets_paths,
    enumerate_m_free,
    hf_quotient,
    minimal_generators,
    pure_power_removed,
)

GOLDEN = (4, (3, 2, 2, 3), 2)


def small_grid():
    for n in range(1, 4):
        for m in itertools.product((2, 3, 4), repeat=n):
            for k in range(1, 5):
                yield n, m, k
    for m in [(3, 2, 2, 3), (4, 2, 5), (2, 3, 2, 5), (2, 2, 2, 4, 5)]:
        for k in range(1, 4):
            yield len(m), m, k


class TestEnumeration:
    def test_socle_monomial_unique(self):
        assert enumerate_m_free(4, (3, 2, 2, 3), 6) == [(2, 1, 1, 2)]

    def test_count_matches_series(self):
        n, m = 4, (3, 2, 2, 3)
        series = hs_complete_intersection(m)
        for d in range(len(series) + 1):
            assert len(enumerate_m_free(n, m, d)) == hf(series, d)

    def test_sorted_descending(self):
        out = enumerate_m_free(3, (3, 3, 3), 2)
        assert out[0] == (2, 0, 0)
        assert out[-1] == (0, 0, 2)

    def test_degree_zero(self):
        assert enumerate_m_free(3, (2, 2, 2), 0) == [(0, 0, 0)]
        assert enumerate_m_free(0, (), 0) == [()]


class TestMonomialIdeal:
    def test_minimalize(self):
        ideal = MonomialIdeal.from_generators(
            2, [(2, 0), (2, 1), (0, 3), (1, 2)]
        )
        assert set(ideal.min_gens) == {(2, 0), (0, 3), (1, 2)}

    def test_antichain_enforced(self):
        with pytest.raises(ValueError):
            MonomialIdeal(2, ((1, 0), (1, 1)))

    def test_contains(self):
        ideal = MonomialIdeal.from_generators(2, [(2, 0), (1, 1)])
        assert ideal.contains((2, 1))
        assert not ideal.contains((1, 0))


class TestCriticalSets:
    def test_golden_instance(self):
        crit = critical_sets(*GOLDEN)
        assert crit.by_index[0] == ((2, 0, 0, 0),)
        assert crit.by_index[1] == ()
        assert crit.by_index[2] == ((1, 1, 1, 0),)
        assert set(crit.by_index[3]) == {
            (0, 1, 1, 2),
            (1, 0, 1, 2),
            (1, 1, 0, 2),
        }
        assert len(crit.union()) == 5

    def test_golden_minimal_generators(self):
        ideal = minimal_generators(*GOLDEN)
        assert set(ideal.min_gens) == {
            (0, 2, 0, 0),
            (0, 0, 2, 0),
            (0, 0, 0, 3),
            (2, 0, 0, 0),
            (1, 1, 1, 0),
            (0, 1, 1, 2),
            (1, 0, 1, 2),
            (1, 1, 0, 2),
        }

    def test_removal_rule_golden(self):
        n, m, k = GOLDEN
        assert pure_power_removed(m, k, 1)
        assert not any(pure_power_removed(m, k, j) for j in (2, 3, 4))

    def test_mixed_small_instance(self):
        # power sums with two square generators and one linear-power cube
        ideal = minimal_generators(3, (2, 2, 2), 1)
        assert set(ideal.min_gens) == {
            (1, 0, 0),
            (0, 2, 0),
            (0, 0, 2),
            (0, 1, 1),
        }

    def test_two_variables_empty_level(self):
        crit = critical_sets(2, (3, 3), 1)
        assert crit.by_index[0] == ((1, 0),)
        assert crit.by_index[1] == ()

    def test_three_routes_agree(self):
        for n, m, k in small_grid():
            a = critical_sets(n, m, k).by_index
            b = critical_sets_formula(n, m, k).by_index
            c = critical_sets_paths(n, m, k).by_index
            assert a == b == c, (n, m, k)

    def test_degenerate_large_power(self):
        # once k reaches past the socle degree nothing is critical
        crit = critical_sets(2, (2, 2), 4)
        assert crit.union() == ()
        ideal = minimal_generators(2, (2, 2), 4)
        assert set(ideal.min_gens) == {(2, 0), (0, 2)}

    def test_socle_power_single_critical(self):
        # k equal to the socle degree leaves exactly the socle monomial
        crit = critical_sets(2, (2, 2), 2)
        assert crit.union() == ((1, 1),)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            critical_sets(2, (2, 1), 1)
        with pytest.raises(ValueError):
            critical_sets(2, (2, 2), 0)
        with pytest.raises(ValueError):
            critical_sets(3, (2, 2), 1)


class TestQuotientCounts:
    def test_golden_values(self):
        n, m, k = GOLDEN
        ideal = minimal_generators(n, m, k)
        assert hf_quotient(n, m, k, 2, ideal) == 7
        assert hf_quotient(n, m, k, 4, ideal) == 0

    def test_matches_truncation_on_grid(self):
        for n, m, k in small_grid():
            ideal = minimal_generators(n, m, k)
            series = truncate_lefschetz(hs_complete_intersection(m), k)
            top = sum(mi - 1 for mi in m) + 1
            for d in range(top + 1):
                assert hf_quotient(n, m, k, d, ideal) == hf(series, d), (n, m, k, d)


class TestStructure:
    def test_strongly_stable_on_grid(self):
        for n, m, k in small_grid():
            assert check_strongly_m_stable(n, m, k), (n, m, k)

    def test_revlex_segment_on_grid(self):
        for n, m, k in small_grid():
            assert check_revlex_segment(n, m, k), (n, m, k)

    def test_revlex_segment_detects_violation(self):
        # x2^2 alone is not a revlex segment in two variables: x1x2 and x1^2
        # sit above it at degree 2 but are outside the ideal
        ideal = MonomialIdeal(2, ((0, 2),))
        assert not check_revlex_segment(2, (3, 3), 1, ideal)
