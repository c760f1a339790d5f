"""Counting series, functional equations, multipliers and censuses."""

from fractions import Fraction

import pytest

from treecensus import (
    DomainError,
    FamilyId,
    PowerSeries,
    StatKind,
    census_coefficient,
    census_series,
    census_table_from_series,
    counting_coefficient,
    counting_series,
    finite_probability,
    fixed_point_solve,
    max_stat_value,
    multiplier_gf,
    root_stat_gf,
    total_leaves,
    total_vertices,
)

COUNTS = {
    FamilyId.MOTZKIN: [1, 1, 2, 4, 9, 21, 51],
    FamilyId.ORDERED: [1, 1, 2, 5, 14, 42, 132],
    FamilyId.FULL_BINARY: [1, 1, 2, 5, 14, 42, 132],
    FamilyId.SCHROEDER: [1, 1, 3, 11, 45, 197, 903],
}


@pytest.mark.parametrize("family", list(FamilyId))
def test_counting_series_known_values(family):
    series = counting_series(family, 7)
    assert series.coefficient(0) == 0
    assert [series.coefficient(n) for n in range(1, 8)] == COUNTS[family]


def test_counting_satisfies_functional_equation():
    # residual of M = x + xM + xM^2 vanishes, including the x^6 cross term
    m = counting_series(FamilyId.MOTZKIN, 12)
    x = PowerSeries.monomial(1, 1, 12)
    rhs = x + x.mul(m, 12) + x.mul(m.mul(m, 12), 12)
    assert rhs == m


@pytest.mark.parametrize("family", list(FamilyId))
def test_fixed_point_agrees_with_closed_form(family):
    assert fixed_point_solve(family, 24) == counting_series(family, 24)


def test_fixed_point_examples():
    ordered = fixed_point_solve(FamilyId.ORDERED, 6)
    assert list(ordered.coefficients) == [0, 1, 1, 2, 5, 14, 42]
    motzkin = fixed_point_solve(FamilyId.MOTZKIN, 3)
    assert list(motzkin.coefficients) == [0, 1, 1, 2]
    for family in FamilyId:
        assert fixed_point_solve(family, 5).coefficient(0) == 0


def test_multiplier_values():
    motzkin = multiplier_gf(FamilyId.MOTZKIN, 3)
    assert [int(c) for c in motzkin.coefficients] == [1, 1, 3, 7]
    schroeder = multiplier_gf(FamilyId.SCHROEDER, 4)
    assert [int(c) for c in schroeder.coefficients] == [1, 2, 9, 44, 225]
    binary = multiplier_gf(FamilyId.FULL_BINARY, 3)
    assert [int(c) for c in binary.coefficients] == [1, 2, 6, 20]


def test_multiplier_defining_identities():
    n = 40
    root = PowerSeries.from_polynomial([1, -4], n).sqrt()
    assert multiplier_gf(FamilyId.FULL_BINARY, n).mul(root, n) == PowerSeries.one(n)
    # x * multiplier is the Schroeder leaf-total series
    lx = PowerSeries.monomial(1, 1, n).mul(multiplier_gf(FamilyId.SCHROEDER, n), n)
    assert [int(lx.coefficient(k)) for k in range(1, 6)] == [1, 2, 9, 44, 225]
    # Motzkin multiplier is the inverse square root of 1 - 2x - 3x^2
    square = multiplier_gf(FamilyId.MOTZKIN, n).mul(multiplier_gf(FamilyId.MOTZKIN, n), n)
    assert square.mul(PowerSeries.from_polynomial([1, -2, -3], n), n) == PowerSeries.one(n)


def test_root_stat_gf_monomials():
    assert str(root_stat_gf(FamilyId.MOTZKIN, StatKind.VERTICES, 5)) == "9*x^5"
    assert str(root_stat_gf(FamilyId.ORDERED, StatKind.VERTICES, 7)) == "132*x^7"
    assert str(root_stat_gf(FamilyId.SCHROEDER, StatKind.LEAVES, 6)) == "197*x^6"
    assert str(root_stat_gf(FamilyId.FULL_BINARY, StatKind.LEAVES, 4)) == "5*x^4"


def test_root_stat_gf_full_binary_vertices():
    assert root_stat_gf(FamilyId.FULL_BINARY, StatKind.VERTICES, 2).is_zero()
    assert root_stat_gf(FamilyId.FULL_BINARY, StatKind.VERTICES, 4).is_zero()
    assert str(root_stat_gf(FamilyId.FULL_BINARY, StatKind.VERTICES, 7)) == "5*x^4"


def test_root_stat_gf_extractions():
    assert str(root_stat_gf(FamilyId.MOTZKIN, StatKind.LEAVES, 6)) == "42*x^11/(1-x)^11"
    assert str(root_stat_gf(FamilyId.SCHROEDER, StatKind.VERTICES, 7)) == "5*x^4 + 9*x^5 + x^6"
    assert root_stat_gf(FamilyId.SCHROEDER, StatKind.VERTICES, 2).is_zero()
    assert str(root_stat_gf(FamilyId.ORDERED, StatKind.LEAVES, 1)) == "x/(1-x)"


def test_root_stat_gf_rejects_bad_k():
    with pytest.raises(DomainError):
        root_stat_gf(FamilyId.MOTZKIN, StatKind.VERTICES, 0)


def test_census_series_examples():
    leaves = census_series(FamilyId.MOTZKIN, StatKind.VERTICES, 1, 4)
    assert [int(leaves.coefficient(n)) for n in range(1, 5)] == [1, 1, 3, 7]
    for n in range(1, 7):
        roots_only = census_series(FamilyId.ORDERED, StatKind.VERTICES, n, n)
        assert roots_only.coefficient(n) == counting_coefficient(FamilyId.ORDERED, n)
    schroeder = census_series(FamilyId.SCHROEDER, StatKind.LEAVES, 1, 3)
    assert schroeder.coefficient(3) == 9


def test_census_coefficient_matches_series():
    for family in FamilyId:
        for stat in StatKind:
            series = census_series(family, stat, 2, 12)
            for n in range(13):
                assert census_coefficient(family, stat, 2, n) == series.coefficient(n)


def test_totals():
    assert total_vertices(FamilyId.ORDERED, 3) == 6
    assert total_vertices(FamilyId.FULL_BINARY, 4) == 35
    assert total_vertices(FamilyId.SCHROEDER, 3) == 14
    assert total_vertices(FamilyId.MOTZKIN, 5) == 45
    assert total_leaves(FamilyId.SCHROEDER, 5) == 225
    assert total_leaves(FamilyId.ORDERED, 2) == 1
    assert total_leaves(FamilyId.MOTZKIN, 3) == 3
    assert total_leaves(FamilyId.FULL_BINARY, 4) == 20


def test_vertex_totals_equal_size_weighted_counts():
    for n in range(1, 9):
        assert total_vertices(FamilyId.MOTZKIN, n) == n * counting_coefficient(FamilyId.MOTZKIN, n)
        assert (
            total_vertices(FamilyId.FULL_BINARY, n)
            == (2 * n - 1) * counting_coefficient(FamilyId.FULL_BINARY, n)
        )


def test_total_leaves_agrees_with_leaf_census():
    # vertices with a one-vertex subtree are exactly the leaves
    for family in FamilyId:
        for n in range(1, 8):
            assert total_leaves(family, n) == census_coefficient(
                family, StatKind.VERTICES, 1, n
            )


def test_finite_probability_examples():
    for family in FamilyId:
        assert finite_probability(family, StatKind.VERTICES, 1, 1) == 1
    for n in range(1, 10):
        assert finite_probability(FamilyId.MOTZKIN, StatKind.VERTICES, n, n) == Fraction(1, n)
    # only the root of the single 2-vertex tree qualifies
    assert finite_probability(FamilyId.ORDERED, StatKind.VERTICES, 2, 2) == Fraction(1, 2)


def test_finite_probability_approaches_two_thirds():
    values = [
        finite_probability(FamilyId.ORDERED, StatKind.LEAVES, 1, n) for n in (20, 40, 80)
    ]
    gaps = [abs(v - Fraction(2, 3)) for v in values]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < Fraction(1, 100)


def test_domain_errors():
    with pytest.raises(DomainError):
        finite_probability(FamilyId.MOTZKIN, StatKind.VERTICES, 1, 0)
    with pytest.raises(DomainError):
        total_vertices(FamilyId.SCHROEDER, 0)
    with pytest.raises(DomainError):
        census_series(FamilyId.MOTZKIN, StatKind.LEAVES, 0, 5)


def test_max_stat_value():
    assert max_stat_value(FamilyId.MOTZKIN, StatKind.LEAVES, 14) == 7
    assert max_stat_value(FamilyId.ORDERED, StatKind.LEAVES, 12) == 11
    assert max_stat_value(FamilyId.SCHROEDER, StatKind.VERTICES, 10) == 19
    assert max_stat_value(FamilyId.FULL_BINARY, StatKind.VERTICES, 12) == 23
    assert max_stat_value(FamilyId.ORDERED, StatKind.VERTICES, 12) == 12


def test_census_table_partition():
    for family in FamilyId:
        for stat in StatKind:
            table = census_table_from_series(family, stat, 7)
            for n in range(1, 8):
                assert sum(table.row(n).values()) == total_vertices(family, n)


def test_census_table_lookup():
    table = census_table_from_series(FamilyId.MOTZKIN, StatKind.VERTICES, 3)
    assert table.count(3, 1) == 3
    assert table.count(3, 2) == 1
    assert table.count(3, 3) == 2
    assert table.count(3, 9) == 0


def test_statistic_equivalence_full_binary():
    for k in range(1, 9):
        assert census_series(FamilyId.FULL_BINARY, StatKind.VERTICES, 2 * k - 1, 30) == (
            census_series(FamilyId.FULL_BINARY, StatKind.LEAVES, k, 30)
        )
        assert census_series(FamilyId.FULL_BINARY, StatKind.VERTICES, 2 * k, 30).is_zero()
