"""Exhaustive enumeration: generation, censuses, and series cross-checks."""

import pytest

from treecensus import (
    BudgetError,
    FamilyId,
    StatKind,
    VertexCensus,
    aggregate_census,
    census_tree,
    counting_coefficient,
    enumerate_trees,
    total_vertices,
    tree_to_text,
    verify_family,
)

LEAF = ()
CHAIN3 = (((),),)  # three-vertex unary chain
CHERRY = ((), ())  # root with two leaf children


def test_enumeration_counts_small():
    assert len(enumerate_trees(FamilyId.MOTZKIN, 3)) == 2
    assert len(enumerate_trees(FamilyId.SCHROEDER, 3)) == 3
    assert len(enumerate_trees(FamilyId.FULL_BINARY, 1)) == 1
    assert len(enumerate_trees(FamilyId.ORDERED, 4)) == 5


@pytest.mark.parametrize("family", list(FamilyId))
def test_enumeration_matches_counting_series(family):
    for n in range(1, 8):
        assert len(enumerate_trees(family, n)) == counting_coefficient(family, n)


@pytest.mark.parametrize("family", list(FamilyId))
def test_no_duplicate_trees(family):
    for n in range(1, 8):
        trees = enumerate_trees(family, n)
        serialized = [tree_to_text(t) for t in trees]
        assert len(set(serialized)) == len(serialized)


def test_arity_constraints_hold():
    def arities(tree):
        yield len(tree)
        for child in tree:
            yield from arities(child)

    for tree in enumerate_trees(FamilyId.MOTZKIN, 6):
        assert all(a <= 2 for a in arities(tree))
    for tree in enumerate_trees(FamilyId.FULL_BINARY, 5):
        assert all(a in (0, 2) for a in arities(tree))
    for tree in enumerate_trees(FamilyId.SCHROEDER, 5):
        assert all(a == 0 or a >= 2 for a in arities(tree))


def test_leaf_counted_sizes():
    def leaves(tree):
        return 1 if not tree else sum(leaves(c) for c in tree)

    for n in range(1, 7):
        for tree in enumerate_trees(FamilyId.SCHROEDER, n):
            assert leaves(tree) == n
        for tree in enumerate_trees(FamilyId.FULL_BINARY, n):
            assert leaves(tree) == n


def test_budget_refusal_mentions_budget():
    with pytest.raises(BudgetError, match="budget of 14"):
        enumerate_trees(FamilyId.MOTZKIN, 15)
    with pytest.raises(BudgetError):
        enumerate_trees(FamilyId.SCHROEDER, 11)
    with pytest.raises(BudgetError):
        aggregate_census(FamilyId.ORDERED, 13, StatKind.VERTICES)


def test_census_tree_examples():
    assert census_tree(LEAF) == (VertexCensus(1, 1),)
    cherry = census_tree(CHERRY)
    assert cherry[-1] == VertexCensus(3, 2)
    assert sorted((c.subtree_vertices, c.subtree_leaves) for c in cherry) == [
        (1, 1),
        (1, 1),
        (3, 2),
    ]
    chain = census_tree(CHAIN3)
    assert sorted((c.subtree_vertices, c.subtree_leaves) for c in chain) == [
        (1, 1),
        (2, 1),
        (3, 1),
    ]


def test_census_self_consistency():
    for tree in enumerate_trees(FamilyId.SCHROEDER, 5):
        censuses = census_tree(tree)
        root = censuses[-1]
        assert root.subtree_vertices == len(censuses)
        leaf_count = sum(1 for c in censuses if c.subtree_vertices == 1)
        assert leaf_count == root.subtree_leaves
        for c in censuses:
            assert 1 <= c.subtree_leaves <= c.subtree_vertices


def test_aggregate_census_examples():
    motzkin = aggregate_census(FamilyId.MOTZKIN, 3, StatKind.VERTICES)
    assert motzkin.row(3) == {1: 3, 2: 1, 3: 2}
    assert sum(motzkin.row(3).values()) == 3 * counting_coefficient(FamilyId.MOTZKIN, 3)
    binary = aggregate_census(FamilyId.FULL_BINARY, 3, StatKind.LEAVES)
    assert binary.row(3) == {1: 6, 2: 2, 3: 2}
    for n in range(1, 7):
        ordered = aggregate_census(FamilyId.ORDERED, n, StatKind.VERTICES)
        assert ordered.count(n, n) == counting_coefficient(FamilyId.ORDERED, n)


def test_aggregate_partition_matches_totals():
    for family in FamilyId:
        for stat in StatKind:
            for n in range(1, 7):
                table = aggregate_census(family, n, stat)
                assert sum(table.row(n).values()) == total_vertices(family, n)


def test_serialization_round_shape():
    assert tree_to_text(LEAF) == "()"
    assert tree_to_text(CHERRY) == "(()())"
    assert tree_to_text(CHAIN3) == "((()))"


def test_verify_family_passes():
    assert verify_family(FamilyId.MOTZKIN, 10).passed
    assert verify_family(FamilyId.SCHROEDER, 8).passed


def test_verify_family_rejects_overbudget():
    with pytest.raises(BudgetError):
        verify_family(FamilyId.ORDERED, 40)


def test_full_binary_even_vertex_rows_are_empty():
    # no subtree of a full binary tree has an even vertex count
    table = aggregate_census(FamilyId.FULL_BINARY, 6, StatKind.VERTICES)
    for (n, k), count in table.entries.items():
        assert k % 2 == 1 and count > 0


def _leaf_vertex_profile(tree):
    if not tree:
        return 1, 1
    vertices, leaves = 1, 0
    for child in tree:
        v, l = _leaf_vertex_profile(child)
        vertices += v
        leaves += l
    return vertices, leaves


@pytest.mark.parametrize("family", list(FamilyId))
def test_bivariate_matches_enumeration(family):
    """Coefficient (n, j) of the bivariate series counts trees directly."""
    from collections import Counter

    from treecensus import bivariate_series, descriptor, max_stat_value

    y_stat = descriptor(family).bivariate_y
    for n in range(1, 7):
        profile = Counter()
        for tree in enumerate_trees(family, n):
            vertices, leaves = _leaf_vertex_profile(tree)
            profile[leaves if y_stat is StatKind.LEAVES else vertices] += 1
        ny = max_stat_value(family, y_stat, n)
        bv = bivariate_series(family, n, ny)
        for j in range(1, ny + 1):
            assert bv.coefficient(n, j) == profile.get(j, 0), (family, n, j)
