"""Exhaustive tree enumeration and direct per-vertex censuses.

This is the ground truth the series engine is checked against: every
tree of a family up to a size budget is generated explicitly (as nested
tuples of children, leaf = empty tuple), each tree is walked once, and
the resulting counts must match the generating-function coefficients
exactly.  Nothing here touches the series machinery except inside
``verify_family``, which performs the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .families import (
    CensusTable,
    FamilyId,
    StatKind,
    census_coefficient,
    counting_coefficient,
    max_stat_value,
    total_leaves,
    total_vertices,
)

Tree = tuple  # a tree is the tuple of its child trees; a leaf is ()

DEFAULT_BUDGETS: "dict[FamilyId, int]" = {
    FamilyId.MOTZKIN: 14,
    FamilyId.ORDERED: 12,
    FamilyId.FULL_BINARY: 12,
    FamilyId.SCHROEDER: 10,
}


class BudgetError(ValueError):
    """Requested size exceeds the enumeration budget."""


@dataclass(frozen=True)
class VertexCensus:
    subtree_vertices: int
    subtree_leaves: int


def enumerate_trees(family: FamilyId, n: int, ceiling: "int | None" = None) -> "tuple[Tree, ...]":
    """All trees of size n (family's unit), each exactly once.

    Children compositions are produced in lexicographic order, so the
    output order is deterministic.  Sizes above the budget are refused.
    """
    ceiling = DEFAULT_BUDGETS[family] if ceiling is None else ceiling
    if n > ceiling:
        raise BudgetError(
            f"size {n} exceeds the {family.value} enumeration budget of {ceiling}"
        )
    if n < 1:
        raise BudgetError(f"no {family.value} trees of size {n}")
    return _trees(family, n)


@lru_cache(maxsize=None)
def _trees(family: FamilyId, n: int) -> "tuple[Tree, ...]":
    if n == 1:
        return ((),)
    out: "list[Tree]" = []
    if family is FamilyId.MOTZKIN:
        for child in _trees(family, n - 1):
            out.append((child,))
        for i in range(1, n - 1):
            for left in _trees(family, i):
                for right in _trees(family, n - 1 - i):
                    out.append((left, right))
    elif family is FamilyId.ORDERED:
        for forest in _forests(family, n - 1):
            out.append(forest)
    elif family is FamilyId.FULL_BINARY:
        for i in range(1, n):
            for left in _trees(family, i):
                for right in _trees(family, n - i):
                    out.append((left, right))
    else:  # Schroeder: at least two children, sizes sum to n (leaves)
        for i in range(1, n):
            for first in _trees(family, i):
                for rest in _forests(family, n - i):
                    out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _forests(family: FamilyId, total: int) -> "tuple[tuple[Tree, ...], ...]":
    """Nonempty ordered forests with sizes summing to ``total``."""
    out: "list[tuple[Tree, ...]]" = []
    for i in range(1, total + 1):
        for first in _trees(family, i):
            if i == total:
                out.append((first,))
            else:
                for rest in _forests(family, total - i):
                    out.append((first,) + rest)
    return tuple(out)


def tree_to_text(tree: Tree) -> str:
    """Canonical balanced-parenthesis serialization, children left to right."""
    return "(" + "".join(tree_to_text(child) for child in tree) + ")"


def census_tree(tree: Tree) -> "tuple[VertexCensus, ...]":
    """Per-vertex (subtree vertices, subtree leaves) in post-order."""
    out: "list[VertexCensus]" = []

    def walk(node: Tree) -> "tuple[int, int]":
        if not node:
            out.append(VertexCensus(1, 1))
            return 1, 1
        vertices, leaves = 1, 0
        for child in node:
            v, l = walk(child)
            vertices += v
            leaves += l
        out.append(VertexCensus(vertices, leaves))
        return vertices, leaves

    walk(tree)
    return tuple(out)


@lru_cache(maxsize=None)
def _aggregate(family: FamilyId, n: int) -> "dict[StatKind, CensusTable]":
    by_vertices: "dict[tuple[int, int], int]" = {}
    by_leaves: "dict[tuple[int, int], int]" = {}

    def walk(node: Tree) -> "tuple[int, int]":
        if not node:
            key = (n, 1)
            by_vertices[key] = by_vertices.get(key, 0) + 1
            by_leaves[key] = by_leaves.get(key, 0) + 1
            return 1, 1
        vertices, leaves = 1, 0
        for child in node:
            v, l = walk(child)
            vertices += v
            leaves += l
        kv = (n, vertices)
        kl = (n, leaves)
        by_vertices[kv] = by_vertices.get(kv, 0) + 1
        by_leaves[kl] = by_leaves.get(kl, 0) + 1
        return vertices, leaves

    for tree in _trees(family, n):
        walk(tree)
    return {
        StatKind.VERTICES: CensusTable(family, StatKind.VERTICES, by_vertices),
        StatKind.LEAVES: CensusTable(family, StatKind.LEAVES, by_leaves),
    }


def aggregate_census(family: FamilyId, n: int, stat: StatKind, ceiling: "int | None" = None) -> CensusTable:
    """Brute-force vertex counts by statistic value over all size-n trees."""
    ceiling = DEFAULT_BUDGETS[family] if ceiling is None else ceiling
    if n > ceiling:
        raise BudgetError(
            f"size {n} exceeds the {family.value} enumeration budget of {ceiling}"
        )
    if n < 1:
        raise BudgetError(f"no {family.value} trees of size {n}")
    return _aggregate(family, n)[stat]


@dataclass(frozen=True)
class Mismatch:
    family: FamilyId
    stat: "StatKind | None"
    n: int
    k: "int | None"
    quantity: str
    expected: int  # brute-force value
    actual: int  # series value


@dataclass(frozen=True)
class VerificationReport:
    family: FamilyId
    n_max: int
    checks: int
    mismatches: "tuple[Mismatch, ...]"

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_family(family: FamilyId, n_max: "int | None" = None) -> VerificationReport:
    """Compare every census coefficient, tree count and total against
    brute force for all sizes up to n_max.  Mismatches are collected in
    the report rather than raised."""
    n_max = DEFAULT_BUDGETS[family] if n_max is None else n_max
    if n_max > DEFAULT_BUDGETS[family]:
        raise BudgetError(
            f"n_max {n_max} exceeds the {family.value} budget of {DEFAULT_BUDGETS[family]}"
        )
    checks = 0
    mismatches: "list[Mismatch]" = []

    def record(stat, n, k, quantity, expected, actual):
        nonlocal checks
        checks += 1
        if expected != actual:
            mismatches.append(Mismatch(family, stat, n, k, quantity, expected, actual))

    for n in range(1, n_max + 1):
        trees = enumerate_trees(family, n, ceiling=n_max)
        record(None, n, None, "tree count", len(trees), counting_coefficient(family, n))
        vertex_total = total_vertices(family, n)
        vertex_table = aggregate_census(family, n, StatKind.VERTICES, ceiling=n_max)
        # every leaf, and only a leaf, has a one-vertex subtree
        record(None, n, None, "leaf total", vertex_table.count(n, 1), total_leaves(family, n))
        for stat in StatKind:
            table = aggregate_census(family, n, stat, ceiling=n_max)
            top = max_stat_value(family, stat, n)
            running = 0
            for k in range(1, top + 1):
                expected = table.count(n, k)
                running += expected
                record(stat, n, k, "census", expected, census_coefficient(family, stat, k, n))
            record(stat, n, None, "census partition", running, vertex_total)
    return VerificationReport(family, n_max, checks, tuple(mismatches))
