"""The four planar tree families and their generating functions.

Each family carries a counting series (closed form and functional
equation), a bivariate refinement tracking vertices and leaves at once,
and a "multiplier" transfer series.  The census series for a subtree
statistic factors as

    census = (root-statistic GF) * multiplier,

where the root-statistic GF counts trees whose root has the given
statistic value and the multiplier accounts for re-attaching the
marked subtree in all possible ways.  The decomposition never inspects
which statistic is being counted, so one multiplier per family serves
both.

All series work is exact over Q.  Heavy intermediates are cached at
bucketed truncation orders and sliced down, so repeated queries at
nearby orders share one computation.  Everything here is pure; caches
only memoise deterministic values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .bivariate import BivariateSeries, _ypoly_mul
from .quadratic import QuadraticNumber
from .ratfunc import FIT_MARGIN, FitError, RationalFunction, fit_rational
from .series import PowerSeries

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DomainError(ValueError):
    """Query outside a family's domain (size below minimum, bad statistic)."""


class SolverError(RuntimeError):
    """A functional equation failed to stabilise (mis-encoded equation)."""


class FamilyId(str, Enum):
    MOTZKIN = "motzkin"
    ORDERED = "ordered"
    FULL_BINARY = "fullbinary"
    SCHROEDER = "schroeder"


class StatKind(str, Enum):
    VERTICES = "vertices"
    LEAVES = "leaves"


@dataclass(frozen=True)
class FamilyDescriptor:
    """Constants attached to one tree family.

    ``size_unit`` is what the counting variable x enumerates;
    ``bivariate_y`` is the statistic tracked by y in the bivariate
    refinement (always the other one).  ``singularity`` is the radius
    of convergence of the family's square-root factor and
    ``normalization`` the exact constant K with
    limit probability = (root GF at singularity) * K.
    """

    id: FamilyId
    label: str
    size_unit: StatKind
    radicand: int
    singularity: QuadraticNumber
    normalization: QuadraticNumber
    arity_rule: str

    @property
    def bivariate_y(self) -> StatKind:
        return StatKind.LEAVES if self.size_unit is StatKind.VERTICES else StatKind.VERTICES


FAMILIES: "dict[FamilyId, FamilyDescriptor]" = {
    FamilyId.MOTZKIN: FamilyDescriptor(
        id=FamilyId.MOTZKIN,
        label="Motzkin (unary-binary) trees",
        size_unit=StatKind.VERTICES,
        radicand=2,
        singularity=QuadraticNumber(Fraction(1, 3)),
        normalization=QuadraticNumber(1),
        arity_rule="internal vertices have 1 or 2 children",
    ),
    FamilyId.ORDERED: FamilyDescriptor(
        id=FamilyId.ORDERED,
        label="ordered (plane) trees",
        size_unit=StatKind.VERTICES,
        radicand=2,
        singularity=QuadraticNumber(Fraction(1, 4)),
        normalization=QuadraticNumber(2),
        arity_rule="no arity restriction",
    ),
    FamilyId.FULL_BINARY: FamilyDescriptor(
        id=FamilyId.FULL_BINARY,
        label="full binary trees",
        size_unit=StatKind.LEAVES,
        radicand=2,
        singularity=QuadraticNumber(Fraction(1, 4)),
        normalization=QuadraticNumber(2),
        arity_rule="internal vertices have exactly 2 children",
    ),
    # The leaf fraction of a size-n tree lies in (1/2, 1], which pins the
    # normalization: mean vertices per leaf tend to 1 + sqrt(2)/2, hence
    # K = 2 + sqrt(2).  The Richardson oracle in the asymptotics tests
    # rederives this constant from finite-size censuses.
    FamilyId.SCHROEDER: FamilyDescriptor(
        id=FamilyId.SCHROEDER,
        label="Schroeder trees",
        size_unit=StatKind.LEAVES,
        radicand=2,
        singularity=QuadraticNumber(3, -2, 2),
        normalization=QuadraticNumber(2, 1, 2),
        arity_rule="internal vertices have at least 2 children",
    ),
}


def descriptor(family: FamilyId) -> FamilyDescriptor:
    return FAMILIES[family]


# -- truncation buckets --------------------------------------------------------


def _series_bucket(order: int) -> int:
    if order <= 64:
        return 64
    if order <= 640:
        return 640
    return 640 * ((order + 639) // 640)


def _bucket_x(order: int) -> int:
    return 64 if order <= 64 else 32 * ((order + 31) // 32)


def _bucket_y(order: int) -> int:
    return 24 if order <= 24 else 8 * ((order + 7) // 8)


# -- counting series -----------------------------------------------------------


@lru_cache(maxsize=None)
def _counting_bucketed(family: FamilyId, order: int) -> PowerSeries:
    if family is FamilyId.MOTZKIN:
        radicand = PowerSeries.from_polynomial([1, -2, -3], order + 1)
        numerator = (
            PowerSeries.one(order + 1)
            - PowerSeries.monomial(1, 1, order + 1)
            - radicand.sqrt()
        )
        return numerator.div(PowerSeries.monomial(2, 1, order + 1))
    if family in (FamilyId.ORDERED, FamilyId.FULL_BINARY):
        root = PowerSeries.from_polynomial([1, -4], order).sqrt()
        return (PowerSeries.one(order) - root).scale(Fraction(1, 2))
    root = PowerSeries.from_polynomial([1, -6, 1], order).sqrt()
    denominator = PowerSeries.from_polynomial([1, 1], order) + root
    return PowerSeries.monomial(2, 1, order).div(denominator)


def counting_series(family: FamilyId, order: int) -> PowerSeries:
    """Truncated counting generating function, from the closed form."""
    if order < 1:
        raise DomainError("order must be at least 1")
    return _counting_bucketed(family, _series_bucket(order)).truncate(order)


def counting_coefficient(family: FamilyId, n: int) -> int:
    c = counting_series(family, max(n, 1)).coefficient(n)
    if c.denominator != 1:
        raise SolverError(f"non-integer count {c} for {family} at {n}")
    return c.numerator


# -- functional equations --------------------------------------------------------


def _phi(family: FamilyId, s: PowerSeries, order: int) -> PowerSeries:
    x = PowerSeries.monomial(1, 1, order)
    if family is FamilyId.MOTZKIN:
        body = PowerSeries.one(order) + s + s.mul(s, order)
        return body.shift(1).truncate(order)
    if family is FamilyId.ORDERED:
        return x.div(PowerSeries.one(order) - s, order)
    if family is FamilyId.FULL_BINARY:
        return x + s.mul(s, order)
    square = s.mul(s, order)
    return x + square.div(PowerSeries.one(order) - s, order)


@lru_cache(maxsize=None)
def fixed_point_solve(family: FamilyId, order: int) -> PowerSeries:
    """Solve the family's functional equation by fixed-point iteration.

    Sweep m of the iteration pins the coefficient of x**m, so at most
    order+1 sweeps are needed; a final full application must reproduce
    the iterate exactly, otherwise the equation was mis-encoded and
    ``SolverError`` is raised.  Returns the unique solution with zero
    constant term.
    """
    if order < 1:
        raise DomainError("order must be at least 1")
    s = PowerSeries.zero(0)
    for sweep in range(1, order + 1):
        s = _phi(family, s.extended(sweep), sweep)
    if _phi(family, s, order) != s:
        raise SolverError(f"fixed point for {family} did not stabilise at order {order}")
    if s.coefficient(0) != 0:
        raise SolverError(f"fixed point for {family} has nonzero constant term")
    return s


# -- bivariate refinement ----------------------------------------------------------


def _yp_shift(poly: "list[Fraction]", ny: int) -> "list[Fraction]":
    """Multiply a y-polynomial by y, truncating at ny."""
    return ([_ZERO] + poly)[: ny + 1]


@lru_cache(maxsize=None)
def _bivariate_bucketed(family: FamilyId, order_x: int, order_y: int) -> BivariateSeries:
    """x-adic fixed-point solution of the bivariate functional equation.

    Each sweep finalises one more power of x, reusing the stabilised
    lower slices, which is the same iteration as ``fixed_point_solve``
    with the redundant re-computation of settled slices skipped.
    """
    ny = order_y
    y = [_ZERO, _ONE][: ny + 1]

    def prod(a, b):
        return _ypoly_mul(a, b, ny)

    def padd(a, b):
        n = max(len(a), len(b))
        return [
            (a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO)
            for i in range(n)
        ]

    if family is FamilyId.MOTZKIN:
        # M = x*y + x*M + x*M^2
        m: "list[list[Fraction]]" = [[]]
        for n in range(1, order_x + 1):
            acc = list(y) if n == 1 else []
            acc = padd(acc, m[n - 1])
            for a in range(1, n - 1):
                acc = padd(acc, prod(m[a], m[n - 1 - a]))
            m.append(acc)
        return BivariateSeries(m, order_x, order_y)

    if family is FamilyId.ORDERED:
        # T = x*y + x*W with W = T/(1-T) = T + T*W
        t: "list[list[Fraction]]" = [[]]
        w: "list[list[Fraction]]" = [[]]
        for n in range(1, order_x + 1):
            tn = padd(list(y) if n == 1 else [], w[n - 1])
            t.append(tn)
            wn = list(tn)
            for a in range(1, n):
                wn = padd(wn, prod(t[a], w[n - a]))
            w.append(wn)
        return BivariateSeries(t, order_x, order_y)

    if family is FamilyId.FULL_BINARY:
        # B = x*y + y*B^2  (x counts leaves, y counts vertices)
        b: "list[list[Fraction]]" = [[]]
        for n in range(1, order_x + 1):
            acc: "list[Fraction]" = []
            for a in range(1, n):
                acc = padd(acc, prod(b[a], b[n - a]))
            acc = _yp_shift(acc, ny)
            if n == 1:
                acc = padd(acc, y)
            b.append(acc)
        return BivariateSeries(b, order_x, order_y)

    # Schroeder: R = x*y + y*W with W = R^2 + R*W (x leaves, y vertices)
    r: "list[list[Fraction]]" = [[]]
    w: "list[list[Fraction]]" = [[]]
    for n in range(1, order_x + 1):
        wn: "list[Fraction]" = []
        for a in range(1, n):
            wn = padd(wn, prod(r[a], r[n - a]))
        for a in range(1, n - 1):
            wn = padd(wn, prod(r[a], w[n - a]))
        w.append(wn)
        rn = _yp_shift(wn, ny)
        if n == 1:
            rn = padd(rn, y)
        r.append(rn)
    return BivariateSeries(r, order_x, order_y)


def bivariate_series(family: FamilyId, order_x: int, order_y: int) -> BivariateSeries:
    """Bivariate series with x the family's size unit and y the other statistic."""
    if order_x < 1 or order_y < 1:
        raise DomainError("orders must be at least 1")
    full = _bivariate_bucketed(family, _bucket_x(order_x), _bucket_y(order_y))
    if full.order_x == order_x and full.order_y == order_y:
        return full
    return BivariateSeries(full.rows[: order_x + 1], order_x, order_y)


# -- multiplier ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _multiplier_bucketed(family: FamilyId, order: int) -> PowerSeries:
    one = PowerSeries.one(order)
    if family is FamilyId.MOTZKIN:
        return one.div(PowerSeries.from_polynomial([1, -2, -3], order).sqrt())
    if family is FamilyId.ORDERED:
        inv_root = one.div(PowerSeries.from_polynomial([1, -4], order).sqrt())
        return (one + inv_root).scale(Fraction(1, 2))
    if family is FamilyId.FULL_BINARY:
        return one.div(PowerSeries.from_polynomial([1, -4], order).sqrt())
    root = PowerSeries.from_polynomial([1, -6, 1], order).sqrt()
    numerator = PowerSeries.from_polynomial([3, -1], order) + root
    return numerator.div(root.scale(4))


def multiplier_gf(family: FamilyId, order: int) -> PowerSeries:
    """Transfer factor: census GF = root-statistic GF * multiplier."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    return _multiplier_bucketed(family, _series_bucket(order)).truncate(order)


# -- root-statistic generating functions ----------------------------------------


@lru_cache(maxsize=None)
def root_stat_gf(family: FamilyId, stat: StatKind, k: int) -> RationalFunction:
    """GF (in the family's size variable) of trees whose root statistic is k.

    When the statistic coincides with the family's size unit the GF is
    the monomial count(k) * x**k.  Full binary trees with k vertices
    force k = 2j-1 odd with j leaves.  The remaining cases extract the
    coefficient of y**k from the bivariate series and reconstruct the
    closed form with an exact rational fit.
    """
    if k < 1:
        raise DomainError("statistic value k must be at least 1")
    desc = descriptor(family)
    if stat is desc.size_unit:
        return RationalFunction.monomial(counting_coefficient(family, k), k)
    if family is FamilyId.FULL_BINARY:
        if k % 2 == 0:
            return RationalFunction.zero()
        j = (k + 1) // 2
        return RationalFunction.monomial(counting_coefficient(family, j), j)
    if family is FamilyId.SCHROEDER:
        degrees = (k, 0)
    else:
        degrees = (2 * k - 1, 2 * k - 1)
    last_error: "FitError | None" = None
    for num_deg, den_deg in (degrees, (2 * degrees[0] + 2, 2 * degrees[1] + 2)):
        need = num_deg + den_deg + FIT_MARGIN
        column = bivariate_series(family, _bucket_x(need), max(k, 1)).coeff_y(k)
        try:
            return fit_rational(column, num_deg, den_deg)
        except FitError as err:
            last_error = err
    raise last_error


# -- census series ----------------------------------------------------------------


def census_series(family: FamilyId, stat: StatKind, k: int, order: int) -> PowerSeries:
    """Coefficient of x**n counts vertices over all size-n trees whose
    subtree statistic equals k."""
    if order < 1:
        raise DomainError("order must be at least 1")
    root = root_stat_gf(family, stat, k)
    if root.is_zero():
        return PowerSeries.zero(order)
    return root.expand(order).mul(multiplier_gf(family, order), order)


@lru_cache(maxsize=None)
def _root_expansion(family: FamilyId, stat: StatKind, k: int, order: int) -> "tuple[Fraction, ...]":
    return root_stat_gf(family, stat, k).expand(order).coefficients


def census_coefficient(family: FamilyId, stat: StatKind, k: int, n: int) -> int:
    """Single census coefficient, via one convolution against the multiplier."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if k < 1:
        raise DomainError("statistic value k must be at least 1")
    bucket = _series_bucket(max(n, 1))
    root = _root_expansion(family, stat, k, bucket)
    mult = _multiplier_bucketed(family, bucket).coefficients
    total = _ZERO
    for j in range(n + 1):
        rj = root[j]
        if rj:
            total += rj * mult[n - j]
    if total.denominator != 1:
        raise SolverError(f"non-integer census value {total}")
    return total.numerator


# -- totals and probabilities -------------------------------------------------------


@lru_cache(maxsize=None)
def _vertex_total_bucketed(family: FamilyId, order: int) -> PowerSeries:
    counting = _counting_bucketed(family, order)
    return counting.mul(_multiplier_bucketed(family, order), order)


def total_vertices(family: FamilyId, n: int) -> int:
    """Total number of vertices over all trees of size n."""
    if n < 1:
        raise DomainError(f"no {family.value} trees of size {n}")
    desc = descriptor(family)
    if desc.size_unit is StatKind.VERTICES:
        return n * counting_coefficient(family, n)
    if family is FamilyId.FULL_BINARY:
        return (2 * n - 1) * counting_coefficient(family, n)
    value = _vertex_total_bucketed(family, _series_bucket(n)).coefficient(n)
    if value.denominator != 1:
        raise SolverError(f"non-integer vertex total {value}")
    return value.numerator


def total_leaves(family: FamilyId, n: int) -> int:
    """Total number of leaves over all trees of size n.

    Leaf-counted families contribute n leaves per tree; vertex-counted
    families read the y-derivative of the bivariate series at y = 1.
    """
    if n < 1:
        raise DomainError(f"no {family.value} trees of size {n}")
    desc = descriptor(family)
    if desc.size_unit is StatKind.LEAVES:
        return n * counting_coefficient(family, n)
    max_leaves = max_stat_value(family, StatKind.LEAVES, n)
    value = bivariate_series(family, n, max_leaves).dy_at_y_one().coefficient(n)
    if value.denominator != 1:
        raise SolverError(f"non-integer leaf total {value}")
    return value.numerator


def finite_probability(family: FamilyId, stat: StatKind, k: int, n: int) -> Fraction:
    """Exact probability that a uniform vertex of a uniform size-n tree
    has subtree statistic k: census coefficient over the vertex total."""
    if n < 1:
        raise DomainError(f"no {family.value} trees of size {n}")
    if k < 1:
        raise DomainError("statistic value k must be at least 1")
    return Fraction(census_coefficient(family, stat, k, n), total_vertices(family, n))


def max_stat_value(family: FamilyId, stat: StatKind, n: int) -> int:
    """Largest achievable statistic value on trees of size n."""
    if n < 1:
        raise DomainError(f"no {family.value} trees of size {n}")
    leaf_counted = descriptor(family).size_unit is StatKind.LEAVES
    if stat is StatKind.VERTICES:
        return 2 * n - 1 if leaf_counted else n
    if leaf_counted:
        return n
    if family is FamilyId.MOTZKIN:
        return (n + 1) // 2
    return max(1, n - 1)


# -- census tables ----------------------------------------------------------------


@dataclass(frozen=True)
class CensusTable:
    """Exact vertex counts by (tree size n, statistic value k).

    Zero counts are omitted; ``count`` treats missing keys as 0.  For a
    fixed n the counts over all k partition the vertex total.
    """

    family: FamilyId
    stat: StatKind
    entries: "dict[tuple[int, int], int]" = field(default_factory=dict)

    def count(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def row(self, n: int) -> "dict[int, int]":
        return {k: c for (m, k), c in sorted(self.entries.items()) if m == n}


def census_table_from_series(family: FamilyId, stat: StatKind, n_max: int) -> CensusTable:
    """Tabulate census series coefficients for all n <= n_max."""
    entries: "dict[tuple[int, int], int]" = {}
    top = max(max_stat_value(family, stat, n_max), 1)
    for k in range(1, top + 1):
        series = census_series(family, stat, k, n_max)
        for n in range(1, n_max + 1):
            value = series.coefficient(n)
            if value:
                entries[(n, k)] = int(value)
    return CensusTable(family, stat, entries)
