"""Limit probabilities and convergence diagnostics.

The transfer step is the coefficient-asymptotics lemma for a product
A(x)B(x): when B's coefficient ratios b_{n-1}/b_n tend to a limit b
inside A's radius and A(b) != 0, the product's coefficients satisfy
c_n ~ A(b) b_n.  Applied with A the root-statistic GF and B the
family multiplier, the limiting probability that a vertex's subtree
statistic equals k is A(b) * K with K the family's normalization
constant (the exact limit of multiplier coefficients over vertex
totals).  Everything except the convergence records is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .families import (
    FamilyId,
    StatKind,
    descriptor,
    finite_probability,
    root_stat_gf,
)
from .quadratic import QuadraticNumber
from .ratfunc import PoleError, RationalFunction

DEFAULT_SIZES = (150, 300, 600)


class LemmaInapplicableError(ArithmeticError):
    """The transfer lemma's hypotheses fail in a way that is not forced."""


@dataclass(frozen=True)
class BenderInput:
    """Inputs for one application of the transfer lemma.

    ``gf`` plays the role of A, ``ratio_limit`` is b, and
    ``normalization`` is the family constant K folded onto A(b).
    The caller guarantees gf has no pole on [0, b].
    """

    gf: RationalFunction
    ratio_limit: QuadraticNumber
    normalization: QuadraticNumber


def bender_limit(inp: BenderInput) -> QuadraticNumber:
    """A(b) * K, exactly in the quadratic field.

    An identically zero A violates the lemma's A(b) != 0 hypothesis,
    but the limit is forced to 0 (there is nothing to count), so 0 is
    returned; ``bender_forced_zero`` reports whether that happened.
    A pole of A at b raises ``LemmaInapplicableError``.
    """
    if inp.normalization.sign() <= 0:
        raise LemmaInapplicableError("normalization constant must be positive")
    if inp.gf.is_zero():
        return QuadraticNumber(0, 0, inp.ratio_limit.radicand)
    try:
        value = inp.gf.eval(inp.ratio_limit)
    except PoleError as err:
        raise LemmaInapplicableError(f"gf has a pole at the ratio limit: {err}") from err
    return value * inp.normalization


def bender_forced_zero(inp: BenderInput) -> bool:
    """True when the limit is 0 by emptiness rather than by the lemma."""
    return inp.gf.is_zero()


def normalization_constant(family: FamilyId) -> QuadraticNumber:
    """Exact K(family): Motzkin 1, ordered 2, full binary 2,
    Schroeder 2 + sqrt(2).

    Each constant equals the limit of (multiplier coefficient n) over
    (vertex total at n); the Richardson oracle in the test suite
    re-derives every value from finite-size censuses before it is
    trusted here.
    """
    return descriptor(family).normalization


@dataclass(frozen=True)
class ConvergenceRecord:
    """Finite-size probabilities and their Richardson extrapolation."""

    sizes: "tuple[int, ...]"
    probabilities: "tuple[Fraction, ...]"
    extrapolate: Fraction
    exact: QuadraticNumber
    gap: QuadraticNumber  # |extrapolate - exact|, exact in the field

    def __post_init__(self):
        if list(self.sizes) != sorted(set(self.sizes)):
            raise ValueError("sizes must be strictly increasing")


@dataclass(frozen=True)
class AsymptoticProbability:
    family: FamilyId
    stat: StatKind
    k: int
    exact_value: QuadraticNumber
    decimal: float
    method: str  # "closed-form" | "extrapolated"
    diagnostics: "ConvergenceRecord | None" = None

    def __post_init__(self):
        if not (0 <= self.exact_value <= 1):
            raise ValueError(f"probability {self.exact_value} outside [0, 1]")


def _exact_limit(family: FamilyId, stat: StatKind, k: int) -> QuadraticNumber:
    desc = descriptor(family)
    inp = BenderInput(
        gf=root_stat_gf(family, stat, k),
        ratio_limit=desc.singularity,
        normalization=desc.normalization,
    )
    return bender_limit(inp)


def limit_probability(
    family: FamilyId,
    stat: StatKind,
    k: int,
    check: bool = False,
    sizes: "tuple[int, ...]" = DEFAULT_SIZES,
) -> AsymptoticProbability:
    """Limiting probability that a vertex's subtree statistic equals k.

    With ``check`` set, a convergence record comparing the exact value
    against Richardson-extrapolated finite-size probabilities is
    attached.
    """
    exact = _exact_limit(family, stat, k)
    diagnostics = richardson_check(family, stat, k, sizes) if check else None
    return AsymptoticProbability(
        family=family,
        stat=stat,
        k=k,
        exact_value=exact,
        decimal=float(exact),
        method="closed-form",
        diagnostics=diagnostics,
    )


def richardson_check(
    family: FamilyId,
    stat: StatKind,
    k: int,
    sizes: "tuple[int, ...]" = DEFAULT_SIZES,
) -> ConvergenceRecord:
    """One-step Richardson extrapolation of finite-size probabilities.

    The finite probabilities approach the limit with an O(1/n) error
    (square-root singularity), so one elimination step over the two
    largest sizes is used:  p* = (n2 p2 - n1 p1) / (n2 - n1).
    """
    if len(sizes) < 2:
        raise ValueError("need at least two sizes to extrapolate")
    probs = tuple(finite_probability(family, stat, k, n) for n in sizes)
    n1, n2 = sizes[-2], sizes[-1]
    p1, p2 = probs[-2], probs[-1]
    extrapolate = Fraction(n2 * p2 - n1 * p1, n2 - n1)
    exact = _exact_limit(family, stat, k)
    gap = abs(QuadraticNumber(extrapolate, 0, exact.radicand) - exact)
    return ConvergenceRecord(tuple(sizes), probs, extrapolate, exact, gap)


# -- Schroeder closed-form asymptotics ---------------------------------------------


@dataclass(frozen=True)
class SchroederAsymptotics:
    """Floating evaluations of the displayed Schroeder asymptotic formulas.

    ``leaf_probability`` reproduces the printed closed-form constant
    (1+sqrt(2)) / (sqrt(2) (3+sqrt(8))) = 1 - sqrt(2)/2 exactly; see the
    errata ledger for how it relates to the computed leaf-fraction
    limit 2 - sqrt(2).
    """

    n: int
    count_approx: float  # number of trees with n leaves
    leaf_total_approx: float
    vertex_total_approx: float
    leaf_probability: QuadraticNumber


def schroeder_closed_forms(n: int) -> SchroederAsymptotics:
    if n < 2:
        raise ValueError("asymptotic formulas need n >= 2")
    growth = 3 + math.sqrt(8)
    front = (1 + math.sqrt(2)) / (2 ** 1.75 * math.sqrt(math.pi))
    count = front * (n - 1) ** -1.5 * growth ** (n - 1)
    leaves = front * (n - 1) ** -0.5 * growth ** (n - 1)
    vertices = growth ** n / (2 ** 2.25 * math.sqrt(math.pi * n))
    printed_constant = (1 + QuadraticNumber(0, 1, 2)) / (
        QuadraticNumber(0, 1, 2) * (3 + QuadraticNumber(0, 1, 8))
    )
    return SchroederAsymptotics(n, count, leaves, vertices, printed_constant)


# -- tightness ----------------------------------------------------------------------


@dataclass(frozen=True)
class TightnessReport:
    """Partial sum over k of the limit probabilities, and its gap to 1.

    A statistic is called tight when the full sum equals 1; the report
    only exhibits exact partial sums, it does not decide tightness.
    """

    family: FamilyId
    stat: StatKind
    k_max: int
    terms: "tuple[QuadraticNumber, ...]"
    partial_sum: QuadraticNumber
    deficiency: QuadraticNumber


def tightness_report(family: FamilyId, stat: StatKind, k_max: int) -> TightnessReport:
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    d = descriptor(family).radicand
    terms = tuple(_exact_limit(family, stat, k) for k in range(1, k_max + 1))
    partial = QuadraticNumber(0, 0, d)
    for t in terms:
        partial = partial + t
    return TightnessReport(
        family=family,
        stat=stat,
        k_max=k_max,
        terms=terms,
        partial_sum=partial,
        deficiency=QuadraticNumber(1, 0, d) - partial,
    )


# -- normalization oracle -------------------------------------------------------------


def normalization_from_censuses(
    family: FamilyId, sizes: "tuple[int, ...]" = DEFAULT_SIZES
) -> QuadraticNumber:
    """Re-derive K(family) from finite-size data only.

    K = lim p(n) / R_1(b) for the k = 1 statistic (both statistics
    agree there: the qualifying vertices are exactly the leaves).  The
    three finite ratios are extrapolated with two Richardson steps,
    which removes the 1/n and 1/n^2 error terms.
    """
    if len(sizes) != 3:
        raise ValueError("the oracle uses exactly three sizes")
    n1, n2, n3 = sizes
    if not (n2 == 2 * n1 and n3 == 2 * n2):
        raise ValueError("sizes must double")
    desc = descriptor(family)
    r1 = root_stat_gf(family, desc.size_unit, 1).eval(desc.singularity)
    ratios = [
        QuadraticNumber(finite_probability(family, desc.size_unit, 1, n), 0, desc.radicand) / r1
        for n in sizes
    ]
    first = ratios[1] * 2 - ratios[0]
    second = ratios[2] * 2 - ratios[1]
    return (second * 4 - first) / 3
