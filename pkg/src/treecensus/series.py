"""Truncated formal power series over exact rationals.

A ``PowerSeries`` stores coefficients 0..N as a tuple of ``Fraction``;
N is the truncation order.  All operations are exact, pure, and return
new objects, so series are safe to cache and to share between threads.
Binary operations truncate at the smaller of the two input orders
unless an explicit ``order`` is requested.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Coefficient = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SeriesError(Exception):
    """Base class for power-series failures."""


class TruncationError(SeriesError):
    """Requested order exceeds the coefficients actually available."""


class ValuationError(SeriesError):
    """Quotient is not a power series (numerator valuation too small)."""


class ConstantTermError(SeriesError):
    """Constant term violates an operation's domain (sqrt, division)."""


class PowerSeries:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Coefficient]):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the constant term")
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(order: int) -> "PowerSeries":
        return PowerSeries([_ZERO] * (order + 1))

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries([_ONE] + [_ZERO] * order)

    @staticmethod
    def monomial(coefficient: Coefficient, power: int, order: int) -> "PowerSeries":
        if power > order:
            return PowerSeries.zero(order)
        coeffs = [_ZERO] * (order + 1)
        coeffs[power] = Fraction(coefficient)
        return PowerSeries(coeffs)

    @staticmethod
    def from_polynomial(poly: Sequence[Coefficient], order: int) -> "PowerSeries":
        """Embed a polynomial (coefficient list, ascending) at a truncation."""
        coeffs = [Fraction(c) for c in poly[: order + 1]]
        coeffs += [_ZERO] * (order + 1 - len(coeffs))
        return PowerSeries(coeffs)

    # -- basics --------------------------------------------------------------

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("negative index")
        if n > self.truncation_order:
            raise TruncationError(
                f"coefficient {n} beyond truncation order {self.truncation_order}"
            )
        return self.coefficients[n]

    __getitem__ = coefficient

    def valuation(self) -> "int | None":
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self.coefficients):
            if c:
                return n
        return None

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.truncation_order:
            raise TruncationError(
                f"cannot extend truncation {self.truncation_order} to {order}"
            )
        return PowerSeries(self.coefficients[: order + 1])

    def extended(self, order: int) -> "PowerSeries":
        """Pad with zero coefficients up to ``order`` (used by fixed-point sweeps)."""
        if order <= self.truncation_order:
            return self.truncate(order)
        return PowerSeries(self.coefficients + (_ZERO,) * (order - self.truncation_order))

    def is_zero(self) -> bool:
        return self.valuation() is None

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coefficients[:8])
        if self.truncation_order >= 8:
            shown += ", ..."
        return f"PowerSeries([{shown}]; order={self.truncation_order})"

    # -- ring operations -------------------------------------------------------

    def _common_order(self, other: "PowerSeries", order: "int | None") -> int:
        available = min(self.truncation_order, other.truncation_order)
        if order is None:
            return available
        if order > available:
            raise TruncationError(f"order {order} exceeds available truncation {available}")
        return order

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.truncation_order, other.truncation_order)
        a, b = self.coefficients, other.coefficients
        return PowerSeries([a[i] + b[i] for i in range(n + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.truncation_order, other.truncation_order)
        a, b = self.coefficients, other.coefficients
        return PowerSeries([a[i] - b[i] for i in range(n + 1)])

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coefficients])

    def scale(self, factor: Coefficient) -> "PowerSeries":
        f = Fraction(factor)
        return PowerSeries([f * c for c in self.coefficients])

    def shift(self, power: int) -> "PowerSeries":
        """Multiply by x**power; the known range extends accordingly."""
        if power < 0:
            raise ValueError("use div for negative shifts")
        return PowerSeries((_ZERO,) * power + self.coefficients)

    def mul(self, other: "PowerSeries", order: "int | None" = None) -> "PowerSeries":
        """Cauchy product truncated at ``order`` (default: min of inputs)."""
        n = self._common_order(other, order)
        a, b = self.coefficients, other.coefficients
        out = [_ZERO] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b) - 1, n - i) + 1):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return PowerSeries(out)

    __mul__ = mul

    def div(self, other: "PowerSeries", order: "int | None" = None) -> "PowerSeries":
        """Exact quotient q with q*other == self through the truncation.

        If ``other`` has zero constant term, the common factor x**v is
        cancelled first (v = valuation of the divisor); the numerator
        must then vanish to order at least v, otherwise the quotient is
        not a power series and ``ValuationError`` is raised.
        """
        v = other.valuation()
        if v is None:
            raise ConstantTermError("division by the zero series")
        if self.is_zero():
            n = max(0, self._common_order(other, order) - v) if order is None else order
            return PowerSeries.zero(n)
        if v > 0:
            va = self.valuation()
            if va is None or va < v:
                raise ValuationError(
                    f"numerator valuation {va} below divisor valuation {v}"
                )
            num = PowerSeries(self.coefficients[v:])
            den = PowerSeries(other.coefficients[v:])
            return num.div(den, order)
        n = self._common_order(other, order)
        a, b = self.coefficients, other.coefficients
        b0 = b[0]
        out = [_ZERO] * (n + 1)
        for k in range(n + 1):
            acc = a[k] if k < len(a) else _ZERO
            for i in range(1, min(k, len(b) - 1) + 1):
                bi = b[i]
                if bi:
                    acc -= bi * out[k - i]
            out[k] = acc / b0
        return PowerSeries(out)

    __truediv__ = div

    def sqrt(self, order: "int | None" = None) -> "PowerSeries":
        """The square root with constant term +1.

        The argument must have constant term exactly 1; callers encode
        any other branch or prefactor explicitly.
        """
        n = self.truncation_order if order is None else order
        if order is not None and order > self.truncation_order:
            raise TruncationError(f"order {order} exceeds truncation {self.truncation_order}")
        a = self.coefficients
        if a[0] != 1:
            raise ConstantTermError(f"sqrt needs constant term 1, got {a[0]}")
        out = [_ZERO] * (n + 1)
        out[0] = _ONE
        for k in range(1, n + 1):
            acc = a[k]
            for i in range(1, k):
                si = out[i]
                if si:
                    acc -= si * out[k - i]
            out[k] = acc / 2
        return PowerSeries(out)
