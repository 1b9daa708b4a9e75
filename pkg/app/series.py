"""
Truncated power series with exact integer coefficients.

A series knows its truncation cap (the highest degree it is exact to);
binary operations work to the smaller of the two caps.  The multiset
operator and its restrictions are computed with the Euler transform
recurrence, in batch or incrementally for self-referential definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import mpmath


class SeriesError(ValueError):
    """Raised for an operation a truncated series cannot support."""


def _divisors(n: int) -> List[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``coeffs[0..cap]`` of a power series in t."""

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise SeriesError("a series needs at least its constant coefficient")

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], cap: Optional[int] = None) -> TruncatedSeries:
        values = list(coefficients)
        if cap is not None:
            values = (values + [0] * (cap + 1))[:cap + 1]
        return cls(tuple(values))

    @classmethod
    def zero(cls, cap: int) -> TruncatedSeries:
        return cls((0,) * (cap + 1))

    @classmethod
    def one(cls, cap: int) -> TruncatedSeries:
        return cls.monomial(0, cap)

    @classmethod
    def monomial(cls, degree: int, cap: int, coefficient: int = 1) -> TruncatedSeries:
        values = [0] * (cap + 1)
        if degree <= cap:
            values[degree] = coefficient
        return cls(tuple(values))

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[degree]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, cap: int) -> TruncatedSeries:
        if cap > self.cap:
            raise SeriesError(f"cannot extend a series exact to degree {self.cap} up to {cap}")
        return TruncatedSeries(self.coeffs[:cap + 1])

    def _coerce(self, other: Union[TruncatedSeries, int]) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries.monomial(0, self.cap, other)
        return NotImplemented

    def __add__(self, other: Union[TruncatedSeries, int]) -> TruncatedSeries:
        other = self._coerce(other)
        cap = min(self.cap, other.cap)
        return TruncatedSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(cap + 1)))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union[TruncatedSeries, int]) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other: Union[TruncatedSeries, int]) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs))
        cap = min(self.cap, other.cap)
        a, b = self.coeffs, other.coeffs
        out = [0] * (cap + 1)
        for i in range(cap + 1):
            if a[i]:
                ai = a[i]
                for j in range(cap - i + 1):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> TruncatedSeries:
        """Multiply by t^k, keeping the cap."""
        return TruncatedSeries(((0,) * k + self.coeffs)[:self.cap + 1])

    def reciprocal(self) -> TruncatedSeries:
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise SeriesError(f"constant term {c0} is not a unit")
        out = [c0]
        for k in range(1, self.cap + 1):
            total = sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out.append(-c0 * total)
        return TruncatedSeries(tuple(out))

    def substitute_power(self, k: int) -> TruncatedSeries:
        """The series F(t^k) to the same cap."""
        if k < 1:
            raise SeriesError("substitution power must be at least 1")
        out = [0] * (self.cap + 1)
        for i in range(0, self.cap // k + 1):
            out[i * k] = self.coeffs[i]
        return TruncatedSeries(tuple(out))

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> TruncatedSeries:
        return cls(tuple(int(c) for c in data))

    def __str__(self) -> str:
        return " + ".join(f"{c}t^{k}" for k, c in enumerate(self.coeffs) if c) or "0"


def first_difference(a: TruncatedSeries, b: TruncatedSeries) -> Optional[int]:
    """Lowest degree where two series differ, within their common cap."""
    for k in range(min(a.cap, b.cap) + 1):
        if a[k] != b[k]:
            return k
    return None


def dominated_by(a: TruncatedSeries, b: TruncatedSeries) -> Tuple[bool, Optional[int]]:
    """Whether ``a <= b`` coefficientwise, and the first degree where ``a < b``."""
    strict = None
    for k in range(min(a.cap, b.cap) + 1):
        if a[k] > b[k]:
            return False, strict
        if strict is None and a[k] < b[k]:
            strict = k
    return True, strict


class EulerTransform:
    """
    Online multiset transform.

    Push the coefficients z_1, z_2, ... of a series Z with zero constant term;
    after z_n is pushed, ``m[n]`` holds the degree-n coefficient of the
    multiset series exp(sum_i Z(t^i)/i).
    """

    def __init__(self) -> None:
        self.z: List[int] = [0]
        self._c: List[int] = [0]
        self.m: List[int] = [1]

    @property
    def degree(self) -> int:
        return len(self.z) - 1

    def push(self, value: int) -> int:
        n = len(self.z)
        self.z.append(value)
        self._c.append(sum(d * self.z[d] for d in _divisors(n)))
        total = sum(self._c[k] * self.m[n - k] for k in range(1, n + 1))
        quotient, remainder = divmod(total, n)
        if remainder:
            raise SeriesError(f"multiset recurrence not integral at degree {n}")
        self.m.append(quotient)
        return quotient

    def ge2(self, n: int) -> int:
        """Degree-n coefficient of the multisets with at least two elements."""
        return self.m[n] - self.z[n] if n else 0

    def ge3(self, n: int) -> int:
        """Degree-n coefficient of the multisets with at least three elements."""
        if not n:
            return 0
        pairs = sum(self.z[i] * self.z[n - i] for i in range(1, n)) + (self.z[n // 2] if n % 2 == 0 else 0)
        return self.ge2(n) - pairs // 2


def _require_no_constant(z: TruncatedSeries) -> None:
    if z[0] != 0:
        raise SeriesError("multiset operator needs a series with zero constant term")


def _transform_of(z: TruncatedSeries) -> EulerTransform:
    _require_no_constant(z)
    transform = EulerTransform()
    for k in range(1, z.cap + 1):
        transform.push(z[k])
    return transform


def mset(z: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(_transform_of(z).m))


def mset_ge2(z: TruncatedSeries) -> TruncatedSeries:
    """Multisets of at least two elements."""
    transform = _transform_of(z)
    return TruncatedSeries(tuple(transform.ge2(k) for k in range(z.cap + 1)))


def mset_ge3(z: TruncatedSeries) -> TruncatedSeries:
    """Multisets of at least three elements."""
    transform = _transform_of(z)
    return TruncatedSeries(tuple(transform.ge3(k) for k in range(z.cap + 1)))


def w_tail(z: TruncatedSeries) -> Tuple[Fraction, ...]:
    """Coefficients of sum_{i>=2} Z(t^i)/i."""
    _require_no_constant(z)
    out = [Fraction(0)] * (z.cap + 1)
    for i in range(2, z.cap + 1):
        for j in range(1, z.cap // i + 1):
            if z[j]:
                out[i * j] += Fraction(z[j], i)
    return tuple(out)


def evaluate(coefficients: Union[TruncatedSeries, Sequence[Union[int, Fraction]]], x) -> mpmath.mpf:
    """Evaluate a truncated series at a point with the current mpmath precision."""
    values = coefficients.coeffs if isinstance(coefficients, TruncatedSeries) else coefficients
    terms = [
        mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(c)
        for c in values
    ]
    return mpmath.polyval(terms[::-1], x)


def catalan_series(cap: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(comb(2 * k, k) // (k + 1) for k in range(cap + 1)))


def motzkin_atom_series(cap: int) -> TruncatedSeries:
    """M = t + tM + tM^2: atoms of the main cohorts, counted by size."""
    m = [0] * (cap + 1)
    for n in range(1, cap + 1):
        pairs = sum(m[i] * m[n - 1 - i] for i in range(1, n - 1))
        m[n] = (1 if n == 1 else 0) + m[n - 1] + pairs
    return TruncatedSeries(tuple(m))


def h_truncation(n: int, cap: int) -> TruncatedSeries:
    """H_1 = 1 and H_n = 1/(1 - t H_{n-1}), the avoider series of nest(n)."""
    if n < 1:
        raise SeriesError("h_truncation is defined for n >= 1")
    h = TruncatedSeries.one(cap)
    for _ in range(n - 1):
        h = (1 - h.shift()).reciprocal()
    return h


def rooted_tree_series(cap: int) -> TruncatedSeries:
    """Non-plane rooted trees by number of nodes: T = t M(T)."""
    transform = EulerTransform()
    t = [0]
    for n in range(1, cap + 1):
        t.append(transform.m[n - 1])
        transform.push(t[n])
    return TruncatedSeries(tuple(t))


def wide_tree_series(cap: int) -> TruncatedSeries:
    """Non-plane rooted trees whose internal nodes have at least three children."""
    transform = EulerTransform()
    w = [0]
    for n in range(1, cap + 1):
        k = n - 1
        if k == 0:
            w.append(1)
        else:
            pairs = sum(w[i] * w[k - i] for i in range(1, k)) + (w[k // 2] if k % 2 == 0 else 0)
            w.append(transform.m[k] - w[k] - pairs // 2)
        transform.push(w[n])
    return TruncatedSeries(tuple(w))
