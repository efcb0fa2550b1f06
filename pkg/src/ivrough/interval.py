"""Closed real intervals and the SF / SS / ST similarity degrees.

Every degree is computed by a single array kernel so that the scalar
functions and the pairwise matrices used to build relations agree bit for bit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

__all__ = [
    "Interval",
    "IntervalError",
    "SimilarityFamily",
    "intersect",
    "hull",
    "sim_sf",
    "sim_ss",
    "sim_st",
    "similarity",
    "similarity_matrix",
    "exact_similarity",
    "mean_interval",
    "parse_interval",
    "format_interval",
]


class IntervalError(ValueError):
    """Raised for malformed interval values or misuse of interval operations."""


@dataclass(frozen=True)
class Interval:
    """A closed interval ``[lo, hi]`` with finite endpoints and ``lo <= hi``."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise IntervalError(f"interval endpoints must be finite, got [{lo}, {hi}]")
        if lo > hi:
            raise IntervalError(f"lower endpoint exceeds upper: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> float:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __str__(self):
        return format_interval(self)


class SimilarityFamily(str, enum.Enum):
    """The three similarity degrees; the value is the lowercase CLI spelling."""

    SF = "sf"
    SS = "ss"
    ST = "st"

    @classmethod
    def coerce(cls, value) -> "SimilarityFamily":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown similarity family {value!r}; expected sf, ss or st") from None

    def __str__(self):
        return self.name


def intersect(u: Interval, v: Interval) -> Optional[Interval]:
    """Intersection of two intervals, or ``None`` when they are disjoint."""
    lo = max(u.lo, v.lo)
    hi = min(u.hi, v.hi)
    if lo <= hi:
        return Interval(lo, hi)
    return None


def hull(u: Interval, v: Interval) -> Interval:
    """Smallest interval containing both operands (the interval "union")."""
    return Interval(min(u.lo, v.lo), max(u.hi, v.hi))


# -- array kernels -----------------------------------------------------------
# Each kernel takes endpoint arrays that broadcast against each other and is
# written with commutative operations only, so S(u, v) == S(v, u) exactly.

def _sf_kernel(ulo, uhi, vlo, vhi):
    inter = np.maximum(np.minimum(uhi, vhi) - np.maximum(ulo, vlo), 0.0)
    span = np.maximum(uhi, vhi) - np.minimum(ulo, vlo)
    safe = np.where(span > 0, span, 1.0)
    # zero span means both operands are the same point
    return np.where(span > 0, inter / safe, 1.0)


def _ss_kernel(ulo, uhi, vlo, vhi):
    span = np.maximum(uhi, vhi) - np.minimum(ulo, vlo)
    dist = np.abs(uhi - vhi) + np.abs(ulo - vlo)
    safe = np.where(span > 0, span, 1.0)
    return np.where(span > 0, 1.0 - 0.5 * dist / safe, 1.0)


def _possibility(ulo, uhi, vlo, vhi, total):
    """Possibility degree P(u >= v) with denominator |u| + |v|."""
    safe = np.where(total > 0, total, 1.0)
    ratio = np.clip((uhi - vlo) / safe, 0.0, 1.0)
    # two points: P(u >= v) is 1 iff u >= v
    return np.where(total > 0, ratio, np.where(ulo >= vlo, 1.0, 0.0))


def _st_kernel(ulo, uhi, vlo, vhi):
    total = (uhi - ulo) + (vhi - vlo)
    p_uv = _possibility(ulo, uhi, vlo, vhi, total)
    p_vu = _possibility(vlo, vhi, ulo, uhi, total)
    return 1.0 - np.abs(p_uv - p_vu)


_KERNELS = {
    SimilarityFamily.SF: _sf_kernel,
    SimilarityFamily.SS: _ss_kernel,
    SimilarityFamily.ST: _st_kernel,
}


def _scalar(family: SimilarityFamily, u: Interval, v: Interval) -> float:
    return float(_KERNELS[family](np.float64(u.lo), np.float64(u.hi), np.float64(v.lo), np.float64(v.hi)))


def sim_sf(u: Interval, v: Interval) -> float:
    """Overlap ratio ``|u ∩ v| / |hull(u, v)|``; equal points score 1."""
    return _scalar(SimilarityFamily.SF, u, v)


def sim_ss(u: Interval, v: Interval) -> float:
    """Endpoint-distance similarity ``1 - (|Δhi| + |Δlo|) / (2 |hull|)``."""
    return _scalar(SimilarityFamily.SS, u, v)


def sim_st(u: Interval, v: Interval) -> float:
    """Possibility-degree similarity ``1 - |P(u>=v) - P(v>=u)|``.

    ``P(u >= v) = min(1, max((u.hi - v.lo) / (|u| + |v|), 0))``. For two
    points P is 1 when ``u >= v`` and 0 otherwise, so equal points score 1 and
    distinct points score 0.
    """
    return _scalar(SimilarityFamily.ST, u, v)


def similarity(family, u: Interval, v: Interval) -> float:
    return _scalar(SimilarityFamily.coerce(family), u, v)


def similarity_matrix(lo, hi, family) -> np.ndarray:
    """Pairwise degrees between all values of one attribute column.

    ``lo`` and ``hi`` are 1-D endpoint arrays of length n; the result is an
    n x n float array with ``out[i, j] = S(column[i], column[j])``.
    """
    lo = np.asarray(lo, dtype=np.float64)
    hi = np.asarray(hi, dtype=np.float64)
    kernel = _KERNELS[SimilarityFamily.coerce(family)]
    return kernel(lo[:, None], hi[:, None], lo[None, :], hi[None, :])


def _decimal_value(x: float) -> Fraction:
    # repr() is the shortest decimal that round-trips, i.e. the literal the
    # value was parsed from for any data written with <= 15 significant digits
    return Fraction(repr(float(x)))


def exact_similarity(family, u: Interval, v: Interval) -> Fraction:
    """The degree evaluated exactly over the decimal values of the endpoints."""
    family = SimilarityFamily.coerce(family)
    ulo, uhi, vlo, vhi = (_decimal_value(x) for x in (u.lo, u.hi, v.lo, v.hi))
    span = max(uhi, vhi) - min(ulo, vlo)
    if family is SimilarityFamily.SF:
        if span == 0:
            return Fraction(1)
        return max(min(uhi, vhi) - max(ulo, vlo), Fraction(0)) / span
    if family is SimilarityFamily.SS:
        if span == 0:
            return Fraction(1)
        return 1 - (abs(uhi - vhi) + abs(ulo - vlo)) / (2 * span)
    total = (uhi - ulo) + (vhi - vlo)

    def possibility(a_lo, a_hi, b_lo):
        if total == 0:
            return Fraction(1 if a_lo >= b_lo else 0)
        return min(Fraction(1), max((a_hi - b_lo) / total, Fraction(0)))

    return 1 - abs(possibility(ulo, uhi, vlo) - possibility(vlo, vhi, ulo))


def mean_interval(values: Iterable[Interval]) -> Interval:
    """Endpoint-wise average of a multiset of intervals.

    Sums are taken exactly over the decimal values of the endpoints and
    rounded once, so ``mean([0, 0.5], [0.2, 0.6], [0.1, 0.8], [0, 0.9])``
    is exactly ``[0.075, 0.7]``.
    """
    values = list(values)
    if not values:
        raise IntervalError("mean of an empty collection of intervals")
    count = len(values)
    lo = sum((_decimal_value(v.lo) for v in values), Fraction(0)) / count
    hi = sum((_decimal_value(v.hi) for v in values), Fraction(0)) / count
    return Interval(float(lo), float(hi))


def parse_interval(text: str) -> Interval:
    """Parse ``lo:hi`` (or a bare ``v`` meaning ``v:v``)."""
    token = text.strip()
    parts = token.split(":")
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2 or not all(p.strip() for p in parts):
        raise IntervalError(f"malformed interval {text!r}; expected lo:hi")
    try:
        lo, hi = (float(p.strip()) for p in parts)
    except ValueError:
        raise IntervalError(f"non-numeric interval endpoint in {text!r}") from None
    return Interval(lo, hi)


def format_interval(u: Interval) -> str:
    return f"{u.lo!r}:{u.hi!r}"
