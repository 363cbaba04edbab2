"""
Closed-form linking number of two segments
==========================================

The linking number of two straight segments is a signed combination of four
arctangents of the isometry invariants::

    lk = (AT(a1, b2) + AT(b1, a2) - AT(a1, a2) - AT(b1, b2)) / (4 pi)

    AT(a, b; d, alpha) = arctan((a b sin(alpha) + d^2 cot(alpha))
                                / (d sqrt(a^2 + b^2 - 2 a b cos(alpha) + d^2)))

Parallel, coplanar (``d = 0``) and degenerate pairs contribute exactly 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .geom import Segment
from .invariants import PARALLEL_RTOL, SegmentPairInvariants, extract_invariants

__all__ = [
    "COPLANAR_ATOL",
    "Branch",
    "LkResult",
    "at_term",
    "lk_from_invariants",
    "lk_segments",
    "lk_simple_orthogonal",
    "coplanar_threshold",
    "projections_cross",
    "lk_limit_d0",
]

#: |d| <= COPLANAR_ATOL * max(1, |a1|, |b1|, |a2|, |b2|) is treated as d = 0
COPLANAR_ATOL = 1e-13

_FOUR_PI = 4.0 * math.pi


class Branch(str, enum.Enum):
    GENERIC = "generic"
    PARALLEL = "parallel"
    COPLANAR_D0 = "coplanar_d0"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class LkResult:
    value: float
    branch: Branch

    def __float__(self):
        return self.value


def _sign(x: float) -> float:
    return (x > 0) - (x < 0)


def at_term(a: float, b: float, d: float, alpha: float) -> float:
    """Arctangent building block ``AT(a, b; d, alpha)``.

    For ``alpha`` in {0, pi} (``sin(alpha) <= PARALLEL_RTOL``) the value is
    ``sign(d) * pi/2``. For ``d == 0`` a signed zero is returned; linking
    numbers must go through :func:`lk_from_invariants`, which handles
    coplanar pairs before this function is consulted.
    """
    if any(math.isnan(x) for x in (a, b, d, alpha)):
        raise ValueError("NaN argument to at_term")
    s = math.sin(alpha)
    if s <= PARALLEL_RTOL:
        return _sign(d) * math.pi / 2
    if d == 0.0:
        return math.copysign(0.0, a * b)
    c = math.cos(alpha)
    num = a * b * s + d * d * c / s
    den = d * math.sqrt(a * a + b * b - 2.0 * a * b * c + d * d)
    return math.atan(num / den)


def coplanar_threshold(inv: SegmentPairInvariants) -> float:
    return COPLANAR_ATOL * max(1.0, abs(inv.a1), abs(inv.b1), abs(inv.a2), abs(inv.b2))


def lk_from_invariants(inv: SegmentPairInvariants) -> LkResult:
    if inv.degenerate:
        return LkResult(0.0, Branch.DEGENERATE)
    if inv.parallel:
        return LkResult(0.0, Branch.PARALLEL)
    if abs(inv.d) <= coplanar_threshold(inv):
        return LkResult(0.0, Branch.COPLANAR_D0)
    d, alpha = inv.d, inv.alpha
    value = (
        at_term(inv.a1, inv.b2, d, alpha)
        + at_term(inv.b1, inv.a2, d, alpha)
        - at_term(inv.a1, inv.a2, d, alpha)
        - at_term(inv.b1, inv.b2, d, alpha)
    ) / _FOUR_PI
    return LkResult(value, Branch.GENERIC)


def lk_segments(s1: Segment, s2: Segment) -> LkResult:
    """Linking number of two oriented segments.

    Examples
    --------
    >>> s1 = Segment((0, 0, 0), (1, 0, 0))
    >>> s2 = Segment((0, 0, 1), (0, 1, 1))
    >>> round(lk_segments(s1, s2).value * 24, 12)
    -1.0
    """
    return lk_from_invariants(extract_invariants(s1, s2))


def lk_simple_orthogonal(l1: float, l2: float, d: float) -> float:
    """Linking number of orthogonal segments starting at the two feet of their
    common perpendicular, with lengths `l1`, `l2` and separation `d`."""
    if not (l1 > 0 and l2 > 0 and d > 0):
        raise ValueError("l1, l2 and d must all be positive")
    return -math.atan(l1 * l2 / (d * math.sqrt(l1 * l1 + l2 * l2 + d * d))) / _FOUR_PI


def projections_cross(inv: SegmentPairInvariants) -> bool:
    """Whether the projections of the segments to the mid-plane cross,
    i.e. the pair would intersect if ``d`` shrank to 0."""
    return inv.a1 < 0.0 < inv.b1 and inv.a2 < 0.0 < inv.b2


def lk_limit_d0(inv: SegmentPairInvariants) -> float:
    """One-sided limit of lk as d -> 0 with the sign of ``inv.d`` kept.

    Zero for pairs whose projections do not cross and ``-sign(d)/2`` for
    crossing ones.
    """
    return (
        _sign(inv.d)
        / 8.0
        * (_sign(inv.a1) - _sign(inv.b1))
        * (_sign(inv.b2) - _sign(inv.a2))
    )
