"""
Isometry invariants of a pair of oriented segments
==================================================

Two oriented segments in general position are fixed up to a rigid motion by
six numbers:

``alpha``
    angle in [0, pi] between the direction vectors.
``d``
    signed distance between the parallel planes carrying the segments,
    positive when ``(L1, L2, O1O2)`` is a right-handed frame.
``a1, b1, a2, b2``
    coordinates of the initial and final endpoints along each carrier line,
    measured from the foot ``O_i`` of the common perpendicular.

The canonical placement puts segment ``i`` in the plane ``z = (-1)**i d/2``
with the x-axis bisecting the projected angle, see
:func:`reconstruct_segments`.

Swapping the two segments keeps ``alpha`` and ``d`` and exchanges
``(a1, b1)`` with ``(a2, b2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geom import Segment, cross, dot

__all__ = [
    "PARALLEL_RTOL",
    "SegmentPairInvariants",
    "extract_invariants",
    "reconstruct_segments",
]

#: |L1 x L2| <= PARALLEL_RTOL * l1 * l2 counts as parallel
PARALLEL_RTOL = 1e-12

_NAN = float("nan")


@dataclass(frozen=True)
class SegmentPairInvariants:
    alpha: float
    d: float
    a1: float
    b1: float
    a2: float
    b2: float
    parallel: bool = False
    degenerate1: bool = False
    degenerate2: bool = False

    @property
    def l1(self) -> float:
        return self.b1 - self.a1

    @property
    def l2(self) -> float:
        return self.b2 - self.a2

    @property
    def degenerate(self) -> bool:
        return self.degenerate1 or self.degenerate2

    @property
    def generic(self) -> bool:
        """True when all six numeric fields carry a contract."""
        return not (self.parallel or self.degenerate)

    def as_tuple(self):
        return (self.alpha, self.d, self.a1, self.b1, self.a2, self.b2)

    def swapped(self) -> "SegmentPairInvariants":
        """Invariants of the pair taken in the opposite order."""
        return SegmentPairInvariants(
            self.alpha,
            self.d,
            self.a2,
            self.b2,
            self.a1,
            self.b1,
            self.parallel,
            self.degenerate2,
            self.degenerate1,
        )


def extract_invariants(s1: Segment, s2: Segment) -> SegmentPairInvariants:
    """Compute ``(alpha, d, a1, b1, a2, b2)`` from segment endpoints.

    Parameters
    ----------
    s1, s2 : Segment
        Oriented segments ``A1 -> B1`` and ``A2 -> B2``.

    Returns
    -------
    SegmentPairInvariants
        For a zero-length segment the matching ``degenerate`` flag is set and
        every numeric field is NaN. For (anti)parallel directions, with
        ``|L1 x L2| <= PARALLEL_RTOL * l1 * l2``, only ``alpha`` and the
        lengths are meaningful; ``d`` is NaN and the endpoint coordinates
        are ``0, l1, 0, l2``.
    """
    L1 = s1.vector
    L2 = s2.vector
    l1 = math.sqrt(dot(L1, L1))
    l2 = math.sqrt(dot(L2, L2))
    if l1 == 0.0 or l2 == 0.0:
        return SegmentPairInvariants(
            _NAN, _NAN, _NAN, _NAN, _NAN, _NAN,
            degenerate1=(l1 == 0.0),
            degenerate2=(l2 == 0.0),
        )

    n = cross(L1, L2)
    n_norm = math.sqrt(dot(n, n))
    # atan2 stays accurate near 0 and pi where arccos of the cosine does not
    alpha = math.atan2(n_norm, dot(L1, L2))
    if n_norm <= PARALLEL_RTOL * l1 * l2:
        return SegmentPairInvariants(alpha, _NAN, 0.0, l1, 0.0, l2, parallel=True)

    X = s2.a - s1.a
    d = dot(n, X) / n_norm
    c = math.cos(alpha)
    sin2 = math.sin(alpha) ** 2
    e1x = dot(L1, X) / l1
    e2x = dot(L2, X) / l2
    a1 = (c * e2x - e1x) / sin2
    a2 = (e2x - c * e1x) / sin2
    return SegmentPairInvariants(alpha, d, a1, a1 + l1, a2, a2 + l2)


def _canonical_point(coord, alpha, d, i):
    sign = -1.0 if i == 1 else 1.0
    return np.array(
        [
            coord * math.cos(alpha / 2),
            sign * coord * math.sin(alpha / 2),
            sign * d / 2,
        ]
    )


def reconstruct_segments(inv: SegmentPairInvariants):
    """Canonical placement realising `inv`.

    Segment ``i`` is the image of ``t in [0, 1]`` under
    ``((a_i + l_i t) cos(alpha/2), (-1)**i (a_i + l_i t) sin(alpha/2), (-1)**i d/2)``.

    Raises
    ------
    ValueError
        If `inv` is flagged parallel or degenerate, or alpha is outside (0, pi).
    """
    if not inv.generic:
        raise ValueError("no canonical placement for parallel or degenerate invariants")
    if not 0.0 < inv.alpha < math.pi:
        raise ValueError(f"alpha must lie in (0, pi), got {inv.alpha}")
    if inv.l1 < 0 or inv.l2 < 0:
        raise ValueError("endpoint coordinates must satisfy b_i >= a_i")
    s1 = Segment(
        _canonical_point(inv.a1, inv.alpha, inv.d, 1),
        _canonical_point(inv.b1, inv.alpha, inv.d, 1),
    )
    s2 = Segment(
        _canonical_point(inv.a2, inv.alpha, inv.d, 2),
        _canonical_point(inv.b2, inv.alpha, inv.d, 2),
    )
    return s1, s2
