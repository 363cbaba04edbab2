"""Seeded random geometry for verification sweeps and property tests."""

from __future__ import annotations

import math

import numpy as np

from .geom import Segment, bounding_diagonal, segment_distance
from .invariants import SegmentPairInvariants, extract_invariants

__all__ = ["make_rng", "random_skew_pair", "random_invariants", "random_rotation"]


def make_rng(seed=None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_skew_pair(rng: np.random.Generator, box: float = 1.0, min_gap: float = 0.05):
    """Two segments with endpoints uniform in ``[-box, box]^3``.

    Pairs that are near-parallel, near-coplanar or closer than
    ``min_gap`` times their bounding-box diagonal are redrawn, so the
    quadrature oracles never see a near-singular integrand.
    """
    while True:
        pts = rng.uniform(-box, box, size=(4, 3))
        s1, s2 = Segment(pts[0], pts[1]), Segment(pts[2], pts[3])
        scale = bounding_diagonal(pts)
        inv = extract_invariants(s1, s2)
        if not inv.generic:
            continue
        if math.sin(inv.alpha) < min_gap or abs(inv.d) < min_gap * scale:
            continue
        if segment_distance(s1, s2) < min_gap * scale:
            continue
        return s1, s2


def random_invariants(
    rng: np.random.Generator,
    alpha_margin: float = 0.1,
    d_range=(0.1, 10.0),
    coord_bound: float = 10.0,
) -> SegmentPairInvariants:
    """Random non-parallel invariant tuple with ``|a_i|, |b_i| <= coord_bound``."""
    alpha = rng.uniform(alpha_margin, math.pi - alpha_margin)
    d = rng.uniform(*d_range) * rng.choice((-1.0, 1.0))
    a1, b1 = np.sort(rng.uniform(-coord_bound, coord_bound, size=2))
    a2, b2 = np.sort(rng.uniform(-coord_bound, coord_bound, size=2))
    return SegmentPairInvariants(alpha, d, float(a1), float(b1), float(a2), float(b2))


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Uniformly distributed rotation matrix (det = +1)."""
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q
