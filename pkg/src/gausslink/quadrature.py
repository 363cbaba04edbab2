"""
Quadrature oracles for the segment linking number
=================================================

Independent numerical routes to ``lk(L1, L2)``, used to check the closed form:

* :func:`gauss_lk_segments` integrates the Gauss double integral directly
  over the two segment parameters.
* :func:`reduced_double_integral` integrates the rescaled kernel
  ``sin(alpha) / (1 + p^2 + q^2 - 2 p q cos(alpha))^(3/2)`` over the
  invariant box ``[a1/d, b1/d] x [a2/d, b2/d]``.
* :func:`single_integral_I` is the inner integral left after integrating the
  kernel in ``q`` analytically; :func:`lk_single_integral` assembles lk
  from two evaluations of it.
* :func:`antiderivative_check` compares the single-integral integrand with a
  central difference of its arctangent antiderivative.

All integrals use Gauss-Legendre panels with adaptive dyadic subdivision.
A panel's error estimate is the difference between an order ``base_order``
and an order ``2 * base_order`` rule on it; the higher-order value is kept.
"""

from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .geom import Segment, bounding_diagonal, cross, segment_distance
from .invariants import SegmentPairInvariants, extract_invariants

__all__ = [
    "QuadratureConfig",
    "QuadratureWarning",
    "CONTACT_RTOL",
    "integrate_1d",
    "integrate_2d",
    "gauss_lk_segments",
    "reduced_double_integral",
    "single_integral_I",
    "lk_single_integral",
    "antiderivative_check",
]

#: oracles refuse segment pairs closer than this fraction of their extent
CONTACT_RTOL = 1e-9


class QuadratureWarning(RuntimeWarning):
    """Adaptive subdivision hit ``max_depth`` before meeting the tolerance."""


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_depth: int = 20
    base_order: int = 8

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("rel_tol and abs_tol must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if self.base_order < 2:
            raise ValueError("base_order must be >= 2")


DEFAULT_CONFIG = QuadratureConfig()


@lru_cache(maxsize=None)
def _rule(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    # map from [-1, 1] to [0, 1]
    return 0.5 * (x + 1.0), 0.5 * w


def _panel_1d(f, lo, hi, order):
    x_lo, w_lo = _rule(order)
    x_hi, w_hi = _rule(2 * order)
    h = hi - lo
    coarse = h * float(w_lo @ f(lo + h * x_lo))
    fine = h * float(w_hi @ f(lo + h * x_hi))
    return fine, abs(fine - coarse)


def _panel_2d(f, box, order):
    x0, x1, y0, y1 = box
    hx, hy = x1 - x0, y1 - y0
    out = []
    for n in (order, 2 * order):
        x, w = _rule(n)
        X, Y = np.meshgrid(x0 + hx * x, y0 + hy * x, indexing="ij")
        out.append(hx * hy * float(w @ f(X, Y) @ w))
    coarse, fine = out
    return fine, abs(fine - coarse)


def _adaptive(evaluate, split, root, cfg: QuadratureConfig):
    """Greedy global adaptivity: always refine the panel with the largest
    error estimate until the summed estimate meets the tolerance."""
    value, err = evaluate(root)
    # heap entries: (-err, tie-break counter, depth, panel, value, err)
    counter = 0
    heap = [(-err, counter, 0, root, value, err)]
    frozen = []
    total, total_err = value, err
    while heap:
        if total_err <= max(cfg.abs_tol, cfg.rel_tol * abs(total)):
            break
        entry = heapq.heappop(heap)
        depth, panel = entry[2], entry[3]
        if depth >= cfg.max_depth:
            frozen.append(entry)
            continue
        total -= entry[4]
        total_err -= entry[5]
        for child in split(panel):
            counter += 1
            v, e = evaluate(child)
            total += v
            total_err += e
            heapq.heappush(heap, (-e, counter, depth + 1, child, v, e))
    else:
        warnings.warn(
            f"max_depth={cfg.max_depth} reached with error estimate {total_err:.3g}",
            QuadratureWarning,
            stacklevel=3,
        )
    panels = heap + frozen
    # fixed reduction order keeps results bit-stable for a given config
    panels.sort(key=lambda e: e[3])
    return math.fsum(e[4] for e in panels), math.fsum(e[5] for e in panels)


def integrate_1d(f, lo: float, hi: float, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """Adaptive Gauss-Legendre integral of vectorised `f` over [lo, hi].

    Returns ``(value, error_estimate)``.
    """
    if lo == hi:
        return 0.0, 0.0

    def split(panel):
        a, b = panel
        m = 0.5 * (a + b)
        return (a, m), (m, b)

    return _adaptive(
        lambda p: _panel_1d(f, p[0], p[1], cfg.base_order), split, (lo, hi), cfg
    )


def integrate_2d(f, x0, x1, y0, y1, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """Adaptive tensor Gauss-Legendre integral of ``f(X, Y)`` over a box.

    Returns ``(value, error_estimate)``.
    """
    if x0 == x1 or y0 == y1:
        return 0.0, 0.0

    def split(box):
        a, b, c, d = box
        mx, my = 0.5 * (a + b), 0.5 * (c + d)
        return (a, mx, c, my), (a, mx, my, d), (mx, b, c, my), (mx, b, my, d)

    return _adaptive(
        lambda box: _panel_2d(f, box, cfg.base_order), split, (x0, x1, y0, y1), cfg
    )


def _check_contact(s1: Segment, s2: Segment):
    scale = bounding_diagonal([s1.a, s1.b, s2.a, s2.b])
    gap = segment_distance(s1, s2)
    if gap <= CONTACT_RTOL * scale:
        raise ValueError(
            f"segments touch or nearly touch (distance {gap:.3g}); "
            "the Gauss integrand is singular"
        )


def gauss_lk_segments(
    s1: Segment, s2: Segment, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> float:
    """Linking number of two segments by quadrature of the Gauss integral.

    Parameters
    ----------
    s1, s2 : Segment
        Disjoint, non-degenerate segments.
    cfg : QuadratureConfig

    Raises
    ------
    ValueError
        For degenerate segments, or segments closer than
        ``CONTACT_RTOL`` times the bounding-box diagonal of the pair.
    """
    if s1.is_degenerate or s2.is_degenerate:
        raise ValueError("degenerate segment")
    _check_contact(s1, s2)
    L1, L2 = s1.vector, s2.vector
    n = cross(L1, L2)
    r0 = s1.a - s2.a

    def integrand(T, S):
        rx = r0[0] + T * L1[0] - S * L2[0]
        ry = r0[1] + T * L1[1] - S * L2[1]
        rz = r0[2] + T * L1[2] - S * L2[2]
        num = n[0] * rx + n[1] * ry + n[2] * rz
        return num / (rx * rx + ry * ry + rz * rz) ** 1.5

    value, _ = integrate_2d(integrand, 0.0, 1.0, 0.0, 1.0, cfg)
    return value / (4.0 * math.pi)


def _check_generic(inv: SegmentPairInvariants):
    if not inv.generic:
        raise ValueError("invariants are flagged parallel or degenerate")
    if not 0.0 < inv.alpha < math.pi:
        raise ValueError(f"alpha must lie in (0, pi), got {inv.alpha}")
    if inv.d == 0.0:
        raise ValueError("the reduced integrals are undefined for d = 0")


def reduced_double_integral(
    inv: SegmentPairInvariants, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> float:
    """lk from the double integral in the rescaled coordinates p, q.

    For ``d > 0``::

        lk = -1/(4 pi) * integral over [a1/d, b1/d] x [a2/d, b2/d] of
             sin(alpha) dp dq / (1 + p^2 + q^2 - 2 p q cos(alpha))^(3/2)

    A negative ``d`` is handled by central symmetry, which keeps every
    invariant except ``d`` and flips the sign of lk.
    """
    _check_generic(inv)
    s, c = math.sin(inv.alpha), math.cos(inv.alpha)
    dist = abs(inv.d)

    def kernel(P, Q):
        return s / (1.0 + P * P + Q * Q - 2.0 * P * Q * c) ** 1.5

    value, _ = integrate_2d(
        kernel, inv.a1 / dist, inv.b1 / dist, inv.a2 / dist, inv.b2 / dist, cfg
    )
    return -math.copysign(1.0, inv.d) * value / (4.0 * math.pi)


def single_integral_I(
    r: float, inv: SegmentPairInvariants, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> float:
    """``I(r)``: integral over p in [a1/|d|, b1/|d|] of
    ``sin(alpha) (r - p cos(alpha)) / ((1 + p^2 sin^2(alpha)) sqrt(1 + p^2 + r^2 - 2 p r cos(alpha)))``.
    """
    _check_generic(inv)
    s, c = math.sin(inv.alpha), math.cos(inv.alpha)
    dist = abs(inv.d)

    def integrand(P):
        return s * (r - P * c) / ((1.0 + P * P * s * s) * np.sqrt(1.0 + P * P + r * r - 2.0 * P * r * c))

    value, _ = integrate_1d(integrand, inv.a1 / dist, inv.b1 / dist, cfg)
    return value


def lk_single_integral(
    inv: SegmentPairInvariants, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> float:
    """lk as ``sign(d) * (I(a2/|d|) - I(b2/|d|)) / (4 pi)``."""
    _check_generic(inv)
    dist = abs(inv.d)
    diff = single_integral_I(inv.a2 / dist, inv, cfg) - single_integral_I(
        inv.b2 / dist, inv, cfg
    )
    return math.copysign(1.0, inv.d) * diff / (4.0 * math.pi)


def _antiderivative(p, r, alpha):
    s, c = math.sin(alpha), math.cos(alpha)
    return math.atan((p * r * s + c / s) / math.sqrt(1.0 + p * p + r * r - 2.0 * p * r * c))


def antiderivative_check(p: float, r: float, alpha: float, h: float = 1e-5):
    """Return ``(analytic, numeric)``: the single-integral integrand at
    ``(p, r)`` and the central difference of its arctangent antiderivative
    ``arctan((p r sin(alpha) + cot(alpha)) / sqrt(1 + p^2 + r^2 - 2 p r cos(alpha)))``
    with step `h`. The two agree to O(h^2).
    """
    if not 0.0 < alpha < math.pi:
        raise ValueError(f"alpha must lie in (0, pi), got {alpha}")
    if not h > 0:
        raise ValueError("h must be positive")
    s, c = math.sin(alpha), math.cos(alpha)
    analytic = s * (r - p * c) / (
        (1.0 + p * p * s * s) * math.sqrt(1.0 + p * p + r * r - 2.0 * p * r * c)
    )
    numeric = (_antiderivative(p + h, r, alpha) - _antiderivative(p - h, r, alpha)) / (2.0 * h)
    return analytic, numeric


def oracle_values(s1: Segment, s2: Segment, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """All three quadrature estimates of lk for a generic skew pair."""
    inv = extract_invariants(s1, s2)
    return {
        "gauss": gauss_lk_segments(s1, s2, cfg),
        "reduced": reduced_double_integral(inv, cfg),
        "single": lk_single_integral(inv, cfg),
    }
