"""
Periodic linking numbers
========================

Sum of the linking numbers between a fixed probe segment and every
translated copy of a unit cell of segments, over the finite lattice of
translations ``c1 v1 + ... + ck vk`` with ``-n <= ci <= n``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .closed_form import lk_segments
from .geom import Segment, as_vec3, bounding_diagonal, segment_distance

__all__ = [
    "CONTACT_RTOL",
    "LatticeSpec",
    "ConvergenceRow",
    "reference_lattice",
    "generate_lattice",
    "periodic_lk",
    "convergence_scan",
]

CONTACT_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class LatticeSpec:
    """Probe segment, unit cell and translation vectors of a finite lattice.

    `directions` holds k = 1, 2 or 3 linearly independent translation
    vectors; copies are indexed symmetrically by ``-n..n`` along each.
    """

    probe: Segment
    cell: tuple
    directions: np.ndarray
    n: int = 0

    def __post_init__(self):
        dirs = np.atleast_2d(np.asarray(self.directions, dtype=float))
        if dirs.shape[1] != 3 or not 1 <= len(dirs) <= 3:
            raise ValueError("need 1 to 3 translation vectors in R^3")
        for v in dirs:
            as_vec3(v)
        sv = np.linalg.svd(dirs, compute_uv=False)
        if sv[-1] <= 1e-12 * sv[0]:
            raise ValueError("translation vectors are linearly dependent")
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n}")
        if not self.cell:
            raise ValueError("empty unit cell")
        object.__setattr__(self, "directions", dirs)
        object.__setattr__(self, "cell", tuple(self.cell))
        object.__setattr__(self, "n", int(self.n))

    @property
    def k(self) -> int:
        return len(self.directions)

    def with_n(self, n: int) -> "LatticeSpec":
        return LatticeSpec(self.probe, self.cell, self.directions, n)

    def translated(self, shift) -> "LatticeSpec":
        return LatticeSpec(
            self.probe.translated(shift),
            tuple(s.translated(shift) for s in self.cell),
            self.directions,
            self.n,
        )


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    partial_lk: float
    delta_vs_previous: float


def reference_lattice(k: int, n: int = 0, step: float = 4.0) -> LatticeSpec:
    """Probe ``(0,0,-1) -> (0,0,1)`` against a cell of two antiparallel unit
    segments at ``x = +1`` and ``x = -1``, both orthogonal to the probe.

    Translation vectors are ``step`` times the unit vectors along x, z, y,
    taking the first `k`. With the default ``step = 4`` the copies along x
    form an evenly spaced array of alternately oriented segments, 2 apart.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    probe = Segment((0, 0, -1), (0, 0, 1))
    cell = (Segment((1, -1, 0), (1, 1, 0)), Segment((-1, 1, 0), (-1, -1, 0)))
    axes = np.array([[1.0, 0, 0], [0, 0, 1.0], [0, 1.0, 0]])
    return LatticeSpec(probe, cell, step * axes[:k], n)


def _offsets(k: int, n: int) -> np.ndarray:
    return np.array(list(itertools.product(range(-n, n + 1), repeat=k)), dtype=float).reshape(-1, k)


def generate_lattice(spec: LatticeSpec) -> list:
    """Every cell segment translated by every lattice offset.

    Offsets are enumerated lexicographically; the list has
    ``len(spec.cell) * (2 n + 1) ** k`` entries.
    """
    shifts = _offsets(spec.k, spec.n) @ spec.directions
    return [seg.translated(shift) for shift in shifts for seg in spec.cell]


def _copy_values(spec: LatticeSpec):
    scale = bounding_diagonal([p for s in (spec.probe, *spec.cell) for p in (s.a, s.b)])
    offsets = _offsets(spec.k, spec.n)
    shells = np.abs(offsets).max(axis=1).astype(int) if len(offsets) else np.zeros(0, int)
    values, shell_of = [], []
    for off, shell in zip(offsets, shells):
        shift = off @ spec.directions
        for seg in spec.cell:
            copy = seg.translated(shift)
            if segment_distance(spec.probe, copy) <= CONTACT_RTOL * scale:
                raise ValueError(f"probe touches the copy of {seg} shifted by {shift.tolist()}")
            values.append(lk_segments(spec.probe, copy).value)
            shell_of.append(shell)
    return np.array(values), np.array(shell_of, dtype=int)


def periodic_lk(spec: LatticeSpec) -> float:
    """Sum of lk(probe, copy) over all generated copies.

    Raises
    ------
    ValueError
        If the probe touches any copy.
    """
    values, _ = _copy_values(spec)
    return math.fsum(values)


def convergence_scan(spec: LatticeSpec, n_max: int) -> list:
    """Partial periodic linking numbers for n = 0..n_max.

    Each copy is evaluated once; the partial sum for ``n`` is the correctly
    rounded sum over copies with ``max|ci| <= n``, so it equals
    ``periodic_lk(spec.with_n(n))`` exactly. The delta of the first row is
    taken against an empty lattice.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values, shells = _copy_values(spec.with_n(n_max))
    rows, previous = [], 0.0
    for n in range(n_max + 1):
        partial = math.fsum(values[shells <= n])
        rows.append(ConvergenceRow(n, partial, partial - previous))
        previous = partial
    return rows
