"""
3D vector and segment primitives
================================

Points and vectors are plain ``numpy`` arrays of shape ``(3,)``. Segments and
two-component polygonal links are small frozen dataclasses on top of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "as_vec3",
    "dot",
    "cross",
    "triple",
    "Segment",
    "PolyLink",
    "edges",
    "segment_distance",
    "bounding_diagonal",
    "DEGENERATE_EDGE_RTOL",
]

#: edges shorter than this fraction of the bounding-box diagonal are dropped
DEGENERATE_EDGE_RTOL = 1e-14


def as_vec3(v) -> np.ndarray:
    """Return `v` as a finite float array of shape (3,), or raise ValueError."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"non-finite vector component in {arr}")
    return arr


def dot(u, v) -> float:
    return float(u[0] * v[0] + u[1] * v[1] + u[2] * v[2])


def cross(u, v) -> np.ndarray:
    return np.array(
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ],
        dtype=float,
    )


def triple(u, v, w) -> float:
    """Signed volume ``(u x v) . w`` of the parallelepiped spanned by u, v, w."""
    return dot(cross(u, v), w)


@dataclass(frozen=True, eq=False)
class Segment:
    """Oriented straight segment from initial endpoint `a` to final endpoint `b`."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", as_vec3(self.a))
        object.__setattr__(self, "b", as_vec3(self.b))

    @property
    def vector(self) -> np.ndarray:
        return self.b - self.a

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.b - self.a))

    @property
    def is_degenerate(self) -> bool:
        return self.length == 0.0

    def point(self, t):
        """Point(s) at parameter `t` in [0, 1]; `t` may be an array."""
        t = np.asarray(t, dtype=float)
        return self.a + t[..., None] * (self.b - self.a)

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def translated(self, shift) -> "Segment":
        shift = as_vec3(shift)
        return Segment(self.a + shift, self.b + shift)

    def transformed(self, matrix, shift=(0.0, 0.0, 0.0)) -> "Segment":
        """Apply ``v -> matrix @ v + shift`` to both endpoints."""
        m = np.asarray(matrix, dtype=float)
        shift = as_vec3(shift)
        return Segment(m @ self.a + shift, m @ self.b + shift)

    def __eq__(self, other):
        if not isinstance(other, Segment):
            return NotImplemented
        return np.array_equal(self.a, other.a) and np.array_equal(self.b, other.b)

    def __hash__(self):
        return hash((tuple(self.a), tuple(self.b)))

    def __repr__(self):
        return f"Segment({self.a.tolist()} -> {self.b.tolist()})"


def _vertex_array(vertices) -> np.ndarray:
    arr = np.asarray(vertices, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"vertex list must have shape (V, 3), got {arr.shape}")
    if len(arr) < 2:
        raise ValueError(f"a component needs at least 2 vertices, got {len(arr)}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite vertex coordinate")
    return arr


@dataclass(frozen=True, eq=False)
class PolyLink:
    """Two polygonal components given as ordered vertex lists.

    A closed component with V vertices has V edges (the wrap-around edge
    from the last vertex back to the first is included); an open one has
    V - 1 edges.
    """

    comp1: np.ndarray
    comp2: np.ndarray
    closed1: bool = True
    closed2: bool = True
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "comp1", _vertex_array(self.comp1))
        object.__setattr__(self, "comp2", _vertex_array(self.comp2))
        object.__setattr__(self, "closed1", bool(self.closed1))
        object.__setattr__(self, "closed2", bool(self.closed2))

    @property
    def components(self):
        return ((self.comp1, self.closed1), (self.comp2, self.closed2))

    def transformed(self, matrix, shift=(0.0, 0.0, 0.0)) -> "PolyLink":
        m = np.asarray(matrix, dtype=float)
        shift = as_vec3(shift)
        return PolyLink(
            self.comp1 @ m.T + shift,
            self.comp2 @ m.T + shift,
            self.closed1,
            self.closed2,
            self.name,
        )

    def swapped(self) -> "PolyLink":
        return PolyLink(self.comp2, self.comp1, self.closed2, self.closed1, self.name)


def bounding_diagonal(points) -> float:
    pts = np.asarray(points, dtype=float).reshape(-1, 3)
    return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))


def _component_edges(vertices: np.ndarray, closed: bool, min_length: float):
    ends = np.roll(vertices, -1, axis=0)
    n_edges = len(vertices) if closed else len(vertices) - 1
    kept, dropped = [], 0
    for i in range(n_edges):
        seg = Segment(vertices[i], ends[i])
        if seg.length <= min_length:
            dropped += 1
            continue
        kept.append(seg)
    return kept, dropped


def edges(link: PolyLink, return_dropped: bool = False):
    """Oriented edge lists of both components of `link`.

    Edge orientation follows vertex order. Zero-length edges (below
    ``DEGENERATE_EDGE_RTOL`` times the bounding-box diagonal of the whole
    link) are filtered out.

    Parameters
    ----------
    link : PolyLink
    return_dropped : bool
        Also return the number of filtered edges per component.

    Returns
    -------
    (edges1, edges2) or (edges1, edges2, (dropped1, dropped2))
    """
    diag = bounding_diagonal(np.vstack([link.comp1, link.comp2]))
    min_length = DEGENERATE_EDGE_RTOL * diag
    e1, d1 = _component_edges(link.comp1, link.closed1, min_length)
    e2, d2 = _component_edges(link.comp2, link.closed2, min_length)
    if return_dropped:
        return e1, e2, (d1, d2)
    return e1, e2


def segment_distance(s1: Segment, s2: Segment) -> float:
    """Minimum Euclidean distance between two closed segments.

    Clamped closest-point computation on the two parameter intervals;
    handles parallel and degenerate segments.
    """
    d1 = s1.b - s1.a
    d2 = s2.b - s2.a
    r = s1.a - s2.a
    a = dot(d1, d1)
    e = dot(d2, d2)
    f = dot(d2, r)
    if a == 0.0 and e == 0.0:
        return float(np.linalg.norm(r))
    if a == 0.0:
        s, t = 0.0, min(max(f / e, 0.0), 1.0)
    else:
        c = dot(d1, r)
        if e == 0.0:
            t, s = 0.0, min(max(-c / a, 0.0), 1.0)
        else:
            b = dot(d1, d2)
            denom = a * e - b * b
            s = min(max((b * f - c * e) / denom, 0.0), 1.0) if denom > 0.0 else 0.0
            t = (b * s + f) / e
            if t < 0.0:
                t, s = 0.0, min(max(-c / a, 0.0), 1.0)
            elif t > 1.0:
                t, s = 1.0, min(max((b - c) / a, 0.0), 1.0)
    return float(np.linalg.norm((s1.a + s * d1) - (s2.a + t * d2)))

