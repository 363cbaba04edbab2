import math

import numpy as np
import pytest
from hypothesis import given, settings

from gausslink import PolyLink, Segment, cross, dot, edges, segment_distance, triple
from gausslink.geom import as_vec3, bounding_diagonal

from conftest import brute_distance, point


@given(point, point, point)
def test_triple_cyclic_and_transposition(u, v, w):
    t = triple(u, v, w)
    scale = 1e-12 * max(1.0, np.linalg.norm(u) * np.linalg.norm(v) * np.linalg.norm(w))
    assert triple(v, w, u) == pytest.approx(t, abs=scale)
    assert triple(w, u, v) == pytest.approx(t, abs=scale)
    assert triple(v, u, w) == pytest.approx(-t, abs=scale)


def test_vector_helpers_match_numpy():
    u, v = np.array([1.0, 2.0, 3.0]), np.array([-4.0, 0.5, 2.0])
    assert dot(u, v) == pytest.approx(np.dot(u, v))
    np.testing.assert_allclose(cross(u, v), np.cross(u, v))
    assert triple(u, v, np.array([0.0, 0, 1])) == pytest.approx(np.cross(u, v)[2])


@pytest.mark.parametrize("bad", [(1, 2), (1, 2, 3, 4), (0, math.nan, 0), (math.inf, 0, 0)])
def test_as_vec3_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        as_vec3(bad)


def test_segment_basics():
    s = Segment((0, 0, 0), (3, 4, 0))
    assert s.length == 5.0
    np.testing.assert_array_equal(s.point(0.5), [1.5, 2, 0])
    assert s.reversed() == Segment((3, 4, 0), (0, 0, 0))
    assert s.translated((1, 1, 1)) == Segment((1, 1, 1), (4, 5, 1))
    assert hash(s) == hash(Segment((0.0, 0.0, 0.0), (3.0, 4.0, 0.0)))
    assert Segment((1, 1, 1), (1, 1, 1)).is_degenerate
    assert not s.is_degenerate


def test_segment_transformed_rotates_then_shifts():
    rot = np.array([[0.0, -1, 0], [1, 0, 0], [0, 0, 1]])
    s = Segment((1, 0, 0), (2, 0, 0)).transformed(rot, (0, 0, 1))
    assert s == Segment((0, 1, 1), (0, 2, 1))


def test_edges_closed_and_open():
    square = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
    e1, e2 = edges(PolyLink(square, square, True, False))
    assert len(e1) == 4 and len(e2) == 3
    assert e1[-1] == Segment((0, 1, 0), (0, 0, 0))


def test_edges_drop_zero_length():
    comp = [(0, 0, 0), (1, 0, 0), (1, 0, 0), (0, 1, 0)]
    e1, e2, dropped = edges(PolyLink(comp, comp), return_dropped=True)
    assert len(e1) == 3 and dropped == (1, 1)


def test_polylink_swapped_and_validation():
    a = [(0, 0, 0), (1, 0, 0)]
    b = [(0, 0, 1), (0, 1, 1), (1, 1, 1)]
    link = PolyLink(a, b, closed1=False)
    sw = link.swapped()
    np.testing.assert_array_equal(sw.comp1, link.comp2)
    assert sw.closed2 is False
    with pytest.raises(ValueError):
        PolyLink([(0, 0, 0)], b)


def test_bounding_diagonal():
    assert bounding_diagonal([(0, 0, 0), (1, 2, 2)]) == 3.0


@pytest.mark.parametrize(
    "s1, s2, expected",
    [
        (Segment((0, 0, 0), (1, 0, 0)), Segment((0, 0, 1), (0, 1, 1)), 1.0),
        (Segment((-1, 0, 0), (1, 0, 0)), Segment((0, -1, 0), (0, 1, 0)), 0.0),
        (Segment((0, 0, 0), (1, 0, 0)), Segment((3, 0, 0), (4, 0, 0)), 2.0),
        (Segment((0, 0, 0), (1, 0, 0)), Segment((0, 2, 0), (1, 2, 0)), 2.0),
        (Segment((0, 0, 0), (0, 0, 0)), Segment((3, 4, 0), (3, 4, 0)), 5.0),
    ],
)
def test_segment_distance_known(s1, s2, expected):
    assert segment_distance(s1, s2) == pytest.approx(expected, abs=1e-15)


@settings(max_examples=50, deadline=None)
@given(point, point, point, point)
def test_segment_distance_matches_sampling(a1, b1, a2, b2):
    s1, s2 = Segment(a1, b1), Segment(a2, b2)
    d = segment_distance(s1, s2)
    brute = brute_distance(s1, s2)
    # sampling only ever overestimates, by at most half a grid step on each segment
    slack = (s1.length + s2.length) / 800 + 1e-9
    assert d <= brute + 1e-9
    assert brute - d <= slack
    assert segment_distance(s2, s1) == pytest.approx(d, abs=1e-12)
