import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy import integrate

from gausslink import (
    Branch,
    Segment,
    SegmentPairInvariants,
    at_term,
    extract_invariants,
    lk_from_invariants,
    lk_segments,
    lk_simple_orthogonal,
)
from gausslink.closed_form import lk_limit_d0, projections_cross
from gausslink.sampling import make_rng, random_rotation, random_skew_pair

from conftest import skew_pairs


def scipy_gauss(s1, s2):
    """Gauss double integral by scipy's adaptive quadrature."""
    L1, L2 = s1.vector, s2.vector
    n = np.cross(L1, L2)

    def f(s, t):
        r = s1.point(t) - s2.point(s)
        return n @ r / np.linalg.norm(r) ** 3

    val, _ = integrate.dblquad(f, 0, 1, 0, 1, epsabs=1e-13, epsrel=1e-13)
    return val / (4 * math.pi)


def test_unit_orthogonal_pair_is_minus_one_24th(simple_pair):
    assert lk_segments(*simple_pair).value == pytest.approx(-1 / 24, abs=1e-15)
    assert lk_simple_orthogonal(1, 1, 1) == pytest.approx(-1 / 24, abs=1e-15)


@pytest.mark.parametrize("seed", range(8))
def test_against_scipy_dblquad(seed):
    s1, s2 = random_skew_pair(make_rng(seed))
    assert lk_segments(s1, s2).value == pytest.approx(scipy_gauss(s1, s2), abs=1e-10)


@settings(max_examples=100)
@given(st.floats(0.01, 100), st.floats(0.01, 100), st.floats(0.01, 100))
def test_simple_orthogonal_matches_general_formula(l1, l2, d):
    inv = SegmentPairInvariants(math.pi / 2, d, 0.0, l1, 0.0, l2)
    assert lk_simple_orthogonal(l1, l2, d) == pytest.approx(lk_from_invariants(inv).value, abs=1e-15)
    assert -1 / 8 < lk_simple_orthogonal(l1, l2, d) < 0


def test_simple_orthogonal_rejects_nonpositive():
    with pytest.raises(ValueError):
        lk_simple_orthogonal(0, 1, 1)


def test_at_term_special_cases():
    assert at_term(1, 2, 3, 0.0) == math.pi / 2
    assert at_term(1, 2, -3, math.pi) == -math.pi / 2
    assert at_term(1, 2, 0.0, 1.0) == 0.0
    with pytest.raises(ValueError):
        at_term(math.nan, 1, 1, 1)


@settings(max_examples=100)
@given(st.floats(0.05, math.pi - 0.05), st.floats(1e4, 1e8), st.sampled_from([-1.0, 1.0]))
def test_at_term_boundary_line_far_away(alpha, dist, sign):
    # at a = 0 and |d| >> b the surface approaches sign(d) (pi/2 - alpha)
    d = sign * dist
    assert at_term(0.0, 1.0, d, alpha) == pytest.approx(sign * (math.pi / 2 - alpha), abs=1e-3)


def test_branches():
    s1 = Segment((0, 0, 0), (1, 0, 0))
    assert lk_segments(s1, Segment((0, 1, 0), (2, 1, 0))).branch is Branch.PARALLEL
    assert lk_segments(s1, Segment((0, 1, 0), (0, 2, 0))).branch is Branch.COPLANAR_D0
    assert lk_segments(s1, Segment((5, 5, 5), (5, 5, 5))).branch is Branch.DEGENERATE
    res = lk_segments(s1, Segment((0, 0, 1), (0, 1, 1)))
    assert res.branch is Branch.GENERIC and float(res) == res.value


@settings(max_examples=200)
@given(skew_pairs())
def test_symmetry_is_exact(pair):
    s1, s2 = pair
    assert lk_segments(s1, s2).value == lk_segments(s2, s1).value


@settings(max_examples=200)
@given(skew_pairs())
def test_reversal_antisymmetry(pair):
    s1, s2 = pair
    lk = lk_segments(s1, s2).value
    assert lk_segments(s1.reversed(), s2).value == pytest.approx(-lk, abs=1e-12)
    assert lk_segments(s1, s2.reversed()).value == pytest.approx(-lk, abs=1e-12)
    assert lk_segments(s1.reversed(), s2.reversed()).value == pytest.approx(lk, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(skew_pairs(), st.floats(1e-3, 1e3), st.integers(0, 2**32 - 1))
def test_similarity_invariance(pair, lam, seed):
    s1, s2 = pair
    rng = make_rng(seed)
    rot, shift = random_rotation(rng), rng.uniform(-10, 10, 3)
    lk = lk_segments(s1, s2).value
    moved = lk_segments(s1.transformed(lam * rot, shift), s2.transformed(lam * rot, shift)).value
    assert moved == pytest.approx(lk, rel=1e-10, abs=1e-13)


@settings(max_examples=200)
@given(skew_pairs())
def test_mirror_negates(pair):
    s1, s2 = pair
    m = np.diag([-1.0, 1.0, 1.0])
    assert lk_segments(s1.transformed(m), s2.transformed(m)).value == pytest.approx(
        -lk_segments(s1, s2).value, abs=1e-12
    )


@settings(max_examples=300)
@given(skew_pairs(min_gap=1e-3))
def test_bound_and_sign(pair):
    s1, s2 = pair
    inv = extract_invariants(s1, s2)
    lk = lk_from_invariants(inv).value
    assert abs(lk) < 0.5
    assert np.sign(lk) == -np.sign(inv.d)


@settings(max_examples=200)
@given(
    st.floats(0.1, math.pi - 0.1),
    st.lists(st.floats(-5, 5).filter(lambda x: abs(x) > 0.05), min_size=4, max_size=4),
    st.sampled_from([1.0, -1.0]),
)
def test_d_to_zero_limit(alpha, coords, sign):
    a1, b1 = sorted(coords[:2])
    a2, b2 = sorted(coords[2:])
    assume(b1 - a1 > 0.05 and b2 - a2 > 0.05)
    inv = SegmentPairInvariants(alpha, sign * 1e-9, a1, b1, a2, b2)
    lim = lk_limit_d0(inv)
    assert lk_from_invariants(inv).value == pytest.approx(lim, abs=1e-6)
    assert (lim != 0) == projections_cross(inv)


@settings(max_examples=100)
@given(skew_pairs())
def test_vanishes_far_away(pair):
    s1, s2 = pair
    far = s2.translated(1e7 * (s2.a - s1.a) / np.linalg.norm(s2.a - s1.a))
    assert abs(lk_segments(s1, far).value) < 1e-10


def test_coplanar_result_is_exact_zero():
    inv = SegmentPairInvariants(1.0, 1e-15, -1, 1, -1, 1)
    res = lk_from_invariants(inv)
    assert res.value == 0.0 and res.branch is Branch.COPLANAR_D0
