"""Gauss linking number of straight segments and polygonal links."""

from .geom import PolyLink, Segment, cross, dot, edges, segment_distance, triple
from .invariants import SegmentPairInvariants, extract_invariants, reconstruct_segments
from .closed_form import (
    Branch,
    LkResult,
    at_term,
    lk_from_invariants,
    lk_segments,
    lk_simple_orthogonal,
)
from .quadrature import (
    QuadratureConfig,
    antiderivative_check,
    gauss_lk_segments,
    lk_single_integral,
    reduced_double_integral,
    single_integral_I,
)

from .links import EXPECTED_LK, LinkIntersectionError, LinkReport, builtin_links, lk_link
from .linkfile import LinkFileError, read_link, write_link
from .periodic import LatticeSpec, convergence_scan, generate_lattice, periodic_lk, reference_lattice

__version__ = "0.1.0"
