"""Exact arithmetic of hikes: the trace monoid of simple cycles of a digraph,
its incidence algebra and the identities linking it to matrix polynomials."""

from .arithmetic import (
    abs_mobius,
    big_omega,
    check_additive_mobius,
    check_multiplicative_inverse,
    length,
    liouville,
    mangoldt_by_contiguity,
    mangoldt_by_convolution,
    small_omega,
    tau,
    weight_monomial,
)
from .cospectral import (
    expand_pathsum,
    hike_structure_equal,
    intersection_slide_check,
    same_nonzero_spectrum,
)
from .errors import (
    CapConfigError,
    CatalogMismatchError,
    GraphFormatError,
    HikeForgeError,
    InternalConsistencyError,
    NotInvertibleError,
    SizeCapError,
)
from .graph import (
    Digraph,
    SimpleGraph,
    adjacency_trace_powers,
    char_poly,
    dump_digraph,
    load_digraph,
    permanental_poly,
)
from .hikes import (
    Hike,
    enumerate_hikes,
    hike_from_primes,
    is_self_avoiding,
    is_walk,
    left_divide,
    left_divisors,
    multiply,
)
from .identities import (
    brute_force_orbits,
    check_det_mobius,
    check_ihara_factorization,
    check_lambert_resolvent,
    check_macmahon,
    check_perm_liouville,
    check_trace_mangoldt,
    primitive_orbit_counts,
)
from .incidence import HikeSeries, convolve, delta, mobius, one, series_invert, series_multiply, series_of
from .isomorphism import digraphs_isomorphic, graphs_isomorphic
from .kernels import BACKEND
from .ntbridge import check_nt_isomorphism, disjoint_cycles_graph
from .polys import IntPoly, TruncatedMultiSeries
from .primes import Prime, PrimeCatalog, enumerate_primes, independence_graph
from .reconstruction import (
    dependence_graph,
    equivalence_classes,
    identify_backtracks,
    line_graph_inverse,
    reconstruct,
    reconstruct_with_lengths,
)
from .reports import CheckReport

__version__ = "0.1.0"
