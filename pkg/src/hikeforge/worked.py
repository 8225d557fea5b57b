"""Curated worked examples, each turned into an exact check."""

from __future__ import annotations

from .arithmetic import mangoldt_by_contiguity, mangoldt_by_convolution
from .cospectral import characteristic_polynomial, expand_pathsum, intersection_slide_check, same_nonzero_spectrum
from .fixtures import (
    WORKED_BACKTRACKS,
    WORKED_CLASS_SIZES,
    backtrack_and_triangle,
    bidirected_c5,
    loop_backtrack,
    loop_backtrack_expanded,
    slide_pair,
    worked_gamma,
    worked_root,
)
from .hikes import Hike, hike_from_primes
from .incidence import mobius, series_of
from .isomorphism import digraphs_isomorphic, graphs_isomorphic
from .polys import IntPoly
from .primes import enumerate_primes
from .reconstruction import equivalence_classes, identify_backtracks, reconstruct
from .reports import CheckReport

C5_PAIRS = ("ac", "ad", "bd", "be", "ce")


def c5_mobius_series(bound: int = 10) -> CheckReport:
    """Mobius series of the bidirected 5-cycle: 1, minus the seven primes,
    plus the five disjoint backtrack pairs."""
    cat = enumerate_primes(bidirected_c5())
    if len(cat) != 7:
        return CheckReport("c5-mobius", bound, False, counterexample={"primes": len(cat)})
    expected: dict[Hike, int] = {Hike.one(cat): 1}
    for i in range(7):
        expected[hike_from_primes(cat, [i])] = -1
    for pair in C5_PAIRS:
        expected[hike_from_primes(cat, [ord(ch) - ord("a") for ch in pair])] = 1
    got = series_of(mobius, cat, bound).support()
    if got != expected:
        diff = sorted(str(h) for h in set(got) ^ set(expected) | {h for h in got if got[h] != expected.get(h)})
        return CheckReport("c5-mobius", bound, False, len(got), {"differing": diff})
    return CheckReport("c5-mobius", bound, True, len(got))


def mangoldt_example() -> CheckReport:
    cat = enumerate_primes(backtrack_and_triangle())
    p1p2 = hike_from_primes(cat, [0, 1])
    p2p1 = hike_from_primes(cat, [1, 0])
    values = {
        "p1p2 convolution": mangoldt_by_convolution(p1p2),
        "p1p2 contiguity": mangoldt_by_contiguity(p1p2),
        "p2p1 convolution": mangoldt_by_convolution(p2p1),
        "p2p1 contiguity": mangoldt_by_contiguity(p2p1),
    }
    want = {"p1p2 convolution": 3, "p1p2 contiguity": 3, "p2p1 convolution": 2, "p2p1 contiguity": 2}
    ok = values == want and p1p2 != p2p1
    return CheckReport("mangoldt-example", 5, ok, 4, None if ok else values, values)


def reconstruction_example(class_sizes: tuple[int, ...] = WORKED_CLASS_SIZES) -> CheckReport:
    gamma = worked_gamma()
    sizes = tuple(len(c.members) for c in equivalence_classes(gamma))
    backtracks = tuple(identify_backtracks(gamma))
    result = reconstruct(gamma)
    root_ok = result.outcome == "unique" and graphs_isomorphic(result.graph.to_simple_graph(), worked_root())
    details = {"class_sizes": list(sizes), "backtracks": list(backtracks), "root_matches": root_ok}
    ok = sizes == tuple(class_sizes) and backtracks == WORKED_BACKTRACKS and root_ok
    return CheckReport("reconstruction-example", gamma.n, ok, 3, None if ok else details, details)


def slide_example() -> CheckReport:
    left, right = slide_pair()
    return intersection_slide_check(left, right)


def expansion_example() -> CheckReport:
    small = loop_backtrack()
    big = expand_pathsum(small, (1,), (0, 1), 1)
    char_small, char_big = characteristic_polynomial(small), characteristic_polynomial(big)
    details = {
        "vertices": big.n,
        "matches_expected_graph": digraphs_isomorphic(big, loop_backtrack_expanded()),
        "same_nonzero_spectrum": same_nonzero_spectrum(small, big),
        "char_small": char_small.to_json(),
        "char_big": char_big.to_json(),
        "char_big_is_z2_times_small": char_big == char_small * IntPoly.monomial(2),
        "det_small_is_1_z_z2": char_small == IntPoly([-1, -1, 1]),
    }
    ok = big.n == 4 and all(v for k, v in details.items() if isinstance(v, bool))
    return CheckReport("expansion-example", 4, ok, len(details), None if ok else details, details)


def run_worked_examples() -> list[CheckReport]:
    return [c5_mobius_series(), mangoldt_example(), reconstruction_example(), slide_example(), expansion_example()]
