import random

import pytest
from hypothesis import given, strategies as st

from hikeforge.errors import InternalConsistencyError, SizeCapError
from hikeforge.fixtures import bidirected_c5, random_connected_digraph
from hikeforge.graph import Digraph, SimpleGraph
from hikeforge.identities import (
    OrbitCounts,
    backtrackless_orbit_counts,
    brute_force_orbits,
    check_det_mobius,
    check_ihara_factorization,
    check_lambert_resolvent,
    check_macmahon,
    check_perm_liouville,
    check_trace_mangoldt,
    euler_product,
    macmahon_determinant,
    orbits_from_traces,
    primitive_orbit_counts,
    run_suite,
)
from hikeforge.polys import IntPoly


@st.composite
def random_digraphs(draw, sizes=(2, 3, 4)):
    rng = random.Random(draw(st.integers(0, 2**32)))
    n = draw(st.sampled_from(sizes))
    return random_connected_digraph(rng, n, 0.35, 0.2)


@st.composite
def random_bidirected(draw, sizes=(2, 3, 4, 5)):
    rng = random.Random(draw(st.integers(0, 2**32)))
    n = draw(st.sampled_from(sizes))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    return Digraph.from_edges(n, edges)


class TestDeterminantAndPermanent:
    def test_k3(self, k3):
        assert check_det_mobius(k3, 6).passed
        assert check_perm_liouville(k3, 6).passed

    @given(random_digraphs())
    def test_random(self, g):
        assert check_det_mobius(g, 7).passed
        assert check_perm_liouville(g, 7).passed

    def test_labeled_part_runs(self, k3):
        report = check_det_mobius(k3, 4)
        assert report.details == {"det-mobius/length": True, "det-mobius/labeled": True}

    def test_macmahon_polynomial(self):
        # single loop on vertex 0: det(I - AT) = 1 - t0
        det = macmahon_determinant(Digraph.from_arcs(1, [(0, 0)]), 3)
        assert det.terms == {(0,): 1, (1,): -1}

    @given(random_digraphs(sizes=(2, 3)))
    def test_macmahon(self, g):
        assert check_macmahon(g, 4).passed

    def test_macmahon_cap(self):
        with pytest.raises(SizeCapError):
            macmahon_determinant(Digraph.from_edges(8, [(i, i + 1) for i in range(7)]), 2)


class TestTracesAndOrbits:
    def test_k3_orbits(self, k3):
        assert primitive_orbit_counts(k3, 6).counts == (0, 0, 3, 2, 3, 6, 9)
        assert backtrackless_orbit_counts(k3, 6).counts == (0, 0, 0, 2, 0, 0, 0)

    def test_c5_backtrackless(self):
        assert backtrackless_orbit_counts(bidirected_c5(), 6).counts[5] == 2

    @given(random_digraphs())
    def test_trace_mangoldt(self, g):
        assert check_trace_mangoldt(g, 7).passed

    @given(random_digraphs())
    def test_orbits_against_brute_force(self, g):
        assert primitive_orbit_counts(g, 6) == brute_force_orbits(g, 6)

    @given(random_bidirected(sizes=(2, 3, 4)))
    def test_backtrackless_against_brute_force(self, g):
        assert backtrackless_orbit_counts(g, 6) == brute_force_orbits(g, 6, backtrackless=True)

    def test_non_integral_traces(self):
        with pytest.raises(InternalConsistencyError):
            orbits_from_traces([0, 1])

    def test_negative_counts_rejected(self):
        with pytest.raises(InternalConsistencyError):
            OrbitCounts((0, -1))

    def test_euler_product_of_loop(self):
        # one orbit of length 1: 1/(1 - u)
        assert euler_product(OrbitCounts((0, 1)), 4) == IntPoly([1, 1, 1, 1, 1])

    @given(random_digraphs())
    def test_lambert(self, g):
        assert check_lambert_resolvent(g, 8).passed


class TestIhara:
    @given(random_bidirected())
    def test_random(self, g):
        assert check_ihara_factorization(g, 8).passed

    def test_tree_has_trivial_ihara_zeta(self):
        g = SimpleGraph.path(4).to_digraph()
        report = check_ihara_factorization(g, 8)
        assert report.passed
        assert backtrackless_orbit_counts(g, 8).counts == (0,) * 9

    def test_rejects_directed(self):
        with pytest.raises(ValueError):
            check_ihara_factorization(Digraph.from_arcs(2, [(0, 1)]), 4)

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            check_ihara_factorization(Digraph.from_arcs(2, [(0, 1), (1, 0), (0, 0)]), 4)


class TestSuites:
    def test_all_on_k3(self, k3):
        reports = run_suite(k3, 6)
        assert [r.identity for r in reports] == [
            "det-mobius",
            "perm-liouville",
            "macmahon",
            "trace-mangoldt",
            "orbits",
            "ihara",
            "lambert-resolvent",
        ]
        assert all(reports)

    def test_ihara_skipped_on_directed(self):
        reports = run_suite(Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)]), 5)
        assert "ihara" not in [r.identity for r in reports]
        assert all(reports)

    def test_single(self, k3):
        assert [r.identity for r in run_suite(k3, 5, "lambert")] == ["lambert-resolvent"]

    def test_report_json_is_stable(self, k3):
        import json

        a = json.dumps([r.to_json() for r in run_suite(k3, 5)], sort_keys=True)
        b = json.dumps([r.to_json() for r in run_suite(k3, 5)], sort_keys=True)
        assert a == b
