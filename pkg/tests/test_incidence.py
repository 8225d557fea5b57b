import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from _support import cyclic_catalogs, random_enumerated_hike
from hikeforge.arithmetic import liouville, abs_mobius, tau
from hikeforge.errors import CatalogMismatchError, NotInvertibleError
from hikeforge.fixtures import bidirected_c5
from hikeforge.graph import Digraph, char_poly
from hikeforge.hikes import Hike, hike_from_primes
from hikeforge.incidence import (
    HikeSeries,
    convolution,
    convolve,
    delta,
    format_series,
    mobius,
    one,
    pointwise,
    series_add,
    series_invert,
    series_multiply,
    series_of,
)
from hikeforge.primes import enumerate_primes


@pytest.fixture(scope="module")
def c5():
    return enumerate_primes(bidirected_c5())


@pytest.fixture(scope="module")
def k3cat():
    return enumerate_primes(Digraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def catalogs():
    return st.sampled_from(cyclic_catalogs())


class TestNamedFunctions:
    def test_mobius_values(self, k3cat):
        assert mobius(Hike.one(k3cat)) == 1
        assert mobius(hike_from_primes(k3cat, [0])) == -1
        assert mobius(hike_from_primes(k3cat, [0, 1])) == 0

    def test_delta(self, k3cat):
        assert delta(Hike.one(k3cat)) == 1 and delta(hike_from_primes(k3cat, [3])) == 0

    @given(catalogs(), st.integers(0, 2**32))
    def test_mobius_inverts_one(self, cat, seed):
        h = random_enumerated_hike(random.Random(seed), cat)
        assert convolve(mobius, one, h) == delta(h) == convolve(one, mobius, h)

    @given(catalogs(), st.integers(0, 2**32))
    def test_zeta_squared_is_tau(self, cat, seed):
        h = random_enumerated_hike(random.Random(seed), cat)
        assert convolve(one, one, h) == tau(h)

    @given(catalogs(), st.integers(0, 2**32))
    def test_convolution_associative(self, cat, seed):
        h = random_enumerated_hike(random.Random(seed), cat, 6)
        f, g, k = liouville, tau, lambda x: x.length
        assert convolve(convolution(f, g), k, h) == convolve(f, convolution(g, k), h)

    @given(catalogs(), st.integers(0, 2**32))
    def test_liouville_inverse_is_abs_mobius(self, cat, seed):
        h = random_enumerated_hike(random.Random(seed), cat)
        assert convolve(liouville, abs_mobius, h) == delta(h)

    def test_pointwise(self, k3cat):
        h = hike_from_primes(k3cat, [0])
        assert pointwise(mobius, liouville)(h) == 1


class TestSeries:
    def test_c5_mobius_series(self, c5):
        s = series_of(mobius, c5, 10)
        sup = s.support()
        assert len(sup) == 13
        assert sum(1 for h, c in sup.items() if c == -1) == 7
        pairs = [h for h, c in sup.items() if c == 1 and not h.is_trivial]
        assert len(pairs) == 5
        assert all(h.omega == 2 and h.length == 4 for h in pairs)

    def test_format(self, k3cat):
        assert format_series(series_of(mobius, k3cat, 4)) == "1 - a - b - c - d - e"
        assert format_series(HikeSeries.zero(k3cat, 3)) == "0"

    def test_length_aggregate_is_det(self, c5):
        s = series_of(mobius, c5, 10)
        assert s.to_intpoly() == char_poly(c5.graph)

    def test_one_times_mobius(self, k3cat):
        prod = series_multiply(series_of(one, k3cat, 6), series_of(mobius, k3cat, 6))
        assert prod == series_of(delta, k3cat, 6)

    def test_invert_mobius(self, k3cat):
        assert series_invert(series_of(mobius, k3cat, 6)) == series_of(one, k3cat, 6)

    def test_invert_liouville(self, k3cat):
        assert series_invert(series_of(liouville, k3cat, 6)) == series_of(abs_mobius, k3cat, 6)

    def test_invert_rational(self, k3cat):
        two = series_of(lambda h: 2 if h.is_trivial else 1, k3cat, 5)
        inv = series_invert(two)
        assert inv[Hike.one(k3cat)] == Fraction(1, 2)
        assert series_multiply(two, inv) == series_of(delta, k3cat, 5)

    def test_not_invertible(self, k3cat):
        with pytest.raises(NotInvertibleError):
            series_invert(series_of(lambda h: 0 if h.is_trivial else 1, k3cat, 3))

    def test_mismatch(self, k3cat, c5):
        with pytest.raises(CatalogMismatchError):
            series_add(series_of(one, k3cat, 2), series_of(one, c5, 2))

    def test_add_and_truncate(self, k3cat):
        s = series_add(series_of(one, k3cat, 5), series_of(mobius, k3cat, 5))
        assert s[Hike.one(k3cat)] == 2
        assert s.truncate(3).bound == 3
        assert len(s.truncate(3)) == len([h for h in s if h.length <= 3])

    def test_json(self, k3cat):
        doc = series_of(mobius, k3cat, 3).to_json()
        assert doc["bound"] == 3

    @given(catalogs())
    def test_inverse_is_two_sided(self, cat):
        s = series_of(liouville, cat, 5)
        inv = series_invert(s)
        unit = series_of(delta, cat, 5)
        assert series_multiply(s, inv) == unit == series_multiply(inv, s)
