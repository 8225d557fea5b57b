"""The reduced incidence algebra of the hike poset.

An incidence function is any callable ``Hike -> value`` where values are
exact (``int``/``Fraction``, or ring elements such as
``TruncatedMultiSeries`` that support ``+`` and ``*``).  Dirichlet
convolution sums over left divisors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterator

from .errors import CatalogMismatchError, NotInvertibleError
from .hikes import Hike, enumerate_hikes, format_hike, hike_id, left_divisors, multiply
from .polys import IntPoly
from .primes import PrimeCatalog

IncidenceFunction = Callable[[Hike], Any]


def delta(h: Hike) -> int:
    return 1 if h.is_trivial else 0


def one(h: Hike) -> int:
    return 1


def mobius(h: Hike) -> int:
    """1 on the trivial hike, (-1)^Omega on self-avoiding hikes, 0 otherwise."""
    if h.is_trivial:
        return 1
    if len(h.layers) == 1:
        return -1 if h.omega % 2 else 1
    return 0


def convolve(f: IncidenceFunction, g: IncidenceFunction, h: Hike) -> Any:
    """``(f * g)(h)``: sum of ``f(d) g(h/d)`` over left divisors ``d`` of ``h``."""
    total: Any = 0
    for d, q in left_divisors(h):
        fd = f(d)
        if isinstance(fd, int) and fd == 0:
            continue
        total = total + fd * g(q)
    return total


def convolution(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    """The function ``f * g`` as a rule."""

    def rule(h: Hike) -> Any:
        return convolve(f, g, h)

    return rule


def pointwise(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    return lambda h: f(h) * g(h)


def _normalise(value: Any) -> Any:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


class HikeSeries:
    """Truncated formal series ``sum f(h) h`` over all hikes of length <= bound.

    Every hike up to the bound has a key (zeros included), so two series are
    equal exactly when they agree term by term.
    """

    __slots__ = ("catalog", "bound", "coeffs")

    def __init__(self, catalog: PrimeCatalog, bound: int, coeffs: dict[Hike, Any]):
        self.catalog = catalog
        self.bound = bound
        self.coeffs = coeffs

    @classmethod
    def zero(cls, catalog: PrimeCatalog, bound: int) -> "HikeSeries":
        return cls(catalog, bound, {h: 0 for h in enumerate_hikes(catalog, bound)})

    def __getitem__(self, h: Hike) -> Any:
        return self.coeffs[h]

    def __iter__(self) -> Iterator[Hike]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def support(self) -> dict[Hike, Any]:
        """Nonzero terms only."""
        return {h: c for h, c in self.coeffs.items() if c != 0}

    def truncate(self, bound: int) -> "HikeSeries":
        bound = min(bound, self.bound)
        return HikeSeries(self.catalog, bound, {h: c for h, c in self.coeffs.items() if h.length <= bound})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HikeSeries):
            return NotImplemented
        return self.catalog is other.catalog and self.bound == other.bound and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"HikeSeries(bound={self.bound}, {format_series(self)})"

    def length_aggregate(self) -> list[Any]:
        """Image under the abelianisation ``h -> u^length``: entry k is the sum
        of coefficients over hikes of length k."""
        out: list[Any] = [0] * (self.bound + 1)
        for h, c in self.coeffs.items():
            out[h.length] = out[h.length] + c
        return [_normalise(c) for c in out]

    def to_intpoly(self) -> IntPoly:
        agg = self.length_aggregate()
        if not all(isinstance(c, int) for c in agg):
            raise ValueError("series has non-integral length aggregate")
        return IntPoly(agg)

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "terms": [
                {"hike": format_hike(h), "id": hike_id(h), "length": h.length, "coeff": _json_value(c)}
                for h, c in self.coeffs.items()
                if c != 0
            ],
        }


def _json_value(c: Any) -> Any:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return c


def format_series(s: HikeSeries) -> str:
    """Human form such as ``1 - a - b + a.c``."""
    out = ""
    for h, c in s.coeffs.items():
        if c == 0:
            continue
        mag = abs(c)
        term = str(mag) if h.is_trivial else (format_hike(h) if mag == 1 else f"{mag}*{format_hike(h)}")
        if not out:
            out = term if c > 0 else "-" + term
        else:
            out += (" + " if c > 0 else " - ") + term
    return out or "0"


def series_of(f: IncidenceFunction, cat: PrimeCatalog, bound: int) -> HikeSeries:
    return HikeSeries(cat, bound, {h: f(h) for h in enumerate_hikes(cat, bound)})


def _check_same(x: HikeSeries, y: HikeSeries) -> None:
    if x.catalog is not y.catalog:
        raise CatalogMismatchError("series over different prime catalogs")


def series_multiply(x: HikeSeries, y: HikeSeries) -> HikeSeries:
    """Product of truncated series: pairwise hike products, grouped by length."""
    _check_same(x, y)
    bound = min(x.bound, y.bound)
    out = HikeSeries.zero(x.catalog, bound).coeffs
    ys_by_len: dict[int, list[tuple[Hike, Any]]] = {}
    for b, cb in y.coeffs.items():
        if cb != 0 and b.length <= bound:
            ys_by_len.setdefault(b.length, []).append((b, cb))
    for a, ca in x.coeffs.items():
        if ca == 0 or a.length > bound:
            continue
        for lb in range(bound - a.length + 1):
            for b, cb in ys_by_len.get(lb, ()):
                ab = multiply(a, b)
                out[ab] = out[ab] + ca * cb
    return HikeSeries(x.catalog, bound, {h: _normalise(c) for h, c in out.items()})


def series_add(x: HikeSeries, y: HikeSeries) -> HikeSeries:
    _check_same(x, y)
    bound = min(x.bound, y.bound)
    return HikeSeries(
        x.catalog, bound, {h: _normalise(x.coeffs[h] + y.coeffs[h]) for h in x.coeffs if h.length <= bound}
    )


def series_invert(x: HikeSeries) -> HikeSeries:
    """Two-sided inverse, by forward substitution in increasing length."""
    unit = Hike.one(x.catalog)
    c0 = x.coeffs.get(unit, 0)
    if c0 == 0:
        raise NotInvertibleError("series has zero constant term")
    inv0 = c0 if c0 in (1, -1) else Fraction(1) / c0
    y: dict[Hike, Any] = {}
    for h in sorted(x.coeffs, key=lambda k: k.length):
        if h.is_trivial:
            y[h] = inv0
            continue
        acc: Any = 0
        for d, q in left_divisors(h):
            if d.is_trivial:
                continue
            cd = x.coeffs[d]
            if cd != 0:
                acc = acc + cd * y[q]
        y[h] = _normalise(-inv0 * acc)
    return HikeSeries(x.catalog, x.bound, y)
