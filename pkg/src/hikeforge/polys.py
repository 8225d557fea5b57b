"""Exact polynomial carriers: univariate integer polynomials and truncated
multivariate series with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .errors import NotInvertibleError


class IntPoly:
    """Univariate polynomial with exact integer coefficients, index = degree.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def truncate(self, degree: int) -> "IntPoly":
        """Drop every term above ``degree``."""
        return IntPoly(self.coeffs[: degree + 1])

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient of an exact division in Z[u]; raises if not exact."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < db:
            if any(rem):
                raise ArithmeticError("inexact polynomial division")
            return IntPoly()
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k - db] = q
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] -= q * b
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPoly(quot)

    def series_inverse(self, degree: int) -> "IntPoly":
        """Power-series reciprocal modulo u**(degree+1); needs constant term +-1."""
        c0 = self[0]
        if c0 not in (1, -1):
            raise NotInvertibleError(f"constant term {c0} is not a unit in Z")
        inv = [0] * (degree + 1)
        inv[0] = c0
        for k in range(1, degree + 1):
            acc = 0
            for j in range(1, min(k, self.degree) + 1):
                acc += self[j] * inv[k - j]
            inv[k] = -c0 * acc
        return IntPoly(inv)

    def to_json(self) -> list[int]:
        return list(self.coeffs) if self.coeffs else [0]


Exponent = tuple[int, ...]


class TruncatedMultiSeries:
    """Multivariate power series in ``nvars`` variables, truncated above
    total degree ``bound``.

    Coefficients are exact (``int`` or ``Fraction``).  Terms of total degree
    greater than ``bound`` are discarded by every operation.
    """

    __slots__ = ("nvars", "bound", "terms")

    def __init__(self, nvars: int, bound: int, terms: Mapping[Exponent, Rational] | None = None):
        self.nvars = nvars
        self.bound = bound
        clean: dict[Exponent, Rational] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} has wrong arity for {nvars} variables")
            if c and sum(exps) <= bound:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, nvars: int, bound: int, value: Rational = 1) -> "TruncatedMultiSeries":
        return cls(nvars, bound, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, bound: int, index: int) -> "TruncatedMultiSeries":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, bound, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, bound: int, exps: Exponent, coeff: Rational = 1) -> "TruncatedMultiSeries":
        return cls(nvars, bound, {tuple(exps): coeff})

    def constant_term(self) -> Rational:
        return self.terms.get((0,) * self.nvars, 0)

    def _coerce(self, other):
        if isinstance(other, TruncatedMultiSeries):
            if other.nvars != self.nvars:
                raise ValueError("series over different variable sets")
            return other
        if isinstance(other, Rational):
            return TruncatedMultiSeries.constant(self.nvars, self.bound, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return TruncatedMultiSeries(self.nvars, min(self.bound, other.bound), terms)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedMultiSeries":
        return TruncatedMultiSeries(self.nvars, self.bound, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        bound = min(self.bound, other.bound)
        terms: dict[Exponent, Rational] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > bound:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return TruncatedMultiSeries(self.nvars, bound, terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            other = TruncatedMultiSeries.constant(self.nvars, self.bound, other)
        if not isinstance(other, TruncatedMultiSeries):
            return NotImplemented
        bound = min(self.bound, other.bound)
        mine = {e: c for e, c in self.terms.items() if sum(e) <= bound}
        theirs = {e: c for e, c in other.terms.items() if sum(e) <= bound}
        return self.nvars == other.nvars and mine == theirs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"TruncatedMultiSeries(nvars={self.nvars}, bound={self.bound}, terms={self.terms})"

    def inverse(self) -> "TruncatedMultiSeries":
        """Reciprocal series, by forward substitution on total degree."""
        c0 = self.constant_term()
        if c0 == 0:
            raise NotInvertibleError("series has zero constant term")
        inv_c0 = c0 if c0 in (1, -1) else Fraction(1) / c0
        zero = (0,) * self.nvars
        rest = [(e, c) for e, c in self.terms.items() if e != zero]
        out: dict[Exponent, Rational] = {zero: inv_c0}
        for deg in range(1, self.bound + 1):
            for exps in _exponents_of_degree(self.nvars, deg):
                acc = 0
                for e, c in rest:
                    diff = tuple(a - b for a, b in zip(exps, e))
                    if min(diff) < 0:
                        continue
                    v = out.get(diff)
                    if v:
                        acc += c * v
                if acc:
                    out[exps] = -inv_c0 * acc
        return TruncatedMultiSeries(self.nvars, self.bound, out)


def _exponents_of_degree(nvars: int, degree: int) -> Iterator[Exponent]:
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _exponents_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def all_exponents(nvars: int, bound: int) -> Iterator[Exponent]:
    """Every exponent vector of total degree at most ``bound``."""
    for deg in range(bound + 1):
        yield from _exponents_of_degree(nvars, deg)


def poly_det(matrix: list[list[IntPoly]]) -> IntPoly:
    """Determinant over Z[u] by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return IntPoly([1])
    m = [[IntPoly(entry.coeffs) for entry in row] for row in matrix]
    sign = 1
    prev = IntPoly([1])
    for k in range(n - 1):
        if not m[k][k].coeffs:
            swap = next((r for r in range(k + 1, n) if m[r][k].coeffs), None)
            if swap is None:
                return IntPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = IntPoly()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


