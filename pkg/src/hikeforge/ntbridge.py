"""Hikes on disjoint directed cycles behave like positive integers.

With one prime per component, all primes commute and each hike is a
multiset of primes.  Sending the j-th catalog prime to the j-th rational
prime turns hike arithmetic into integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arithmetic import big_omega, mangoldt_by_convolution, tau
from .graph import Digraph
from .hikes import Hike, enumerate_hikes, left_divisors, multiply
from .incidence import mobius
from .intarith import big_omega_n, divisor_count, divisors, first_primes, mobius_n, prime_power_base
from .primes import PrimeCatalog, enumerate_primes
from .reports import CheckReport


def disjoint_cycles_graph(k: int, lengths: Sequence[int] | None = None) -> Digraph:
    """``k`` vertex-disjoint directed cycles; by default of lengths ``1..k``."""
    lengths = list(range(1, k + 1)) if lengths is None else list(lengths)
    if len(lengths) != k:
        raise ValueError(f"expected {k} cycle lengths, got {len(lengths)}")
    if any(ell < 1 for ell in lengths):
        raise ValueError("cycle lengths must be positive")
    arcs = []
    base = 0
    for ell in lengths:
        arcs += [(base + i, base + (i + 1) % ell) for i in range(ell)]
        base += ell
    return Digraph.from_arcs(base, arcs)


@dataclass
class NTCorrespondence:
    catalog: PrimeCatalog
    prime_map: tuple[int, ...]

    @classmethod
    def of(cls, cat: PrimeCatalog) -> "NTCorrespondence":
        for i in range(len(cat)):
            for j in range(i + 1, len(cat)):
                if cat.dependent(i, j):
                    raise ValueError("primes must be pairwise vertex-disjoint")
        return cls(cat, tuple(first_primes(len(cat))))

    def value(self, h: Hike) -> int:
        m = 1
        for p in h.word():
            m *= self.prime_map[p]
        return m


def check_nt_isomorphism(
    k: int, bound: int, lengths: Sequence[int] | None = None, pair_limit: int = 20_000
) -> CheckReport:
    """Compare Mobius, divisor count, Omega and the Mangoldt support with
    their integer counterparts on every hike up to ``bound``."""
    g = disjoint_cycles_graph(k, lengths)
    cat = enumerate_primes(g)
    corr = NTCorrespondence.of(cat)
    hikes = enumerate_hikes(cat, bound)
    name = "nt-isomorphism"
    values = [corr.value(h) for h in hikes]
    if len(set(values)) != len(values):
        return CheckReport(name, bound, False, counterexample={"reason": "value map not injective"})
    for h, m in zip(hikes, values):
        if mobius(h) != mobius_n(m):
            return CheckReport(name, bound, False, counterexample={"hike": str(h), "m": m, "function": "mobius"})
        if tau(h) != divisor_count(m):
            return CheckReport(name, bound, False, counterexample={"hike": str(h), "m": m, "function": "tau"})
        if big_omega(h) != big_omega_n(m):
            return CheckReport(name, bound, False, counterexample={"hike": str(h), "m": m, "function": "Omega"})
        lam = mangoldt_by_convolution(h)
        base = prime_power_base(m)
        if (lam != 0) != (base is not None):
            return CheckReport(name, bound, False, counterexample={"hike": str(h), "m": m, "function": "Lambda support"})
        if base is not None and lam != cat.lengths[corr.prime_map.index(base)]:
            return CheckReport(name, bound, False, counterexample={"hike": str(h), "m": m, "function": "Lambda value"})
        divs = {corr.value(d) for d, _ in left_divisors(h)}
        if divs != set(divisors(m)):
            return CheckReport(name, bound, False, counterexample={"hike": str(h), "m": m, "function": "divisors"})
    pairs = 0
    for i, x in enumerate(hikes):
        for y in hikes[i:]:
            if pairs >= pair_limit:
                break
            if x.length + y.length > bound:
                continue
            pairs += 1
            if corr.value(multiply(x, y)) != corr.value(x) * corr.value(y):
                return CheckReport(name, bound, False, counterexample={"hikes": [str(x), str(y)], "function": "product"})
    return CheckReport(name, bound, True, len(hikes), details={"hikes": len(hikes), "pairs": pairs})


def bound_for_hike_count(k: int, minimum: int, lengths: Sequence[int] | None = None, ceiling: int = 64) -> int:
    """Smallest length bound whose enumeration holds at least ``minimum`` hikes."""
    cat = enumerate_primes(disjoint_cycles_graph(k, lengths))
    for bound in range(ceiling + 1):
        if len(enumerate_hikes(cat, bound)) >= minimum:
            return bound
    raise ValueError(f"fewer than {minimum} hikes up to length {ceiling}")
