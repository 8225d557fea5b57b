"""Named arithmetic functions on hikes and the convolution identities
relating them."""

from __future__ import annotations

import random
from typing import Any, Callable

from .errors import DEFAULT_ORACLE_LENGTH_CAP, SizeCapError
from .hikes import (
    Hike,
    enumerate_hikes,
    hike_from_primes,
    is_walk,
    left_divisors,
    maximal_occurrences,
    multiply,
    top_prime,
)
from .incidence import IncidenceFunction, convolve, delta, mobius, one
from .polys import TruncatedMultiSeries
from .primes import PrimeCatalog
from .reports import CheckReport


def length(h: Hike) -> int:
    return h.length


def big_omega(h: Hike) -> int:
    """Number of prime occurrences, with multiplicity."""
    return h.omega


def small_omega(h: Hike) -> int:
    """Number of distinct prime divisors, i.e. the size of the first heap layer."""
    return len(h.layers[0]) if h.layers else 0


def tau(h: Hike) -> int:
    """Number of left divisors."""
    return len(left_divisors(h))


def prime_indicator(h: Hike) -> int:
    return 1 if h.omega == 1 else 0


def walk_indicator(h: Hike) -> int:
    return 1 if is_walk(h) else 0


def liouville(h: Hike) -> int:
    return -1 if h.omega % 2 else 1


def abs_mobius(h: Hike) -> int:
    return abs(mobius(h))


def mangoldt_by_convolution(h: Hike) -> int:
    """``(length * mobius)(h)``.

    ``mobius(h/d)`` vanishes unless the cofactor is self-avoiding, and the
    self-avoiding right cofactors of ``h`` are exactly the sets of maximal
    heap pieces, so only those divisors are summed.
    """
    if h.is_trivial:
        return 0
    word = h.word()
    lengths = h.catalog.lengths
    tops = [lengths[word[i]] for i in maximal_occurrences(h)]
    total = 0
    for mask in range(1 << len(tops)):
        removed = sum(t for i, t in enumerate(tops) if mask >> i & 1)
        sign = -1 if bin(mask).count("1") % 2 else 1
        total += sign * (h.length - removed)
    return total


mangoldt = mangoldt_by_convolution


def _arc_projection(h: Hike) -> dict[int, list[int]]:
    """For every vertex, the heads of its out-arcs in heap order.

    Arcs sharing a tail never commute, so this per-tail record is exactly the
    commutation class of the arc word of ``h``.
    """
    proj: dict[int, list[int]] = {}
    for p in h.word():
        for t, hd in h.catalog.primes[p].arcs:
            proj.setdefault(t, []).append(hd)
    return proj


def mangoldt_by_contiguity(h: Hike, cap: int = DEFAULT_ORACLE_LENGTH_CAP) -> int:
    """Count arc sequences that are closed contiguous walks and equivalent to ``h``.

    Depth-first over the arcs still available at the current vertex; a partial
    sequence survives only while its per-tail record is a prefix of the
    record of ``h``.
    """
    if h.length > cap:
        raise SizeCapError(f"contiguity oracle limited to length {cap}, got {h.length}")
    if h.is_trivial:
        return 0
    proj = _arc_projection(h)
    remaining: dict[tuple[int, int], int] = {}
    for t, heads in proj.items():
        for hd in heads:
            remaining[(t, hd)] = remaining.get((t, hd), 0) + 1
    total_arcs = h.length
    count = 0

    def extend(start: int, v: int, used: dict[int, int], placed: int) -> int:
        if placed == total_arcs:
            return 1 if v == start else 0
        found = 0
        for (t, hd), left in remaining.items():
            if t != v or left == 0:
                continue
            k = used.get(v, 0)
            heads = proj[v]
            if k >= len(heads) or heads[k] != hd:
                continue
            remaining[(t, hd)] = left - 1
            used[v] = k + 1
            found += extend(start, hd, used, placed + 1)
            used[v] = k
            remaining[(t, hd)] = left
        return found

    for start in sorted(proj):
        count += extend(start, start, {}, 0)
    return count


def weight_monomial(cat: PrimeCatalog, bound: int) -> IncidenceFunction:
    """``h -> prod t_i^(visits of h to i)``, valued in truncated series over
    one variable per vertex."""
    n = cat.graph.n
    memo: dict[Hike, TruncatedMultiSeries] = {}

    def rule(h: Hike) -> TruncatedMultiSeries:
        got = memo.get(h)
        if got is None:
            exps = [0] * n
            for p in h.word():
                for v in cat.primes[p].vertices:
                    exps[v] += 1
            got = TruncatedMultiSeries.monomial(n, bound, tuple(exps))
            memo[h] = got
        return got

    return rule


NAMED_FUNCTIONS: dict[str, Callable[[Hike], Any]] = {
    "length": length,
    "big_omega": big_omega,
    "small_omega": small_omega,
    "tau": tau,
    "prime_indicator": prime_indicator,
    "walk_indicator": walk_indicator,
    "mangoldt": mangoldt_by_convolution,
    "liouville": liouville,
    "mobius": mobius,
    "abs_mobius": abs_mobius,
    "one": one,
    "delta": delta,
}


def _sample_pairs(hikes: list[Hike], samples: int, seed: int) -> list[tuple[Hike, Hike]]:
    rng = random.Random(seed)
    if not hikes:
        return []
    return [(rng.choice(hikes), rng.choice(hikes)) for _ in range(samples)]


def check_additive_mobius(
    f: IncidenceFunction, cat: PrimeCatalog, bound: int, name: str = "f", samples: int = 200, seed: int = 0
) -> CheckReport:
    """For totally additive ``f``: ``(f * mobius)(h)`` is ``f`` of the top
    prime when ``h`` is a walk and 0 otherwise.

    Additivity itself is sampled on random pairs first.
    """
    hikes = enumerate_hikes(cat, bound)
    for x, y in _sample_pairs(hikes, samples, seed):
        if f(multiply(x, y)) != f(x) + f(y):
            return CheckReport(f"additivity of {name}", bound, False, counterexample=[str(x), str(y)])
    cases = 0
    for h in hikes:
        got = convolve(f, mobius, h)
        top = top_prime(h)
        want = f(hike_from_primes(cat, [top])) if top is not None else 0
        cases += 1
        if got != want:
            return CheckReport(
                f"{name} * mobius on walks", bound, False, cases, {"hike": str(h), "got": got, "want": want}
            )
    return CheckReport(f"{name} * mobius on walks", bound, True, cases)


def check_multiplicative_inverse(
    f: IncidenceFunction, cat: PrimeCatalog, bound: int, name: str = "f", samples: int = 200, seed: int = 0
) -> CheckReport:
    """For totally multiplicative ``f``: ``(mobius f) * f == delta``."""
    hikes = enumerate_hikes(cat, bound)
    for x, y in _sample_pairs(hikes, samples, seed):
        if f(multiply(x, y)) != f(x) * f(y):
            return CheckReport(f"multiplicativity of {name}", bound, False, counterexample=[str(x), str(y)])

    def mu_f(h: Hike) -> Any:
        m = mobius(h)
        return 0 if m == 0 else m * f(h)

    cases = 0
    for h in hikes:
        got = convolve(mu_f, f, h)
        cases += 1
        if got != delta(h):
            return CheckReport(f"(mobius {name}) * {name} = delta", bound, False, cases, {"hike": str(h), "got": str(got)})
    return CheckReport(f"(mobius {name}) * {name} = delta", bound, True, cases)


multiplicative_inverse_check = check_multiplicative_inverse
