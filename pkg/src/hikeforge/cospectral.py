"""Digraph moves that keep the hike structure, or at least the non-zero
spectrum, and checkers for claimed cospectral pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Digraph, SimpleGraph, adjacency_trace_powers, char_poly, permanental_poly
from .isomorphism import digraphs_isomorphic, labeled_graphs_isomorphic
from .polys import IntPoly
from .primes import Prime, dependence_graph_of, enumerate_primes
from .reports import CheckReport


@dataclass(frozen=True)
class SpectralFingerprint:
    char: IntPoly
    perm: IntPoly
    traces: tuple[int, ...]

    @classmethod
    def of(cls, g: Digraph) -> "SpectralFingerprint":
        return cls(char_poly(g), permanental_poly(g), tuple(adjacency_trace_powers(g, g.n)) if g.n else ())

    def newton_consistent(self) -> bool:
        """Traces agree with ``char`` through ``-u p'/p = sum Tr(A^k) u^k``."""
        k = len(self.traces)
        p = self.char
        deriv = IntPoly([i * p[i] for i in range(p.degree + 1)])
        series = (-(deriv * p.series_inverse(k))).truncate(k)
        return all(series[i + 1] == self.traces[i] for i in range(k))


@dataclass(frozen=True)
class HikeStructure:
    prime_count: int
    gamma: SimpleGraph
    lengths: tuple[int, ...]

    @classmethod
    def of(cls, g: Digraph) -> "HikeStructure":
        cat = enumerate_primes(g)
        return cls(len(cat), dependence_graph_of(cat), cat.lengths)


def characteristic_polynomial(g: Digraph) -> IntPoly:
    """``det(zI - A)``, the reversal of ``det(I - zA)`` padded to degree ``n``."""
    rev = char_poly(g)
    return IntPoly([rev[g.n - k] for k in range(g.n + 1)])


def same_nonzero_spectrum(a: Digraph, b: Digraph) -> bool:
    """Equal closed-walk counts up to the larger order."""
    k = max(a.n, b.n)
    if k == 0:
        return True
    return adjacency_trace_powers(a, k) == adjacency_trace_powers(b, k)


def hike_structure_equal(a: Digraph, b: Digraph) -> bool:
    """Dependence graphs isomorphic through a length-preserving map."""
    x, y = HikeStructure.of(a), HikeStructure.of(b)
    if x.prime_count != y.prime_count or sorted(x.lengths) != sorted(y.lengths):
        return False
    return labeled_graphs_isomorphic(x.gamma, x.lengths, y.gamma, y.lengths)


def _as_prime(g: Digraph, cycle: Prime | Sequence[int]) -> Prime:
    p = cycle if isinstance(cycle, Prime) else Prime(tuple(cycle))
    if not p.is_valid_in(g):
        raise ValueError(f"{p.vertices} is not a simple cycle of the graph")
    return p


def expand_pathsum(g: Digraph, cycle1: Prime | Sequence[int], cycle2: Prime | Sequence[int], shared_vertex: int) -> Digraph:
    """Rewrite two cycles meeting at one vertex ``v`` into a chain of three.

    ``cycle2`` stays.  A fresh cycle of length ``l1 + l2`` is threaded through
    ``v``, and ``cycle1`` is moved off ``v`` onto the last fresh vertex.  The
    determinant ``1 - z^l1 - z^l2`` of the pair becomes
    ``1 - z^l2 - z^(l1+l2) - z^l1 + z^(l1+l2)``, the same polynomial.

    Both cycles must meet only at ``v`` and no other cycle may touch them.
    """
    c1, c2 = _as_prime(g, cycle1), _as_prime(g, cycle2)
    v = shared_vertex
    if c1.vertex_set & c2.vertex_set != {v}:
        raise ValueError("the two cycles must share exactly the given vertex")
    cat = enumerate_primes(g)
    zone = c1.mask | c2.mask
    others = [p.vertices for p in cat if p not in (c1, c2) and p.mask & zone]
    if others:
        raise ValueError(f"cycle {others[0]} also touches the rewritten cycles")
    l1, l2 = c1.length, c2.length
    fresh = list(range(g.n, g.n + l1 + l2 - 1))
    u = fresh[-1]
    ring = [v] + fresh
    arcs = set(g.arcs) - set(c1.arcs)
    arcs |= {(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))}
    moved = [u if w == v else w for w in _rotate_to(c1.vertices, v)]
    arcs |= {(moved[i], moved[(i + 1) % len(moved)]) for i in range(len(moved))}
    return Digraph.from_arcs(g.n + len(fresh), sorted(arcs))


def _rotate_to(vs: tuple[int, ...], v: int) -> list[int]:
    k = vs.index(v)
    return list(vs[k:] + vs[:k])


def intersection_slide_check(a: Digraph, b: Digraph) -> CheckReport:
    """A claimed structure-preserving pair: same hike structure, same order,
    same non-zero spectrum, same det and perm polynomials, not isomorphic."""
    conditions = {
        "hike_structure_equal": hike_structure_equal(a, b),
        "same_vertex_count": a.n == b.n,
        "same_nonzero_spectrum": same_nonzero_spectrum(a, b),
        "same_char_poly": char_poly(a) == char_poly(b),
        "same_perm_poly": permanental_poly(a) == permanental_poly(b),
        "non_isomorphic": not digraphs_isomorphic(a, b, cap=None),
    }
    failed = [k for k, ok in conditions.items() if not ok]
    witness = None
    if failed:
        witness = {"failed": failed}
        if "non_isomorphic" in failed:
            witness["note"] = "isomorphic, not a valid pair"
    return CheckReport("intersection-slide", max(a.n, b.n), not failed, len(conditions), witness, conditions)
