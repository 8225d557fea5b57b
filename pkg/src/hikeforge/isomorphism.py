"""Exact isomorphism tests for small graphs.

Vertices are first coloured by iterated neighbourhood refinement on the
disjoint union of both graphs, then a backtracking search matches colour
classes while checking adjacency against every vertex already placed.
"""

from __future__ import annotations

from itertools import permutations
from typing import Hashable, Sequence

from .errors import DEFAULT_ISOMORPHISM_CAP, SizeCapError
from .graph import Digraph, SimpleGraph

ArcSet = frozenset[tuple[int, int]]


def _refine(n: int, arcs: ArcSet, labels: Sequence[Hashable]) -> list[int]:
    out_n: list[list[int]] = [[] for _ in range(n)]
    in_n: list[list[int]] = [[] for _ in range(n)]
    for t, h in arcs:
        out_n[t].append(h)
        in_n[h].append(t)
    colours = [hash((labels[v], (v, v) in arcs)) for v in range(n)]
    for _ in range(n):
        nxt = [
            hash((colours[v], tuple(sorted(colours[w] for w in out_n[v])), tuple(sorted(colours[w] for w in in_n[v]))))
            for v in range(n)
        ]
        if len(set(nxt)) == len(set(colours)):
            colours = nxt
            break
        colours = nxt
    return colours


def find_isomorphism(
    n_a: int,
    arcs_a: ArcSet,
    n_b: int,
    arcs_b: ArcSet,
    labels_a: Sequence[Hashable] | None = None,
    labels_b: Sequence[Hashable] | None = None,
) -> list[int] | None:
    """A bijection ``f`` with ``(u,v) in A <=> (f(u),f(v)) in B`` that also
    preserves labels, or ``None``."""
    if n_a != n_b or len(arcs_a) != len(arcs_b):
        return None
    n = n_a
    la = list(labels_a) if labels_a is not None else [0] * n
    lb = list(labels_b) if labels_b is not None else [0] * n
    if sorted(map(repr, la)) != sorted(map(repr, lb)):
        return None
    union = frozenset(arcs_a | {(t + n, h + n) for t, h in arcs_b})
    colours = _refine(2 * n, union, la + lb)
    ca, cb = colours[:n], colours[n:]
    if sorted(ca) != sorted(cb):
        return None
    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(cb[v], []).append(v)

    # Place vertices of A in BFS order, rarest colour first, to prune early.
    nbrs = [set() for _ in range(n)]
    for t, h in arcs_a:
        nbrs[t].add(h)
        nbrs[h].add(t)
    order: list[int] = []
    seen: set[int] = set()
    for root in sorted(range(n), key=lambda v: (len(by_colour[ca[v]]), v)):
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(nbrs[v], key=lambda x: (len(by_colour[ca[x]]), x)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

    mapping = [-1] * n
    used = [False] * n

    def consistent(u: int, x: int, placed: int) -> bool:
        if ((u, u) in arcs_a) != ((x, x) in arcs_b):
            return False
        for i in range(placed):
            v = order[i]
            y = mapping[v]
            if ((u, v) in arcs_a) != ((x, y) in arcs_b) or ((v, u) in arcs_a) != ((y, x) in arcs_b):
                return False
        return True

    def rec(k: int) -> bool:
        if k == n:
            return True
        u = order[k]
        for x in by_colour[ca[u]]:
            if used[x] or not consistent(u, x, k):
                continue
            mapping[u] = x
            used[x] = True
            if rec(k + 1):
                return True
            used[x] = False
            mapping[u] = -1
        return False

    return mapping if rec(0) else None


def undirected_arcs(g: SimpleGraph) -> ArcSet:
    return frozenset({(i, j) for i, j in g.edges} | {(j, i) for i, j in g.edges})


def graphs_isomorphic(a: SimpleGraph, b: SimpleGraph, cap: int | None = DEFAULT_ISOMORPHISM_CAP) -> bool:
    if cap is not None and max(a.n, b.n) > cap:
        raise SizeCapError(f"isomorphism test limited to {cap} vertices")
    return find_isomorphism(a.n, undirected_arcs(a), b.n, undirected_arcs(b)) is not None


def labeled_graphs_isomorphic(
    a: SimpleGraph, labels_a: Sequence[Hashable], b: SimpleGraph, labels_b: Sequence[Hashable]
) -> bool:
    """Undirected isomorphism that must also carry each label onto an equal label."""
    return find_isomorphism(a.n, undirected_arcs(a), b.n, undirected_arcs(b), labels_a, labels_b) is not None


def digraphs_isomorphic(a: Digraph, b: Digraph, cap: int | None = DEFAULT_ISOMORPHISM_CAP) -> bool:
    if cap is not None and max(a.n, b.n) > cap:
        raise SizeCapError(f"isomorphism test limited to {cap} vertices")
    return find_isomorphism(a.n, a.arcs, b.n, b.arcs) is not None


def canonical_form(g: SimpleGraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least relabelled edge list (brute force; tiny graphs only)."""
    best = None
    for perm in permutations(range(g.n)):
        edges = tuple(sorted(tuple(sorted((perm[i], perm[j]))) for i, j in g.edges))
        if best is None or edges < best:
            best = edges
    return (g.n, best or ())
