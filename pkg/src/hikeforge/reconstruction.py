"""Recover an undirected graph from the dependence graph of its primes.

The pipeline: group primes into classes of equal closed neighbourhoods,
decide how many backtracks each class holds, take the subgraph induced on
the backtracks (the line graph of the answer) and invert it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import HikeForgeError
from .graph import Digraph, GraphFormatError, SimpleGraph
from .isomorphism import find_isomorphism, graphs_isomorphic, labeled_graphs_isomorphic, undirected_arcs
from .primes import dependence_graph_of, enumerate_primes


class AmbiguousK5(HikeForgeError):
    """The dependence graph is K5, shared by K3 and the star with 5 leaves."""


@dataclass(frozen=True)
class EquivalenceClass:
    members: tuple[int, ...]
    is_clique_nbhd: bool
    common_nbrs: frozenset[int]


@dataclass
class ReconstructionResult:
    outcome: str  # "unique" | "ambiguous" | "failed"
    graphs: list[Digraph] = field(default_factory=list)
    reason: str = ""
    trace: dict = field(default_factory=dict)

    @property
    def graph(self) -> Digraph:
        if self.outcome != "unique":
            raise ValueError(f"reconstruction is {self.outcome}")
        return self.graphs[0]

    def to_json(self) -> dict:
        out: dict = {"status": self.outcome, "graphs": [_graph_json(g) for g in self.graphs]}
        if self.reason:
            out["reason"] = self.reason
        if self.trace:
            out["trace"] = self.trace
        return out


def _graph_json(g: Digraph) -> dict:
    loops = sorted(v for v, w in g.arcs if v == w)
    edges = sorted({tuple(sorted(a)) for a in g.arcs if a[0] != a[1]})
    out = {"n": g.n, "undirected": True, "edges": [list(e) for e in edges]}
    if loops:
        out["edges"] += [[v, v] for v in loops]
    return out


def dependence_graph(g: Digraph) -> SimpleGraph:
    """Dependence graph of the primes of a connected, loop-free, bidirected graph."""
    if not g.is_bidirected():
        raise GraphFormatError("dependence graph reconstruction needs a bidirected graph")
    if g.has_loops():
        raise GraphFormatError("self-loops are not supported without length labels")
    if not g.is_weakly_connected():
        raise GraphFormatError("graph is disconnected; treat each component separately")
    return dependence_graph_of(enumerate_primes(g))


def dependence_graph_with_lengths(g: Digraph) -> tuple[SimpleGraph, list[int]]:
    cat = enumerate_primes(g)
    return dependence_graph_of(cat), list(cat.lengths)


def equivalence_classes(gamma: SimpleGraph) -> list[EquivalenceClass]:
    nb = gamma.neighbors()
    groups: dict[frozenset[int], list[int]] = {}
    for c in range(gamma.n):
        groups.setdefault(frozenset(nb[c] | {c}), []).append(c)
    out = []
    for closed, members in sorted(groups.items(), key=lambda kv: kv[1][0]):
        c = members[0]
        open_nb = sorted(nb[c])
        clique = all(y in nb[x] for i, x in enumerate(open_nb) for y in open_nb[i + 1 :])
        out.append(EquivalenceClass(tuple(members), clique, closed - set(members)))
    return out


def _is_complete(g: SimpleGraph, k: int) -> bool:
    return g.n == k and len(g.edges) == k * (k - 1) // 2


def identify_backtracks(gamma: SimpleGraph) -> list[int]:
    """Primes of the dependence graph that must be backtracks, lowest index
    first within each class."""
    if _is_complete(gamma, 5):
        raise AmbiguousK5("the dependence graph is K5")
    degree = gamma.degrees()
    found: list[int] = []
    for cls in equivalence_classes(gamma):
        size = len(cls.members)
        if cls.is_clique_nbhd:
            found += cls.members
        elif size % 2 == 1:
            found.append(cls.members[0])
        elif size == 4 and any(degree[c] == 4 for c in cls.common_nbrs):
            found += cls.members[:2]
    return sorted(found)


def _krausz_partitions(lg: SimpleGraph, limit: int = 2):
    """Partitions of the edges of ``lg`` into cliques with every vertex in at
    most two of them.  Yields up to ``limit`` solutions."""
    nb = lg.neighbors()
    uncovered = {tuple(sorted(e)) for e in lg.edges}
    member_count = [0] * lg.n
    cliques: list[frozenset[int]] = []
    results: list[list[frozenset[int]]] = []

    def grow(clique: list[int], cands: list[int]):
        yield list(clique)
        for i, w in enumerate(cands):
            if member_count[w] >= 2:
                continue
            if all(tuple(sorted((w, x))) in uncovered for x in clique):
                clique.append(w)
                yield from grow(clique, [c for c in cands[i + 1 :] if c in nb[w]])
                clique.pop()

    def rec() -> bool:
        if not uncovered:
            results.append(list(cliques))
            return len(results) >= limit
        u, v = min(uncovered)
        if member_count[u] >= 2 or member_count[v] >= 2:
            return False
        common = sorted(nb[u] & nb[v])
        for clique in grow([u, v], common):
            edges = [tuple(sorted((a, b))) for i, a in enumerate(clique) for b in clique[i + 1 :]]
            for x in clique:
                member_count[x] += 1
            # a vertex in two cliques may have no edge left uncovered
            ok = all(
                member_count[x] < 2
                or all(tuple(sorted((x, y))) not in uncovered or tuple(sorted((x, y))) in edges for y in nb[x])
                for x in clique
            )
            if ok:
                uncovered.difference_update(edges)
                cliques.append(frozenset(clique))
                if rec():
                    return True
                cliques.pop()
                uncovered.update(edges)
            for x in clique:
                member_count[x] -= 1
        return False

    rec()
    return results


def _root_from_partition(lg: SimpleGraph, cliques: list[frozenset[int]]) -> SimpleGraph:
    ends: list[list[int]] = [[] for _ in range(lg.n)]
    for k, clique in enumerate(cliques):
        for x in clique:
            ends[x].append(k)
    next_vertex = len(cliques)
    edges = []
    for x in range(lg.n):
        while len(ends[x]) < 2:
            ends[x].append(next_vertex)
            next_vertex += 1
        edges.append(tuple(ends[x]))
    return SimpleGraph.from_pairs(next_vertex, edges)


class NotALineGraph(HikeForgeError):
    pass


def line_graph_inverse(lg: SimpleGraph) -> list[SimpleGraph]:
    """Root graphs of a connected line graph: one graph, or both K3 and the
    claw when ``lg`` is a triangle."""
    if lg.n == 0:
        return [SimpleGraph(1)]
    if not lg.is_connected():
        raise NotALineGraph("line graph of a connected graph must be connected")
    if _is_complete(lg, 3):
        return [SimpleGraph.complete(3), SimpleGraph.star(3)]
    parts = _krausz_partitions(lg, limit=1)
    if not parts:
        raise NotALineGraph("no partition into cliques with every vertex in at most two")
    return [_root_from_partition(lg, parts[0])]


def _ambiguous_k5() -> ReconstructionResult:
    return ReconstructionResult(
        "ambiguous",
        [SimpleGraph.complete(3).to_digraph(), SimpleGraph.star(5).to_digraph()],
        reason="dependence graph K5 arises from both K3 and the 5-leaf star",
    )


def _trace(gamma: SimpleGraph, backtracks: Sequence[int]) -> dict:
    return {
        "classes": [
            {"members": list(c.members), "clique_neighbourhood": c.is_clique_nbhd, "common": sorted(c.common_nbrs)}
            for c in equivalence_classes(gamma)
        ],
        "backtracks": list(backtracks),
    }


def reconstruct(gamma: SimpleGraph) -> ReconstructionResult:
    """Connected, loop-free undirected graph (returned bidirected) whose
    dependence graph is ``gamma``."""
    if gamma.n == 0:
        return ReconstructionResult("unique", [Digraph(1, frozenset())])
    if not gamma.is_connected():
        return ReconstructionResult("failed", reason="dependence graph is disconnected; reconstruct each component")
    try:
        backtracks = identify_backtracks(gamma)
    except AmbiguousK5:
        return _ambiguous_k5()
    lg = gamma.induced(backtracks)
    trace = _trace(gamma, backtracks)
    try:
        roots = line_graph_inverse(lg)
    except NotALineGraph as exc:
        return ReconstructionResult("failed", reason=str(exc), trace=trace)
    roots = [r for r in roots if _reproduces(gamma, backtracks, lg, r)]
    if len(roots) != 1:
        return ReconstructionResult("failed", reason="no candidate root reproduces the dependence graph", trace=trace)
    return ReconstructionResult("unique", [roots[0].to_digraph()], trace=trace)


def _edge_labels(gamma: SimpleGraph, backtracks: Sequence[int]) -> list:
    """Backtrack ``backtracks[k]`` gets label ``k``; any other prime gets the
    set of backtrack labels it meets."""
    pos = {b: k for k, b in enumerate(backtracks)}
    nb = gamma.neighbors()
    return [pos[c] if c in pos else frozenset(pos[b] for b in nb[c] if b in pos) for c in range(gamma.n)]


def _reproduces(gamma: SimpleGraph, backtracks: Sequence[int], lg: SimpleGraph, root: SimpleGraph) -> bool:
    """Forward check: the dependence graph of ``root`` is ``gamma``, with each
    backtrack sent to the root edge the line-graph inversion assigned it."""
    edges = _edges_in_line_order(lg, root)
    if edges is None:
        return False
    cat = enumerate_primes(root.to_digraph())
    gamma2 = dependence_graph_of(cat)
    order = {e: k for k, e in enumerate(edges)}
    bt2 = [None] * len(edges)
    for i, p in enumerate(cat):
        if p.length == 2:
            bt2[order[tuple(sorted(p.vertices))]] = i
    return labeled_graphs_isomorphic(gamma2, _edge_labels(gamma2, bt2), gamma, _edge_labels(gamma, backtracks))


def _attach_loops(
    n: int, edges: list[tuple[int, int]], gamma: SimpleGraph, lengths: Sequence[int], backtracks: list[int]
) -> Digraph | None:
    """Bidirected root plus one loop per length-1 prime, placed at the vertex
    whose incident edges are exactly the backtracks that prime meets.

    ``edges[k]`` is the root edge of backtrack ``backtracks[k]``.
    """
    edge_of = {b: k for k, b in enumerate(backtracks)}
    incident: list[set[int]] = [set() for _ in range(n)]
    for k, e in enumerate(edges):
        for v in e:
            incident[v].add(k)
    nb = gamma.neighbors()
    loops: list[int] = []
    for c in range(gamma.n):
        if lengths[c] != 1:
            continue
        touching = {edge_of[b] for b in nb[c] if b in edge_of}
        spots = [v for v in range(n) if incident[v] == touching and v not in loops]
        if not spots:
            return None
        loops.append(spots[0])
    arcs = [(a, b) for a, b in edges] + [(b, a) for a, b in edges] + [(v, v) for v in loops]
    return Digraph.from_arcs(n, arcs)


def reconstruct_with_lengths(gamma: SimpleGraph, lengths: Sequence[int]) -> ReconstructionResult:
    """Reconstruction when every prime's length is known; backtracks are the
    primes of length 2, and the K5 exception disappears."""
    if len(lengths) != gamma.n:
        raise ValueError("one length per dependence-graph vertex is required")
    if gamma.n == 0:
        return ReconstructionResult("unique", [Digraph(1, frozenset())])
    if not gamma.is_connected():
        return ReconstructionResult("failed", reason="dependence graph is disconnected; reconstruct each component")
    backtracks = [c for c in range(gamma.n) if lengths[c] == 2]
    trace = {"backtracks": backtracks}
    if not backtracks:
        if gamma.n == 1 and lengths[0] == 1:
            return ReconstructionResult("unique", [Digraph.from_arcs(1, [(0, 0)])], trace=trace)
        return ReconstructionResult("failed", reason="no backtracks to build a line graph from", trace=trace)
    lg = gamma.induced(backtracks)
    try:
        roots = line_graph_inverse(lg)
    except NotALineGraph as exc:
        return ReconstructionResult("failed", reason=str(exc), trace=trace)
    found = []
    for root in roots:
        edges = _edges_in_line_order(lg, root)
        if edges is None:
            continue
        g = _attach_loops(root.n, edges, gamma, lengths, backtracks)
        if g is None:
            continue
        gam2, len2 = dependence_graph_with_lengths(g)
        if labeled_graphs_isomorphic(gam2, len2, gamma, list(lengths)):
            found.append(g)
    if len(found) != 1:
        return ReconstructionResult(
            "failed", reason="no candidate root reproduces the labelled dependence graph", trace=trace
        )
    return ReconstructionResult("unique", found, trace=trace)


def _edges_in_line_order(lg: SimpleGraph, root: SimpleGraph) -> list[tuple[int, int]] | None:
    """Root edges listed so that edge k corresponds to line-graph vertex k."""
    edges = root.sorted_edges()
    if len(edges) != lg.n:
        return None
    line = SimpleGraph.from_pairs(
        len(edges),
        [(i, j) for i in range(len(edges)) for j in range(i + 1, len(edges)) if set(edges[i]) & set(edges[j])],
    )
    f = find_isomorphism(lg.n, undirected_arcs(lg), line.n, undirected_arcs(line))
    if f is None:
        return None
    return [edges[f[k]] for k in range(lg.n)]
