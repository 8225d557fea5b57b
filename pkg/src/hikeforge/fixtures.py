"""Named example graphs and generated test corpora."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Digraph, SimpleGraph
from .isomorphism import find_isomorphism, undirected_arcs


def _one_based(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(a - 1, b - 1) for a, b in pairs]


def bidirected_c5() -> Digraph:
    """Bidirected 5-cycle labelled so that the catalog's five backtracks,
    in order, are 0-2, 0-3, 1-3, 1-4, 2-4."""
    return Digraph.from_edges(5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)])


def backtrack_and_triangle() -> Digraph:
    """Backtrack on {0,1} and a directed triangle 1->2->3->1 sharing vertex 1.
    Prime 0 is the backtrack, prime 1 the triangle."""
    return Digraph.from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 1)])


def worked_gamma() -> SimpleGraph:
    """Eight-prime dependence graph of the worked reconstruction example."""
    return SimpleGraph.from_pairs(
        8,
        _one_based(
            [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5), (3, 6), (6, 7), (3, 7),
             (6, 8), (7, 8), (4, 8), (5, 8), (4, 7), (5, 7), (5, 6), (4, 6)]
        ),
    )


def worked_root() -> SimpleGraph:
    """Six-vertex graph whose dependence graph is :func:`worked_gamma`."""
    return SimpleGraph.from_pairs(6, _one_based([(2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)]))


WORKED_CLASS_SIZES = (2, 1, 4, 1)
WORKED_BACKTRACKS = (0, 1, 2, 3, 4, 7)


def slide_pair() -> tuple[Digraph, Digraph]:
    """Two non-isomorphic 6-vertex digraphs, each with a triangle, a
    4-cycle and a backtrack arranged as a path of dependences."""
    left = Digraph.from_arcs(6, _one_based([(1, 2), (2, 3), (3, 1), (3, 5), (5, 4), (4, 2), (5, 6), (6, 5)]))
    labels = {1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 7: 5}
    right_arcs = [(7, 1), (3, 7), (3, 2), (1, 3), (5, 3), (2, 4), (4, 5), (5, 4)]
    right = Digraph.from_arcs(6, [(labels[a], labels[b]) for a, b in right_arcs])
    return left, right


def loop_backtrack() -> Digraph:
    """Backtrack 0<->1 with a loop on 1; det(I - zA) = 1 - z - z^2."""
    return Digraph.from_arcs(2, [(0, 1), (1, 0), (1, 1)])


def loop_backtrack_expanded() -> Digraph:
    """Backtrack 0<->1, triangle 1->2->3->1, loop on 3."""
    return Digraph.from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 1), (3, 3)])


def figure_eight(l1: int = 2, l2: int = 2) -> Digraph:
    """Two directed cycles of the given lengths sharing only vertex 0."""
    n = l1 + l2 - 1
    c1 = [0] + list(range(1, l1))
    c2 = [0] + list(range(l1, n))
    arcs = set()
    for cyc in (c1, c2):
        for i in range(len(cyc)):
            arcs.add((cyc[i], cyc[(i + 1) % len(cyc)]))
    return Digraph.from_arcs(n, sorted(arcs))


# -- corpora ---------------------------------------------------------------------


def _dedupe(graphs, arcs_of):
    """Keep one representative per isomorphism class."""
    buckets: dict[tuple, list] = {}
    out = []
    for g in graphs:
        arcs = arcs_of(g)
        outdeg = [0] * g.n
        indeg = [0] * g.n
        for t, h in arcs:
            outdeg[t] += 1
            indeg[h] += 1
        key = (g.n, len(arcs), tuple(sorted(zip(outdeg, indeg, ((v, v) in arcs for v in range(g.n))))))
        bucket = buckets.setdefault(key, [])
        if any(find_isomorphism(g.n, arcs, r.n, arcs_of(r)) is not None for r in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out


def connected_simple_graphs(max_n: int) -> list[SimpleGraph]:
    """Every connected simple graph on 1..max_n vertices, one per
    isomorphism class.  Grown by attaching a new vertex to a nonempty subset
    of a smaller connected graph (every connected graph has a vertex whose
    removal keeps it connected)."""
    layers = [[SimpleGraph(1)]]
    for n in range(2, max_n + 1):
        cands = []
        for g in layers[-1]:
            for k in range(1, n):
                for nbrs in combinations(range(n - 1), k):
                    cands.append(SimpleGraph.from_pairs(n, g.sorted_edges() + [(v, n - 1) for v in nbrs]))
        layers.append(_dedupe(cands, undirected_arcs))
    return [g for layer in layers for g in layer]


def simple_graphs(n: int) -> list[SimpleGraph]:
    """Every simple graph on exactly ``n`` vertices, connected or not, up to isomorphism."""
    slots = list(combinations(range(n), 2))
    cands = [
        SimpleGraph.from_pairs(n, [slots[k] for k in range(len(slots)) if bits >> k & 1])
        for bits in range(1 << len(slots))
    ]
    return _dedupe(cands, undirected_arcs)


def connected_digraphs(n: int) -> list[Digraph]:
    """Every weakly connected digraph on ``n`` vertices, loops allowed, up to isomorphism."""
    slots = [(i, j) for i in range(n) for j in range(n)]
    cands = []
    for bits in range(1 << len(slots)):
        g = Digraph.from_arcs(n, [slots[k] for k in range(len(slots)) if bits >> k & 1])
        if g.is_weakly_connected():
            cands.append(g)
    return _dedupe(cands, lambda g: g.arcs)


def random_connected_digraph(rng: random.Random, n: int, density: float, loop_rate: float) -> Digraph:
    """Random weakly connected digraph: a random spanning tree with random
    orientations, plus independent extra arcs."""
    arcs = set()
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        arcs.add((a, b) if rng.random() < 0.5 else (b, a))
    for i in range(n):
        for j in range(n):
            p = loop_rate if i == j else density
            if rng.random() < p:
                arcs.add((i, j))
    return Digraph.from_arcs(n, sorted(arcs))


def identity_corpus(seed: int = 2024, per_size: tuple[int, int] = (60, 60)) -> list[Digraph]:
    """All connected digraphs on at most 3 vertices plus seeded random
    connected digraphs on 4 and 5 vertices."""
    graphs: list[Digraph] = []
    for n in (1, 2, 3):
        graphs += connected_digraphs(n)
    rng = random.Random(seed)
    for n, count in zip((4, 5), per_size):
        graphs += [random_connected_digraph(rng, n, 0.3, 0.1) for _ in range(count)]
    return graphs


def bidirected_connected(max_n: int) -> list[Digraph]:
    return [g.to_digraph() for g in connected_simple_graphs(max_n)]
