"""The prime alphabet of the hike monoid: simple cycles of a digraph."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from string import ascii_lowercase
from typing import Iterator

from .errors import DEFAULT_PRIME_CAP, SizeCapError, enumeration_cap
from .graph import Arc, Digraph, SimpleGraph


@dataclass(frozen=True)
class Prime:
    """A simple cycle, stored as its vertex sequence rotated to start at the
    smallest vertex.  ``(v,)`` is the self-loop at ``v``."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise ValueError("a prime visits at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError(f"{vs} revisits a vertex")
        if vs[0] != min(vs):
            k = vs.index(min(vs))
            object.__setattr__(self, "vertices", vs[k:] + vs[:k])

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    @property
    def arcs(self) -> tuple[Arc, ...]:
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def is_valid_in(self, g: Digraph) -> bool:
        """Closed, contiguous, simple and made of arcs of ``g``."""
        return len(set(self.vertices)) == len(self.vertices) and all(a in g.arcs for a in self.arcs)

    def to_json(self) -> dict:
        return {"arcs": [list(a) for a in self.arcs]}


def letter(index: int) -> str:
    """Display name of a catalog entry: ``a..z`` then ``p26, p27, ...``."""
    return ascii_lowercase[index] if index < 26 else f"p{index}"


@dataclass(eq=False)
class PrimeCatalog:
    """All primes of a digraph, in canonical order (length, then vertices).

    Catalogs compare by identity: hikes built over different catalog objects
    never mix.
    """

    graph: Digraph
    primes: tuple[Prime, ...]
    masks: tuple[int, ...] = field(init=False)
    lengths: tuple[int, ...] = field(init=False)
    cache: dict = field(init=False, default_factory=dict, repr=False)

    def __post_init__(self):
        if len(set(self.primes)) != len(self.primes):
            raise ValueError("duplicate primes in catalog")
        self.masks = tuple(p.mask for p in self.primes)
        self.lengths = tuple(p.length for p in self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self) -> Iterator[Prime]:
        return iter(self.primes)

    def __getitem__(self, i: int) -> Prime:
        return self.primes[i]

    def index(self, prime: Prime | tuple[int, ...]) -> int:
        if not isinstance(prime, Prime):
            prime = Prime(tuple(prime))
        return self.primes.index(prime)

    def dependent(self, i: int, j: int) -> bool:
        """True iff primes ``i`` and ``j`` share a vertex (so ``i`` depends on itself)."""
        return bool(self.masks[i] & self.masks[j])

    def dependence_edges(self) -> list[tuple[int, int]]:
        k = len(self.primes)
        return [(i, j) for i in range(k) for j in range(i + 1, k) if self.masks[i] & self.masks[j]]

    def name(self, i: int) -> str:
        return letter(i)

    def to_json(self) -> dict:
        return {
            "primes": [p.to_json() for p in self.primes],
            "dependence": [list(e) for e in self.dependence_edges()],
        }


def _scc_of(s: int, succ: list[list[int]], pred: list[list[int]]) -> set[int]:
    """Strong component of ``s`` inside the subgraph induced on vertices >= s."""

    def reach(adj: list[list[int]]) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w >= s and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    return reach(succ) & reach(pred)


def _circuits_through(s: int, adj: dict[int, list[int]]) -> Iterator[list[int]]:
    """Johnson's CIRCUIT search from ``s`` inside one strong component."""
    blocked = {s}
    b_sets: dict[int, set[int]] = defaultdict(set)
    closed: set[int] = set()
    path = [s]
    stack = [(s, list(reversed(adj[s])))]

    def unblock(node: int) -> None:
        todo = {node}
        while todo:
            v = todo.pop()
            if v in blocked:
                blocked.discard(v)
                todo.update(b_sets[v])
                b_sets[v].clear()

    while stack:
        node, nbrs = stack[-1]
        if nbrs:
            nxt = nbrs.pop()
            if nxt == s:
                yield path[:]
                closed.update(path)
            elif nxt not in blocked:
                path.append(nxt)
                stack.append((nxt, list(reversed(adj[nxt]))))
                closed.discard(nxt)
                blocked.add(nxt)
                continue
        if not nbrs:
            if node in closed:
                unblock(node)
            else:
                for w in adj[node]:
                    b_sets[w].add(node)
            stack.pop()
            path.pop()


def elementary_circuits(g: Digraph) -> Iterator[tuple[int, ...]]:
    """Every elementary circuit once, starting at its smallest vertex."""
    succ = g.successors()
    pred: list[list[int]] = [[] for _ in range(g.n)]
    for t, h in g.arcs:
        pred[h].append(t)
    for s in range(g.n):
        comp = _scc_of(s, succ, pred)
        if len(comp) == 1 and (s, s) not in g.arcs:
            continue
        adj = {v: [w for w in succ[v] if w in comp] for v in comp}
        for cyc in _circuits_through(s, adj):
            yield tuple(cyc)


def enumerate_primes(g: Digraph, cap: int | None = None) -> PrimeCatalog:
    """Catalog of all simple cycles of ``g`` (Johnson's algorithm).

    Raises ``SizeCapError`` when more than ``cap`` primes exist (default
    10**6, overridable through ``HIKE_FORGE_CAP``).
    """
    limit = cap if cap is not None else enumeration_cap(DEFAULT_PRIME_CAP)
    found: list[Prime] = []
    for cyc in elementary_circuits(g):
        found.append(Prime(cyc))
        if len(found) > limit:
            raise SizeCapError(f"more than {limit} primes")
    found.sort(key=lambda p: (p.length, p.vertices))
    return PrimeCatalog(g, tuple(found))


def independence_graph(cat: PrimeCatalog) -> SimpleGraph:
    """Primes as vertices, an edge between every two vertex-disjoint primes."""
    k = len(cat)
    return SimpleGraph.from_pairs(
        k, [(i, j) for i in range(k) for j in range(i + 1, k) if not cat.masks[i] & cat.masks[j]]
    )


def dependence_graph_of(cat: PrimeCatalog) -> SimpleGraph:
    """Primes as vertices, an edge between every two intersecting primes."""
    return SimpleGraph.from_pairs(len(cat), cat.dependence_edges())
