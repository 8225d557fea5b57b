"""Digraph data model, JSON I/O and the exact linear algebra used throughout.

Vertices are dense indices ``0..n-1``.  Arcs are ordered pairs
``(tail, head)``; loops are allowed, parallel arcs are not.  Every routine
here works over the integers, never floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

from . import kernels
from .errors import DEFAULT_PERMANENT_CAP, GraphFormatError, SizeCapError
from .polys import IntPoly

Arc = tuple[int, int]
Matrix = list[list[int]]


@dataclass(frozen=True)
class Digraph:
    """Finite digraph on vertices ``0..n-1`` with an arc set."""

    n: int
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphFormatError(f"vertex count must be a non-negative integer, got {self.n!r}")
        arcs = frozenset((int(t), int(h)) for t, h in self.arcs)
        for t, h in arcs:
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise GraphFormatError(f"arc ({t},{h}) has an endpoint outside [0,{self.n})")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> "Digraph":
        """Build from an arc list, rejecting duplicates."""
        seen: set[Arc] = set()
        for pos, arc in enumerate(arcs):
            t, h = _pair(arc, f"arcs[{pos}]", n)
            if (t, h) in seen:
                raise GraphFormatError(f"arcs[{pos}]: duplicate arc ({t},{h})")
            seen.add((t, h))
        return cls(n, frozenset(seen))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Digraph":
        """Bidirected digraph from undirected edges; a loop edge gives one arc."""
        seen: set[Arc] = set()
        undirected: set[frozenset[int]] = set()
        for pos, edge in enumerate(edges):
            i, j = _pair(edge, f"edges[{pos}]", n)
            key = frozenset((i, j))
            if key in undirected:
                raise GraphFormatError(f"edges[{pos}]: duplicate edge {{{i},{j}}}")
            undirected.add(key)
            seen.add((i, j))
            seen.add((j, i))
        return cls(n, frozenset(seen))

    @property
    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for t, h in sorted(self.arcs):
            out[t].append(h)
        return out

    def adjacency(self) -> Matrix:
        a = [[0] * self.n for _ in range(self.n)]
        for t, h in self.arcs:
            a[t][h] = 1
        return a

    def row_masks(self) -> list[int]:
        rows = [0] * self.n
        for t, h in self.arcs:
            rows[t] |= 1 << h
        return rows

    def has_loops(self) -> bool:
        return any(t == h for t, h in self.arcs)

    def is_bidirected(self) -> bool:
        return all((h, t) in self.arcs for t, h in self.arcs)

    def is_weakly_connected(self) -> bool:
        if self.n == 0:
            return True
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for t, h in self.arcs:
            nbrs[t].add(h)
            nbrs[h].add(t)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in nbrs[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.sorted_arcs]}

    def to_simple_graph(self) -> "SimpleGraph":
        """Underlying undirected graph of a loop-free bidirected digraph."""
        if self.has_loops():
            raise GraphFormatError("graph has self-loops")
        if not self.is_bidirected():
            raise GraphFormatError("graph is not bidirected")
        return SimpleGraph(self.n, frozenset(frozenset(a) for a in self.arcs))


@dataclass(frozen=True)
class SimpleGraph:
    """Simple undirected graph: no loops, no multi-edges."""

    n: int
    edges: frozenset[frozenset[int]] = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset(frozenset(e) for e in self.edges)
        for e in edges:
            if len(e) != 2:
                raise GraphFormatError(f"edge {sorted(e)} is a loop")
            if not all(0 <= v < self.n for v in e):
                raise GraphFormatError(f"edge {sorted(e)} has an endpoint outside [0,{self.n})")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "SimpleGraph":
        return cls(n, frozenset(frozenset(p) for p in pairs))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(frozenset((i, j)) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def star(cls, leaves: int) -> "SimpleGraph":
        return cls(leaves + 1, frozenset(frozenset((0, j)) for j in range(1, leaves + 1)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(frozenset((i, i + 1)) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(frozenset((i, (i + 1) % n)) for i in range(n)))

    def neighbors(self) -> list[set[int]]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            i, j = tuple(e)
            nb[i].add(j)
            nb[j].add(i)
        return nb

    def degrees(self) -> list[int]:
        return [len(s) for s in self.neighbors()]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def complement(self) -> "SimpleGraph":
        return SimpleGraph(
            self.n,
            frozenset(
                frozenset((i, j))
                for i in range(self.n)
                for j in range(i + 1, self.n)
                if frozenset((i, j)) not in self.edges
            ),
        )

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph, relabelled ``0..k-1`` in the order given."""
        index = {v: k for k, v in enumerate(vertices)}
        return SimpleGraph(
            len(vertices),
            frozenset(frozenset(index[v] for v in e) for e in self.edges if all(v in index for v in e)),
        )

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        nb = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in nb[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def components(self) -> list[list[int]]:
        nb = self.neighbors()
        seen: set[int] = set()
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = []
            stack = [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in nb[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def to_digraph(self) -> Digraph:
        return Digraph.from_edges(self.n, self.sorted_edges())

    def to_json(self) -> dict:
        return {"n": self.n, "undirected": True, "edges": [list(e) for e in self.sorted_edges()]}


def _pair(item, where: str, n: int) -> Arc:
    if not isinstance(item, (list, tuple)) or len(item) != 2:
        raise GraphFormatError(f"{where}: expected a pair [i, j], got {item!r}")
    i, j = item
    for v in (i, j):
        if isinstance(v, bool) or not isinstance(v, int):
            raise GraphFormatError(f"{where}: vertex labels must be integers, got {v!r}")
        if not 0 <= v < n:
            raise GraphFormatError(f"{where}: endpoint {v} outside [0,{n})")
    return i, j


def parse_digraph(doc: object) -> Digraph:
    """Validate a decoded graph document."""
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise GraphFormatError(f"'n' must be a non-negative integer, got {n!r}")
    if doc.get("undirected", False):
        if "edges" not in doc:
            raise GraphFormatError("undirected graph requires an 'edges' list")
        edges = doc["edges"]
        if not isinstance(edges, list):
            raise GraphFormatError("'edges' must be a list")
        return Digraph.from_edges(n, edges)
    if "arcs" not in doc:
        raise GraphFormatError("directed graph requires an 'arcs' list")
    arcs = doc["arcs"]
    if not isinstance(arcs, list):
        raise GraphFormatError("'arcs' must be a list")
    return Digraph.from_arcs(n, arcs)


def load_digraph(source: IO[str] | IO[bytes] | str | bytes) -> Digraph:
    """Load a digraph from a JSON stream or string.

    Either ``{"n": 3, "arcs": [[0, 1], ...]}`` or
    ``{"n": 3, "undirected": true, "edges": [[0, 1], ...]}``; in the second
    form each non-loop edge expands to both arcs.
    """
    raw = source if isinstance(source, (str, bytes)) else source.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parse_digraph(doc)


def dump_digraph(g: Digraph) -> str:
    return json.dumps(g.to_json(), sort_keys=True)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        row = out[i]
        for k in range(m):
            aik = a[i][k]
            if aik:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        row[j] += aik * bk[j]
    return out


def matrix_trace_powers(a: Matrix, max_power: int) -> list[int]:
    """``[Tr(A), Tr(A^2), ..., Tr(A^max_power)]`` exactly."""
    if max_power < 1:
        raise ValueError("max_power must be at least 1")
    out = []
    p = [row[:] for row in a]
    for k in range(1, max_power + 1):
        if k > 1:
            p = matmul(p, a)
        out.append(sum(p[i][i] for i in range(len(a))))
    return out


def adjacency_trace_powers(g: Digraph, max_power: int) -> list[int]:
    """Closed-walk counts ``Tr(A^k)`` for ``k = 1..max_power``."""
    if g.n == 0:
        if max_power < 1:
            raise ValueError("max_power must be at least 1")
        return [0] * max_power
    return matrix_trace_powers(g.adjacency(), max_power)


def reversed_char_poly(a: Matrix) -> IntPoly:
    """``det(I - zA)`` via the Faddeev-LeVerrier recurrence over Z.

    With ``M_0 = 0`` and ``c_n = 1``, iterate ``M_k = A M_{k-1} + c_{n-k+1} I``
    and ``c_{n-k} = -Tr(A M_k) / k``; every division is exact.
    """
    n = len(a)
    c = [0] * (n + 1)
    c[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = matmul(a, m)
        for i in range(n):
            m[i][i] += c[n - k + 1]
        am = matmul(a, m)
        tr = sum(am[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        c[n - k] = q
    # det(xI - A) = sum c_k x^k  ->  det(I - zA) = sum c_{n-k} z^k
    return IntPoly(c[n - k] for k in range(n + 1))


def char_poly(g: Digraph) -> IntPoly:
    """``det(I - zA)`` of the 0/1 adjacency matrix (reversed characteristic polynomial)."""
    return reversed_char_poly(g.adjacency())


def permanental_poly(g: Digraph, cap: int = DEFAULT_PERMANENT_CAP) -> IntPoly:
    """``perm(I + uA)`` as an exact polynomial in ``u``; Ryser, O(2^n n^2)."""
    if g.n > cap:
        raise SizeCapError(f"permanent of a {g.n}-vertex graph exceeds the cap n <= {cap}")
    if g.n == 0:
        return IntPoly([1])
    return IntPoly(kernels.ryser_perm_poly(g.row_masks(), g.n))


def hashimoto_matrix(g: Digraph) -> tuple[list[Arc], Matrix]:
    """Non-backtracking arc-to-arc matrix: ``B[(i,j),(k,l)] = 1`` iff ``j == k``
    and ``(k,l) != (j,i)``."""
    arcs = g.sorted_arcs
    index = {a: k for k, a in enumerate(arcs)}
    b = [[0] * len(arcs) for _ in arcs]
    succ = g.successors()
    for (i, j), r in index.items():
        for l in succ[j]:
            if l != i:
                b[r][index[(j, l)]] = 1
    return arcs, b
