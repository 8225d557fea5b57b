"""Hikes: elements of the trace monoid generated by the primes of a digraph,
with vertex-disjoint primes commuting.

A hike is stored in Cartier-Foata normal form, i.e. as the layers of the
heap obtained by letting each prime fall as low as its vertices allow.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import DEFAULT_HIKE_CAP, CatalogMismatchError, SizeCapError, enumeration_cap
from .primes import PrimeCatalog

HikeId = tuple[tuple[int, ...], ...]


class Hike:
    """Heap of primes in Foata normal form.

    ``layers[k]`` is a sorted tuple of prime indices, pairwise vertex
    disjoint, each meeting some prime of ``layers[k-1]``.  The empty layer
    tuple is the trivial hike ``1``.
    """

    __slots__ = ("catalog", "layers", "length", "omega", "_hash")

    def __init__(self, catalog: PrimeCatalog, layers: HikeId):
        self.catalog = catalog
        self.layers = layers
        self.length = sum(catalog.lengths[p] for layer in layers for p in layer)
        self.omega = sum(len(layer) for layer in layers)
        self._hash = hash(layers)

    @classmethod
    def one(cls, catalog: PrimeCatalog) -> "Hike":
        return cls(catalog, ())

    @property
    def key(self) -> HikeId:
        return self.layers

    @property
    def is_trivial(self) -> bool:
        return not self.layers

    def word(self) -> list[int]:
        """Normal-form word: layers read bottom to top."""
        return [p for layer in self.layers for p in layer]

    def vertex_mask(self) -> int:
        m = 0
        for p in self.word():
            m |= self.catalog.masks[p]
        return m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hike):
            return NotImplemented
        return self.catalog is other.catalog and self.layers == other.layers

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Hike") -> "Hike":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"Hike({format_hike(self)})"

    def __str__(self) -> str:
        return format_hike(self)


def format_hike(h: Hike) -> str:
    """Readable normal form, e.g. ``a.c|b``; layers separated by ``|``."""
    if h.is_trivial:
        return "1"
    return "|".join(".".join(h.catalog.name(p) for p in layer) for layer in h.layers)


def hike_id(h: Hike) -> str:
    """Canonical serialisation of the normal form, e.g. ``(0,2)(1)``."""
    return "".join("(" + ",".join(map(str, layer)) + ")" for layer in h.layers) or "()"


def hike_from_primes(cat: PrimeCatalog, word: Sequence[int]) -> Hike:
    """Normal form of the product of the given primes, by heap stacking."""
    if not word:
        return Hike(cat, ())
    k = len(cat.primes)
    for p in word:
        if not 0 <= p < k:
            raise IndexError(f"prime index {p} not in catalog of size {k}")
    levels = kernels.stack_levels([cat.masks[p] for p in word])
    layers: list[list[int]] = [[] for _ in range(max(levels))]
    for p, lv in zip(word, levels):
        layers[lv - 1].append(p)
    return Hike(cat, tuple(tuple(sorted(layer)) for layer in layers))


def _same_catalog(*hikes: Hike) -> PrimeCatalog:
    cat = hikes[0].catalog
    for h in hikes[1:]:
        if h.catalog is not cat:
            raise CatalogMismatchError("hikes belong to different prime catalogs")
    return cat


def multiply(x: Hike, y: Hike) -> Hike:
    """Concatenation product ``x.y`` in normal form."""
    cat = _same_catalog(x, y)
    if y.is_trivial:
        return x
    if x.is_trivial:
        return y
    return hike_from_primes(cat, x.word() + y.word())


def left_divide(h: Hike, d: Hike) -> Hike | None:
    """The hike ``q`` with ``d.q == h``, or ``None`` when ``d`` does not divide ``h``.

    Letters of ``d`` are consumed in normal-form order; each must be a
    minimal piece of what remains of ``h``.
    """
    cat = _same_catalog(h, d)
    masks = cat.masks
    rest = h.word()
    for p in d.word():
        try:
            pos = rest.index(p)
        except ValueError:
            return None
        mp = masks[p]
        if any(masks[q] & mp for q in rest[:pos]):
            return None
        del rest[pos]
    return hike_from_primes(cat, rest)


def left_divisors(h: Hike) -> list[tuple[Hike, Hike]]:
    """All pairs ``(d, h/d)`` with ``d`` a left divisor of ``h``.

    Left divisors are in bijection with the down-closed sets of prime
    occurrences of the heap, which are enumerated directly.
    """
    cat = h.catalog
    key = ("divisors", h.layers)
    cached = cat.cache.get(key)
    if cached is not None:
        return cached
    word = h.word()
    masks = [cat.masks[p] for p in word]
    pred = []
    for i, m in enumerate(masks):
        bits = 0
        for j in range(i):
            if masks[j] & m:
                bits |= 1 << j
        pred.append(bits)
    out = []
    for ideal in kernels.order_ideals(pred):
        inside = [p for i, p in enumerate(word) if ideal >> i & 1]
        outside = [p for i, p in enumerate(word) if not ideal >> i & 1]
        out.append((hike_from_primes(cat, inside), hike_from_primes(cat, outside)))
    out.sort(key=lambda pair: (pair[0].length, pair[0].omega, pair[0].layers))
    if len(cat.cache) < 200_000:
        cat.cache[key] = out
    return out


def divides(d: Hike, h: Hike) -> bool:
    return left_divide(h, d) is not None


def is_self_avoiding(h: Hike) -> bool:
    """At most one heap layer: pairwise vertex-disjoint primes."""
    return len(h.layers) <= 1


def maximal_occurrences(h: Hike) -> list[int]:
    """Positions (in the normal-form word) of pieces with nothing above them."""
    masks = [h.catalog.masks[p] for p in h.word()]
    return [i for i, m in enumerate(masks) if not any(masks[j] & m for j in range(i + 1, len(masks)))]


def is_walk(h: Hike) -> bool:
    """Non-trivial with exactly one maximal piece (a pyramid)."""
    return not h.is_trivial and len(maximal_occurrences(h)) == 1


def top_prime(h: Hike) -> int | None:
    """The unique prime right-divisor of a walk, else ``None``."""
    tops = maximal_occurrences(h)
    if h.is_trivial or len(tops) != 1:
        return None
    return h.word()[tops[0]]


def prime_divisors(h: Hike) -> tuple[int, ...]:
    """Primes dividing ``h`` on the left: exactly the first layer."""
    return h.layers[0] if h.layers else ()


def _independent_sets(
    cands: Sequence[int], masks: Sequence[int], lengths: Sequence[int], budget: int
) -> list[tuple[tuple[int, ...], int, int]]:
    """Nonempty sets of pairwise disjoint candidates with total length <= budget,
    as ``(primes, mask, length)``."""
    out: list[tuple[tuple[int, ...], int, int]] = []

    def rec(start: int, chosen: tuple[int, ...], used: int, total: int) -> None:
        for i in range(start, len(cands)):
            p = cands[i]
            lp = lengths[p]
            if masks[p] & used or total + lp > budget:
                continue
            nxt = chosen + (p,)
            out.append((nxt, used | masks[p], total + lp))
            rec(i + 1, nxt, used | masks[p], total + lp)

    rec(0, (), 0, 0)
    return out


def self_avoiding_hikes(cat: PrimeCatalog, max_length: int | None = None) -> list[Hike]:
    """All hikes with at most one layer, the trivial hike included."""
    budget = sum(cat.lengths) if max_length is None else max_length
    sets = _independent_sets(range(len(cat)), cat.masks, cat.lengths, budget)
    hikes = [Hike(cat, ())] + [Hike(cat, (ps,)) for ps, _, _ in sets]
    hikes.sort(key=lambda h: (h.length, h.layers))
    return hikes


def enumerate_hikes(cat: PrimeCatalog, max_length: int, cap: int | None = None) -> list[Hike]:
    """Every hike of length at most ``max_length``, once each, ordered by
    (length, normal form).

    Normal forms are generated directly: each new layer is an independent set
    of primes that all meet the previous layer.
    """
    if max_length < 0:
        raise ValueError("max_length must be non-negative")
    limit = cap if cap is not None else enumeration_cap(DEFAULT_HIKE_CAP)
    key = ("hikes", max_length)
    cached = cat.cache.get(key)
    if cached is not None:
        return cached
    masks, lengths = cat.masks, cat.lengths
    everything = list(range(len(cat)))
    layer_memo: dict[tuple[int, int], list[tuple[tuple[int, ...], int, int]]] = {}

    def layers_after(prev_mask: int, budget: int):
        memo_key = (prev_mask, budget)
        got = layer_memo.get(memo_key)
        if got is None:
            cands = everything if prev_mask < 0 else [p for p in everything if masks[p] & prev_mask]
            got = _independent_sets(cands, masks, lengths, budget)
            layer_memo[memo_key] = got
        return got

    found: list[HikeId] = [()]

    def rec(prefix: HikeId, prev_mask: int, budget: int) -> None:
        for ps, mask, total in layers_after(prev_mask, budget):
            layers = prefix + (ps,)
            found.append(layers)
            if len(found) > limit:
                raise SizeCapError(f"more than {limit} hikes of length <= {max_length}")
            rec(layers, mask, budget - total)

    rec((), -1, max_length)
    hikes = [Hike(cat, layers) for layers in found]
    hikes.sort(key=lambda h: (h.length, h.layers))
    cat.cache[key] = hikes
    return hikes


def iter_hikes(cat: PrimeCatalog, max_length: int, cap: int | None = None) -> Iterator[Hike]:
    """Streaming view of :func:`enumerate_hikes`."""
    yield from enumerate_hikes(cat, max_length, cap)


def hikes_by_length(hikes: Iterable[Hike], max_length: int) -> list[list[Hike]]:
    buckets: list[list[Hike]] = [[] for _ in range(max_length + 1)]
    for h in hikes:
        if h.length <= max_length:
            buckets[h.length].append(h)
    return buckets
