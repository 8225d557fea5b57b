"""Helpers shared by the test modules: seeded random hikes and brute-force oracles."""

from __future__ import annotations

import random
from functools import lru_cache

from hikeforge.fixtures import identity_corpus
from hikeforge.hikes import Hike, enumerate_hikes, hike_from_primes
from hikeforge.primes import PrimeCatalog, enumerate_primes


@lru_cache(maxsize=None)
def corpus():
    return tuple(identity_corpus())


@lru_cache(maxsize=None)
def cyclic_catalogs():
    """Catalogs of corpus graphs with at least two primes."""
    return tuple(cat for cat in (enumerate_primes(g) for g in corpus()) if len(cat) >= 2)


def random_word(rng: random.Random, cat: PrimeCatalog, max_length: int) -> list[int]:
    word: list[int] = []
    total = 0
    for _ in range(rng.randint(0, 4)):
        p = rng.randrange(len(cat))
        if total + cat.lengths[p] > max_length:
            break
        word.append(p)
        total += cat.lengths[p]
    return word


def random_hike(rng: random.Random, cat: PrimeCatalog, max_length: int = 8) -> Hike:
    return hike_from_primes(cat, random_word(rng, cat, max_length))


def random_enumerated_hike(rng: random.Random, cat: PrimeCatalog, max_length: int = 7) -> Hike:
    return rng.choice(enumerate_hikes(cat, max_length))


def equivalent_words(cat: PrimeCatalog, word: list[int]) -> set[tuple[int, ...]]:
    """Every word reachable by swapping adjacent vertex-disjoint primes."""
    start = tuple(word)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a != b and not cat.dependent(a, b):
                v = w[:i] + (b, a) + w[i + 2 :]
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return seen


def divides_by_interleaving(d: Hike, h: Hike) -> Hike | None:
    """Quotient ``q`` with ``h == d q`` found by scanning every word of ``h``."""
    cat = h.catalog
    k = d.omega
    for w in equivalent_words(cat, h.word()):
        if hike_from_primes(cat, list(w[:k])) == d:
            return hike_from_primes(cat, list(w[k:]))
    return None
