"""Classical integer arithmetic by trial division (arguments stay small)."""

from __future__ import annotations

from itertools import count


def factorize(m: int) -> dict[int, int]:
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def mobius_n(m: int) -> int:
    f = factorize(m)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisor_count(m: int) -> int:
    total = 1
    for e in factorize(m).values():
        total *= e + 1
    return total


def big_omega_n(m: int) -> int:
    return sum(factorize(m).values())


def prime_power_base(m: int) -> int | None:
    """``p`` when ``m = p^r`` with ``r >= 1``, else ``None``."""
    f = factorize(m) if m > 1 else {}
    return next(iter(f)) if len(f) == 1 else None


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def first_primes(k: int) -> list[int]:
    out: list[int] = []
    for c in count(2):
        if len(out) == k:
            return out
        if all(c % p for p in out if p * p <= c):
            out.append(c)
    return out
