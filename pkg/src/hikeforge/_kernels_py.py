"""Pure-Python implementations of the hot kernels.

These are the reference versions; ``_kernels.pyx`` mirrors them with
fixed-width integers.  Both must return identical results.
"""

from __future__ import annotations

from typing import Sequence


def stack_levels(masks: Sequence[int]) -> list[int]:
    """Heap level (1-based) of each piece when stacked in the given order.

    A piece falls onto the highest earlier piece whose vertex mask it meets.
    """
    levels: list[int] = []
    for i, m in enumerate(masks):
        top = 0
        for j in range(i):
            if masks[j] & m and levels[j] > top:
                top = levels[j]
        levels.append(top + 1)
    return levels


def order_ideals(pred: Sequence[int]) -> list[int]:
    """All down-closed subsets of a poset given in a linear-extension order.

    ``pred[i]`` is a bitmask of elements that must precede ``i``; every set
    bit refers to an index smaller than ``i``.  Each ideal is returned once,
    as a bitmask.
    """
    k = len(pred)
    out: list[int] = []
    stack = [(0, 0)]
    while stack:
        i, chosen = stack.pop()
        if i == k:
            out.append(chosen)
            continue
        stack.append((i + 1, chosen))
        if pred[i] & ~chosen == 0:
            stack.append((i + 1, chosen | (1 << i)))
    return out


def ryser_perm_poly(rows: Sequence[int], n: int) -> list[int]:
    """Coefficients of perm(I + u A) for a 0/1 matrix given by row bitmasks.

    Ryser's inclusion-exclusion over column subsets; each row sum is the
    linear polynomial ``[i in S] + u * |A_i & S|``.
    """
    total = [0] * (n + 1)
    for s in range(1, 1 << n):
        prod = [1]
        for i in range(n):
            a = (s >> i) & 1
            b = bin(rows[i] & s).count("1")
            if a == 0 and b == 0:
                prod = None
                break
            nxt = [0] * (len(prod) + 1)
            for d, c in enumerate(prod):
                if c:
                    nxt[d] += a * c
                    nxt[d + 1] += b * c
            prod = nxt
        if prod is None:
            continue
        sign = -1 if (n - bin(s).count("1")) % 2 else 1
        for d in range(min(len(prod), n + 1)):
            total[d] += sign * prod[d]
    return total
