"""Checks tying hike series to matrix polynomials and orbit counts.

Every comparison is exact.  Non-commutative identities are compared after a
monoid homomorphism (arc -> u, or arc -> t_head), which preserves them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Callable

from .arithmetic import liouville, mangoldt_by_convolution
from .errors import InternalConsistencyError, SizeCapError
from .graph import (
    Digraph,
    adjacency_trace_powers,
    char_poly,
    hashimoto_matrix,
    matrix_trace_powers,
    permanental_poly,
    reversed_char_poly,
)
from .hikes import enumerate_hikes, self_avoiding_hikes
from .incidence import mobius
from .intarith import mobius_n
from .polys import IntPoly, TruncatedMultiSeries, poly_det
from .primes import enumerate_primes
from .reports import CheckReport, combine

MACMAHON_VERTEX_CAP = 7
LABELED_DET_CAP = 6


@dataclass(frozen=True)
class OrbitCounts:
    """``counts[l]`` is the number of primitive orbits of length ``l``
    (``counts[0]`` is always 0)."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise InternalConsistencyError(f"negative orbit count in {self.counts}")

    def __getitem__(self, ell: int) -> int:
        return self.counts[ell]

    @property
    def bound(self) -> int:
        return len(self.counts) - 1

    def to_json(self) -> list[int]:
        return list(self.counts)


# -- determinant and permanent -------------------------------------------------


def _labeled_determinant(g: Digraph) -> dict[frozenset, int]:
    """Expand ``det(I - W)`` over permutations; key each monomial by its arc set."""
    n = g.n
    out: dict[frozenset, int] = {}
    for sigma in permutations(range(n)):
        moved = [i for i in range(n) if sigma[i] != i]
        if any((i, sigma[i]) not in g.arcs for i in moved):
            continue
        sign = _perm_sign(sigma)
        loops = [i for i in range(n) if sigma[i] == i and (i, i) in g.arcs]
        base = [(i, sigma[i]) for i in moved]
        for pick in range(1 << len(loops)):
            chosen = [(loops[j], loops[j]) for j in range(len(loops)) if pick >> j & 1]
            arcs = frozenset(base + chosen)
            coeff = sign * (-1) ** len(arcs)
            out[arcs] = out.get(arcs, 0) + coeff
    return {k: v for k, v in out.items() if v}


def _perm_sign(sigma: tuple[int, ...]) -> int:
    seen = [False] * len(sigma)
    sign = 1
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, size = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            size += 1
        if size % 2 == 0:
            sign = -sign
    return sign


def check_det_mobius(g: Digraph, bound: int, labeled_cap: int = LABELED_DET_CAP) -> CheckReport:
    """``det(I - zA)`` against the length aggregate of the Mobius series; for
    small graphs also the arc-labelled expansion of ``det(I - W)``."""
    cat = enumerate_primes(g)
    top = bound
    cp = char_poly(g)
    agg = [0] * (top + 1)
    hikes = enumerate_hikes(cat, top)
    for h in hikes:
        agg[h.length] += mobius(h)
    for k in range(top + 1):
        if agg[k] != cp[k]:
            return CheckReport("det-mobius", bound, False, len(hikes), {"degree": k, "mobius": agg[k], "det": cp[k]})
    parts = [CheckReport("det-mobius/length", bound, True, len(hikes))]
    if g.n <= labeled_cap:
        det_terms = _labeled_determinant(g)
        hike_terms: dict[frozenset, int] = {}
        for h in self_avoiding_hikes(cat):
            arcs = frozenset(a for p in h.word() for a in cat.primes[p].arcs)
            hike_terms[arcs] = hike_terms.get(arcs, 0) + mobius(h)
        if det_terms != hike_terms:
            diff = sorted(
                (sorted(k), det_terms.get(k, 0), hike_terms.get(k, 0))
                for k in set(det_terms) | set(hike_terms)
                if det_terms.get(k, 0) != hike_terms.get(k, 0)
            )
            parts.append(CheckReport("det-mobius/labeled", bound, False, len(det_terms), {"arcs, det, mobius": diff[0]}))
        else:
            parts.append(CheckReport("det-mobius/labeled", bound, True, len(det_terms)))
    return combine("det-mobius", bound, parts)


def check_perm_liouville(g: Digraph, bound: int) -> CheckReport:
    """Permanent coefficients count self-avoiding hikes, and the Liouville
    series is the reciprocal of ``perm(I + uA)`` up to ``u^bound``."""
    cat = enumerate_primes(g)
    perm = permanental_poly(g)
    sa = [0] * (g.n + 1)
    for h in self_avoiding_hikes(cat):
        sa[h.length] += 1
    if list(perm) + [0] * (g.n + 1 - len(perm)) != sa:
        return CheckReport("perm-liouville", bound, False, counterexample={"perm": perm.to_json(), "self_avoiding": sa})
    lam = [0] * (bound + 1)
    hikes = enumerate_hikes(cat, bound)
    for h in hikes:
        lam[h.length] += liouville(h)
    prod = (IntPoly(lam) * perm).truncate(bound)
    if prod != IntPoly([1]):
        k = next(i for i in range(bound + 1) if prod[i] != (1 if i == 0 else 0))
        return CheckReport("perm-liouville", bound, False, len(hikes), {"degree": k, "coefficient": prod[k]})
    return CheckReport("perm-liouville", bound, True, len(hikes))


# -- MacMahon ------------------------------------------------------------------


def macmahon_determinant(g: Digraph, bound: int) -> TruncatedMultiSeries:
    """``det(I - AT)`` with ``T = diag(t_0..t_{n-1})``: an arc into ``j`` carries ``t_j``."""
    n = g.n
    if n > MACMAHON_VERTEX_CAP:
        raise SizeCapError(f"MacMahon check limited to {MACMAHON_VERTEX_CAP} vertices")
    total = TruncatedMultiSeries(n, max(bound, n), {})
    for sigma in permutations(range(n)):
        term = TruncatedMultiSeries.constant(n, max(bound, n), _perm_sign(sigma))
        for i in range(n):
            j = sigma[i]
            entry = TruncatedMultiSeries.constant(n, max(bound, n), 1 if i == j else 0)
            if (i, j) in g.arcs:
                entry = entry - TruncatedMultiSeries.variable(n, max(bound, n), j)
            if not entry.terms:
                term = None
                break
            term = term * entry
        if term is not None:
            total = total + term
    return total


def check_macmahon(g: Digraph, bound: int) -> CheckReport:
    """``1/det(I - AT)`` against the sum of visit monomials of all hikes."""
    n = g.n
    det = macmahon_determinant(g, bound)
    inv = TruncatedMultiSeries(n, bound, det.terms).inverse()
    cat = enumerate_primes(g)
    hikes = enumerate_hikes(cat, bound)
    acc: dict[tuple[int, ...], int] = {}
    for h in hikes:
        exps = [0] * n
        for p in h.word():
            for v in cat.primes[p].vertices:
                exps[v] += 1
        key = tuple(exps)
        acc[key] = acc.get(key, 0) + 1
    got = TruncatedMultiSeries(n, bound, acc)
    if got != inv:
        diff = sorted(e for e in set(got.terms) | set(inv.terms) if got.terms.get(e, 0) != inv.terms.get(e, 0))
        e = diff[0]
        return CheckReport(
            "macmahon", bound, False, len(hikes), {"monomial": list(e), "hikes": got.terms.get(e, 0), "det": inv.terms.get(e, 0)}
        )
    return CheckReport("macmahon", bound, True, len(hikes))


# -- traces, Mangoldt, orbits --------------------------------------------------


def check_trace_mangoldt(g: Digraph, bound: int) -> CheckReport:
    """``sum of Lambda over hikes of length k == Tr(A^k)`` for ``1 <= k <= bound``."""
    cat = enumerate_primes(g)
    hikes = enumerate_hikes(cat, bound)
    sums = [0] * (bound + 1)
    for h in hikes:
        sums[h.length] += mangoldt_by_convolution(h)
    traces = adjacency_trace_powers(g, bound) if bound else []
    for k in range(1, bound + 1):
        if sums[k] != traces[k - 1]:
            return CheckReport("trace-mangoldt", bound, False, len(hikes), {"length": k, "mangoldt": sums[k], "trace": traces[k - 1]})
    return CheckReport("trace-mangoldt", bound, True, len(hikes))


def orbits_from_traces(traces: list[int]) -> OrbitCounts:
    """Mobius inversion ``pi(l) = (1/l) sum_{d | l} mu(l/d) Tr(M^d)``; ``traces[k-1] = Tr(M^k)``."""
    counts = [0]
    for ell in range(1, len(traces) + 1):
        s = sum(mobius_n(ell // d) * traces[d - 1] for d in range(1, ell + 1) if ell % d == 0)
        if s % ell:
            raise InternalConsistencyError(f"orbit count for length {ell} is {s}/{ell}, not an integer")
        counts.append(s // ell)
    return OrbitCounts(tuple(counts))


def primitive_orbit_counts(g: Digraph, bound: int) -> OrbitCounts:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return orbits_from_traces(adjacency_trace_powers(g, bound))


def backtrackless_orbit_counts(g: Digraph, bound: int) -> OrbitCounts:
    """Same inversion applied to the non-backtracking arc-to-arc matrix."""
    _, b = hashimoto_matrix(g)
    if not b:
        return OrbitCounts((0,) * (bound + 1))
    return orbits_from_traces(matrix_trace_powers(b, bound))


def _is_primitive(seq: tuple[int, ...]) -> bool:
    k = len(seq)
    return all(seq != seq[d:] + seq[:d] for d in range(1, k) if k % d == 0)


def brute_force_orbits(g: Digraph, bound: int, backtrackless: bool = False) -> OrbitCounts:
    """Enumerate closed walks as vertex sequences, keep the lexicographically
    least rotation of each primitive one and count."""
    succ = g.successors()
    counts = [0] * (bound + 1)

    def closes(seq: list[int]) -> bool:
        if (seq[-1], seq[0]) not in g.arcs:
            return False
        if backtrackless:
            k = len(seq)
            return all(seq[(i + 2) % k] != seq[i] for i in range(k))
        return True

    def rec(seq: list[int]) -> None:
        k = len(seq)
        if closes(seq):
            t = tuple(seq)
            if _is_primitive(t) and all(t <= t[r:] + t[:r] for r in range(1, k)):
                counts[k] += 1
        if k == bound:
            return
        for w in succ[seq[-1]]:
            if w < seq[0]:
                continue  # the least rotation starts at a minimal vertex
            if backtrackless and k >= 2 and w == seq[-2]:
                continue
            seq.append(w)
            rec(seq)
            seq.pop()

    for s in range(g.n):
        rec([s])
    return OrbitCounts(tuple(counts))


def euler_product(orbits: OrbitCounts, bound: int) -> IntPoly:
    """Coefficients of ``prod_l (1 - u^l)^(-orbits[l])`` up to ``u^bound``."""
    out = IntPoly([1])
    for ell in range(1, min(bound, orbits.bound) + 1):
        e = orbits[ell]
        if e == 0:
            continue
        factor = IntPoly(_spread([comb(e + k - 1, k) for k in range(bound // ell + 1)], ell))
        out = (out * factor).truncate(bound)
    return out


def _spread(coeffs: list[int], step: int) -> list[int]:
    out = [0] * ((len(coeffs) - 1) * step + 1)
    for k, c in enumerate(coeffs):
        out[k * step] = c
    return out


def _first_mismatch(a: IntPoly, b: IntPoly, bound: int) -> int | None:
    return next((k for k in range(bound + 1) if a[k] != b[k]), None)


def check_ihara_factorization(g: Digraph, bound: int) -> CheckReport:
    """Split the orbit zeta of a bidirected loop-free graph into its
    backtrackless (Ihara) part and the backtrack-bearing remainder."""
    if not g.is_bidirected() or g.has_loops():
        raise ValueError("Ihara factorization needs a bidirected graph without self-loops")
    pi_all = primitive_orbit_counts(g, bound)
    pi_bl = backtrackless_orbit_counts(g, bound)
    rest = [a - b for a, b in zip(pi_all.counts, pi_bl.counts)]
    if any(r < 0 for r in rest):
        ell = next(i for i, r in enumerate(rest) if r < 0)
        return CheckReport("ihara", bound, False, counterexample={"length": ell, "all": pi_all[ell], "backtrackless": pi_bl[ell]})
    pi_b = OrbitCounts(tuple(rest))
    zeta_a = euler_product(pi_all, bound)
    zeta_i = euler_product(pi_bl, bound)
    zeta_b = euler_product(pi_b, bound)

    checks: list[tuple[str, IntPoly, IntPoly]] = [
        ("zeta_A = 1/det(I - uA)", zeta_a, char_poly(g).series_inverse(bound)),
        ("zeta_A = zeta_I * zeta_b", zeta_a, (zeta_i * zeta_b).truncate(bound)),
    ]
    arcs, b = hashimoto_matrix(g)
    det_b = reversed_char_poly(b) if b else IntPoly([1])
    checks.append(("zeta_I = 1/det(I - uB)", zeta_i, det_b.series_inverse(bound)))
    lhs, rhs = _ihara_bass_sides(g, det_b)
    checks.append(("Ihara-Bass determinant formula", lhs, rhs))
    for name, x, y in checks:
        limit = max(x.degree, y.degree, bound) if name.startswith("Ihara-Bass") else bound
        k = _first_mismatch(x, y, limit)
        if k is not None:
            return CheckReport("ihara", bound, False, counterexample={"identity": name, "degree": k, "lhs": x[k], "rhs": y[k]})
    return CheckReport(
        "ihara", bound, True, len(checks), details={"all": pi_all.to_json(), "backtrackless": pi_bl.to_json()}
    )


def _ihara_bass_sides(g: Digraph, det_b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Both sides of ``det(I - uB) (1-u^2)^(n-m) = det(I - uA + u^2 (D - I))``
    arranged to avoid negative powers."""
    n = g.n
    m = len(g.arcs) // 2
    adj = g.adjacency()
    deg = [sum(row) for row in adj]
    mat: list[list[IntPoly]] = []
    for i in range(n):
        row = []
        for j in range(n):
            c = [1 if i == j else 0, -adj[i][j], (deg[i] - 1) if i == j else 0]
            row.append(IntPoly(c))
        mat.append(row)
    rhs = poly_det(mat) if n else IntPoly([1])
    one_minus_u2 = IntPoly([1, 0, -1])
    if m >= n:
        return det_b, rhs * one_minus_u2 ** (m - n)
    return det_b * one_minus_u2 ** (n - m), rhs


def check_lambert_resolvent(g: Digraph, bound: int, orbits: OrbitCounts | None = None) -> CheckReport:
    """``Tr(A^m) = sum_{l | m} l pi(l)``.  The left side is read off the
    logarithmic derivative of ``det(I - uA)``, independently of matrix powers."""
    pi = orbits or primitive_orbit_counts(g, bound)
    p = char_poly(g)
    # Tr((I - uA)^-1) - n = -u p'(u) / p(u)
    deriv = IntPoly([k * p[k] for k in range(p.degree + 1)])
    lhs = (-(deriv * p.series_inverse(bound))).truncate(bound)
    for m in range(1, bound + 1):
        rhs = sum(ell * pi[ell] for ell in range(1, m + 1) if m % ell == 0)
        if lhs[m] != rhs:
            return CheckReport("lambert-resolvent", bound, False, m, {"m": m, "trace": lhs[m], "orbit_sum": rhs})
    return CheckReport("lambert-resolvent", bound, True, bound)


def check_orbits(g: Digraph, bound: int) -> CheckReport:
    fast = primitive_orbit_counts(g, bound)
    slow = brute_force_orbits(g, bound)
    if fast != slow:
        ell = next(i for i in range(bound + 1) if fast[i] != slow[i])
        return CheckReport("orbits", bound, False, counterexample={"length": ell, "traces": fast[ell], "walks": slow[ell]})
    return CheckReport("orbits", bound, True, bound, details={"counts": fast.to_json()})


SUITES: dict[str, Callable[[Digraph, int], CheckReport]] = {
    "mobius": check_det_mobius,
    "liouville": check_perm_liouville,
    "macmahon": check_macmahon,
    "mangoldt": check_trace_mangoldt,
    "orbits": check_orbits,
    "ihara": check_ihara_factorization,
    "lambert": check_lambert_resolvent,
}


def run_suite(g: Digraph, bound: int, suite: str = "all") -> list[CheckReport]:
    """Run one named check, or every applicable one in declaration order."""
    if suite != "all":
        return [SUITES[suite](g, bound)]
    out = []
    for name, fn in SUITES.items():
        if name == "ihara" and (not g.is_bidirected() or g.has_loops()):
            continue
        if name == "macmahon" and g.n > MACMAHON_VERTEX_CAP:
            continue
        out.append(fn(g, bound))
    return out
