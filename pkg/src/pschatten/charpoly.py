"""Exact integer characteristic polynomials, b-coefficients, matchings, quasi-order.

Everything here runs over Python integers; no floating point touches this
path.  The characteristic polynomial of the adjacency matrix is written
phi(G, x) = sum_k c_k x^(n-k) with c_0 = 1, held as the vector (c_0..c_n).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graphs import Graph


class BipartitePatternError(ValueError):
    """Coefficient vector is not of bipartite shape (odd terms zero, alternating signs)."""


class QuasiOrderResult(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial: coeffs = (c_0..c_n), phi(x) = sum c_k x^(n-k)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("coefficient vector must be nonempty")
        if self.coeffs[0] != 1:
            raise ValueError("polynomial must be monic")
        if len(self.coeffs) > 1 and self.coeffs[1] != 0:
            raise ValueError("trace coefficient c_1 must be zero for adjacency matrices")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: float) -> float:
        acc = 0.0
        for c in self.coeffs:
            acc = acc * x + float(c)
        return acc

    def to_json(self) -> str:
        """JSON array of decimal strings (coefficients may exceed 64 bits)."""
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "CharPoly":
        return cls(tuple(int(s) for s in json.loads(text)))


@dataclass(frozen=True)
class BCoeffs:
    """Nonnegative vector b_0..b_floor(n/2) with phi(G,x) = sum (-1)^k b_k x^(n-2k)."""

    b: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.b) != self.n // 2 + 1:
            raise ValueError(f"expected {self.n // 2 + 1} entries for n={self.n}")
        if self.b[0] != 1:
            raise ValueError("b_0 must be 1")
        if any(v < 0 for v in self.b):
            raise ValueError("b-coefficients must be nonnegative")


def char_poly(g: Graph) -> CharPoly:
    """det(xI - A) with exact integer coefficients.

    Forests go through the leaf-deletion recursion (fast, O(n^2) polynomial
    ops with memoization); everything else through Faddeev-LeVerrier, whose
    per-step divisions are exact over the integers.
    """
    if _is_forest(g):
        return CharPoly(tuple(_forest_poly(g)))
    return CharPoly(tuple(_faddeev_leverrier(g)))


def _is_forest(g: Graph) -> bool:
    seen = [False] * g.n
    adj = g.adjacency()
    components = 0
    for start in range(g.n):
        if seen[start]:
            continue
        components += 1
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
    return g.m == g.n - components


def _forest_poly(g: Graph) -> list[int]:
    """Leaf recursion phi(F) = x*phi(F-v) - phi(F-v-u) for a leaf v with neighbor u."""
    adj = g.adjacency()
    memo: dict[frozenset[int], list[int]] = {}

    def poly(active: frozenset[int]) -> list[int]:
        cached = memo.get(active)
        if cached is not None:
            return cached
        leaf = -1
        neighbor = -1
        for v in sorted(active):
            live = [w for w in adj[v] if w in active]
            if len(live) == 1:
                leaf, neighbor = v, live[0]
                break
        if leaf == -1:
            # no edges left: phi = x^(#vertices)
            result = [1] + [0] * len(active)
        else:
            p = poly(active - {leaf}) + [0]  # times x
            q = poly(active - {leaf, neighbor})
            result = list(p)
            for j, c in enumerate(q):
                result[j + 2] -= c
        memo[active] = result
        return result

    return poly(frozenset(range(g.n)))


def _faddeev_leverrier(g: Graph) -> list[int]:
    n = g.n
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = 1
        a[v][u] = 1
    coeffs = [1]
    # P holds A * M_k; M_{k+1} = P + c_k I, c_{k+1} = -tr(A * M_{k+1}) / (k+1)
    p = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = [row[:] for row in p]
        ck = coeffs[k - 1]
        for i in range(n):
            m[i][i] += ck
        p = _matmul(a, m)
        t = sum(p[i][i] for i in range(n))
        if (-t) % k:
            raise ArithmeticError("inexact division in Faddeev-LeVerrier step")
        coeffs.append((-t) // k)
    return coeffs


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        row = a[i]
        acc = out[i]
        for k in range(n):
            aik = row[k]
            if aik:
                brow = b[k]
                for j in range(n):
                    acc[j] += aik * brow[j]
    return out


def b_coefficients(p: CharPoly) -> BCoeffs:
    """Extract b_k from c_{2k} = (-1)^k b_k; rejects non-bipartite patterns."""
    n = p.degree
    b = []
    for k, c in enumerate(p.coeffs):
        if k % 2 == 1:
            if c != 0:
                raise BipartitePatternError(
                    f"not a bipartite characteristic polynomial: c_{k} = {c} != 0"
                )
        else:
            val = c if k % 4 == 0 else -c
            if val < 0:
                raise BipartitePatternError(
                    f"not a bipartite characteristic polynomial: sign of c_{k} is wrong"
                )
            b.append(val)
    return BCoeffs(tuple(b), n)


def matching_count(g: Graph, k: int) -> int:
    """Number of k-edge matchings; DP on forests, subset scan on small graphs."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    counts = matching_counts(g)
    return counts[k] if k < len(counts) else 0


def matching_counts(g: Graph) -> tuple[int, ...]:
    """Vector (m_0, m_1, ...) of matching counts by size."""
    if _is_forest(g):
        return tuple(_forest_matchings(g))
    if g.m > 20:
        raise ValueError(
            "matching oracle only: general graphs need m <= 20 (got m="
            f"{g.m}); forests are unrestricted"
        )
    edges = sorted(g.edges)
    counts = [1]
    for k in range(1, g.m + 1):
        total = 0
        for subset in combinations(edges, k):
            used: set[int] = set()
            ok = True
            for u, v in subset:
                if u in used or v in used:
                    ok = False
                    break
                used.add(u)
                used.add(v)
            if ok:
                total += 1
        if total == 0:
            break
        counts.append(total)
    return tuple(counts)


def _forest_matchings(g: Graph) -> list[int]:
    adj = g.adjacency()
    seen = [False] * g.n
    total = [1]
    for start in range(g.n):
        if seen[start]:
            continue
        # iterative post-order over the component rooted at start
        order: list[tuple[int, int]] = []
        stack = [(start, -1)]
        seen[start] = True
        while stack:
            v, par = stack.pop()
            order.append((v, par))
            for w in adj[v]:
                if w != par:
                    seen[w] = True
                    stack.append((w, v))
        unmatched: dict[int, list[int]] = {}
        matched: dict[int, list[int]] = {}
        for v, par in reversed(order):
            a, b = [1], [0]
            for w in adj[v]:
                if w == par:
                    continue
                sw = _poly_add(unmatched[w], matched[w])
                # v stays unmatched, or v pairs with w (one extra edge)
                new_b = _poly_add(_poly_mul(b, sw), _poly_shift(_poly_mul(a, unmatched[w])))
                a = _poly_mul(a, sw)
                b = new_b
            unmatched[v] = a
            matched[v] = b
        total = _poly_mul(total, _poly_add(unmatched[start], matched[start]))
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = p[:]
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_shift(p: list[int]) -> list[int]:
    return [0] + p


def quasi_compare(a: BCoeffs, b: BCoeffs) -> QuasiOrderResult:
    """Coefficientwise comparison of b-vectors from graphs of equal order."""
    if a.n != b.n:
        raise ValueError(
            f"b-vectors come from different vertex counts ({a.n} vs {b.n}); "
            "pad the graphs to a common order first"
        )
    le = all(x <= y for x, y in zip(a.b, b.b))
    ge = all(x >= y for x, y in zip(a.b, b.b))
    if le and ge:
        return QuasiOrderResult.EQUAL
    if le:
        return QuasiOrderResult.LESS
    if ge:
        return QuasiOrderResult.GREATER
    return QuasiOrderResult.INCOMPARABLE
