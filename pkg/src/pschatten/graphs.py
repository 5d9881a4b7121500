"""Graph container, graph6 and edge-list formats, bipartiteness, tree generators.

Vertices are the integers 0..n-1.  Graphs are immutable once built; every
function here is pure, so concurrent use is safe.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass

# Exhaustive tree enumeration is capped here; above it use sample_trees.
TREE_ENUMERATION_CAP = 10

_G6_HEADER = ">>graph6<<"


class GraphInputError(ValueError):
    """Structurally invalid construction input (bad endpoint, loop, bad n)."""


class GraphParseError(ValueError):
    """A textual graph encoding could not be decoded."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class NotBipartiteError(ValueError):
    """Raised by operations that require bipartite input; carries an odd cycle."""

    def __init__(self, odd_cycle: list[int]):
        super().__init__(f"graph is not bipartite; odd cycle {odd_cycle}")
        self.odd_cycle = list(odd_cycle)


class TreeEnumerationCapError(ValueError):
    """Exhaustive enumeration requested above the cap; use sample_trees instead."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count plus a frozen set of (u, v) pairs, u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def adjacency_matrix(self) -> list[list[float]]:
        mat = [[0.0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            mat[u][v] = 1.0
            mat[v][u] = 1.0
        return mat

    def with_isolated(self, count: int = 1) -> "Graph":
        """Same edges on `count` extra (isolated) vertices."""
        if count < 0:
            raise GraphInputError("count must be nonnegative")
        return Graph(self.n + count, self.edges)


@dataclass(frozen=True)
class BipartitionWitness:
    """Either a proper 2-coloring or an odd closed walk proving none exists."""

    classes: dict[int, int] | None
    odd_cycle: list[int] | None

    @property
    def is_bipartite(self) -> bool:
        return self.classes is not None


def from_edge_list(n: int, pairs) -> Graph:
    """Build a Graph from (u, v) pairs; duplicates collapse, loops are rejected."""
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    edges = set()
    for u, v in pairs:
        u, v = int(u), int(v)
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# graph6 (single line, bit-packed upper triangle, columnwise, 6-bit chunks +63)
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optionally prefixed by the >>graph6<< header)."""
    base = 0
    if text.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        text = text[base:]
    if not text:
        raise GraphParseError("empty graph6 string", offset=base)
    for i, ch in enumerate(text):
        if not (63 <= ord(ch) <= 126):
            raise GraphParseError(f"byte {ord(ch)} outside graph6 range", offset=base + i)

    if text[0] != "~":
        n = ord(text[0]) - 63
        body_at = 1
    else:
        if len(text) >= 2 and text[1] == "~":
            raise GraphParseError("graphs with n > 258047 are not supported", offset=base + 1)
        if len(text) < 4:
            raise GraphParseError("truncated long-form vertex count", offset=base + len(text))
        n = ((ord(text[1]) - 63) << 12) | ((ord(text[2]) - 63) << 6) | (ord(text[3]) - 63)
        body_at = 4

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = text[body_at:]
    if len(body) < nchars:
        raise GraphParseError(
            f"truncated adjacency data: need {nchars} bytes, have {len(body)}",
            offset=base + len(text),
        )
    if len(body) > nchars:
        raise GraphParseError("trailing bytes after adjacency data", offset=base + body_at + nchars)

    bits = []
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    for j in range(nbits, len(bits)):
        if bits[j]:
            raise GraphParseError("nonzero padding bits", offset=base + body_at + j // 6)

    edges = set()
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.add((row, col))
            idx += 1
    return Graph(n, frozenset(edges))


def write_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line (no header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise GraphInputError("graphs with n > 258047 are not supported by graph6")

    present = g.edges
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if (row, col) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return head + "".join(chunks)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphParseError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphParseError(f"expected 'n m' on the first line, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphParseError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    pairs = []
    for k, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v' on line {k}, got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphParseError(f"non-integer endpoint on line {k}") from exc
    try:
        return from_edge_list(n, pairs)
    except GraphInputError as exc:
        raise GraphParseError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bipartiteness
# ---------------------------------------------------------------------------


def is_bipartite(g: Graph) -> BipartitionWitness:
    """BFS 2-coloring; on failure returns an odd closed walk as certificate.

    Deterministic: components are explored from the smallest unvisited vertex
    and neighbors in ascending order.
    """
    adj = g.adjacency()
    color: list[int] = [-1] * g.n
    parent: list[int] = [-1] * g.n
    depth: list[int] = [0] * g.n

    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartitionWitness(None, _odd_walk(u, v, parent, depth))
    return BipartitionWitness({v: color[v] for v in range(g.n)}, None)


def _odd_walk(u: int, v: int, parent: list[int], depth: list[int]) -> list[int]:
    """Closed odd walk through conflicting edge (u, v): u .. lca .. v, then back to u."""
    path_u, path_v = [u], [v]
    while depth[path_u[-1]] > depth[path_v[-1]]:
        path_u.append(parent[path_u[-1]])
    while depth[path_v[-1]] > depth[path_u[-1]]:
        path_v.append(parent[path_v[-1]])
    while path_u[-1] != path_v[-1]:
        path_u.append(parent[path_u[-1]])
        path_v.append(parent[path_v[-1]])
    return path_u + path_v[-2::-1]


# ---------------------------------------------------------------------------
# generators and tree machinery
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    """P_n: the path 0-1-...-(n-1)."""
    if n < 1:
        raise GraphInputError("path_graph requires n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """S_n: center 0 joined to 1..n-1."""
    if n < 1:
        raise GraphInputError("star_graph requires n >= 1")
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def tree_from_pruefer(seq) -> Graph:
    """Decode a Pruefer sequence; the tree has n = len(seq) + 2 vertices."""
    seq = [int(s) for s in seq]
    n = len(seq) + 2
    for s in seq:
        if not (0 <= s < n):
            raise GraphInputError(f"sequence entry {s} out of range for n={n}")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        v = heapq.heappop(leaves)
        edges.append((v, s) if v < s else (s, v))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return Graph(n, frozenset(edges))


def pruefer_from_tree(g: Graph) -> list[int]:
    """Encode a tree (n >= 2) by repeatedly deleting the smallest leaf."""
    _require_tree(g)
    if g.n < 2:
        raise GraphInputError("Pruefer encoding requires n >= 2")
    adj = [set(nb) for nb in g.adjacency()]
    degree = [len(a) for a in adj]
    leaves = [v for v in range(g.n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(g.n - 2):
        v = heapq.heappop(leaves)
        u = adj[v].pop()
        adj[u].discard(v)
        degree[u] -= 1
        degree[v] = 0
        seq.append(u)
        if degree[u] == 1:
            heapq.heappush(leaves, u)
    return seq


def _require_tree(g: Graph) -> None:
    if g.n == 0:
        raise GraphInputError("empty graph is not a tree")
    if g.m != g.n - 1:
        raise GraphInputError(f"not a tree: {g.m} edges on {g.n} vertices")
    seen = [False] * g.n
    adj = g.adjacency()
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    if count != g.n:
        raise GraphInputError("not a tree: graph is disconnected")


def _centroids(adj: list[list[int]], n: int) -> list[int]:
    """One or two vertices minimizing the largest remaining component."""
    if n == 1:
        return [0]
    size = [1] * n
    order = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                stack.append(v)
    for u in reversed(order):
        if parent[u] != -1:
            size[parent[u]] += size[u]
    best = None
    cents: list[int] = []
    for u in range(n):
        # components left by deleting u: each child subtree plus the parent side
        heaviest = n - size[u]
        for v in adj[u]:
            if v != parent[u]:
                heaviest = max(heaviest, size[v])
        if best is None or heaviest < best:
            best = heaviest
            cents = [u]
        elif heaviest == best:
            cents.append(u)
    return cents


def _rooted_code(adj: list[list[int]], root: int) -> str:
    def code(v: int, par: int) -> str:
        parts = sorted(code(w, v) for w in adj[v] if w != par)
        return "(" + "".join(parts) + ")"

    return code(root, -1)


def ahu_code(g: Graph) -> str:
    """Canonical string for a free tree; equal codes iff isomorphic."""
    _require_tree(g)
    adj = g.adjacency()
    return min(_rooted_code(adj, c) for c in _centroids(adj, g.n))


def enumerate_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of free trees on n vertices.

    Grows trees a leaf at a time from K_2 and deduplicates by canonical code;
    every tree on k vertices is some tree on k-1 vertices plus a leaf, so the
    sweep is exhaustive.  Output is sorted by canonical code.
    """
    if n < 2:
        raise GraphInputError("enumerate_trees requires n >= 2")
    if n > TREE_ENUMERATION_CAP:
        raise TreeEnumerationCapError(
            f"n={n} exceeds the enumeration cap {TREE_ENUMERATION_CAP}; "
            "use sample_trees for seeded random sampling"
        )
    level = {ahu_code(path_graph(2)): path_graph(2)}
    for k in range(3, n + 1):
        grown: dict[str, Graph] = {}
        for tree in level.values():
            for v in range(k - 1):
                candidate = Graph(k, tree.edges | {(v, k - 1)})
                code = ahu_code(candidate)
                if code not in grown:
                    grown[code] = candidate
        level = grown
    return [level[code] for code in sorted(level)]


def sample_trees(n: int, count: int, seed: int = 0) -> list[Graph]:
    """Seeded random labeled trees via Pruefer decoding, deduplicated and sorted."""
    if n < 2:
        raise GraphInputError("sample_trees requires n >= 2")
    if count < 1:
        raise GraphInputError("count must be positive")
    rng = random.Random(seed)
    found: dict[str, Graph] = {}
    for _ in range(count):
        seq = [rng.randrange(n) for _ in range(n - 2)]
        tree = tree_from_pruefer(seq)
        code = ahu_code(tree)
        if code not in found:
            found[code] = tree
    return [found[code] for code in sorted(found)]
