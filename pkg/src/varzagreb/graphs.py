"""Simple undirected graphs: construction, degree sequences, isomorphism, serialization.

Vertices are dense integer labels 0..n-1.  Graphs are immutable value objects,
safe to share between workers; every operation here is a pure function.

Supported interchange formats:
  * graph6 -- one graph per line, single-byte size header (n <= 62),
    upper-triangle adjacency bits in column-major order, 6 bits per
    printable character with a +63 offset.
  * plain edge list -- first line "n m", then m lines "u v" (0-based labels).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

__all__ = [
    "Graph",
    "DegreeProfile",
    "GraphError",
    "Graph6ParseError",
    "degree_profile",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "cycle_complement",
    "is_graphical",
    "realize_degree_sequence",
    "canonical_form",
    "permute_graph",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "format_edge_list",
]

CANONICAL_MAX_VERTICES = 12
GRAPH6_MAX_VERTICES = 62


class GraphError(ValueError):
    """Invalid graph construction or operation outside a stated precondition."""


class Graph6ParseError(GraphError):
    """Malformed graph6 input.  ``offset`` is the character position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with a frozen edge set.

    Edges are stored as (u, v) pairs with u < v; no loops, no multi-edges.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e} invalid on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph, normalizing edge endpoint order and rejecting loops."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    def degree(self, v: int) -> int:
        return sum(1 for u, w in self.edges if u == v or w == v)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees plus the derived invariants delta, Delta, m."""

    degrees: tuple[int, ...]
    delta: int
    Delta: int
    m: int

    def multiset(self) -> tuple[int, ...]:
        """Degree multiset as a non-increasing tuple (canonical multiset key)."""
        return tuple(sorted(self.degrees, reverse=True))


def degree_profile(g: Graph) -> DegreeProfile:
    degs = [0] * g.n
    for u, v in g.edges:
        degs[u] += 1
        degs[v] += 1
    return DegreeProfile(tuple(degs), min(degs), max(degs), len(g.edges))


def adjacency_masks(g: Graph) -> list[int]:
    """Adjacency rows as bitmasks: bit v of row u set iff uv is an edge."""
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def permute_graph(g: Graph, perm) -> Graph:
    """Relabel: vertex v becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of 0..n-1")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges))


# ---------------------------------------------------------------------------
# Basic constructions
# ---------------------------------------------------------------------------


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"complete graph needs k >= 1, got {k}")
    return Graph.from_edges(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def path_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"path needs k >= 1, got {k}")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs k >= 3, got {k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def cycle_complement(k: int) -> Graph:
    """Complement of the k-cycle 0-1-...-(k-1)-0; every vertex has degree k-3."""
    if k < 5:
        raise GraphError(f"cycle complement needs k >= 5, got {k}")
    cyc = {(i, (i + 1) % k) for i in range(k)}
    cyc = {(min(u, v), max(u, v)) for u, v in cyc}
    edges = [
        (i, j) for i in range(k) for j in range(i + 1, k) if (i, j) not in cyc
    ]
    return Graph.from_edges(k, edges)


# ---------------------------------------------------------------------------
# Degree sequences: Erdos-Gallai test and Havel-Hakimi realization
# ---------------------------------------------------------------------------


def is_graphical(seq) -> bool:
    """Erdos-Gallai test: can ``seq`` be the degree multiset of a simple graph?"""
    d = sorted(seq, reverse=True)
    n = len(d)
    if n == 0:
        return True
    if d[-1] < 0 or d[0] > n - 1:
        return False
    if sum(d) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if prefix > rhs:
            return False
    return True


def realize_degree_sequence(seq) -> Graph | None:
    """Havel-Hakimi realization of a degree multiset, or None if not graphical.

    The sorted (non-increasing) sequence is assigned to labels 0..n-1 in order,
    so degrees[label] is non-increasing.  Processing picks the highest residual
    degree first; ties break toward the lowest label, both for the processed
    vertex and for its neighbors.
    """
    d = sorted(seq, reverse=True)
    n = len(d)
    if n == 0 or any(x < 0 for x in d) or d[0] > n - 1 or sum(d) % 2:
        return None
    rem = list(d)
    edges = []
    while True:
        v = max(range(n), key=lambda i: (rem[i], -i))
        k = rem[v]
        if k == 0:
            break
        rem[v] = 0
        targets = sorted((i for i in range(n) if i != v and rem[i] > 0),
                         key=lambda i: (-rem[i], i))
        if len(targets) < k:
            return None
        for u in targets[:k]:
            rem[u] -= 1
            edges.append((v, u))
    g = Graph.from_edges(n, edges)
    if degree_profile(g).multiset() != tuple(d):
        return None
    return g


# ---------------------------------------------------------------------------
# graph6 serialization
# ---------------------------------------------------------------------------


def _bit_positions(n: int):
    """Upper-triangle pairs in graph6 column-major order: (0,1),(0,2),(1,2),..."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def _graph6_from_bits(n: int, bits: list[int]) -> str:
    out = [chr(63 + n)]
    for start in range(0, len(bits), 6):
        chunk = bits[start:start + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_VERTICES:
        raise GraphError(f"graph6 writer supports n <= {GRAPH6_MAX_VERTICES}, got {g.n}")
    bits = [1 if (i, j) in g.edges else 0 for i, j in _bit_positions(g.n)]
    return _graph6_from_bits(g.n, bits)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    head = ord(s[0])
    if head == 126:
        raise Graph6ParseError("multi-byte graph6 size (n > 62) not supported", 0)
    if not 63 <= head <= 126:
        raise Graph6ParseError(f"invalid size character {s[0]!r}", 0)
    n = head - 63
    if n < 1:
        raise Graph6ParseError("graph6 size must be at least 1", 0)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(s) - 1 != nchars:
        raise Graph6ParseError(
            f"expected {nchars} payload characters for n={n}, got {len(s) - 1}",
            min(len(s), 1 + nchars),
        )
    bits: list[int] = []
    for pos, ch in enumerate(s[1:], start=1):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6ParseError(f"invalid payload character {ch!r}", pos)
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    if any(bits[nbits:]):
        raise Graph6ParseError("nonzero padding bits", len(s) - 1)
    edges = [pair for pair, b in zip(_bit_positions(n), bits) if b]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Plain edge-list format
# ---------------------------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not rows:
        raise GraphError("empty edge-list input")
    header = rows[0].split()
    if len(header) != 2:
        raise GraphError(f"line 1: expected header 'n m', got {rows[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError(f"line 1: non-integer header {rows[0]!r}") from None
    if len(rows) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = set()
    for idx, row in enumerate(rows[1:], start=2):
        parts = row.split()
        if len(parts) != 2:
            raise GraphError(f"line {idx}: expected 'u v', got {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {idx}: non-integer labels {row!r}") from None
        if u == v:
            raise GraphError(f"line {idx}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {idx}: label out of range 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in edges:
            raise GraphError(f"line {idx}: duplicate edge {key}")
        edges.add(key)
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Canonical form (exact, brute-force-equivalent)
# ---------------------------------------------------------------------------


def canonical_form(g: Graph) -> str:
    """Canonical graph6 encoding: equal strings iff isomorphic graphs.

    The encoding is the lexicographically minimal column-major upper-triangle
    bit string over all vertex permutations, returned as a graph6 string.  The
    search is a placement DFS with prefix pruning and interchangeable-vertex
    deduplication; both only skip branches that provably cannot reach a
    smaller string, so the result equals the full n! brute force.
    """
    if g.n > CANONICAL_MAX_VERTICES:
        raise GraphError(
            f"canonical form supports n <= {CANONICAL_MAX_VERTICES}, got {g.n}"
        )
    return _graph6_from_bits(g.n, _canonical_bits(g))


def _canonical_bits(g: Graph) -> list[int]:
    n = g.n
    if n == 1:
        return []
    adj = adjacency_masks(g)
    total = n * (n - 1) // 2

    best = [1 if (i, j) in g.edges else 0 for i, j in _bit_positions(n)]
    placed: list[int] = []
    used = [False] * n

    def descend(pos: int):
        if pos == n:
            return
        lo = pos * (pos - 1) // 2
        hi = lo + pos
        unused = [v for v in range(n) if not used[v]]
        unused_mask = 0
        for v in unused:
            unused_mask |= 1 << v
        ranked: list[tuple[tuple[int, ...], int]] = []
        for v in unused:
            col = tuple(1 if adj[v] >> placed[i] & 1 else 0 for i in range(pos))
            # Skip v if an already-kept candidate w is interchangeable with it:
            # same column and same adjacency to every other unused vertex.
            duplicate = False
            for col_w, w in ranked:
                if col_w != col:
                    continue
                others = unused_mask & ~(1 << v) & ~(1 << w)
                if adj[v] & others == adj[w] & others:
                    duplicate = True
                    break
            if not duplicate:
                ranked.append((col, v))
        ranked.sort()
        for col, v in ranked:
            seg = best[lo:hi]
            col_list = list(col)
            if col_list > seg:
                break
            if col_list < seg:
                best[lo:hi] = col_list
                best[hi:] = [1] * (total - hi)
            used[v] = True
            placed.append(v)
            descend(pos + 1)
            placed.pop()
            used[v] = False

    descend(0)
    return best


def brute_force_canonical_bits(g: Graph) -> list[int]:
    """Reference canonicalization over all n! permutations (test oracle)."""
    n = g.n
    pairs = list(_bit_positions(n))
    best = None
    for perm in permutations(range(n)):
        relabeled = {
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges
        }
        bits = [1 if p in relabeled else 0 for p in pairs]
        if best is None or bits < best:
            best = bits
    return best if best is not None else []
