"""Immutable simple graphs with bitmask adjacency, graph6 I/O, and the
extremal constructions (clique joined with an independent set, with disjoint
cliques, or with a path).

Vertices are 0..n-1. Adjacency is stored as one Python int per vertex, bit v
of rows[u] set iff uv is an edge. Python ints are arbitrary precision, so the
same representation covers every size up to the graph6 long-form limit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

# Largest vertex count representable by the 3-byte graph6 length escape.
MAX_VERTICES = 258047

_G6_HEADER = ">>graph6<<"


def _bits(mask: int):
    """Yield set bit indices of mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} references vertices >= n")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u, row in enumerate(self.rows):
            for v in _bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @cached_property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def edges(self):
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1) << (u + 1)):
                yield (u, v)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("loops not allowed")
        if self.has_edge(u, v):
            return self
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def component_masks(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        comps = []
        rem = (1 << self.n) - 1
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & rem & ~comp
                comp |= frontier
            comps.append(comp)
            rem &= ~comp
        return comps

    def components(self) -> list[tuple[int, ...]]:
        return [tuple(_bits(m)) for m in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def induced_subgraph(self, vertices) -> "Graph":
        """Subgraph induced on the given vertices, relabeled to 0..k-1 in
        ascending order of the original labels."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in _bits(self.rows[v]):
                if u in pos:
                    rows[pos[v]] |= 1 << pos[u]
        return Graph(len(keep), tuple(rows))

    def relabel(self, perm) -> "Graph":
        """Image under the permutation perm, perm[v] = new label of v."""
        rows = [0] * self.n
        for v in range(self.n):
            for u in _bits(self.rows[v]):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6 codec


def parse_graph6(text) -> Graph:
    """Decode one graph6 string (str or ASCII bytes) into a Graph.

    Accepts the optional '>>graph6<<' header and both length encodings: a
    single byte for n <= 62 and the three-byte escape 126,b1,b2,b3 for
    63 <= n <= 258047. The edge bits are the upper triangle in column-major
    order, packed big-endian into 6-bit groups offset by 63.
    """
    if isinstance(text, bytes):
        try:
            s = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ValueError(f"graph6 input is not ASCII: {exc}") from None
    else:
        s = text
    s = s.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for c in s:
        o = ord(c)
        if o < 63 or o > 126:
            raise ValueError(f"character {c!r} outside graph6 range")
        vals.append(o - 63)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    else:
        if len(vals) < 4:
            raise ValueError("truncated graph6 length escape")
        if vals[1] == 63:
            raise ValueError(
                f"graph6 long-form length exceeds the {MAX_VERTICES}-vertex limit")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise ValueError(f"truncated graph6 edge section: {len(body)} of {need} bytes")
    if len(body) > need:
        raise ValueError(f"trailing data after graph6 edge section")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 string (no header, no newline)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= MAX_VERTICES:
        out = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError(f"vertex count {n} exceeds graph6 limit {MAX_VERTICES}")
    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc = 0
                filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return "".join(chr(c) for c in out)


# ---------------------------------------------------------------------------
# Standard generators


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def independent(n: int) -> Graph:
    return Graph.empty(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i to i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    rows = []
    off = 0
    for g in graphs:
        rows.extend(r << off for r in g.rows)
        off += g.n
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Edit operations


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus all edges between them."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise ValueError(f"join on {n} vertices exceeds the representation limit")
    m1 = (1 << g1.n) - 1
    m2 = ((1 << g2.n) - 1) << g1.n
    rows = [r | m2 for r in g1.rows]
    rows += [(r << g1.n) | m1 for r in g2.rows]
    return Graph(n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.induced_subgraph([u for u in range(g.n) if u != v])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge uv: the merged vertex keeps label min(u, v), parallel
    edges collapse, the loop is dropped, labels above max(u, v) shift down."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    lo, hi = min(u, v), max(u, v)
    merged = (g.rows[lo] | g.rows[hi]) & ~(1 << lo) & ~(1 << hi)
    rows = []
    for w in range(g.n):
        if w == lo:
            rows.append(merged)
        elif w == hi:
            rows.append(0)
        else:
            r = g.rows[w] & ~(1 << hi)
            if merged >> w & 1:
                r |= 1 << lo
            rows.append(r)
    return delete_vertex(Graph(g.n, tuple(rows)), hi)


# ---------------------------------------------------------------------------
# Extremal constructions


def construct_kr_extremal(n: int, r: int) -> Graph:
    """K_{r-2} joined with an independent set on n-r+2 vertices."""
    if r < 3:
        raise ValueError("r must be at least 3")
    if n < r - 1:
        raise ValueError(f"need n >= r-1, got n={n}, r={r}")
    return join(complete(r - 2), independent(n - r + 2))


def kst_parts(n: int, s: int, t: int) -> tuple[int, int]:
    """Residual decomposition sizes for the K_{s,t} construction: k full
    cliques K_t plus one clique K_p, with n-s+1 = k*t + p and 0 <= p < t."""
    rem = n - s + 1
    return rem // t, rem % t


def construct_kst_extremal(n: int, s: int, t: int) -> Graph:
    """K_{s-1} joined with k disjoint copies of K_t plus a smaller clique K_p
    absorbing the remainder of n-s+1 modulo t."""
    if not 2 <= s <= t:
        raise ValueError(f"need 2 <= s <= t, got s={s}, t={t}")
    if n < s:
        raise ValueError(f"need n >= s, got n={n}, s={s}")
    k, p = kst_parts(n, s, t)
    parts = [complete(t)] * k
    if p:
        parts.append(complete(p))
    residual = disjoint_union(*parts) if parts else Graph.empty(0)
    return join(complete(s - 1), residual)


def construct_cdv_extremal(n: int, m: int) -> Graph:
    """K_{m-1} joined with a path on n-m+1 vertices."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if n < m:
        raise ValueError(f"need n >= m, got n={n}, m={m}")
    return join(complete(m - 1), path(n - m + 1))


# ---------------------------------------------------------------------------
# Structure recognition


def decompose_apex_clique(g: Graph) -> tuple[tuple[int, ...], Graph]:
    """Split g into (K, H): K is the set of universal vertices (necessarily a
    clique) and H the subgraph induced on the rest. For a complete graph K is
    everything and H is empty."""
    univ = tuple(v for v in range(g.n) if g.degree(v) == g.n - 1)
    rest = [v for v in range(g.n) if g.degree(v) < g.n - 1]
    return univ, g.induced_subgraph(rest)


@dataclass(frozen=True)
class ResidualShape:
    """Classification of a residual graph: one of 'independent',
    'disjoint_paths', 'disjoint_cliques' (with the common clique size), or
    'other'."""

    kind: str
    clique_size: int | None = None


def _component_graphs(g: Graph) -> list[Graph]:
    return [g.induced_subgraph(_bits(m)) for m in g.component_masks()]


def _is_path_graph(g: Graph) -> bool:
    # Connected, acyclic, max degree <= 2. A single vertex counts.
    return g.is_connected() and g.edge_count == g.n - 1 and g.max_degree() <= 2


def is_path_union(g: Graph) -> bool:
    """True iff every component is a path (isolated vertices included)."""
    return g.max_degree() <= 2 and g.edge_count == g.n - len(g.component_masks())


def recognize_residual(h: Graph) -> ResidualShape:
    """Classify h as an independent set, a disjoint union of equal cliques,
    a disjoint union of paths, or other. Equal cliques take precedence over
    paths so that a perfect matching reads as copies of K_2."""
    if h.edge_count == 0:
        return ResidualShape("independent")
    comps = _component_graphs(h)
    sizes = {c.n for c in comps}
    if len(sizes) == 1 and all(c.edge_count == c.n * (c.n - 1) // 2 for c in comps):
        return ResidualShape("disjoint_cliques", clique_size=comps[0].n)
    if all(_is_path_graph(c) for c in comps):
        return ResidualShape("disjoint_paths")
    return ResidualShape("other")


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in _bits(g.rows[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True
