"""Shared test utilities: an independent brute-force minor oracle built on
set partitions, a girth computation, and small random-graph builders."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from spectralminors import Graph


def set_partitions_exact(items: list, k: int):
    """All partitions of items into exactly k nonempty blocks."""
    n = len(items)
    if k < 1 or k > n:
        return

    def rec(i, blocks):
        if i == n:
            if len(blocks) == k:
                yield [list(b) for b in blocks]
            return
        # not enough items left to open the missing blocks
        if len(blocks) + (n - i) < k:
            return
        x = items[i]
        for b in blocks:
            b.append(x)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([x])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [])


def _connected_subset(g: Graph, block) -> bool:
    block = set(block)
    seen = {next(iter(block))}
    stack = list(seen)
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u in block and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == block


def _blocks_adjacent(g: Graph, b1, b2) -> bool:
    return any(g.has_edge(u, v) for u in b1 for v in b2)


def oracle_has_minor(h: Graph, g: Graph) -> bool:
    """Brute force: try every subset of V(G), every partition of it into
    n(H) blocks, every assignment of blocks to H-vertices. Only sensible for
    n(H) <= 4, n(G) <= 6."""
    k = h.n
    if k == 0:
        return True
    if k > g.n:
        return False
    hedges = list(h.edges())
    for size in range(k, g.n + 1):
        for subset in combinations(range(g.n), size):
            for part in set_partitions_exact(list(subset), k):
                if not all(_connected_subset(g, b) for b in part):
                    continue
                for perm in permutations(range(k)):
                    if all(_blocks_adjacent(g, part[perm[a]], part[perm[b]])
                           for a, b in hedges):
                        return True
    return False


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, None for forests. BFS from every vertex;
    a cross or back edge at depths d1, d2 closes a cycle of length
    d1 + d2 + 1."""
    best = None
    for root in range(g.n):
        depth = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in g.neighbors(v):
                    if u not in depth:
                        depth[u] = depth[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif u != parent[v]:
                        # closed walk through the root; never shorter than
                        # the girth, and tight from a root on a shortest cycle
                        cyc = depth[u] + depth[v] + 1
                        if best is None or cyc < best:
                            best = cyc
            frontier = nxt
    return best


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_max_degree_graph(rng: random.Random, n: int, dmax: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < dmax and deg[v] < dmax and rng.random() < 0.7:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges)


def relabeled(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)
