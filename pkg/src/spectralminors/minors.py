"""Exact minor testing with explicit branch-set witnesses, the forbidden-minor
families for outerplanar, planar, and linkless graphs, and the delta-wye
closure that generates the linkless obstruction set from K_6.

has_minor decides whether H is a minor of G by building branch sets, one per
H-vertex in decreasing-degree order. Each branch set is a connected subset of
the unused G-vertices chosen to touch the neighborhood of every previously
placed set it must be adjacent to. Two exactness-preserving reductions run
first and make the join-heavy instances tractable:

  * twin capping: a class of mutually interchangeable vertices (identical open
    or closed neighborhoods) larger than n(H) can lose its excess members, as
    any branch set using two twins can drop one of them;
  * universal peeling: if u is adjacent to every other vertex of G, then H is
    a minor of G iff H is a minor of G-u or H-v is a minor of G-u for some
    H-vertex v (take {u} as the branch set of v).

Everything here works on bitmask vertex sets over the original labels, so
witnesses come out in G's labeling with no translation step.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_key
from .graph import Graph, _bits, complete, complete_bipartite, delete_vertex


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets indexed by H-vertex: branch_sets[v] is the set of
    G-vertices contracted to form v."""

    branch_sets: tuple[frozenset[int], ...]


def verify_witness(h: Graph, g: Graph, w: MinorWitness) -> bool:
    """Check a witness from scratch: one nonempty branch set per H-vertex,
    pairwise disjoint, each inducing a connected subgraph of G, and a G-edge
    between the sets of every pair of H-adjacent vertices."""
    if len(w.branch_sets) != h.n:
        return False
    used = 0
    masks = []
    for bs in w.branch_sets:
        if not bs:
            return False
        m = 0
        for v in bs:
            if not 0 <= v < g.n:
                return False
            m |= 1 << v
        if m & used:
            return False
        used |= m
        masks.append(m)
    for m in masks:
        comp = m & -m
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & m & ~comp
            comp |= frontier
        if comp != m:
            return False
    for a, b in h.edges():
        nb = 0
        for v in _bits(masks[a]):
            nb |= g.rows[v]
        if not nb & masks[b]:
            return False
    return True


# ---------------------------------------------------------------------------
# The search


def _mask_edges(rows, act: int) -> int:
    return sum((rows[v] & act).bit_count() for v in _bits(act)) // 2


def _mask_components(rows, mask: int) -> list[int]:
    comps = []
    rem = mask
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def _induced(rows, mask: int) -> Graph:
    vs = list(_bits(mask))
    pos = {v: i for i, v in enumerate(vs)}
    out = []
    for v in vs:
        r = 0
        for u in _bits(rows[v] & mask):
            r |= 1 << pos[u]
        out.append(r)
    return Graph(len(vs), tuple(out))


def _twin_cap(g_rows, g_act: int, cap: int) -> int:
    """Drop vertices of any twin class beyond cap members, repeating until
    stable (deletions can create new twins)."""
    changed = True
    while changed:
        changed = False
        groups: dict[tuple[int, int], list[int]] = {}
        for v in _bits(g_act):
            nb = g_rows[v] & g_act
            groups.setdefault((0, nb), []).append(v)
            groups.setdefault((1, nb | (1 << v)), []).append(v)
        for vs in groups.values():
            if len(vs) > cap:
                for v in vs[cap:]:
                    g_act &= ~(1 << v)
                changed = True
                break
    return g_act


def _backtrack(h_rows, h_act: int, g_rows, g_act: int):
    hvs = sorted(_bits(h_act), key=lambda v: (-(h_rows[v] & h_act).bit_count(), v))
    hn = len(hvs)
    hpos = {v: i for i, v in enumerate(hvs)}
    earlier = []
    for i, v in enumerate(hvs):
        earlier.append(sorted(hpos[u] for u in _bits(h_rows[v] & h_act) if hpos[u] < i))
    blocks = [0] * hn
    nbhd = [0] * hn

    def h_components(start: int) -> list[int]:
        vs_mask = 0
        for i in range(start, hn):
            vs_mask |= 1 << hvs[i]
        comps = []
        rem = vs_mask
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= h_rows[v]
                frontier = nxt & rem & ~comp
                comp |= frontier
            comps.append(comp)
            rem &= ~comp
        return comps

    def feasible(i: int, free: int) -> bool:
        # Necessary condition: every component Q of H restricted to the
        # unplaced vertices must fit inside a single component C of G[free]
        # (adjacent branch sets meet, so Q's sets land in one component), and
        # C must touch the neighborhood of every placed set Q is adjacent to.
        if i == hn:
            return True
        gcomps = _mask_components(g_rows, free)
        for q in h_components(i):
            qsize = q.bit_count()
            ok = False
            for c in gcomps:
                if c.bit_count() < qsize:
                    continue
                good = True
                for v in _bits(q):
                    for j in earlier[hpos[v]]:
                        if j < i and not nbhd[j] & c:
                            good = False
                            break
                    if not good:
                        break
                if good:
                    ok = True
                    break
            if not ok:
                return False
        return True

    def candidates(free: int, cap: int, reqs):
        # Connected subsets of free with at most cap vertices meeting every
        # mask in reqs, each subset generated exactly once (by least vertex,
        # with in-branch exclusion).
        def grow(s, ext, banned):
            if all(s & r for r in reqs):
                yield s
            if s.bit_count() >= cap:
                return
            potential = s | (free & ~banned)
            for r in reqs:
                if not r & potential:
                    return
            while ext:
                vb = ext & -ext
                ext ^= vb
                ns = s | vb
                yield from grow(
                    ns,
                    (ext | (g_rows[vb.bit_length() - 1] & free)) & ~ns & ~banned,
                    banned,
                )
                banned |= vb

        banned = 0
        for rt in _bits(free):
            rb = 1 << rt
            yield from grow(rb, g_rows[rt] & free & ~banned & ~rb, banned)
            banned |= rb

    def place(i: int, free: int) -> bool:
        if i == hn:
            return True
        reqs = [nbhd[j] & free for j in earlier[i]]
        if any(r == 0 for r in reqs):
            return False
        cap = free.bit_count() - (hn - i - 1)
        if cap < 1:
            return False
        for b in candidates(free, cap, reqs):
            blocks[i] = b
            nb = 0
            for v in _bits(b):
                nb |= g_rows[v]
            nbhd[i] = nb & ~b
            nf = free & ~b
            if feasible(i + 1, nf) and place(i + 1, nf):
                return True
        return False

    if not feasible(0, g_act):
        return None
    if place(0, g_act):
        return {hvs[i]: blocks[i] for i in range(hn)}
    return None


def _search(h_rows, h_act: int, g_rows, g_act: int):
    hn = h_act.bit_count()
    if hn == 0:
        return {}
    gn = g_act.bit_count()
    if hn > gn:
        return None
    if _mask_edges(h_rows, h_act) > _mask_edges(g_rows, g_act):
        return None
    g_act = _twin_cap(g_rows, g_act, hn)
    gn = g_act.bit_count()
    if hn > gn:
        return None
    if gn == 1:
        return {next(_bits(h_act)): g_act}
    for u in _bits(g_act):
        if g_rows[u] & g_act == g_act ^ (1 << u):
            gm = g_act ^ (1 << u)
            seen = set()
            for v in _bits(h_act):
                hm = h_act ^ (1 << v)
                key = canonical_key(_induced(h_rows, hm))
                if key in seen:
                    continue
                seen.add(key)
                sub = _search(h_rows, hm, g_rows, gm)
                if sub is not None:
                    sub[v] = 1 << u
                    return sub
            return _search(h_rows, h_act, g_rows, gm)
    return _backtrack(h_rows, h_act, g_rows, g_act)


def has_minor(h: Graph, g: Graph) -> MinorWitness | None:
    """Witness that h is a minor of g, or None. The witness maps every
    h-vertex to its branch set in g's labeling and always passes
    verify_witness."""
    if h.n == 0:
        return MinorWitness(())
    sol = _search(h.rows, (1 << h.n) - 1, g.rows, (1 << g.n) - 1)
    if sol is None:
        return None
    w = MinorWitness(tuple(frozenset(_bits(sol[v])) for v in range(h.n)))
    assert verify_witness(h, g, w), "internal: search produced an invalid witness"
    return w


# ---------------------------------------------------------------------------
# Delta-wye closure and the obstruction families


def triangles(g: Graph):
    """All triangles of g as ordered triples u < v < w."""
    for u in range(g.n):
        above_u = g.rows[u] >> (u + 1) << (u + 1)
        for v in _bits(above_u):
            common = g.rows[u] & g.rows[v] >> (v + 1) << (v + 1)
            for w in _bits(common):
                yield (u, v, w)


def delta_to_y(g: Graph, tri) -> Graph:
    """Replace triangle tri by a new degree-3 vertex adjacent to its corners.
    The new vertex gets label n; edge count is preserved."""
    u, v, w = tri
    if not (g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w)):
        raise ValueError(f"{tri} is not a triangle")
    rows = list(g.rows) + [0]
    star = (1 << u) | (1 << v) | (1 << w)
    rows[u] &= ~((1 << v) | (1 << w))
    rows[v] &= ~((1 << u) | (1 << w))
    rows[w] &= ~((1 << u) | (1 << v))
    for x in (u, v, w):
        rows[x] |= 1 << g.n
    rows[g.n] = star
    return Graph(g.n + 1, tuple(rows))


def y_to_delta(g: Graph, v: int) -> Graph:
    """Inverse move: v must have degree 3 with pairwise non-adjacent
    neighbors; delete v and join its neighbors into a triangle. Defined only
    in the edge-preserving case, the exact inverse of delta_to_y."""
    if not 0 <= v < g.n or g.degree(v) != 3:
        raise ValueError(f"vertex {v} does not have degree 3")
    a, b, c = g.neighbors(v)
    if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
        raise ValueError(f"neighbors of {v} are not pairwise non-adjacent")
    rows = list(g.rows)
    rows[a] |= (1 << b) | (1 << c)
    rows[b] |= (1 << a) | (1 << c)
    rows[c] |= (1 << a) | (1 << b)
    return delete_vertex(Graph(g.n, tuple(rows)), v)


def delta_y_closure(seed: Graph) -> tuple[Graph, ...]:
    """Closure of seed under both moves, one representative per isomorphism
    class, sorted by (vertex count, edge count, canonical key). Both moves
    preserve the edge count, so the closure is finite."""
    seen = {canonical_key(seed): seed}
    queue = [seed]
    while queue:
        g = queue.pop()
        results = [delta_to_y(g, tri) for tri in triangles(g)]
        for v in range(g.n):
            if g.degree(v) == 3:
                a, b, c = g.neighbors(v)
                if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                    results.append(y_to_delta(g, v))
        for h in results:
            k = canonical_key(h)
            if k not in seen:
                seen[k] = h
                queue.append(h)
    return tuple(sorted(seen.values(), key=lambda x: (x.n, x.edge_count, canonical_key(x))))


@dataclass(frozen=True)
class ForbiddenFamily:
    """A named finite obstruction set: g belongs to the associated class iff
    none of the members is a minor of g."""

    name: str
    members: tuple[Graph, ...]

    def excludes(self, g: Graph) -> bool:
        return all(has_minor(m, g) is None for m in self.members)


@lru_cache(maxsize=1)
def petersen_family() -> tuple[Graph, ...]:
    """The delta-wye closure of K_6 (seven graphs, all with 15 edges)."""
    return delta_y_closure(complete(6))


@lru_cache(maxsize=1)
def outerplanar_obstructions() -> ForbiddenFamily:
    return ForbiddenFamily("outerplanar", (complete(4), complete_bipartite(2, 3)))


@lru_cache(maxsize=1)
def planar_obstructions() -> ForbiddenFamily:
    return ForbiddenFamily("planar", (complete(5), complete_bipartite(3, 3)))


@lru_cache(maxsize=1)
def linkless_obstructions() -> ForbiddenFamily:
    return ForbiddenFamily("linkless", petersen_family())


def is_outerplanar(g: Graph) -> bool:
    return outerplanar_obstructions().excludes(g)


def is_planar(g: Graph) -> bool:
    return planar_obstructions().excludes(g)


def is_linkless(g: Graph) -> bool:
    return linkless_obstructions().excludes(g)


# ---------------------------------------------------------------------------
# Clique completion and the star-free edge bound


class HypothesisViolation(ValueError):
    """A verified precondition of a completion check failed. Distinct from the
    check returning False, which means the hypotheses held but the completed
    graph left the family."""


def _family_member(g: Graph, family) -> bool:
    if family.kind == "kr":
        return has_minor(complete(family.r), g) is None
    if family.kind == "kst":
        return has_minor(complete_bipartite(family.s, family.t), g) is None
    from .cdv import classify_mu  # deferred, cdv sits above this module

    return classify_mu(g).value <= family.m


def clique_completion_safe(g: Graph, K, family) -> bool:
    """Complete the vertex set K to a clique and report whether the result
    still belongs to the family.

    Verified hypotheses (HypothesisViolation when broken): g is a family
    member; |K| matches the family's apex size (r-2, s-1, or m-1); the common
    neighborhood T of K outside K is large enough, max(r+1, C(r-2,2)+3) for
    the K_r family and C(|K|,2)+1 for the others.
    """
    ks = sorted(set(K))
    for v in ks:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    if not _family_member(g, family):
        raise HypothesisViolation("graph is not a member of the family")
    kind = family.kind
    if kind == "kr":
        want, a = family.r - 2, family.r - 2
        need_t = max(family.r + 1, a * (a - 1) // 2 + 3)
    elif kind == "kst":
        want = family.s - 1
        need_t = want * (want - 1) // 2 + 1
    else:
        want = family.m - 1
        need_t = want * (want - 1) // 2 + 1
    if len(ks) != want:
        raise HypothesisViolation(
            f"|K|={len(ks)} does not match the family apex size {want}")
    common = (1 << g.n) - 1
    for v in ks:
        common &= g.rows[v]
    for v in ks:
        common &= ~(1 << v)
    if common.bit_count() < need_t:
        raise HypothesisViolation(
            f"common neighborhood has {common.bit_count()} vertices, need {need_t}")
    g2 = g
    for i, u in enumerate(ks):
        for v in ks[i + 1:]:
            g2 = g2.with_edge(u, v)
    return _family_member(g2, family)


def max_degree_residual_bound(h: Graph, t: int) -> bool:
    """For connected h with no K_{1,t} minor, check e(h) <= n(h) + t(t-3)/2."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if not h.is_connected():
        raise ValueError("h must be connected")
    if has_minor(complete_bipartite(1, t), h) is not None:
        raise ValueError(f"h has a K_(1,{t}) minor")
    return h.edge_count <= h.n + t * (t - 3) // 2
