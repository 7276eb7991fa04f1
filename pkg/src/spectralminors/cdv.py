"""Colin de Verdiere parameter classification through the minor-closed
characterizations decidable by finite obstruction sets: mu <= 1 iff a disjoint
union of paths, mu <= 2 iff outerplanar, mu <= 3 iff planar, mu <= 4 iff
linklessly embeddable. Values 5 and above are reported as a single class.

Also carries the additive bound under joining a universal vertex and the two
reported (not asserted) edge-count inequalities for mu-bounded and bipartite
linkless graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complete_bipartite, is_bipartite, is_path_union
from .minors import is_linkless, is_outerplanar, is_planar

_LABELS = {1: "<=1", 2: "=2", 3: "=3", 4: "=4", 5: ">=5"}


@dataclass(frozen=True)
class MuClass:
    """Classification value in 1..5 (5 standing for 'at least 5'), its label,
    and the name of the characterization that witnessed it."""

    value: int
    label: str
    witness: str

    def at_most(self, m: int) -> bool:
        """Whether the class certifies mu <= m (only meaningful for m <= 4)."""
        return self.value <= m


def classify_mu(g: Graph) -> MuClass:
    """Smallest characterization level containing g. The ladder is evaluated
    bottom up and purely through minor tests, no density shortcuts."""
    if is_path_union(g):
        return MuClass(1, _LABELS[1], "disjoint-paths")
    if is_outerplanar(g):
        return MuClass(2, _LABELS[2], "outerplanar")
    if is_planar(g):
        return MuClass(3, _LABELS[3], "planar")
    if is_linkless(g):
        return MuClass(4, _LABELS[4], "linkless")
    return MuClass(5, _LABELS[5], "none")


def mu_join_bound(g: Graph, v: int, mu_without: int | MuClass) -> tuple[int, bool]:
    """Upper bound mu(g) <= mu(g - v) + 1 given a value (or class) for
    g - v. The second component reports whether the bound is known to be
    exact: v adjacent to every other vertex and g containing an edge."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    base = mu_without.value if isinstance(mu_without, MuClass) else int(mu_without)
    exact = g.degree(v) == g.n - 1 and g.edge_count >= 1
    return base + 1, exact


def check_problem1(g: Graph, m: int) -> bool:
    """Report whether e(g) <= m*n - m(m+1)/2 for a graph verified to have
    mu <= m. Decidable only for m <= 4."""
    if not 1 <= m <= 4:
        raise ValueError("m must be in 1..4 (higher classes are not decidable here)")
    if not classify_mu(g).at_most(m):
        raise ValueError(f"graph is not verified to have mu <= {m}")
    return g.edge_count <= m * g.n - m * (m + 1) // 2


def check_problem2(g: Graph) -> bool:
    """Report whether e(g) <= 3n - 9 for a graph verified bipartite and
    linklessly embeddable."""
    if not is_bipartite(g):
        raise ValueError("graph is not bipartite")
    if not is_linkless(g):
        raise ValueError("graph is not linklessly embeddable")
    return g.edge_count <= 3 * g.n - 9


def mu_kmm_check(m: int) -> bool:
    """Confirm classify_mu(K_{m,m}) reports exactly m + 1, for m in {3, 4}
    (the sizes where the answer lands inside the decidable range)."""
    if not 3 <= m <= 4:
        raise ValueError("m must be 3 or 4")
    return classify_mu(complete_bipartite(m, m)).value == m + 1
