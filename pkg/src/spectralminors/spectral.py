"""Spectral radius and Perron vector by shifted power iteration, plus the
closed-form eigenvalue bounds used to compare against extremal constructions.

The iteration runs on A + (max degree + 1) I so the dominant eigenvalue is
simple and positive even on bipartite components, starts from the all-ones
vector, and stops when the infinity-norm eigen-residual drops below tol. On a
disconnected graph each component is handled separately and the component of
largest spectral radius wins (ties to the lowest-indexed component); the
returned vector is zero off the winning component and has maximum entry 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import Graph, _bits, join

ITERATION_CAP = 10 ** 6
DEFAULT_TOL = 1e-12


class ConvergenceError(RuntimeError):
    """Raised when the power iteration fails to reach tolerance in time."""


@dataclass(frozen=True)
class EigenResult:
    """Spectral radius lam, Perron vector (max entry 1, zero off the winning
    component), final infinity-norm residual, iteration count, and the index
    of a vertex whose entry equals 1."""

    lam: float
    vector: tuple[float, ...]
    residual: float
    iterations: int
    max_vertex: int


def _component_power(adj: np.ndarray, tol: float) -> tuple[float, np.ndarray, float, int]:
    k = adj.shape[0]
    if k == 1:
        return 0.0, np.ones(1), 0.0, 0
    shift = float(adj.sum(axis=1).max()) + 1.0
    x = np.ones(k)
    for it in range(1, ITERATION_CAP + 1):
        ax = adj @ x
        lam = float(x @ ax) / float(x @ x)
        resid = float(np.abs(ax - lam * x).max())
        if resid <= tol:
            return lam, x, resid, it
        y = ax + shift * x
        x = y / y.max()
    raise ConvergenceError(
        f"power iteration did not reach tol={tol} in {ITERATION_CAP} iterations")


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> EigenResult:
    """Largest adjacency eigenvalue of g with its nonnegative eigenvector."""
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if tol <= 0:
        raise ValueError("tol must be positive")
    best = None
    best_vs = None
    for mask in g.component_masks():
        vs = list(_bits(mask))
        adj = np.zeros((len(vs), len(vs)))
        pos = {v: i for i, v in enumerate(vs)}
        for v in vs:
            for u in _bits(g.rows[v]):
                adj[pos[v], pos[u]] = 1.0
        lam, x, resid, it = _component_power(adj, tol)
        if best is None or lam > best[0]:
            best = (lam, x, resid, it)
            best_vs = vs
    lam, x, resid, it = best
    vector = [0.0] * g.n
    for v, val in zip(best_vs, x):
        vector[v] = float(val)
    max_vertex = vector.index(1.0)
    return EigenResult(lam, tuple(vector), resid, it, max_vertex)


def rayleigh_delta(g: Graph, x, edges_removed, edges_added) -> float:
    """Change of the Rayleigh quotient x'Ax / x'x when the listed edges are
    removed and added, the vector x held fixed."""
    x = [float(v) for v in x]
    if len(x) != g.n:
        raise ValueError(f"vector length {len(x)} does not match n={g.n}")
    norm = sum(v * v for v in x)
    if norm == 0.0:
        raise ValueError("vector must be nonzero")
    removed = {frozenset(e) for e in edges_removed}
    added = {frozenset(e) for e in edges_added}
    delta = 0.0
    for e in removed:
        if len(e) != 2:
            raise ValueError(f"loop or malformed edge {set(e)}")
        u, v = sorted(e)
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of g")
        delta -= 2.0 * x[u] * x[v]
    for e in added:
        if len(e) != 2:
            raise ValueError(f"loop or malformed edge {set(e)}")
        u, v = sorted(e)
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"({u}, {v}) out of range")
        if g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is already an edge of g")
        delta += 2.0 * x[u] * x[v]
    return delta / norm


@dataclass(frozen=True)
class QuotientMatrix:
    """2x2 quotient [[d, n2], [n1, k]] of a join: d is the internal degree on
    the first side (regular of degree d, n1 vertices), k the internal degree
    on the second side (n2 vertices). Degrees exceeding a side's order are
    allowed so the matrix can be used as a formal bound; when built from an
    actual join both inequalities hold automatically."""

    d: int
    k: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("both sides of a join must be nonempty")
        if self.d < 0 or self.k < 0:
            raise ValueError("internal degrees must be nonnegative")


def quotient_bound(q: QuotientMatrix) -> float:
    """Largest eigenvalue of [[d, n2], [n1, k]]."""
    return ((q.d + q.k) + math.sqrt((q.d - q.k) ** 2 + 4 * q.n1 * q.n2)) / 2.0


def kst_lambda_bound(n: int, s: int, t: int) -> float:
    """Spectral ceiling for graphs on n vertices with no K_{s,t} minor,
    2 <= s <= t: (s+t-3 + sqrt((s+t-3)^2 + 4((s-1)(n-s+1) - (s-2)(t-1)))) / 2."""
    if not 2 <= s <= t:
        raise ValueError(f"need 2 <= s <= t, got s={s}, t={t}")
    if n < s:
        raise ValueError(f"need n >= s, got n={n}")
    a = s + t - 3
    disc = a * a + 4 * ((s - 1) * (n - s + 1) - (s - 2) * (t - 1))
    return (a + math.sqrt(disc)) / 2.0


class InterlacingCheck(NamedTuple):
    bound: float
    lam: float
    tight: bool


def check_interlacing_bound(h1: Graph, h2: Graph, tol: float = DEFAULT_TOL) -> InterlacingCheck:
    """For a join of a d-regular h1 with h2 of max degree k, compare the
    spectral radius of the join against the quotient eigenvalue of
    [[d, n2], [n1, k]]. tight reports whether h2 is k-regular, the structural
    condition for equality."""
    degs1 = set(h1.degrees())
    if len(degs1) > 1:
        raise ValueError("first factor must be regular")
    if h1.n < 1 or h2.n < 1:
        raise ValueError("both factors must be nonempty")
    d = degs1.pop() if degs1 else 0
    k = h2.max_degree()
    bound = quotient_bound(QuotientMatrix(d, k, h1.n, h2.n))
    lam = spectral_radius(join(h1, h2), tol).lam
    tight = len(set(h2.degrees())) == 1
    return InterlacingCheck(bound, lam, tight)
