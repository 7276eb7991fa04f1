"""Exhaustive extremal search over minor-closed families: enumerate or ingest
graphs of a fixed order, keep the family members, track the spectral-radius
and edge-count maximizers, and compare them against the reference
construction.

Enumeration is exact up to 7 vertices (one representative per isomorphism
class, grown by vertex augmentation with canonical-form deduplication).
Larger orders come in as graph6 streams. Scans can run on a process pool;
chunking is fixed (64 graphs) and the per-chunk results merge with
deterministic tie-breaking (lexicographically least graph6 string), so output
is byte-identical at any parallelism degree.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .cdv import classify_mu
from .families import FamilySpec
from .graph import Graph, decompose_apex_clique, encode_graph6, parse_graph6, recognize_residual
from .canon import canonical_key
from .minors import has_minor
from .spectral import DEFAULT_TOL, kst_lambda_bound, spectral_radius

ENUMERATION_LIMIT = 7
MATCH_TOL = 1e-9
_CHUNK = 64


# ---------------------------------------------------------------------------
# Graph sources


@lru_cache(maxsize=None)
def _atlas(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on exactly n vertices, built
    by adding a vertex with every possible neighborhood to every class on
    n - 1 vertices."""
    if n == 0:
        return (Graph.empty(0),)
    reps: dict[tuple[int, int], Graph] = {}
    for g in _atlas(n - 1):
        base = list(g.rows) + [0]
        for mask in range(1 << (n - 1)):
            rows = list(base)
            rows[n - 1] = mask
            for v in range(n - 1):
                if mask >> v & 1:
                    rows[v] |= 1 << (n - 1)
            h = Graph(n, tuple(rows))
            key = canonical_key(h)
            if key not in reps:
                reps[key] = h
    return tuple(reps.values())


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All graphs on n vertices up to isomorphism, n <= 7."""
    if not 0 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"internal enumeration covers 0 <= n <= {ENUMERATION_LIMIT}")
    for g in _atlas(n):
        if connected_only and not g.is_connected():
            continue
        yield g


def ingest_graph6_stream(path) -> Iterator[Graph]:
    """Lazily parse one graph per line from a graph6 file. Blank lines are
    skipped; a malformed line raises ValueError naming the line number."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_graph6(line)
            except ValueError as exc:
                raise ValueError(f"{path}: line {lineno}: {exc}") from None


# ---------------------------------------------------------------------------
# Membership


def family_filter(family: FamilySpec, g: Graph) -> bool:
    """True iff g belongs to the family, by exact minor tests."""
    if family.kind == "cdv":
        return classify_mu(g).value <= family.m
    return has_minor(family.forbidden_minor(), g) is None


@dataclass(frozen=True)
class MembershipReport:
    """verify_membership output: membership, spectral radius, the applicable
    closed-form bound (kst only), and for kst the equality-structure check
    (apex clique of s-1 universal vertices over disjoint K_t's with
    n = s-1 mod t)."""

    member: bool
    lam: float
    bound: float | None
    equality_structure: bool | None
    apex_size: int | None = None
    residual: str | None = None
    congruent: bool | None = None


def verify_membership(g: Graph, family: FamilySpec, tol: float = DEFAULT_TOL) -> MembershipReport:
    member = family_filter(family, g)
    lam = spectral_radius(g, tol).lam if g.n >= 1 else 0.0
    if family.kind != "kst":
        return MembershipReport(member, lam, None, None)
    s, t = family.s, family.t
    bound = kst_lambda_bound(g.n, s, t) if g.n >= s else None
    univ, rest = decompose_apex_clique(g)
    apex = len(univ)
    congruent = g.n % t == (s - 1) % t
    structure = False
    residual_kind = None
    if apex >= s - 1:
        # Keep s-1 universal vertices as the apex clique; the rest of the
        # universal vertices stay in the residual (a complete graph joined on
        # extra universal vertices is itself a union of cliques case).
        keep = set(univ[: s - 1])
        rest_vertices = [v for v in range(g.n) if v not in keep]
        residual = g.induced_subgraph(rest_vertices)
        shape = recognize_residual(residual)
        residual_kind = shape.kind
        if residual.n == 0:
            structure = congruent
        elif shape.kind == "disjoint_cliques" and shape.clique_size == t:
            structure = congruent
        elif shape.kind == "independent" and t == 1:
            structure = congruent
    return MembershipReport(member, lam, bound, structure, apex, residual_kind, congruent)


# ---------------------------------------------------------------------------
# The scan


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one exhaustive scan: maximizers over the family members on
    n vertices, the reference construction's values, whether they agree to
    within 1e-9, and the count of members whose spectral radius exceeds the
    kst closed-form bound (always 0 for the other families)."""

    n: int
    family: str
    params: str
    max_lambda: float
    argmax_g6: str
    max_edges: int
    edge_argmax_g6: str
    construction_lambda: float
    construction_edges: int
    lambda_match: bool
    bound_violations: int
    graphs_scanned: int


def _scan_chunk(family: FamilySpec, chunk: list[Graph], bound: float | None, tol: float):
    best_lam = None
    best_lam_g6 = None
    best_e = None
    best_e_g6 = None
    violations = 0
    members = 0
    for g in chunk:
        if not family_filter(family, g):
            continue
        members += 1
        lam = spectral_radius(g, tol).lam if g.n >= 1 else 0.0
        g6 = encode_graph6(g)
        if (
            best_lam is None
            or lam > best_lam
            or (lam == best_lam and g6 < best_lam_g6)
        ):
            best_lam, best_lam_g6 = lam, g6
        e = g.edge_count
        if best_e is None or e > best_e or (e == best_e and g6 < best_e_g6):
            best_e, best_e_g6 = e, g6
        if bound is not None and lam > bound + MATCH_TOL:
            violations += 1
    return (len(chunk), members, best_lam, best_lam_g6, best_e, best_e_g6, violations)


def _merge(parts):
    scanned = 0
    members = 0
    best_lam = None
    best_lam_g6 = None
    best_e = None
    best_e_g6 = None
    violations = 0
    for cnt, mem, lam, lam_g6, e, e_g6, vio in parts:
        scanned += cnt
        members += mem
        violations += vio
        if lam is not None and (
            best_lam is None
            or lam > best_lam
            or (lam == best_lam and lam_g6 < best_lam_g6)
        ):
            best_lam, best_lam_g6 = lam, lam_g6
        if e is not None and (best_e is None or e > best_e or (e == best_e and e_g6 < best_e_g6)):
            best_e, best_e_g6 = e, e_g6
    return scanned, members, best_lam, best_lam_g6, best_e, best_e_g6, violations


def _resolve_source(family: FamilySpec, n: int, source) -> list[Graph]:
    if source is None:
        graphs = list(enumerate_graphs(n))
    elif isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        graphs = list(ingest_graph6_stream(source))
    else:
        graphs = list(source)
    for i, g in enumerate(graphs):
        if g.n != n:
            raise ValueError(f"source graph {i} has {g.n} vertices, expected {n}")
    return graphs


def scan_family(
    family: FamilySpec,
    n: int,
    source=None,
    jobs: int = 1,
    tol: float = DEFAULT_TOL,
) -> SearchReport:
    """Scan every graph from the source (internal enumeration when None),
    keep the family members, and report both maximizers against the
    construction."""
    graphs = _resolve_source(family, n, source)
    bound = None
    if family.kind == "kst" and n >= family.s:
        bound = kst_lambda_bound(n, family.s, family.t)
    chunks = [graphs[i:i + _CHUNK] for i in range(0, len(graphs), _CHUNK)] or [[]]
    if jobs > 1 and len(chunks) > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            parts = pool.starmap(
                _scan_chunk, [(family, c, bound, tol) for c in chunks])
    else:
        parts = [_scan_chunk(family, c, bound, tol) for c in chunks]
    scanned, members, best_lam, best_lam_g6, best_e, best_e_g6, violations = _merge(parts)
    if best_lam is None:
        raise ValueError(f"no member of {family.label()} among the {scanned} graphs scanned")
    cons = family.construction(n)
    cons_lam = spectral_radius(cons, tol).lam if cons.n >= 1 else 0.0
    return SearchReport(
        n=n,
        family=family.kind,
        params=family.params_label(),
        max_lambda=best_lam,
        argmax_g6=best_lam_g6,
        max_edges=best_e,
        edge_argmax_g6=best_e_g6,
        construction_lambda=cons_lam,
        construction_edges=cons.edge_count,
        lambda_match=abs(best_lam - cons_lam) <= MATCH_TOL,
        bound_violations=violations,
        graphs_scanned=scanned,
    )


def search_max_lambda(family: FamilySpec, n: int, source=None, jobs: int = 1,
                      tol: float = DEFAULT_TOL) -> SearchReport:
    """Scan for the spectral-radius maximizer (the full report carries the
    edge maximizer as well)."""
    return scan_family(family, n, source=source, jobs=jobs, tol=tol)


def search_max_edges(family: FamilySpec, n: int, source=None, jobs: int = 1,
                     tol: float = DEFAULT_TOL) -> SearchReport:
    """Scan for the edge-count maximizer (same report shape)."""
    return scan_family(family, n, source=source, jobs=jobs, tol=tol)


# ---------------------------------------------------------------------------
# Serialization

CSV_COLUMNS = (
    "n",
    "family",
    "params",
    "max_lambda",
    "argmax_g6",
    "max_edges",
    "edge_argmax_g6",
    "construction_lambda",
    "lambda_match",
    "bound_violations",
    "graphs_scanned",
)


def _row(report: SearchReport) -> list[str]:
    return [
        str(report.n),
        report.family,
        report.params,
        repr(report.max_lambda),
        report.argmax_g6,
        str(report.max_edges),
        report.edge_argmax_g6,
        repr(report.construction_lambda),
        str(report.lambda_match),
        str(report.bound_violations),
        str(report.graphs_scanned),
    ]


def reports_to_csv(reports: Iterable[SearchReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(_row(r))
    return buf.getvalue()


def report_to_json(report: SearchReport) -> str:
    payload = dict(zip(CSV_COLUMNS, _row(report)))
    payload["n"] = report.n
    payload["max_lambda"] = report.max_lambda
    payload["max_edges"] = report.max_edges
    payload["construction_lambda"] = report.construction_lambda
    payload["lambda_match"] = report.lambda_match
    payload["bound_violations"] = report.bound_violations
    payload["graphs_scanned"] = report.graphs_scanned
    return json.dumps(payload, indent=2, sort_keys=True)
