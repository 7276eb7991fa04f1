"""Enumeration, family scans, membership reports, and serialization."""

import math
import random

import pytest

from spectralminors import (
    FamilySpec,
    MembershipReport,
    SearchReport,
    are_isomorphic,
    canonical_key,
    complete,
    complete_bipartite,
    construct_kst_extremal,
    cycle,
    disjoint_union,
    encode_graph6,
    enumerate_graphs,
    family_filter,
    independent,
    ingest_graph6_stream,
    join,
    kst_lambda_bound,
    parse_graph6,
    path,
    report_to_json,
    reports_to_csv,
    scan_family,
    search_max_edges,
    search_max_lambda,
    spectral_radius,
    verify_membership,
)

from helpers import random_graph


# ---------------------------------------------------------------------------
# Enumeration


def test_enumeration_counts():
    expected = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
    for n, count in expected.items():
        assert sum(1 for _ in enumerate_graphs(n)) == count


def test_enumeration_connected_counts():
    expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}
    for n, count in expected.items():
        assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == count


def test_enumeration_no_duplicates():
    seen = set()
    for g in enumerate_graphs(6):
        key = canonical_key(g)
        assert key not in seen
        seen.add(key)


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_graphs(8))
    with pytest.raises(ValueError):
        list(enumerate_graphs(-1))


def test_ingest_stream(tmp_path):
    graphs = [complete(3), cycle(5), path(2)]
    src = tmp_path / "graphs.g6"
    src.write_text("\n".join(encode_graph6(g) for g in graphs) + "\n\n")
    assert list(ingest_graph6_stream(src)) == graphs


def test_ingest_stream_error_names_line(tmp_path):
    src = tmp_path / "bad.g6"
    src.write_text("A_\n\nD\n")
    with pytest.raises(ValueError, match="line 3"):
        list(ingest_graph6_stream(src))


# ---------------------------------------------------------------------------
# Membership


def test_family_filter():
    kr3 = FamilySpec.kr_minor_free(3)
    assert family_filter(kr3, path(5))
    assert not family_filter(kr3, cycle(3))
    kst = FamilySpec.kst_minor_free(2, 2)
    assert family_filter(kst, complete_bipartite(1, 5))
    assert not family_filter(kst, cycle(4))
    cdv = FamilySpec.cdv_at_most(2)
    assert family_filter(cdv, cycle(6))
    assert not family_filter(cdv, complete(4))


def test_verify_membership_kst_equality_structure():
    family = FamilySpec.kst_minor_free(2, 3)
    g = construct_kst_extremal(10, 2, 3)
    rep = verify_membership(g, family)
    assert rep.member
    assert rep.bound == pytest.approx(kst_lambda_bound(10, 2, 3))
    assert rep.equality_structure
    assert rep.apex_size == 1
    assert rep.residual == "disjoint_cliques"
    assert rep.congruent
    # remainder breaks the congruence and with it the equality structure
    g = construct_kst_extremal(11, 2, 3)
    rep = verify_membership(g, family)
    assert rep.member and not rep.equality_structure and not rep.congruent


def test_verify_membership_kst_negative():
    family = FamilySpec.kst_minor_free(2, 2)
    rep = verify_membership(cycle(4), family)
    assert not rep.member
    # C4 is vertex-transitive with no universal vertex
    assert rep.apex_size == 0
    assert not rep.equality_structure


def test_verify_membership_non_kst():
    rep = verify_membership(path(4), FamilySpec.kr_minor_free(3))
    assert rep.member
    assert rep.bound is None and rep.equality_structure is None
    rep = verify_membership(complete(6), FamilySpec.cdv_at_most(4))
    assert not rep.member
    assert rep.lam == pytest.approx(5.0)


def test_verify_membership_independent_residual():
    # an edgeless residual under t >= 2 reports its shape but never counts
    # as the equality structure (that needs disjoint K_t blocks)
    family = FamilySpec.kst_minor_free(2, 3)
    rep = verify_membership(join(complete(1), independent(4)), family)
    assert rep.member
    assert rep.residual == "independent"
    assert not rep.equality_structure


# ---------------------------------------------------------------------------
# Scans


def test_scan_kr3_n5():
    # K_3-minor-free means forest; among 5-vertex forests the star K_{1,4}
    # carries the largest radius (2) and every tree ties the edge count
    report = search_max_lambda(FamilySpec.kr_minor_free(3), 5)
    assert report.max_lambda == pytest.approx(2.0, abs=1e-9)
    star = join(complete(1), independent(4))
    assert are_isomorphic(parse_graph6(report.argmax_g6), star)
    assert report.lambda_match
    assert report.graphs_scanned == 34
    assert report.construction_edges == 4
    assert report.max_edges == 4
    winner = parse_graph6(report.edge_argmax_g6)
    assert winner.edge_count == 4 and winner.is_connected()


def test_scan_kst_bound_holds():
    family = FamilySpec.kst_minor_free(2, 2)
    report = scan_family(family, 6)
    assert report.bound_violations == 0
    assert report.max_lambda <= kst_lambda_bound(6, 2, 2) + 1e-9
    assert report.lambda_match


def test_scan_explicit_source_and_determinism(tmp_path):
    family = FamilySpec.kst_minor_free(2, 3)
    serial = scan_family(family, 6, jobs=1)
    parallel = scan_family(family, 6, jobs=2)
    assert serial == parallel
    assert reports_to_csv([serial]) == reports_to_csv([parallel])
    # the same scan through a graph6 file
    src = tmp_path / "n6.g6"
    src.write_text("".join(encode_graph6(g) + "\n" for g in enumerate_graphs(6)))
    from_file = scan_family(family, 6, source=str(src))
    assert from_file == serial


def test_scan_source_validation(tmp_path):
    src = tmp_path / "mixed.g6"
    src.write_text("A_\nDhc\n")
    with pytest.raises(ValueError, match="vertices"):
        scan_family(FamilySpec.kr_minor_free(3), 5, source=str(src))


def test_scan_rejects_empty_family():
    with pytest.raises(ValueError, match="no member"):
        scan_family(FamilySpec.kr_minor_free(3), 3, source=[complete(3)])


def test_search_max_edges_mader_spot():
    # K_4-minor-free at n=6: 2(n-2) + 1 edges? no: (r-2)(n-r+2) + C(r-2, 2)
    report = search_max_edges(FamilySpec.kr_minor_free(4), 6)
    assert report.max_edges == 2 * 4 + 1
    assert report.construction_edges == report.max_edges


# ---------------------------------------------------------------------------
# Serialization


def test_csv_round_structure():
    import csv
    import io

    family = FamilySpec.kst_minor_free(2, 2)
    r5 = scan_family(family, 5)
    r6 = scan_family(family, 6)
    text = reports_to_csv([r5, r6])
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 3
    assert rows[0][0] == "n" and "max_lambda" in rows[0]
    assert rows[1][0] == "5" and rows[1][1] == "kst"
    assert rows[1][2] == "s=2,t=2"
    # repr floats survive a parse round trip exactly
    assert float(rows[1][3]) == r5.max_lambda


def test_json_report():
    import json

    family = FamilySpec.kr_minor_free(3)
    report = scan_family(family, 4)
    payload = json.loads(report_to_json(report))
    assert payload["n"] == 4
    assert payload["family"] == "kr"
    assert payload["params"] == "r=3"
    assert isinstance(payload["max_lambda"], float)
    assert payload["max_lambda"] == report.max_lambda
    assert isinstance(payload["bound_violations"], int)
    assert payload["graphs_scanned"] == 11


# ---------------------------------------------------------------------------
# FamilySpec validation


def test_family_spec():
    assert FamilySpec.kr_minor_free(4).label() == "K4-minor-free"
    assert FamilySpec.kst_minor_free(2, 3).params_label() == "s=2,t=3"
    assert FamilySpec.cdv_at_most(3).params_label() == "m=3"
    with pytest.raises(ValueError):
        FamilySpec.kr_minor_free(2)
    with pytest.raises(ValueError):
        FamilySpec.kst_minor_free(3, 2)
    with pytest.raises(ValueError):
        FamilySpec.cdv_at_most(5)
    with pytest.raises(ValueError):
        FamilySpec.cdv_at_most(0)


def test_family_constructions():
    assert FamilySpec.kr_minor_free(5).construction(10).edge_count == 24
    assert FamilySpec.kst_minor_free(2, 3).construction(10).edge_count == 18
    assert FamilySpec.cdv_at_most(3).construction(6).edge_count == 12
    # the m=1 family peaks at a path
    assert FamilySpec.cdv_at_most(1).construction(5) == path(5)


def test_family_forbidden_minor():
    assert FamilySpec.kr_minor_free(4).forbidden_minor() == complete(4)
    assert FamilySpec.kst_minor_free(2, 3).forbidden_minor() == complete_bipartite(2, 3)
    assert FamilySpec.cdv_at_most(2).forbidden_minor() is None
