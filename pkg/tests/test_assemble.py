import copy

import pytest

from hoffcolor import chroma, exactspec as es
from hoffcolor.canon import canonical_key
from hoffcolor.graph import graph6_decode
from hoffcolor.pipeline import assemble as asm, reference as ref

TABLE1 = [
    ("M1,M2", (11, 3, "3^2,5", "maximal-coclique")),
    ("M3", (13, 3, "3,5^2", "maximal-coclique")),
    ("M4", (15, 4, "3^3,6", "maximal-coclique")),
    ("M5", (16, 5, "3^4,4", "switched-cone")),
    ("M6,...,M9", (18, 5, "3^4,6", "maximal-coclique")),
    ("M10", (20, 7, "2^5,5^2", "maximal-coclique")),
    ("M11,...,M19", (21, 6, "1,4^5", "regular")),
    ("M20", (21, 7, "3^7", "regular")),
    ("M21", (22, 8, "2^6,5^2 or 2^7,8", "maximal-coclique")),
    ("M22,M23", (22, 7, "3^6,4", "switched-cone")),
    ("M24", (27, 9, "3^9", "regular")),
    ("M25", (28, 9, "3^8,4", "switched-cone")),
    ("M26,...,M29", (29, 8, "1,4^7", "regular")),
]


def test_totals(classification):
    assert len(classification.records) == 245
    assert len(classification.maximal()) == 29
    got = classification.bucket_counts()
    assert {b: got[b] for b, _, _ in ref.BUCKET_COUNTS} == {b: (n, m) for b, n, m in ref.BUCKET_COUNTS}
    assert len({r.key for r in classification.records}) == 245


def test_matches_reference_rows(classification):
    assert asm.compare_with_reference(classification) == []
    labels = sorted(r.label for r in classification.maximal())
    assert labels == sorted(f"M{i}" for i in range(1, 30))


def test_structural_checks(classification, routes):
    assert asm.structural_checks(classification, routes) == []


def test_no_record_has_lambda_min_above_minus_two(classification):
    for r in classification.records:
        assert es.integer_eigenvalue(r.graph, "min") == -2
        assert chroma.is_hoffman_colorable(r.graph) and not chroma.is_trivially_colorable(r.graph)


def test_chains_end_at_maximal_records(classification):
    keys = classification.by_key()
    for r in classification.records:
        if r.maximal:
            assert r.parent is None
        else:
            top = asm.verify_chain(r, keys)
            assert top.maximal and top.graph.n > r.graph.n


def test_broken_chain_is_detected(classification):
    keys = dict(classification.by_key())
    r = next(r for r in classification.records if r.parent is not None)
    bad = copy.copy(r)
    pkey, cmask = r.parent
    parent = keys[pkey]
    other = next(c for c in chroma.hoffman_color_classes(parent.graph)
                 if canonical_key(parent.graph.induced_mask(parent.graph.full_mask & ~c)) != r.key)
    bad.parent = (pkey, other)
    with pytest.raises(asm.ClassificationError):
        asm.verify_chain(bad, keys)


def test_reference_comparison_reports_differences(classification):
    short = asm.Classification(classification.records[1:], classification.caveat)
    diff = asm.compare_with_reference(short)
    assert any(d.startswith("total 244") for d in diff)


def test_table_rows(classification):
    assert asm.table1_rows(classification) == TABLE1
    t2 = dict(asm.table2_rows(classification))
    assert t2["M1"] == (11, "6^2,4^2,3^4,2^3", "4, sqrt2^2, 1^2, 0, -sqrt2^2, -2^3")
    assert t2["M24"][2] == "16, 4^6, -2^20"
    t3 = asm.table3_rows(classification)
    assert t3[-1] == ("total", 245, 29, "")
    assert [(b, n, m) for b, n, m, _ in t3[:-1]] == [(ref.bucket_label(b), n, m) for b, n, m in ref.BUCKET_COUNTS]


def test_write_tables_is_deterministic(classification, tmp_path):
    a = asm.write_tables(classification, tmp_path / "a")
    b = asm.write_tables(classification, tmp_path / "b")
    assert [p.name for p in a] == [p.name for p in b]
    for p, q in zip(a, b):
        assert p.read_bytes() == q.read_bytes()
    names = {p.name for p in a}
    assert {"table1.tsv", "table2.tsv", "table3.tsv", "records.tsv"} <= names
    lines = (tmp_path / "a" / "table1.tsv").read_text().splitlines()
    assert lines[0].split("\t")[0] == "graph identifier" and len(lines) == 1 + len(TABLE1)
    total = 0
    for p in a:
        if p.suffix == ".g6":
            graphs = [graph6_decode(x) for x in p.read_text().split()]
            total += len(graphs)
    assert total == 245


def test_caveat_without_hosts(classification, routes):
    assert classification.caveat == routes.caveat
