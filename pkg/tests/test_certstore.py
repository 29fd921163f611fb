import dataclasses
from collections import Counter

import pytest

from hoffcolor import certstore as cs, exactspec as es, surd
from hoffcolor.canon import canonical_key, is_isomorphic
from hoffcolor.graph import seidel_switch


def test_embedded_counts(certificates):
    counts = Counter(c.bucket for c in certificates)
    assert counts == {"{3,4}": 35, "{2,5}": 17, "{2,5,8}": 6, "{3,5}": 3, "{3,6}": 10,
                      "e7:a": 27, "e7:b": 10, "e7:c": 2}
    assert sum(not c.is_e7 for c in certificates) == 71
    assert len(cs.group(certificates, "e7")) == 39


def test_m5_vector_list(certificates):
    m5 = next(c for c in certificates if c.claim("label") == "M5")
    a = {v[1:] for v in m5.vectors if v.startswith("a")}
    b = {v[1:] for v in m5.vectors if v.startswith("b")}
    assert a == {"35", "36", "37", "38", "45", "46", "47", "48", "56", "57", "68", "78"}
    assert b == {"12", "34", "58", "67"}


def test_export_round_trips_bit_exactly(certificates):
    text = cs.raw_certificate_text()
    assert cs.export_certificates(certificates) == text
    assert cs.parse_certificates(cs.export_certificates(certificates)) == certificates


@pytest.mark.parametrize("text,msg", [
    ("id: x\nbucket: {3,4}\nvectors: a12", "needs 4 lines"),
    ("id: x\nkind: {3,4}\nvectors: a12\nclaims: ", "expected field 'bucket'"),
    ("id: x\nbucket: {3,4}\nvectors: a12\nclaims: label", "key=value"),
    ("id: x\nbucket: {3,4}\nvectors: a12\nclaims:\n\nid: x\nbucket: {3,4}\nvectors: a13\nclaims:", "duplicate"),
])
def test_format_errors(text, msg):
    with pytest.raises(cs.CertificateFormatError, match=msg):
        cs.parse_certificates(text)


def test_every_certificate_verifies(certificates, lattice):
    reports = cs.verify_all(certificates, lattice)
    bad = [r.line() for r in reports if not r.ok]
    assert not bad
    assert len(reports) == 110


def test_m1_and_m10_rows(certificates):
    by_label = {c.claim("label"): c for c in certificates if c.claim("label")}
    m1 = by_label["M1"].graph()
    assert m1.n == 11
    assert Counter(m1.degrees()) == cs.parse_power_list("6^2,4^2,3^4,2^3")
    assert es.char_poly(m1) == surd.spectrum_polynomial(surd.parse_spectrum("4, sqrt2^2, 1^2, 0, -sqrt2^2, -2^3"))
    m10 = by_label["M10"].graph()
    assert m10.n == 20
    assert es.char_poly(m10) == es.IntPoly.from_roots([12, 3] + [2] * 4 + [1, 0] + [-2] * 12)
    assert cs.check_row(m10, cs.maximal_row("M10")) == []
    # a row for a different graph is rejected item by item
    assert any("order" in f for f in cs.check_row(m1, cs.maximal_row("M10")))


def test_e7_type_c_certificates(certificates):
    tc = [c for c in certificates if c.bucket == "e7:c"]
    assert len(tc) == 2 and any(c.claim("fano") == "yes" for c in tc)
    for c in tc:
        assert max(c.graph().degrees()) < 16


def test_tampered_certificates_fail(certificates):
    c = next(c for c in certificates if c.claim("label") == "M1")
    worse = dataclasses.replace(c, vectors=c.vectors[:-1] + ("b12",))
    assert not cs.verify_certificate(worse).ok
    wrong_bucket = dataclasses.replace(c, bucket="{3,6}")
    assert any("class sizes" in f for f in cs.verify_certificate(wrong_bucket).failures)
    e7 = next(c for c in certificates if c.bucket == "e7:a")
    shrunk = dataclasses.replace(e7, vectors=e7.vectors[:-1])
    assert any("extendable" in f for f in cs.verify_certificate(shrunk).failures)
    fano = next(c for c in certificates if c.claim("fano") == "yes")
    assert not cs.verify_certificate(dataclasses.replace(fano, bucket="e7:a")).ok


def test_switch_line_pairs_are_consistent(certificates, lattice):
    """Undoing the switch of a {3,4} graph lands on the named upper node, and its class removal on the lower."""
    for c in cs.group(certificates, "{3,4}"):
        g = c.graph()
        up_key = lattice.labels[c.claim("upper")]
        low_key = lattice.labels[c.claim("lower")]
        hits = 0
        for u in range(g.n):
            cls = g.full_mask & ~g.rows[u] & ~(1 << u)
            if cls.bit_count() != 3:
                continue
            members = [v for v in range(g.n) if cls >> v & 1]
            rest = [v for v in range(g.n) if v != u]
            upper = seidel_switch(g, members).induced(rest)
            lower = g.induced([v for v in rest if v not in members])
            if canonical_key(upper) == up_key and canonical_key(lower) == low_key:
                hits += 1
        assert hits >= 1, c.id


def test_crosscheck_typea_and_e7(certificates, routes, e7_summary):
    rep = cs.crosscheck("typea", cs.group(certificates, "{3,4}"), [t.graph for t in routes.typea])
    assert rep.ok, rep.line()
    rep = cs.crosscheck("e7", cs.group(certificates, "e7"), [r.graph for r in e7_summary.graphs])
    assert rep.ok, rep.line()
    miss = cs.crosscheck("short", cs.group(certificates, "{3,4}")[:-1], [t.graph for t in routes.typea])
    assert not miss.ok and len(miss.only_pipeline) == 1


def test_crosscheck_typebc_buckets(certificates, classification):
    for bucket in ("{2,5}", "{2,5,8}", "{3,5}", "{3,6}"):
        sizes = frozenset(int(x) for x in bucket.strip("{}").split(","))
        graphs = [r.graph for r in classification.records if r.bucket == sizes]
        rep = cs.crosscheck(bucket, cs.group(certificates, bucket), graphs)
        assert rep.ok, rep.line()


def test_certificate_graphs_are_isomorphic_to_labelled_records(certificates, classification):
    for c in certificates:
        if (c.claim("label") or "").startswith("M"):
            assert is_isomorphic(c.graph(), classification.labelled(c.claim("label")).graph)
