import pytest

from hoffcolor import chroma
from hoffcolor.canon import canonical_key, is_isomorphic
from hoffcolor.graph import smith_w, sporadic_line_graph
from hoffcolor.pipeline import reference as ref
from hoffcolor.pipeline import smallorder as so

Ms = so.SizeTwoMultiset


def test_multiset_parsing_and_normalisation():
    assert Ms.parse("1^2,2,3") == Ms(2, 1, 1)
    assert Ms.parse("{3,3,1}") == Ms(2, 1, 0)
    assert str(Ms.parse("2,2,1,1,3")) == "{1^2,2^2,3}"
    assert len(Ms.parse("1^2,2^2,3^2")) == 6
    with pytest.raises(ValueError):
        Ms.parse("4")


def test_admissible_forms():
    assert [str(s) for s in so.ADMISSIBLE] == ["{1}", "{1^2}", "{1,2}", "{1^2,2}", "{1,2,3}", "{1^2,2^2}",
                                              "{1^2,2,3}", "{1^2,2^2,3}", "{1^2,2^2,3^2}"]
    for s in so.ADMISSIBLE:
        rep = so.multiset_report(s)
        assert rep["hoffman_colorable"] and rep["class_sizes"] == [2, 5]
        assert rep["order"] == 5 + 2 * len(s)


def test_single_entry_gives_w7():
    assert is_isomorphic(so.graph_from_multiset(Ms.parse("1")), smith_w(7))


def test_three_ones_is_not_hoffman_colorable():
    rep = so.multiset_report(Ms.parse("1^3"))
    assert not rep["hoffman_colorable"] and rep["lambda_min_is_minus_sqrt6"]


def test_multiset_graph_structure():
    g = so.graph_from_multiset(Ms.parse("1^2,2,3"))
    five = 0b11111
    assert g.is_independent(range(5))
    assert not g.has_edge(0, 1) and all(g.has_edge(0, v) for v in range(5, g.n))
    for x in range(5, g.n, 2):
        assert not g.has_edge(x, x + 1)
        assert (g.rows[x] & five).bit_count() == 3 and (g.rows[x + 1] & five).bit_count() == 3


def test_odd_components_of_m21_come_from_large_multisets(classification):
    m21 = classification.labelled("M21").graph
    comps = so.chromatic_component_keys(m21)
    large = [s for s in so.ADMISSIBLE if len(s) >= 3]
    assert len(large) == 6
    for s in large:
        assert canonical_key(so.graph_from_multiset(s)) in comps, str(s)


def test_small_order_list(classification):
    res = so.small_order_graphs(classification)
    assert len(res) == 10
    assert [s.graph.n for s in res] == list(ref.SMALL_ORDER_MULTISET)
    assert all(s.graph.n < 3 * s.chi for s in res)
    assert [s.source for s in res].count("component-of-M21") == 7
    assert is_isomorphic(res[0].graph, sporadic_line_graph())
    assert so.order20_outside_m10(classification)


def test_class_sizes_on_small_order_graphs(classification):
    for s in so.small_order_graphs(classification):
        assert so.coloring_class_failures(s.graph) == []
        for col in chroma.enumerate_hoffman_colorings(s.graph):
            assert 1 not in col.sizes and list(col.sizes).count(2) >= 2


def test_coloring_class_failures_detects_violations():
    assert so.coloring_class_failures(so.graph_from_multiset(Ms.parse("1"))) == \
        ["a Hoffman coloring has fewer than two classes of size 2"]
