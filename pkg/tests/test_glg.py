import random

import pytest

from hoffcolor import chroma, exactspec as es, glg
from hoffcolor.canon import is_isomorphic
from hoffcolor.graph import (Graph, cocktail_party, complete, complete_multipartite, cycle, line_graph,
                             path, schlaefli, smith_f, sporadic_line_graph)
from hoffcolor.glg import GLGSpec

from conftest import random_graph


def random_connected(rng, n, p=0.5):
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def test_build_examples():
    rng = random.Random(0)
    for _ in range(5):
        h = random_graph(rng, 6, 0.5)
        assert glg.build_glg(GLGSpec(h, (0,) * 6)) == line_graph(h)
    assert is_isomorphic(glg.build_glg(GLGSpec(complete(2), (1, 0))), path(3))
    assert is_isomorphic(glg.build_glg(GLGSpec(cycle(4), (0,) * 4)), cycle(4))


def test_provenance_counts():
    spec = GLGSpec(path(3), (2, 0, 1))
    g, prov = glg.build_glg_with_provenance(spec)
    assert g.n == 2 + 2 * 3
    assert sum(p.kind == "cp" for p in prov) == 6
    # the two vertices of one cocktail-party pair are non-adjacent, other pairs joined
    cps = [i for i, p in enumerate(prov) if p.kind == "cp" and p.root_vertex == 0]
    assert not g.has_edge(cps[0], cps[1]) and g.has_edge(cps[0], cps[2])


def test_spec_validation():
    with pytest.raises(ValueError):
        GLGSpec(path(3), (0, 0))
    with pytest.raises(ValueError):
        GLGSpec(path(2), (0, -1))


def test_chi_formula_examples():
    assert glg.glg_chi_formula(GLGSpec(complete(2), (1, 0))) == 2
    assert glg.glg_chi_formula(GLGSpec(cycle(4), (0,) * 4)) == 2
    spec = glg.balanced_spec(complete(4), 3)
    assert spec.c == (3, 3, 3, 3)
    assert glg.glg_chi_formula(spec) == 3
    assert chroma.chromatic_number(glg.build_glg(spec)) == 3


def test_chi_formula_matches_exact_chi():
    rng = random.Random(21)
    for _ in range(120):
        n = rng.randint(1, 6)
        h = random_graph(rng, n, rng.random())
        if h.num_edges == 0:
            continue
        spec = GLGSpec(h, tuple(rng.randint(0, 2) for _ in range(n)))
        assert chroma.chromatic_number(glg.build_glg(spec)) == glg.glg_chi_formula(spec)


def test_balanced_examples():
    assert is_isomorphic(glg.balanced_glg(cycle(4), 2), cocktail_party(2))
    assert glg.balanced_glg(complete(2), 1) == complete(1)
    lk33 = line_graph(complete_multipartite(3, 3))
    assert is_isomorphic(glg.balanced_glg(complete_multipartite(3, 3), 3), lk33)
    with pytest.raises(glg.BalanceError, match="vertex"):
        glg.balanced_glg(complete_multipartite(1, 3), 2)
    with pytest.raises(glg.BalanceError):
        glg.balanced_glg(complete(3), 2)


def test_certificate_examples():
    assert glg.verify_balanced_certificate(glg.balanced_spec(complete(4), 3))
    assert not glg.verify_balanced_certificate(GLGSpec(complete(2), (1, 0)))
    assert glg.verify_balanced_certificate(GLGSpec(complete_multipartite(3, 3), (0,) * 6))


def test_certificate_agrees_with_hoffman_report():
    rng = random.Random(5)
    done = 0
    while done < 80:
        n = rng.randint(2, 5)
        h = random_connected(rng, n, 0.6)
        spec = GLGSpec(h, tuple(rng.randint(0, 2) for _ in range(n)))
        g = glg.build_glg(spec)
        if g.num_edges == 0 or not g.is_connected():
            continue
        rep = chroma.hoffman_report(g)
        cert = glg.verify_balanced_certificate(spec)
        assert cert == (rep.colorable and es.integer_eigenvalue(g, "min") == -2)
        if len(set(spec.c)) == 1 and glg.glg_chi_formula(spec) == spec.c[0]:
            assert cert
        done += 1


def test_rank_contrapositive():
    """With at least one blanket, -2 is an eigenvalue whenever m - n + sum(a) is nonzero."""
    rng = random.Random(13)
    done = 0
    while done < 80:
        n = rng.randint(2, 6)
        h = random_connected(rng, n, 0.5)
        spec = GLGSpec(h, tuple(rng.randint(0, 2) for _ in range(n)))
        g = glg.build_glg(spec)
        if not g.is_connected() or not any(spec.capacities):
            continue
        done += 1
        if h.num_edges - h.n + sum(spec.capacities) != 0:
            assert es.multiplicity_at(g, -2) >= 1


def test_rank_formula_needs_a_blanket():
    # a tree without blankets: m - n + sum(a) = -1 but -2 is not an eigenvalue
    g = glg.build_glg(GLGSpec(path(4), (0,) * 4))
    assert es.multiplicity_at(g, -2) == 0


# ------------------------------------------------------------------ recognition

def test_recognition_examples():
    rep = glg.recognize_glg(sporadic_line_graph())
    assert rep is not None and glg.representation_matches(sporadic_line_graph(), rep)
    assert glg.recognize_glg(smith_f(7)) is None
    assert glg.recognize_glg(schlaefli()) is None
    assert glg.recognize_glg(complete_multipartite(1, 5)) is None   # lambda_min below -2


def test_line_graphs_are_recognised():
    rng = random.Random(17)
    for _ in range(110):
        h = random_graph(rng, rng.randint(2, 8), rng.random())
        lg = line_graph(h)
        rep = glg.recognize_glg(lg)
        assert rep is not None
        assert glg.representation_matches(lg, rep)
        assert all(sum(x * x for x in row) == 2 for row in rep.dense())


def test_generalized_line_graphs_are_recognised():
    rng = random.Random(19)
    for _ in range(40):
        n = rng.randint(2, 5)
        h = random_graph(rng, n, 0.6)
        g = glg.build_glg(GLGSpec(h, tuple(rng.randint(0, 2) for _ in range(n))))
        rep = glg.recognize_glg(g)
        assert rep is not None and glg.representation_matches(g, rep)


def test_exceptional_examples(classification):
    assert glg.is_exceptional(smith_f(7))
    assert not glg.is_exceptional(sporadic_line_graph())
    assert glg.is_exceptional(classification.labelled("M1").graph)
    assert not glg.is_exceptional(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert glg.is_exceptional(schlaefli())
