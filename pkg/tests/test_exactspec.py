import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hoffcolor import chroma, exactspec as es
from hoffcolor.graph import (Graph, complete, complete_multipartite, cycle, path, petersen, schlaefli,
                             smith_f, sporadic_line_graph)
from hoffcolor.pipeline.typea import hat_switch

from conftest import fraction_det, random_graph, random_regular

P = es.IntPoly


def t_minus_a(g, t):
    a = g.adjacency_matrix()
    return [[(t if i == j else 0) - a[i][j] for j in range(g.n)] for i in range(g.n)]


# ------------------------------------------------------------------ char_poly

def test_char_poly_examples():
    assert es.char_poly(complete(2)) == P((-1, 0, 1))
    assert es.char_poly(cycle(4)) == P((0, 0, -4, 0, 1))
    p5 = es.char_poly(path(5))
    assert p5 == P((0, 3, 0, -4, 0, 1))
    assert p5.exact_div(P((-3, 0, 1))) == P((0, -1, 0, 1))
    iv = es.extreme_eigenvalue_interval(path(5), "max")
    assert es.count_roots(P((-3, 0, 1)), iv) == 1


def test_char_poly_is_monic_of_degree_n():
    rng = random.Random(1)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 15), 0.4)
        p = es.char_poly(g)
        assert p.degree == g.n and p.lead == 1
    assert es.char_poly(Graph(0, [])) == P((1,))


def test_char_poly_matches_determinant_oracles():
    rng = random.Random(7)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        p = es.char_poly(g)
        for t in (-3, -1, 0, 2, 5):
            m = t_minus_a(g, t)
            assert p(t) == es.bareiss_det(m) == fraction_det(m)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14), st.floats(0.05, 0.95), st.integers(0, 10**6))
def test_power_sums_from_coefficients(n, p, seed):
    g = random_graph(random.Random(seed), n, p)
    c = es.char_poly(g).coeffs
    assert c[n - 1] == 0
    if n >= 2:
        assert -2 * c[n - 2] == 2 * g.num_edges
    fp = es.fingerprint(g)
    assert sum(fp.multiplicities) == n
    num = sorted(es.eigenvalues(g), reverse=True)
    flat = [v for v, k in zip(fp.values, fp.multiplicities) for _ in range(k)]
    assert all(abs(a - b) < 1e-6 for a, b in zip(flat, num))
    ivs = [iv for iv, _ in fp.entries]
    for a, b in zip(ivs, ivs[1:]):
        assert b.hi <= a.lo


# ------------------------------------------------------------------ polynomial arithmetic

def test_poly_helpers():
    p = P.from_roots([1, 1, -2])
    assert p.squarefree_part() == P.from_roots([1, -2])
    assert es.poly_gcd(p, P.from_roots([1, 3])) == P.from_roots([1])
    # p(-t), without normalising the sign
    assert p.reflect() == -P.from_roots([-1, -1, 2])
    assert P.from_roots([2, -4]).scale_roots(2).coeffs == P.from_roots([4, -8]).coeffs
    assert str(P((-1, 0, 1))) == "t^2 - 1"
    with pytest.raises(ArithmeticError):
        P((1, 0, 1)).exact_div(P((1, 1)))


# ------------------------------------------------------------------ root counting

def test_count_roots_examples():
    assert es.count_roots(P((-1, 0, 1)), es.RationalInterval(0, 2)) == 1
    s = es.char_poly(schlaefli())
    assert es.count_roots(s, es.RationalInterval(Fraction(-5, 2), Fraction(-3, 2))) == 1
    assert es.count_roots(P((-3, 0, 1)), es.RationalInterval(Fraction(17, 10), Fraction(18, 10))) == 1


def test_count_is_half_open():
    q = P((-1, 0, 1))
    assert es.count_roots(q, es.RationalInterval(-1, 1)) == 1
    assert es.count_roots(q, es.RationalInterval(-2, 1)) == 2
    with pytest.raises(ValueError):
        es.RationalInterval(2, 1)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7), st.integers(-7, 6), st.integers(1, 6))
def test_count_roots_on_integer_products(roots, lo, span):
    p = P.from_roots(roots)
    want = len({r for r in roots if lo < r <= lo + span})
    assert es.count_roots(p, es.RationalInterval(lo, lo + span)) == want


# ------------------------------------------------------------------ eigenvalue predicates

def test_multiplicity_examples(classification):
    assert es.multiplicity_at(cycle(4), 0) == 2
    assert es.multiplicity_at(schlaefli(), -2) == 20
    assert es.multiplicity_at(classification.labelled("M21").graph, 2) == 7


def test_lambda_min_geq_examples():
    pet = petersen()
    assert es.lambda_min_geq(pet, -2)
    assert es.multiplicity_at(pet, -2) == 4
    assert not es.lambda_min_geq(complete_multipartite(1, 5), -2)
    iv = es.extreme_eigenvalue_interval(sporadic_line_graph(), "max", Fraction(1, 10**9))
    assert iv.width <= Fraction(1, 10**9)
    assert iv.lo < 1 + math.sqrt(5) <= iv.hi + 1e-12
    # exact: (t - 1)^2 - 5 has a root inside
    assert es.count_roots(P((-4, -2, 1)), iv) == 1


def test_extreme_interval_rejects_bad_input():
    with pytest.raises(es.UnsupportedInput):
        es.extreme_eigenvalue_interval(Graph(0, []))
    with pytest.raises(ValueError):
        es.extreme_eigenvalue_interval(cycle(4), "middle")


def test_integer_radius_examples():
    assert es.integer_radius_certify(schlaefli(), 16)
    assert es.integer_radius_certify(cycle(5), 2)
    assert not es.integer_radius_certify(petersen(), 2)


def test_regular_graphs_have_integer_radius():
    rng = random.Random(11)
    done = 0
    while done < 40:
        n = rng.randint(4, 14)
        g = random_regular(rng, n, rng.randint(1, n - 1))
        if g is None or not g.is_connected():
            continue
        assert es.integer_radius_certify(g, g.degree(0))
        done += 1


def test_perron_examples(lattice):
    assert es.perron_vector_rational(complete(3)) == [1, 1, 1]
    x = es.perron_vector_rational(smith_f(7))
    assert x[0] == 3
    assert sorted(x[1:]) == [1, 1, 1, 2, 2, 2]
    g164 = lattice.node("164").graph
    c = chroma.cocliques_of_size(g164, 3)[0]
    h = hat_switch(g164, c)
    y = es.perron_vector_rational(h)
    members = [v for v in range(g164.n) if c >> v & 1]
    assert y[h.n - 1] == 3
    assert all(y[v] == 1 for v in members)
    assert all(y[v] == 2 for v in range(g164.n) if v not in members)


def test_perron_vector_is_exact_eigenvector():
    rng = random.Random(5)
    done = 0
    while done < 30:
        g = random_graph(rng, rng.randint(2, 11), 0.5)
        if not g.is_connected() or es.integer_eigenvalue(g, "max") is None:
            continue
        lam = es.integer_eigenvalue(g, "max")
        x = es.perron_vector_rational(g)
        for v in range(g.n):
            assert sum(x[u] for u in g.neighbors(v)) == lam * x[v]
        assert min(x) == 1
        done += 1


def test_perron_unsupported():
    with pytest.raises(es.UnsupportedInput):
        es.perron_vector_rational(path(3))          # radius sqrt 2
    with pytest.raises(es.UnsupportedInput):
        es.perron_vector_rational(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_negated_radius_examples():
    assert es.negated_radius_is_eigenvalue(cycle(6))
    assert es.negated_radius_is_eigenvalue(path(5))
    assert not es.negated_radius_is_eigenvalue(cycle(5))


def test_scaled_radius_examples():
    assert es.scaled_radius_relation(sporadic_line_graph(), 3)
    assert not es.scaled_radius_relation(petersen(), 3)
    assert es.scaled_radius_relation(path(6), 2)
    assert es.scaled_radius_relation(complete_multipartite(2, 3), 2)


def test_extreme_intervals_agree_with_numpy():
    rng = random.Random(9)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 14), 0.5)
        if g.num_edges == 0:
            continue
        ev = np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float))
        hi = es.extreme_eigenvalue_interval(g, "max")
        lo = es.extreme_eigenvalue_interval(g, "min")
        assert abs(float(hi.mid) - ev[-1]) < 1e-6
        assert abs(float(lo.mid) - ev[0]) < 1e-6


def test_integer_eigenvalue_none_for_irrational():
    assert es.integer_eigenvalue(path(3), "max") is None
    assert es.integer_eigenvalue(petersen(), "min") == -2


def test_exact_rank():
    assert es.exact_rank([[1, 2], [2, 4]]) == 1
    assert es.exact_rank([[0, 1], [1, 0]]) == 2
    assert es.bareiss_det([[0, 1], [1, 0]]) == -1
    assert es.bareiss_det([]) == 1


def test_fingerprint_display():
    assert es.fingerprint(cycle(4)).display() == "2, 0^2, -2"
