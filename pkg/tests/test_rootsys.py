import random
from collections import Counter
from itertools import combinations

import pytest

from hoffcolor import chroma, exactspec as es, rootsys as rs
from hoffcolor.canon import is_isomorphic
from hoffcolor.graph import (complete, seidel_switch, complete_multipartite, cone, cycle, line_graph, schlaefli,
                             sporadic_line_graph)

from conftest import random_s8_member


def test_e8_has_240_vectors_of_norm_8():
    roots = rs.e8_roots()
    assert len(roots) == 240
    assert all(rs.inner(r, r) == 8 for r in roots)
    kinds = Counter(r.name[0] for r in roots)
    assert kinds == {"a": 56, "b": 56, "c": 56, "d": 70, "e": 2}
    assert len(set(roots.names())) == 240
    assert roots.rank == 8


def test_all_inner_products():
    vecs = list(rs.e8_roots())
    seen = Counter(rs.inner(u, v) for u in vecs for v in vecs)
    assert set(seen) == {-8, -4, 0, 4, 8}
    # 8 only on the diagonal, -8 only for antipodes
    assert seen[8] == seen[-8] == 240


def test_subsystem_sizes():
    e7 = rs.e7()
    assert len(e7) == 126 and e7.rank == 7
    assert {r.name[0] for r in e7} == {"c", "d"}
    assert len(rs.subsystem(["d1234"])) == 126
    d6 = rs.subsystem(["e", "d1234"])
    assert len(d6) == 60 and d6.rank == 6
    with pytest.raises(ValueError):
        rs.subsystem(["a12", "a13"])


def test_inner_examples():
    r = rs.root
    assert rs.inner(r("a12"), r("a13")) == 4
    assert rs.inner(r("a12"), r("b12")) == -4
    assert rs.inner(r("e"), r("c26")) == 0
    for (i, j), (k, l) in combinations(combinations(range(1, 9), 2), 2):
        shared = len({i, j} & {k, l})
        assert rs.inner(r(f"a{i}{j}"), r(f"a{k}{l}")) == 4 * shared
        assert rs.inner(r(f"b{i}{j}"), r(f"b{k}{l}")) == 4 * shared
    with pytest.raises(rs.InvalidCertificate):
        r("z12")


def test_decode_examples():
    m1 = [f"a{p}" for p in ("12", "15", "17", "26", "28", "35", "38", "46", "47")] + ["b56", "d5678"]
    g = rs.decode_representation(m1)
    assert sorted(g.degrees(), reverse=True) == [6, 6, 4, 4, 3, 3, 3, 3, 2, 2, 2]
    assert rs.verify_representation(g, m1)
    assert rs.decode_representation(["a12", "b34"]) == complete(2)
    with pytest.raises(rs.InvalidCertificate, match="a12.*b12"):
        rs.decode_representation(["a12", "b12"])
    with pytest.raises(rs.InvalidCertificate):
        rs.decode_representation(["a12", "a12"])


def test_verify_rejects_antipodal_pair():
    c4 = cycle(4)
    assert not rs.verify_representation(c4, ["a12", "a23", "b12", "a14"])
    assert not rs.verify_representation(c4, ["a12", "a23"])


def test_find_representation_examples():
    e7 = rs.e7()
    rep = rs.find_representation(complete(7), e7)
    assert rep is not None and rs.verify_representation(complete(7), rep)
    assert rs.verify_representation(complete(7), [f"c1{j}" for j in range(2, 9)])
    assert rs.find_representation(complete(8), e7) is None
    assert rs.find_representation(complete(8)) is not None
    assert rs.find_representation(complete(9)) is None
    assert rs.find_representation(complete_multipartite(1, 5)) is None


def test_find_representation_round_trip_on_certificates(certificates):
    for c in certificates[::7]:
        g = c.graph()
        assert rs.verify_representation(g, list(c.vectors))
        rep = rs.find_representation(g)
        assert rep is not None and rs.verify_representation(g, rep)


def test_in_s8_examples():
    assert rs.in_S8(schlaefli())
    assert not rs.in_S8(complete_multipartite(1, 5))
    assert rs.in_S8(sporadic_line_graph())
    assert not rs.in_S8(line_graph(complete(9)))


def test_s8_decisions_agree_and_imply_lambda_bound():
    rng = random.Random(3)
    for _ in range(40):
        g, _, _ = random_s8_member(rng)
        assert rs.in_S8(g) and rs.in_S8_via_cone(g)
        assert es.lambda_min_geq(g, -2)
    for g in (cycle(5), complete_multipartite(1, 5), complete_multipartite(2, 2, 2, 2)):
        assert rs.in_S8(g) == rs.in_S8_via_cone(g)
        if rs.in_S8(g):
            assert es.lambda_min_geq(g, -2)


def test_decoded_graphs_have_lambda_min_at_least_minus_two():
    rng = random.Random(4)
    vecs = list(rs.e8_roots())
    done = 0
    while done < 30:
        pick = [vecs[0]]
        for v in rng.sample(vecs, len(vecs)):
            if all(rs.inner(v, u) in (0, 4) for u in pick):
                pick.append(v)
            if len(pick) >= rng.randint(3, 14):
                break
        g = rs.decode_representation(pick)
        assert es.lambda_min_geq(g, -2)
        done += 1


def test_switch_data_recovers_root_graph():
    rng = random.Random(6)
    for _ in range(10):
        g, _, _ = random_s8_member(rng)
        rep = rs.s8_representation(g)
        h, x = rs.line_graph_switch_data(rep)
        assert is_isomorphic(seidel_switch(line_graph(h), x), g)


def coclique_bound_holds(g):
    """Every coclique has at most 4 vertices; each of size 4 sees every other vertex exactly twice."""
    if chroma.independence_number(g) > 4:
        return False
    for c in chroma.cocliques_of_size(g, 4):
        for v in range(g.n):
            if not c >> v & 1 and (g.rows[v] & c).bit_count() != 2:
                return False
    return True


def test_coclique_bound_on_random_s8_members():
    rng = random.Random(8)
    for _ in range(200):
        g, _, _ = random_s8_member(rng)
        assert coclique_bound_holds(g)


def test_coclique_bound_fails_outside_s8():
    # a cone over four independent vertices has a coclique of size 4 that the apex sees fully
    assert not coclique_bound_holds(complete_multipartite(1, 4))
    assert not rs.in_S8(complete_multipartite(1, 4))


def test_maximal_sets_need_orthogonal_seeds():
    with pytest.raises(ValueError):
        rs.maximal_representable_sets(rs.e7(), ("c12", "c13"))
    with pytest.raises(ValueError):
        rs.maximal_representable_sets(rs.e7(), ("a12", "a34"))


def test_complete_sets_extend_in_e7():
    assert rs.complete_sets_are_extendable(rs.e7())


def test_cone_representation_pins_apex():
    g = sporadic_line_graph()
    c = cone(g)
    rep = rs.find_representation(c, pinned={c.n - 1: "e"})
    assert rep[-1].name == "e"
    assert all(r.name[0] in "ab" and "'" not in r.name for r in rep[:-1])
