"""The E8 root system (coordinates scaled by 2) and graph representations in it.

Vectors, with 1-based index names:

    a_ij = 2e_i + 2e_j          a'_ij = -a_ij       (i < j)
    b_ij = 1 - 2e_i - 2e_j      b'_ij = -b_ij       (i < j)
    c_ij = 2e_i - 2e_j          (i != j)
    d_ijkl = 1 - 2(e_i + e_j + e_k + e_l)   (i < j < k < l)
    e = 1,  e' = -1

All have squared norm 8.  A representation maps adjacent vertices to vectors
with inner product 4 and non-adjacent vertices to orthogonal vectors.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_key
from .chroma import maximal_cliques
from .exactspec import exact_rank, lambda_min_geq
from .graph import Graph, _members, cone


class InvalidCertificate(ValueError):
    pass


@dataclass(frozen=True)
class RootVector:
    name: str
    coords: tuple[int, ...]

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RootSet:
    vectors: tuple[RootVector, ...]
    label: str
    transitive: bool  # the Weyl group acts transitively (irreducible simply-laced system)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def names(self) -> list[str]:
        return [v.name for v in self.vectors]

    @property
    def rank(self) -> int:
        return exact_rank([list(v.coords) for v in self.vectors]) if self.vectors else 0


def _unit(*idx: int) -> list[int]:
    v = [0] * 8
    for i in idx:
        v[i - 1] += 1
    return v


@lru_cache(maxsize=1)
def _all_roots() -> tuple[RootVector, ...]:
    out = []
    for i, j in itertools.combinations(range(1, 9), 2):
        u = _unit(i, j)
        a = tuple(2 * x for x in u)
        b = tuple(1 - 2 * x for x in u)
        out.append(RootVector(f"a{i}{j}", a))
        out.append(RootVector(f"a'{i}{j}", tuple(-x for x in a)))
        out.append(RootVector(f"b{i}{j}", b))
        out.append(RootVector(f"b'{i}{j}", tuple(-x for x in b)))
    for i in range(1, 9):
        for j in range(1, 9):
            if i != j:
                v = [0] * 8
                v[i - 1], v[j - 1] = 2, -2
                out.append(RootVector(f"c{i}{j}", tuple(v)))
    for quad in itertools.combinations(range(1, 9), 4):
        u = _unit(*quad)
        out.append(RootVector("d" + "".join(map(str, quad)), tuple(1 - 2 * x for x in u)))
    out.append(RootVector("e", (1,) * 8))
    out.append(RootVector("e'", (-1,) * 8))
    return tuple(out)


@lru_cache(maxsize=1)
def _by_name() -> dict[str, RootVector]:
    return {r.name: r for r in _all_roots()}


def root(name: str) -> RootVector:
    """Look up a vector by name ("a15", "b'23", "c26", "d5678", "e")."""
    key = name.strip().replace("’", "'")
    try:
        return _by_name()[key]
    except KeyError:
        raise InvalidCertificate(f"unknown root vector name {name!r}") from None


def e8_roots() -> RootSet:
    return RootSet(_all_roots(), "E8", True)


def inner(u: RootVector, v: RootVector) -> int:
    return sum(x * y for x, y in zip(u.coords, v.coords))


def subsystem(orthogonal_to: Iterable[str | RootVector]) -> RootSet:
    """Roots orthogonal to every seed; seeds must be pairwise orthogonal roots."""
    seeds = [s if isinstance(s, RootVector) else root(s) for s in orthogonal_to]
    for s, t in itertools.combinations(seeds, 2):
        if inner(s, t) != 0:
            raise ValueError(f"seeds {s.name} and {t.name} are not orthogonal")
    vecs = tuple(r for r in _all_roots() if all(inner(r, s) == 0 for s in seeds))
    label = {0: "E8", 1: "E7", 2: "D6"}.get(len(seeds), f"perp{len(seeds)}")
    return RootSet(vecs, label, len(seeds) <= 2)


def e7() -> RootSet:
    """The 126 roots orthogonal to e (all type c and type d vectors)."""
    return subsystem(["e"])


# ------------------------------------------------------------ representations


def decode_representation(names: Sequence[str | RootVector]) -> Graph:
    vecs = [n if isinstance(n, RootVector) else root(n) for n in names]
    seen = set()
    for v in vecs:
        if v.name in seen:
            raise InvalidCertificate(f"vector {v.name} used twice")
        seen.add(v.name)
    edges = []
    for i, j in itertools.combinations(range(len(vecs)), 2):
        ip = inner(vecs[i], vecs[j])
        if ip == 4:
            edges.append((i, j))
        elif ip != 0:
            raise InvalidCertificate(f"vectors {vecs[i].name} and {vecs[j].name} have inner product {ip}")
    return Graph.from_edges(len(vecs), edges)


def verify_representation(g: Graph, rep: Sequence[str | RootVector]) -> bool:
    if len(rep) != g.n:
        return False
    vecs = [r if isinstance(r, RootVector) else root(r) for r in rep]
    if len({v.name for v in vecs}) != len(vecs):
        return False
    for i, j in itertools.combinations(range(g.n), 2):
        if inner(vecs[i], vecs[j]) != (4 if g.has_edge(i, j) else 0):
            return False
    return True


def _compat(vecs: Sequence[RootVector]) -> tuple[list[int], list[int]]:
    """Bitsets: adj4[i] = products equal to 4, orth[i] = products equal to 0."""
    n = len(vecs)
    adj4 = [0] * n
    orth = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            ip = inner(vecs[i], vecs[j])
            if ip == 4:
                adj4[i] |= 1 << j
                adj4[j] |= 1 << i
            elif ip == 0:
                orth[i] |= 1 << j
                orth[j] |= 1 << i
    return adj4, orth


def _order(g: Graph) -> list[int]:
    """Maximum-cardinality search order (restarts for each component)."""
    remaining = set(range(g.n))
    order: list[int] = []
    weight = [0] * g.n
    while remaining:
        v = max(remaining, key=lambda u: (weight[u], g.degree(u), -u))
        remaining.discard(v)
        order.append(v)
        for u in g.neighbors(v):
            weight[u] += 1
    return order


def find_representation(g: Graph, roots: RootSet | None = None, *,
                        pinned: dict[int, str] | None = None) -> list[RootVector] | None:
    """Some representation of g in the given roots, or None."""
    roots = roots or e8_roots()
    # the Gram matrix of a representation is 4(A + 2I)
    if not lambda_min_geq(g, -2):
        return None
    a2 = [[x + (2 if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(g.adjacency_matrix())]
    if exact_rank(a2) > roots.rank:
        return None
    vecs = list(roots.vectors)
    adj4, orth = _compat(vecs)
    full = (1 << len(vecs)) - 1
    order = _order(g)
    pos: dict[int, int] = {}
    index = {v.name: i for i, v in enumerate(vecs)}
    fixed = {}
    for v, name in (pinned or {}).items():
        if name not in index:
            return None
        fixed[v] = index[name]
    if not fixed and roots.transitive and g.n:
        fixed[order[0]] = 0

    def cand(v: int) -> int:
        c = full
        for u, i in pos.items():
            c &= adj4[i] if g.has_edge(u, v) else orth[i]
            if not c:
                return 0
        return c

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        c = cand(v)
        if v in fixed:
            c &= 1 << fixed[v]
        while c:
            low = c & -c
            i = low.bit_length() - 1
            c ^= low
            pos[v] = i
            if rec(k + 1):
                return True
            del pos[v]
        return False

    # pinned vertices go first so that they constrain the rest
    order = [v for v in order if v in fixed] + [v for v in order if v not in fixed]
    if not rec(0):
        return None
    return [vecs[pos[v]] for v in range(g.n)]


def s8_candidates() -> RootSet:
    """Vectors with inner product 4 against e: the a- and b-types."""
    e = root("e")
    return RootSet(tuple(r for r in _all_roots() if inner(r, e) == 4), "S8", False)


def s8_representation(g: Graph) -> list[RootVector] | None:
    """A representation of g by a/b vectors (so that cone(g) maps its apex to e)."""
    if g.n == 0:
        return []
    # the stabilizer of e acts transitively on these vectors, so pin one vertex
    order = _order(g)
    return find_representation(g, s8_candidates(), pinned={order[0]: "a12"})


def in_S8(g: Graph) -> bool:
    return s8_representation(g) is not None


def in_S8_via_cone(g: Graph) -> bool:
    """Same decision, phrased on the cone with its apex pinned to e."""
    c = cone(g)
    return find_representation(c, e8_roots(), pinned={c.n - 1: "e"}) is not None


def line_graph_switch_data(rep: Sequence[RootVector]) -> tuple[Graph, list[int]]:
    """From an a/b representation, the 8-vertex root graph H and a switching set.

    Vertex v with vector a_ij or b_ij corresponds to the edge ij of H; the
    returned set lists the b-edges as vertices of ``line_graph(H)``, so that
    switching ``line_graph(H)`` on it reproduces the represented graph.
    """
    edges = []
    b_edges = set()
    for r in rep:
        if r.name[0] not in "ab" or "'" in r.name:
            raise ValueError("not an a/b representation")
        e = (int(r.name[1]) - 1, int(r.name[2]) - 1)
        edges.append(e)
        if r.name[0] == "b":
            b_edges.add(e)
    h = Graph.from_edges(8, edges)
    return h, [i for i, e in enumerate(h.edges()) if e in b_edges]


# ------------------------------------------------------------ maximal graphs


@dataclass(frozen=True)
class RepresentedGraph:
    graph: Graph
    vectors: tuple[RootVector, ...]
    key: bytes


def negativity_graph(roots: RootSet) -> list[int]:
    vecs = roots.vectors
    rows = [0] * len(vecs)
    for i, j in itertools.combinations(range(len(vecs)), 2):
        if inner(vecs[i], vecs[j]) < 0:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rows


def maximal_representable_sets(roots: RootSet, seed: tuple[str, str]) -> list[tuple[RootVector, ...]]:
    """Maximal vector sets with pairwise products in {0, 4} containing both seeds."""
    s1, s2 = root(seed[0]), root(seed[1])
    if inner(s1, s2) != 0:
        raise ValueError("seed roots must be orthogonal")
    names = {s1.name, s2.name}
    if not names <= set(roots.names()):
        raise ValueError("seed roots must belong to the root set")
    cand = [r for r in roots.vectors if r.name not in names and inner(r, s1) >= 0 and inner(r, s2) >= 0]
    n = len(cand)
    comp = [0] * n
    for i, j in itertools.combinations(range(n), 2):
        if inner(cand[i], cand[j]) >= 0:
            comp[i] |= 1 << j
            comp[j] |= 1 << i
    out = []
    for m in maximal_cliques(comp, (1 << n) - 1):
        out.append((s1, s2) + tuple(cand[i] for i in _members(m)))
    return out


def maximal_representable_graphs(roots: RootSet, seed: tuple[str, str]) -> list[RepresentedGraph]:
    """Maximal representable graphs through the seed pair, one per isomorphism class."""
    found: dict[bytes, RepresentedGraph] = {}
    for vecs in maximal_representable_sets(roots, seed):
        g = decode_representation(vecs)
        key = canonical_key(g)
        if key not in found:
            found[key] = RepresentedGraph(g, vecs, key)
    return sorted(found.values(), key=lambda r: (r.graph.n, r.graph.num_edges, r.key))


def complete_sets_are_extendable(roots: RootSet) -> bool:
    """No maximal representable vector set is pairwise at product 4.

    Used to justify restricting the maximal-set search to sets through an
    orthogonal seed pair.
    """
    vecs = roots.vectors
    adj4, orth = _compat(vecs)
    for q in maximal_cliques(adj4, (1 << len(vecs)) - 1):
        ext = (1 << len(vecs)) - 1
        for i in _members(q):
            ext &= adj4[i] | orth[i]
        if not ext & ~q:
            return False
    return True
