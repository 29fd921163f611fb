"""Generalized line graphs: construction, balance certificates and recognition.

A generalized line graph L(H; a_1..a_n) has a vertex for every edge of H and a
cocktail party graph CP(a_i) hanging off each vertex i of H.  Recognition is
constructive: a graph is a generalized line graph exactly when it has a
representation by integer vectors with two entries from {+1, -1} (norm 2) such
that adjacent vertices have inner product 1 and non-adjacent ones 0.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from . import exactspec as es
from .chroma import chromatic_number
from .graph import Graph, line_graph


class BalanceError(ValueError):
    pass


@dataclass(frozen=True)
class GLGSpec:
    root: Graph
    capacities: tuple[int, ...]

    def __post_init__(self):
        caps = tuple(int(a) for a in self.capacities)
        object.__setattr__(self, "capacities", caps)
        if len(caps) != self.root.n:
            raise ValueError("one capacity per root vertex is required")
        if any(a < 0 for a in caps):
            raise ValueError("capacities must be non-negative")

    @property
    def c(self) -> tuple[int, ...]:
        return tuple(self.root.degree(i) + a for i, a in enumerate(self.capacities))


@dataclass(frozen=True)
class Provenance:
    kind: str  # "edge" or "cp"
    edge: tuple[int, int] | None = None
    root_vertex: int | None = None
    pair: int | None = None
    side: int | None = None


def build_glg_with_provenance(spec: GLGSpec) -> tuple[Graph, list[Provenance]]:
    h = spec.root
    prov = [Provenance("edge", edge=e) for e in h.edges()]
    for i, a in enumerate(spec.capacities):
        for j in range(a):
            prov.append(Provenance("cp", root_vertex=i, pair=j, side=0))
            prov.append(Provenance("cp", root_vertex=i, pair=j, side=1))
    edges = []
    for x in range(len(prov)):
        for y in range(x + 1, len(prov)):
            if _glg_adjacent(prov[x], prov[y]):
                edges.append((x, y))
    return Graph.from_edges(len(prov), edges), prov


def _glg_adjacent(p: Provenance, q: Provenance) -> bool:
    if p.kind == "edge" and q.kind == "edge":
        return len(set(p.edge) & set(q.edge)) == 1
    if p.kind == "cp" and q.kind == "cp":
        return p.root_vertex == q.root_vertex and p.pair != q.pair
    e, c = (p, q) if p.kind == "edge" else (q, p)
    return c.root_vertex in e.edge


def build_glg(spec: GLGSpec) -> Graph:
    return build_glg_with_provenance(spec)[0]


def glg_chi_formula(spec: GLGSpec) -> int:
    lg = line_graph(spec.root)
    base = chromatic_number(lg) if lg.n else 0
    return max([base] + list(spec.c))


def balanced_spec(h: Graph, c: int) -> GLGSpec:
    for v in range(h.n):
        if h.degree(v) > c:
            raise BalanceError(f"vertex {v} has degree {h.degree(v)} > {c}")
    lg = line_graph(h)
    if lg.n and chromatic_number(lg) > c:
        raise BalanceError(f"chromatic index of the root exceeds {c}")
    return GLGSpec(h, tuple(c - h.degree(v) for v in range(h.n)))


def balanced_glg(h: Graph, c: int) -> Graph:
    return build_glg(balanced_spec(h, c))


def verify_balanced_certificate(spec: GLGSpec) -> bool:
    """Check A x = 2(chi - 1) x for x = 1 on cocktail party vertices and 2 on edge vertices."""
    g, prov = build_glg_with_provenance(spec)
    if g.n == 0:
        return False
    chi = glg_chi_formula(spec)
    t = 2 * (chi - 1)
    x = [1 if p.kind == "cp" else 2 for p in prov]
    for v in range(g.n):
        if sum(x[u] for u in g.neighbors(v)) != t * x[v]:
            return False
    return True


# ------------------------------------------------------------------ recognition


@dataclass(frozen=True)
class DRepresentation:
    """vertex -> ((i, s_i), (j, s_j)): the vector s_i e_i + s_j e_j."""

    vectors: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def dimension(self) -> int:
        return 1 + max((c for v in self.vectors for c, _ in v), default=-1)

    def dense(self) -> list[list[int]]:
        k = self.dimension
        out = []
        for v in self.vectors:
            row = [0] * k
            for c, s in v:
                row[c] = s
            out.append(row)
        return out

    def gram(self) -> list[list[int]]:
        d = self.dense()
        return [[sum(a * b for a, b in zip(x, y)) for y in d] for x in d]


def _dot(u, v) -> int:
    (a, sa), (b, sb) = u
    total = 0
    for c, s in v:
        if c == a:
            total += s * sa
        elif c == b:
            total += s * sb
    return total


def _search_order(g: Graph, comp: int) -> list[int]:
    """Maximum-cardinality search order inside one component."""
    verts = [v for v in range(g.n) if (comp >> v) & 1]
    start = max(verts, key=lambda v: (g.degree(v), -v))
    order = [start]
    placed = 1 << start
    weight = {v: 0 for v in verts}
    for u in g.neighbors(start):
        weight[u] += 1
    while len(order) < len(verts):
        v = max((u for u in verts if not (placed >> u) & 1), key=lambda u: (weight[u], g.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        for u in g.neighbors(v):
            if not (placed >> u) & 1:
                weight[u] += 1
    return order


def _represent_component(g: Graph, comp: int, offset: int, budget: int):
    order = _search_order(g, comp)
    assign: dict[int, tuple] = {}
    placed: list[int] = []

    def candidates(v: int, used: int):
        anchor = next(u for u in placed if g.has_edge(u, v))
        av = assign[anchor]
        supp = {av[0][0], av[1][0]}
        for x, sx in av:
            others = [y for y in range(offset, offset + used) if y not in supp]
            for y in others:
                for sy in (1, -1):
                    yield _vec(x, sx, y, sy), used
            if used < budget:
                yield _vec(x, sx, offset + used, 1), used + 1

    def ok(v: int, vec) -> bool:
        for u in placed:
            d = _dot(assign[u], vec)
            if d != (1 if g.has_edge(u, v) else 0):
                return False
        return True

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for vec, nused in candidates(v, used):
            if ok(v, vec):
                assign[v] = vec
                placed.append(v)
                if rec(i + 1, nused):
                    return True
                placed.pop()
                del assign[v]
        return False

    first = order[0]
    if budget < 2:
        return None
    assign[first] = ((offset, 1), (offset + 1, 1))
    placed.append(first)
    if rec(1, 2):
        used = 1 + max(c for vec in assign.values() for c, _ in vec) - offset
        return assign, used
    return None


def _vec(x: int, sx: int, y: int, sy: int):
    return ((x, sx), (y, sy)) if x < y else ((y, sy), (x, sx))


def recognize_glg(g: Graph) -> DRepresentation | None:
    """A D-representation of g if g is a generalized line graph, else None."""
    if g.n == 0:
        return DRepresentation(())
    if not es.lambda_min_geq(g, -2):
        return None
    vectors: dict[int, tuple] = {}
    offset = 0
    for comp in g.components():
        size = comp.bit_count()
        res = _represent_component(g, comp, offset, size + 1)
        if res is None:
            return None
        assign, used = res
        vectors.update(assign)
        offset += used
    return DRepresentation(tuple(vectors[v] for v in range(g.n)))


def is_glg(g: Graph) -> bool:
    return recognize_glg(g) is not None


def is_exceptional(g: Graph) -> bool:
    return g.n > 0 and g.is_connected() and es.lambda_min_geq(g, -2) and recognize_glg(g) is None


def representation_matches(g: Graph, rep: DRepresentation) -> bool:
    """Gram matrix equals A + 2I."""
    gram = rep.gram()
    a = g.adjacency_matrix()
    return all(gram[i][j] == a[i][j] + (2 if i == j else 0) for i in range(g.n) for j in range(g.n))
