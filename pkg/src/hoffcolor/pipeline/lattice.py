"""Regular graphs with ratio bound 3, closed under deletion of 3-cocliques.

Every node is a k-regular graph on n vertices with smallest eigenvalue at
least -2 and 2n = 3(k + 2); deleting any 3-coclique stays inside the family.
A line G -> G minus C is full when the lower graph still reaches the empty
graph, i.e. when C is a class of some Hoffman coloring of G.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .. import chroma, exactspec as es
from ..canon import canonical_key
from ..graph import (Graph, complete, complete_multipartite, cocktail_party, cycle,
                     disjoint_union, line_graph, schlaefli, _members)
from . import reference as ref


class LatticeError(AssertionError):
    pass


@dataclass
class LatticeNode:
    key: bytes
    graph: Graph
    label: str | None = None

    @property
    def row(self) -> int:
        return self.graph.n // 3


@dataclass
class LatticeLine:
    upper: bytes
    lower: bytes
    cocliques: list[int]   # every 3-coclique of the upper graph giving this lower graph
    full: bool = False


@dataclass
class LatticeDiagram:
    nodes: dict[bytes, LatticeNode]
    lines: dict[tuple[bytes, bytes], LatticeLine]
    empty_key: bytes
    labels: dict[str, bytes] = field(default_factory=dict)

    def children(self, key: bytes) -> list[LatticeLine]:
        return [ln for (u, _), ln in self.lines.items() if u == key]

    def reaches_empty(self, key: bytes) -> bool:
        return key == self.empty_key or any(ln.full for ln in self.children(key))

    def full_lines(self, min_lower_vertices: int = 0) -> list[LatticeLine]:
        return [ln for ln in self.lines.values()
                if ln.full and self.nodes[ln.lower].graph.n >= min_lower_vertices]

    def node(self, label: str) -> LatticeNode:
        return self.nodes[self.labels[label]]

    def label_of(self, key: bytes) -> str | None:
        return self.nodes[key].label

    def line(self, upper: str, lower: str) -> LatticeLine:
        return self.lines[(self.labels[upper], self.labels[lower])]


def _three_cocliques(g: Graph) -> list[int]:
    return chroma.cocliques_of_size(g, 3)


def _in_family(g: Graph) -> bool:
    if g.n == 0:
        return True
    if not g.is_regular():
        return False
    k = g.degree(0)
    return 2 * g.n == 3 * (k + 2) and es.lambda_min_geq(g, -2)


def default_seeds() -> list[Graph]:
    """Maximal union subgraphs of the Schläfli graph plus the three graphs without a Hoffman coloring by 3-classes."""
    from .regular import algorithm1
    extra = [line_graph(complete_multipartite(2, 6)), Graph(3, (0, 0, 0)),
             disjoint_union(complete(3), complete(3))]
    return algorithm1(schlaefli(), maximal_only=True) + extra


def build_g3_lattice(seeds: Iterable[Graph] | None = None) -> LatticeDiagram:
    """Close the seeds under 3-coclique deletion, flag full lines and attach reference labels."""
    seeds = default_seeds() if seeds is None else list(seeds)
    empty = Graph(0, ())
    nodes: dict[bytes, LatticeNode] = {}
    lines: dict[tuple[bytes, bytes], LatticeLine] = {}
    frontier = []
    for g in seeds:
        k0 = canonical_key(g)
        if k0 not in nodes:
            nodes[k0] = LatticeNode(k0, g)
            frontier.append(k0)
    while frontier:
        nxt = []
        for key in frontier:
            g = nodes[key].graph
            if not _in_family(g):
                raise LatticeError("closure left the family of ratio-bound-3 graphs")
            for c in _three_cocliques(g):
                if g.n > 3 and not chroma.is_hoffman_coclique(g, c):
                    raise LatticeError("a 3-coclique of a family member is not a Hoffman coclique")
                low = g.induced_mask(g.full_mask & ~c) if g.n > 3 else empty
                lk = canonical_key(low)
                if lk not in nodes:
                    nodes[lk] = LatticeNode(lk, low)
                    nxt.append(lk)
                ln = lines.setdefault((key, lk), LatticeLine(key, lk, []))
                ln.cocliques.append(c)
        frontier = nxt
    diagram = LatticeDiagram(nodes, lines, canonical_key(empty))
    _flag_full(diagram)
    _attach_labels(diagram)
    return diagram


def _flag_full(d: LatticeDiagram) -> None:
    reach: dict[bytes, bool] = {d.empty_key: True}
    for key in sorted(d.nodes, key=lambda k: d.nodes[k].graph.n):
        if key == d.empty_key:
            continue
        ok = False
        for ln in d.children(key):
            ln.full = reach.get(ln.lower, False)
            ok = ok or ln.full
        reach[key] = ok


# ------------------------------------------------------------------ labels

def _named_nodes() -> dict[str, Graph]:
    k33 = complete_multipartite(3, 3)
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    return {
        "184": schlaefli(),
        "L(K6)": line_graph(complete(6)),
        "L(CP3)": line_graph(cocktail_party(3)),
        "L(K2,6)": line_graph(complete_multipartite(2, 6)),
        "L(K3,3)": line_graph(k33),
        "L(K3xK2)": line_graph(prism),
        "C6": cycle(6),
        "2K3": disjoint_union(complete(3), complete(3)),
        "3K1": Graph(3, (0, 0, 0)),
        "empty": Graph(0, ()),
    }


def _reference_lines() -> dict[tuple[str, str], bool]:
    out = {e: True for e in ref.LATTICE_FULL}
    out.update({e: False for e in ref.LATTICE_DOTTED})
    return out


def _attach_labels(d: LatticeDiagram) -> None:
    """Match computed nodes to the reference diagram.

    Named graphs are fixed by isomorphism; the remaining labels are found by
    a search for a row-preserving bijection that maps lines to lines with
    equal full/dotted flags.  The bijection must be unique.
    """
    want = _reference_lines()
    ref_rows = ref.LATTICE_ROWS
    fixed: dict[str, bytes] = {}
    for name, g in _named_nodes().items():
        k = canonical_key(g)
        if k not in d.nodes:
            raise LatticeError(f"{name} is not a node of the computed diagram")
        fixed[name] = k
    by_row: dict[int, list[bytes]] = {}
    for k, nd in d.nodes.items():
        by_row.setdefault(nd.row, []).append(k)
    for r, names in ref_rows.items():
        if len(by_row.get(r, [])) != len(names):
            raise LatticeError(f"row {r}: {len(by_row.get(r, []))} nodes, expected {len(names)}")
    if sum(len(v) for v in ref_rows.values()) != len(d.nodes):
        raise LatticeError("node count differs from the reference diagram")
    got = {(u, l): ln.full for (u, l), ln in d.lines.items()}
    order = [name for r in sorted(ref_rows, reverse=True) for name in ref_rows[r]]
    row_of = {name: r for r, names in ref_rows.items() for name in names}
    solutions: list[dict[str, bytes]] = []
    assign: dict[str, bytes] = {}
    used: set[bytes] = set()

    def consistent(name: str, key: bytes) -> bool:
        for other, ok in assign.items():
            for a, b, ka, kb in ((name, other, key, ok), (other, name, ok, key)):
                flag_ref = want.get((a, b))
                flag_got = got.get((ka, kb))
                if flag_ref != flag_got:
                    return False
        return True

    def rec(i: int) -> None:
        if len(solutions) > 1:
            return
        if i == len(order):
            solutions.append(dict(assign))
            return
        name = order[i]
        cands = [fixed[name]] if name in fixed else by_row[row_of[name]]
        for key in cands:
            if key in used or (name not in fixed and key in fixed.values()):
                continue
            if consistent(name, key):
                assign[name] = key
                used.add(key)
                rec(i + 1)
                used.discard(key)
                del assign[name]

    rec(0)
    if not solutions:
        raise LatticeError("computed diagram does not match the reference diagram")
    if len(solutions) > 1:
        raise LatticeError("reference diagram labels are not determined uniquely")
    for name, key in solutions[0].items():
        d.nodes[key].label = name
        d.labels[name] = key


# ------------------------------------------------------------------ orbit check

def orbit_counts(g: Graph, classes: Iterable[int]) -> tuple[int, int]:
    """(Aut(g)-orbits of the given vertex sets, isomorphism types of g minus a set)."""
    classes = list(classes)
    orbit_keys = {canonical_key(g, [1 if (c >> v) & 1 else 0 for v in range(g.n)]) for c in classes}
    rest_keys = {canonical_key(g.induced_mask(g.full_mask & ~c)) for c in classes}
    return len(orbit_keys), len(rest_keys)


def orbit_check(d: LatticeDiagram) -> dict[str, tuple[int, int]]:
    """n1 and n2 for every node with a full line whose upper graph is not bipartite."""
    out = {}
    for key, nd in d.nodes.items():
        g = nd.graph
        if g.n == 0 or g.is_bipartite() or g.num_edges == 0:
            continue
        cls = [c for ln in d.children(key) if ln.full for c in ln.cocliques]
        if cls:
            out[nd.label or key.hex()[:12]] = orbit_counts(g, cls)
    return out


def hoffman_colorable_nodes(d: LatticeDiagram) -> list[LatticeNode]:
    return [nd for k, nd in d.nodes.items() if nd.graph.n and d.reaches_empty(k)]


def members(mask: int) -> list[int]:
    return _members(mask)
