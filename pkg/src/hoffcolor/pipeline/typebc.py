"""Hoffman colorable induced subgraphs of irregular hosts via the maximal-coclique graph.

Hosts are the maximal E7-representable graphs that are neither cones nor
switching-equivalent to a line graph on 8 points, plus (optionally) the
maximal exceptional graphs with more than 29 vertices or maximum degree
below 28, read from a graph6 file with a sidecar manifest of claimed types.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .. import chroma, exactspec as es, glg, rootsys
from ..canon import canonical_key
from ..graph import Graph, GraphFormatError, graph6_decode, _members

log = logging.getLogger(__name__)

COMPLETENESS_CAVEAT = "completeness of the typebc route not independently re-derived"


# ------------------------------------------------------------------ M(G)

def _min_eigen_test(g: Graph):
    """A predicate K -> (lambda_min(g) is an eigenvalue of K)."""
    lmin = es.integer_eigenvalue(g, "min")
    if lmin is not None:
        def test(k: Graph) -> bool:
            a = k.adjacency_matrix()
            for i in range(k.n):
                a[i][i] = -lmin
            return es.bareiss_det(a) == 0
        return test
    pg = es.char_poly(g)

    def test_irr(k: Graph) -> bool:
        return es.extreme_roots_equal(pg, es.char_poly(k), "min")
    return test_irr


@dataclass(frozen=True)
class MaximalCocliqueGraph:
    host: Graph
    nodes: tuple[int, ...]
    rows: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.nodes)

    def _free_rows(self) -> list[int]:
        full = (1 << self.size) - 1
        return [full & ~r & ~(1 << i) for i, r in enumerate(self.rows)]

    def union(self, fam: int) -> int:
        m = 0
        for i in _members(fam):
            m |= self.nodes[i]
        return m

    def cocliques(self, min_size: int = 2) -> Iterator[int]:
        free = self._free_rows()
        stack = [(0, 0, (1 << self.size) - 1)]
        while stack:
            fam, k, cand = stack.pop()
            if k >= min_size:
                yield fam
            m = cand
            while m:
                low = m & -m
                i = low.bit_length() - 1
                m ^= low
                stack.append((fam | low, k + 1, m & free[i]))

    def maximal_cocliques(self) -> list[int]:
        return chroma.maximal_cliques(self._free_rows(), (1 << self.size) - 1)


def maximal_coclique_graph(g: Graph) -> MaximalCocliqueGraph:
    if g.n == 0:
        raise ValueError("M(G) needs a non-empty graph")
    nodes = tuple(sorted(chroma.maximal_cocliques(g)))
    test = _min_eigen_test(g)
    rows = [0] * len(nodes)
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            a, b = nodes[i], nodes[j]
            adj = bool(a & b)
            if not adj:
                sub = g.induced_mask(a | b)
                adj = any(not test(sub.induced_mask(c)) for c in sub.components())
            if adj:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return MaximalCocliqueGraph(g, nodes, tuple(rows))


# ------------------------------------------------------------------ algorithm 2

@dataclass(frozen=True)
class Alg2Result:
    graph: Graph
    key: bytes
    parts: int
    mask: int
    host_index: int
    maximal: bool  # came from a maximal coclique of M(host)


def _is_hoffman_union(h: Graph, host: Graph, parts: int) -> bool:
    lmin = es.integer_eigenvalue(host, "min")
    if lmin is not None:
        return es.integer_radius_certify(h, -lmin * (parts - 1))
    target = es.char_poly(host).reflect().scale_roots(parts - 1)
    return es.extreme_roots_equal(es.char_poly(h), target, "max")


def algorithm2(g: Graph, maximal_only: bool = False, host_index: int = 0,
               mg: MaximalCocliqueGraph | None = None) -> tuple[list[Alg2Result], list[Alg2Result]]:
    """(Hoffman, non-Hoffman) union subgraphs, one per (parts, isomorphism class)."""
    mg = maximal_coclique_graph(g) if mg is None else mg
    maximal_fams = set(mg.maximal_cocliques())
    fams: Iterable[int] = sorted(maximal_fams) if maximal_only else mg.cocliques(2)
    seen_masks: set[tuple[int, int]] = set()
    hoff: dict[tuple[int, bytes], Alg2Result] = {}
    non: dict[tuple[int, bytes], Alg2Result] = {}
    for fam in fams:
        c = fam.bit_count()
        if c < 2:
            continue
        m = mg.union(fam)
        if (c, m) in seen_masks:
            continue
        seen_masks.add((c, m))
        h = g.induced_mask(m)
        key = canonical_key(h)
        slot = (c, key)
        if slot in hoff or slot in non:
            if fam in maximal_fams and slot in hoff and not hoff[slot].maximal:
                r = hoff[slot]
                hoff[slot] = Alg2Result(r.graph, r.key, r.parts, r.mask, r.host_index, True)
            continue
        res = Alg2Result(h, key, c, m, host_index, fam in maximal_fams)
        (hoff if _is_hoffman_union(h, g, c) else non)[slot] = res
    order = lambda r: (r.parts, r.graph.n, r.key)
    return sorted(hoff.values(), key=order), sorted(non.values(), key=order)


# ------------------------------------------------------------------ hosts

@dataclass
class HostSet:
    hosts: list[Graph]
    kinds: list[str]                 # "e7", "b" or "c"
    external: bool
    rejected: list[tuple[int, str]] = field(default_factory=list)

    @property
    def caveat(self) -> str | None:
        return None if self.external else COMPLETENESS_CAVEAT


def e7_hosts() -> list[Graph]:
    """Maximal E7-representable graphs with no universal vertex that are not in S8."""
    out = []
    for r in rootsys.maximal_representable_graphs(rootsys.e7(), ("c12", "c34")):
        g = r.graph
        if g.universal_vertices():
            continue
        if rootsys.in_S8(g):
            continue
        out.append(g)
    return out


def validate_host(g: Graph, kind: str) -> str | None:
    """None when g is a plausible maximal exceptional graph of the claimed type, else a reason."""
    if kind not in ("b", "c"):
        return f"unknown host type {kind!r}"
    if not g.is_connected():
        return "disconnected"
    if es.integer_eigenvalue(g, "min") != -2:
        return "smallest eigenvalue is not exactly -2"
    if g.universal_vertices():
        return "has a universal vertex (a cone)"
    if not glg.is_exceptional(g):
        return "not exceptional"
    dmax = max(g.degrees())
    if kind == "b" and not (dmax == 28 and g.n > 29):
        return "type (b) needs maximum degree 28 and more than 29 vertices"
    if kind == "c" and dmax >= 28:
        return "type (c) needs maximum degree below 28"
    return None


def read_host_file(path: str | Path) -> tuple[list[Graph], list[str]]:
    """graph6 lines plus ``<path>.manifest`` with one type letter (b or c) per line."""
    path = Path(path)
    lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
    graphs = [graph6_decode(ln) for ln in lines]
    man = Path(str(path) + ".manifest")
    if not man.exists():
        raise GraphFormatError(f"missing manifest {man}")
    kinds = [ln.strip().lower() for ln in man.read_text().splitlines() if ln.strip()]
    if len(kinds) != len(graphs):
        raise GraphFormatError("manifest length differs from the number of graphs")
    return graphs, kinds


def host_set(external: str | Path | None = None, e7: list[Graph] | None = None) -> HostSet:
    hosts = list(e7_hosts() if e7 is None else e7)
    kinds = ["e7"] * len(hosts)
    rejected = []
    if external is not None:
        graphs, claimed = read_host_file(external)
        for i, (g, k) in enumerate(zip(graphs, claimed)):
            why = validate_host(g, k)
            if why:
                rejected.append((i, why))
                continue
            hosts.append(g)
            kinds.append(k)
    else:
        log.warning(COMPLETENESS_CAVEAT)
    return HostSet(hosts, kinds, external is not None, rejected)
