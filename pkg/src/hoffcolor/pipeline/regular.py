"""Regular Hoffman colorable induced subgraphs via the Hoffman coclique graph.

Families of pairwise disjoint Hoffman cocliques of a regular host are exactly
the cocliques of HC(host); the union of such a family induces a regular
Hoffman colorable graph with the host's ratio bound and smallest eigenvalue.
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .. import chroma, glg
from ..canon import canonical_key
from ..graph import Graph, cone, cycle, disjoint_union
from ._parallel import pmap


@dataclass(frozen=True)
class HoffmanCocliqueGraph:
    host: Graph
    nodes: tuple[int, ...]  # vertex masks of the host
    rows: tuple[int, ...]   # node i ~ node j iff the cocliques intersect

    @property
    def size(self) -> int:
        return len(self.nodes)

    def disjoint_rows(self) -> list[int]:
        full = (1 << self.size) - 1
        return [full & ~r & ~(1 << i) for i, r in enumerate(self.rows)]

    def union(self, family: int) -> int:
        m = 0
        i = 0
        while family:
            if family & 1:
                m |= self.nodes[i]
            family >>= 1
            i += 1
        return m

    def cocliques(self, min_size: int = 1) -> Iterator[int]:
        """Every coclique (as a node-index mask) with at least ``min_size`` nodes."""
        disj = self.disjoint_rows()
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
                stack.append((fam | low, k + 1, m & disj[i]))

    def maximal_cocliques(self) -> list[int]:
        return chroma.maximal_cliques(self.disjoint_rows(), (1 << self.size) - 1)

    def coclique_number(self) -> int:
        return max((f.bit_count() for f in self.maximal_cocliques()), default=0)


def hoffman_coclique_graph(g: Graph) -> HoffmanCocliqueGraph:
    if g.n == 0 or not g.is_regular():
        raise ValueError("the Hoffman coclique graph needs a non-empty regular graph")
    if chroma.regular_coclique_data(g) is None:
        warnings.warn("ratio bound is not integral; no Hoffman cocliques", stacklevel=2)
        return HoffmanCocliqueGraph(g, (), ())
    nodes = chroma.hoffman_cocliques(g)
    rows = []
    for i, a in enumerate(nodes):
        r = 0
        for j, b in enumerate(nodes):
            if i != j and a & b:
                r |= 1 << j
        rows.append(r)
    return HoffmanCocliqueGraph(g, tuple(nodes), tuple(rows))


@dataclass(frozen=True)
class InducedResult:
    """An induced subgraph of a host, with the vertex set it came from."""

    graph: Graph
    key: bytes
    host_index: int
    mask: int
    parts: int
    maximal: bool  # no Hoffman coclique of the host avoids the vertex set


def union_masks(hc: HoffmanCocliqueGraph, maximal_only: bool = False) -> dict[int, int]:
    """Distinct vertex sets covered by HC cocliques of size >= 2 -> number of parts."""
    out: dict[int, int] = {}
    fams: Iterable[int] = hc.maximal_cocliques() if maximal_only else hc.cocliques(2)
    for fam in fams:
        k = fam.bit_count()
        if k >= 2:
            out.setdefault(hc.union(fam), k)
    return out


def _keyed(args: tuple[Graph, int]) -> bytes:
    g, mask = args
    return canonical_key(g.induced_mask(mask))


def algorithm1_results(hosts: Sequence[Graph], maximal_only: bool = False,
                       workers: int | None = None) -> list[InducedResult]:
    """Distinct (up to isomorphism) union subgraphs over all hosts.

    The maximal flag of a result is the conjunction over every occurrence,
    so a graph that is maximal in one host but extendable in another is not
    maximal.
    """
    best: dict[bytes, InducedResult] = {}
    flags: dict[bytes, bool] = {}
    for hi, g in enumerate(hosts):
        hc = hoffman_coclique_graph(g)
        masks = union_masks(hc, maximal_only)
        order = sorted(masks)
        keys = pmap(_keyed, [(g, m) for m in order], workers)
        for m, key in zip(order, keys):
            is_max = not any(c & m == 0 for c in hc.nodes)
            flags[key] = flags.get(key, True) and is_max
            if key not in best:
                best[key] = InducedResult(g.induced_mask(m), key, hi, m, masks[m], is_max)
    out = []
    for key, r in best.items():
        out.append(InducedResult(r.graph, key, r.host_index, r.mask, r.parts, flags[key]))
    out.sort(key=lambda r: (r.graph.n, r.key))
    return out


def algorithm1(g: Graph, maximal_only: bool = False) -> list[Graph]:
    return [r.graph for r in algorithm1_results([g], maximal_only)]


def nontrivial(results: Iterable[InducedResult]) -> list[InducedResult]:
    return [r for r in results if not chroma.is_trivially_colorable(r.graph)]


def cone_inputs(regular4: Iterable[Graph]) -> list[Graph]:
    """The ratio-bound-4 results together with the two bipartite 2-regular cases."""
    return list(regular4) + [cycle(8), disjoint_union(cycle(4), cycle(4))]


@dataclass(frozen=True)
class ConeResult:
    graph: Graph
    base: Graph
    key: bytes
    is_glg: bool


def cone_closure(inputs: Iterable[Graph]) -> list[ConeResult]:
    """Cones over the inputs, each checked to be Hoffman colorable with class sizes {1, 4}."""
    out: dict[bytes, ConeResult] = {}
    for base in inputs:
        c = cone(base)
        if not chroma.is_hoffman_colorable(c):
            raise AssertionError("cone over a ratio-bound-4 input is not Hoffman colorable")
        if chroma.class_size_set(c) != frozenset({1, 4}):
            raise AssertionError("cone colorings do not have class sizes {1, 4}")
        key = canonical_key(c)
        if key not in out:
            out[key] = ConeResult(c, base, key, glg.is_glg(c))
    return sorted(out.values(), key=lambda r: (r.graph.n, r.key))
