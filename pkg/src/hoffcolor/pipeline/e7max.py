"""Maximal E7-representable graphs, split into the Schläfli graph, cones and the rest."""

from __future__ import annotations

from dataclasses import dataclass

from .. import rootsys
from ..canon import canonical_key, is_induced_subgraph
from ..graph import Graph, schlaefli

SEED = ("c12", "c34")


@dataclass
class E7Summary:
    graphs: list[rootsys.RepresentedGraph]
    schlaefli: list[int]
    cones: list[int]
    other: list[int]
    other_in_s8: list[int]
    containments: list[tuple[int, int]]   # (i, j) with graph i induced in graph j

    def line(self) -> str:
        return (f"{len(self.graphs)} graphs ({len(self.schlaefli)} Schläfli, "
                f"{len(self.cones)} cones, {len(self.other)} other)")

    def other_graphs(self) -> list[Graph]:
        return [self.graphs[i].graph for i in self.other]


def e7_maximal(check_containment: bool = True) -> E7Summary:
    found = rootsys.maximal_representable_graphs(rootsys.e7(), SEED)
    s_key = canonical_key(schlaefli())
    sch, cones, other = [], [], []
    for i, r in enumerate(found):
        if r.key == s_key:
            sch.append(i)
        elif r.graph.universal_vertices():
            cones.append(i)
        else:
            other.append(i)
    in_s8 = [i for i in other if rootsys.in_S8(found[i].graph)]
    cont = []
    if check_containment:
        for i, a in enumerate(found):
            for j, b in enumerate(found):
                if i != j and a.graph.n <= b.graph.n and is_induced_subgraph(a.graph, b.graph):
                    cont.append((i, j))
    return E7Summary(found, sch, cones, other, in_s8, cont)
