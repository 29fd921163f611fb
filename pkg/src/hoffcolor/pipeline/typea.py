"""Irregular Hoffman colorable graphs switching-equivalent to a line graph on 8 points.

Each comes from a full line G -> G minus C of the ratio-bound-3 diagram:
add a cone vertex to G and Seidel switch with respect to C.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import chroma, exactspec as es, glg, rootsys
from ..canon import canonical_key
from ..graph import Graph, _members, cone, seidel_switch
from . import reference as ref
from .lattice import LatticeDiagram


class CertificateError(AssertionError):
    pass


def hat_switch(g: Graph, c) -> Graph:
    """Cone over g (apex last), then switch with respect to the vertex set c."""
    verts = _members(c) if isinstance(c, int) else list(c)
    return seidel_switch(cone(g), verts)


def hat_switch_failures(h: Graph) -> list[str]:
    bad = []
    if h.is_regular():
        bad.append("regular")
    if not chroma.is_hoffman_colorable(h) or chroma.is_trivially_colorable(h):
        bad.append("not non-trivially Hoffman colorable")
    if not glg.is_exceptional(h):
        bad.append("not exceptional")
    if not rootsys.in_S8(h):
        bad.append("not switching equivalent to a line graph on 8 points")
    if es.integer_eigenvalue(h, "min") != -2:
        bad.append("smallest eigenvalue is not -2")
    if chroma.class_size_set(h) != frozenset({3, 4}):
        bad.append("Hoffman class sizes are not {3, 4}")
    return bad


def verified_hat_switch(g: Graph, c) -> Graph:
    h = hat_switch(g, c)
    bad = hat_switch_failures(h)
    if bad:
        raise CertificateError("; ".join(bad))
    return h


@dataclass(frozen=True)
class TypeAResult:
    graph: Graph
    key: bytes
    upper: str      # label of G in the diagram
    lower: str      # label of G minus C
    coclique: int
    maximal_label: str | None


def typea_graphs(d: LatticeDiagram, verify: bool = True) -> tuple[list[TypeAResult], list[TypeAResult]]:
    """One graph per full line strictly above C6, and the four obtained from maximal lines."""
    maximal_of = {v: k for k, v in ref.TYPEA_MAXIMAL_LINES.items()}
    out: dict[bytes, TypeAResult] = {}
    for ln in sorted(d.full_lines(min_lower_vertices=6),
                     key=lambda l: (-d.nodes[l.upper].graph.n, d.nodes[l.upper].label or "",
                                    d.nodes[l.lower].label or "")):
        g = d.nodes[ln.upper].graph
        c = ln.cocliques[0]
        h = verified_hat_switch(g, c) if verify else hat_switch(g, c)
        key = canonical_key(h)
        up, lo = d.nodes[ln.upper].label, d.nodes[ln.lower].label
        if key in out:
            raise CertificateError(f"lines {out[key].upper}->{out[key].lower} and {up}->{lo} give isomorphic graphs")
        out[key] = TypeAResult(h, key, up, lo, c, maximal_of.get((up, lo)))
    results = list(out.values())
    return results, [r for r in results if r.maximal_label]
