"""Connected non-trivially Hoffman colorable graphs with fewer than 3*chi vertices.

Also builds graphs with one class of size 5 and all other classes of size 2
from a multiset S over {1, 2, 3}.  The size-5 class is v0..v4; each 2-class
{x, y} has x ~ v0, v_i, v4 and y ~ v0 plus the two other v_j (j <= 3),
where i is its entry of S.  Distinct 2-classes are completely joined.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .. import chroma, exactspec as es, glg
from ..canon import canonical_key
from ..graph import Graph, sporadic_line_graph
from .assemble import Classification


class SmallOrderError(AssertionError):
    pass


@dataclass(frozen=True)
class SizeTwoMultiset:
    """Multiplicities of 1, 2, 3, normalised so that m1 >= m2 >= m3."""

    m1: int
    m2: int = 0
    m3: int = 0

    @classmethod
    def from_items(cls, items) -> "SizeTwoMultiset":
        cnt = Counter(items)
        if set(cnt) - {1, 2, 3}:
            raise ValueError("multiset entries must be 1, 2 or 3")
        a, b, c = sorted((cnt[1], cnt[2], cnt[3]), reverse=True)
        return cls(a, b, c)

    @classmethod
    def parse(cls, text: str) -> "SizeTwoMultiset":
        """'1^2,2,3' or '1,1,2,3' style."""
        items = []
        for tok in text.replace(" ", "").strip("{}").split(","):
            if not tok:
                continue
            base, _, mult = tok.partition("^")
            items += [int(base)] * int(mult or 1)
        return cls.from_items(items)

    def items(self) -> list[int]:
        return [1] * self.m1 + [2] * self.m2 + [3] * self.m3

    def __len__(self) -> int:
        return self.m1 + self.m2 + self.m3

    def __str__(self) -> str:
        parts = []
        for v, m in ((1, self.m1), (2, self.m2), (3, self.m3)):
            if m:
                parts.append(f"{v}^{m}" if m > 1 else str(v))
        return "{" + ",".join(parts) + "}"


ADMISSIBLE = tuple(SizeTwoMultiset.parse(s) for s in
                   ("1", "1^2", "1,2", "1^2,2", "1,2,3", "1^2,2^2", "1^2,2,3", "1^2,2^2,3", "1^2,2^2,3^2"))


def graph_from_multiset(s: SizeTwoMultiset) -> Graph:
    edges = []
    pairs = []
    for t, i in enumerate(s.items()):
        x, y = 5 + 2 * t, 6 + 2 * t
        pairs.append((x, y))
        edges += [(0, x), (i, x), (4, x), (0, y)]
        edges += [(j, y) for j in (1, 2, 3) if j != i]
    for (x1, y1), (x2, y2) in combinations(pairs, 2):
        edges += [(x1, x2), (x1, y2), (y1, x2), (y1, y2)]
    return Graph.from_edges(5 + 2 * len(s), edges)


def multiset_report(s: SizeTwoMultiset) -> dict[str, object]:
    g = graph_from_multiset(s)
    hc = chroma.is_hoffman_colorable(g)
    out: dict[str, object] = {"multiset": str(s), "order": g.n, "hoffman_colorable": hc}
    if s.m1 == 3 and len(s) == 3:
        # smallest eigenvalue is -sqrt6: a root of t^2 - 6 below every other root
        out["lambda_min_is_minus_sqrt6"] = es.extreme_roots_equal(
            es.char_poly(g), es.IntPoly((-6, 0, 1)), "min")
    if hc:
        out["trivial"] = chroma.is_trivially_colorable(g)
        out["exceptional"] = glg.is_exceptional(g)
        out["class_sizes"] = sorted(chroma.class_size_set(g))
    return out


# ------------------------------------------------------------------ chromatic components

def chromatic_component_keys(g: Graph, min_classes: int = 2) -> set[bytes]:
    """Canonical keys of every chromatic component (union of >= 2 classes of a Hoffman coloring)."""
    seen_masks: set[int] = set()
    keys: set[bytes] = set()
    for col in chroma.hoffman_coloring_masks(g):
        cl = sorted(col)
        for k in range(min_classes, len(cl) + 1):
            for pick in combinations(cl, k):
                m = 0
                for c in pick:
                    m |= c
                if m in seen_masks:
                    continue
                seen_masks.add(m)
                keys.add(canonical_key(g.induced_mask(m)))
    return keys


def coloring_class_failures(g: Graph) -> list[str]:
    """Every Hoffman coloring: no class of size 1 and at least two classes of size 2."""
    bad = []
    for col in chroma.hoffman_coloring_masks(g):
        sizes = Counter(m.bit_count() for m in col)
        if sizes[1]:
            bad.append("a Hoffman coloring has a class of size 1")
        if sizes[2] < 2:
            bad.append("a Hoffman coloring has fewer than two classes of size 2")
    return sorted(set(bad))


@dataclass(frozen=True)
class SmallOrderGraph:
    graph: Graph
    key: bytes
    chi: int
    source: str     # sporadic-line-graph | M10 | M21 | component-of-M21


def small_order_graphs(cl: Classification) -> list[SmallOrderGraph]:
    """The exceptional records with n < 3 chi plus the sporadic line graph, all re-verified."""
    m10 = cl.labelled("M10")
    m21 = cl.labelled("M21")
    comp21 = chromatic_component_keys(m21.graph)
    out = []
    sp = sporadic_line_graph()
    chi = chroma.chromatic_number(sp)
    if not (chroma.is_hoffman_colorable(sp) and not chroma.is_trivially_colorable(sp) and sp.n < 3 * chi):
        raise SmallOrderError("sporadic line graph fails its check")
    out.append(SmallOrderGraph(sp, canonical_key(sp), chi, "sporadic-line-graph"))
    for r in cl.records:
        chi = chroma.chromatic_number(r.graph)
        if r.graph.n >= 3 * chi:
            continue
        if r.key == m10.key:
            src = "M10"
        elif r.key == m21.key:
            src = "M21"
        elif r.key in comp21:
            src = "component-of-M21"
        else:
            raise SmallOrderError("a small-order record is not M10, M21 or a component of M21")
        out.append(SmallOrderGraph(r.graph, r.key, chi, src))
    for s in out:
        bad = coloring_class_failures(s.graph)
        if bad:
            raise SmallOrderError(f"order {s.graph.n}: {bad}")
    return sorted(out, key=lambda s: (s.graph.n, s.key))


def order20_outside_m10(cl: Classification) -> bool:
    """The order-20 chromatic component of M21 is not a chromatic component of M10."""
    m10 = cl.labelled("M10")
    m21 = cl.labelled("M21")
    comp10 = chromatic_component_keys(m10.graph)
    twenty = {k for k in chromatic_component_keys(m21.graph) if k != m21.key}
    twenty = {r.key for r in cl.records if r.key in twenty and r.graph.n == 20}
    if len(twenty) != 1:
        raise SmallOrderError(f"expected one order-20 component of M21, found {len(twenty)}")
    return not (twenty & comp10)
