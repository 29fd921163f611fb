"""Canonical labeling by partition refinement and individualization.

The canonical key of a (vertex-colored) graph is the lexicographically largest
relabeled adjacency over all leaves of the individualization-refinement
search tree.  Subtrees rooted at vertices that lie in a common orbit of the
automorphisms found so far (restricted to those fixing the current prefix)
are skipped; they carry the same set of leaf keys.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import Graph, _members


@dataclass(frozen=True)
class CanonicalLabel:
    key: bytes
    order: tuple[int, ...]  # order[i] = input vertex placed at canonical position i

    def __hash__(self) -> int:
        return hash(self.key)

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonicalLabel) and self.key == other.key


def _refine(rows: Sequence[int], cells: list[int], splitters: list[int]) -> list[int]:
    """Refine an ordered partition (list of vertex masks) to equitability.

    Fragments of a split cell are ordered by ascending neighbour count into the
    splitter, which keeps the result independent of vertex names.
    """
    stack = list(splitters)
    while stack:
        w = stack.pop()
        new_cells = []
        changed = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            groups: dict[int, int] = {}
            m = cell
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                c = (rows[v] & w).bit_count()
                groups[c] = groups.get(c, 0) | low
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                frags = [groups[c] for c in sorted(groups)]
                new_cells.extend(frags)
                changed.extend(frags)
        if changed:
            cells = new_cells
            stack.extend(changed)
    return cells


def _individualize(cells: list[int], idx: int, v: int) -> list[int]:
    bit = 1 << v
    return cells[:idx] + [bit, cells[idx] & ~bit] + cells[idx + 1:]


def _leaf_key(rows: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    key = []
    for v in order:
        r = 0
        for u in _members(rows[v]):
            r |= 1 << pos[u]
        key.append(r)
    return tuple(key)


class _Search:
    def __init__(self, rows: Sequence[int], n: int):
        self.rows = rows
        self.n = n
        self.first_order: list[int] | None = None
        self.first_key: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.best_key: tuple[int, ...] | None = None
        self.generators: list[tuple[int, ...]] = []

    def _record_automorphism(self, a: list[int], b: list[int]) -> None:
        perm = [0] * self.n
        for x, y in zip(a, b):
            perm[x] = y
        perm_t = tuple(perm)
        if any(perm_t[i] != i for i in range(self.n)):
            self.generators.append(perm_t)

    def _orbits(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.generators:
            if all(gen[p] == p for p in prefix):
                for i, j in enumerate(gen):
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[max(ri, rj)] = min(ri, rj)
        return [find(i) for i in range(self.n)]

    def run(self, cells: list[int]) -> None:
        self._visit(cells, [])

    def _visit(self, cells: list[int], prefix: list[int]) -> None:
        target = -1
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                target = idx
                break
        if target < 0:
            order = [c.bit_length() - 1 for c in cells]
            key = _leaf_key(self.rows, order)
            if self.first_key is None:
                self.first_key, self.first_order = key, order
                self.best_key, self.best_order = key, order
                return
            if key == self.first_key:
                self._record_automorphism(self.first_order, order)
            elif key == self.best_key:
                self._record_automorphism(self.best_order, order)
            elif key > self.best_key:
                self.best_key, self.best_order = key, order
            return
        explored: list[int] = []
        explored_roots: set[int] = set()
        ngens = 0
        roots = None
        for v in _members(cells[target]):
            if self.generators and len(self.generators) != ngens:
                ngens = len(self.generators)
                roots = self._orbits(prefix)
                explored_roots = {roots[u] for u in explored}
            r = roots[v] if roots is not None else v
            if r in explored_roots:
                continue
            explored.append(v)
            explored_roots.add(r)
            child = _refine(self.rows, _individualize(cells, target, v), [1 << v])
            self._visit(child, prefix + [v])


def _initial_cells(n: int, colors: Sequence[int] | None) -> list[int]:
    if n == 0:
        return []
    if colors is None:
        return [(1 << n) - 1]
    by_color: dict[int, int] = {}
    for v, c in enumerate(colors):
        by_color[c] = by_color.get(c, 0) | (1 << v)
    return [by_color[c] for c in sorted(by_color)]


def _search(g: Graph, colors: Sequence[int] | None) -> _Search:
    cells = _initial_cells(g.n, colors)
    cells = _refine(g.rows, cells, list(cells))
    s = _Search(g.rows, g.n)
    if g.n:
        s.run(cells)
    return s


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalLabel:
    """Permutation-invariant key; equal keys iff isomorphic (color-preserving)."""
    s = _search(g, colors)
    order = tuple(s.best_order or ())
    head = [g.n]
    if colors is not None:
        head += sorted(colors)
    width = (g.n + 7) // 8
    body = b"".join(r.to_bytes(width, "little") for r in (s.best_key or ()))
    return CanonicalLabel(bytes(str(head), "ascii") + b"|" + body, order)


def canonical_key(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    return canonical_form(g, colors).key


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative (vertex i = ``order[i]``)."""
    lab = canonical_form(g)
    return g.relabel([lab.order.index(v) for v in range(g.n)])


def automorphism_generators(g: Graph, colors: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """Automorphisms found during the canonical search."""
    return list(_search(g, colors).generators)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


def marked_set_equivalent(g: Graph, c1: Iterable[int], c2: Iterable[int]) -> bool:
    """True iff some automorphism of ``g`` maps ``c1`` onto ``c2``."""
    m1, m2 = set(c1), set(c2)
    if len(m1) != len(m2):
        return False
    if m1 == m2:
        return True
    col1 = [1 if v in m1 else 0 for v in range(g.n)]
    col2 = [1 if v in m2 else 0 for v in range(g.n)]
    return canonical_key(g, col1) == canonical_key(g, col2)


def induced_embedding(small: Graph, big: Graph) -> list[int] | None:
    """An injective map small -> big preserving adjacency and non-adjacency, or None."""
    if small.n > big.n:
        return None
    if small.n == 0:
        return []
    # maximum-cardinality order keeps the candidate filter tight
    order: list[int] = []
    weight = [0] * small.n
    left = set(range(small.n))
    while left:
        v = max(left, key=lambda u: (weight[u], small.degree(u), -u))
        left.discard(v)
        order.append(v)
        for u in small.neighbors(v):
            weight[u] += 1
    sdeg = [small.degree(v) for v in range(small.n)]
    bdeg = [big.degree(w) for w in range(big.n)]
    full = big.full_mask
    by_deg = [0] * (small.n)
    for v in range(small.n):
        by_deg[v] = sum(1 << w for w in range(big.n) if bdeg[w] >= sdeg[v])
    image: dict[int, int] = {}

    def rec(k: int, used: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        cand = by_deg[v] & ~used
        for u, w in image.items():
            cand &= big.rows[w] if small.has_edge(u, v) else (full & ~big.rows[w] & ~(1 << w))
            if not cand:
                return False
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            image[v] = w
            if rec(k + 1, used | low):
                return True
            del image[v]
        return False

    if not rec(0, 0):
        return None
    return [image[v] for v in range(small.n)]


def is_induced_subgraph(small: Graph, big: Graph) -> bool:
    return induced_embedding(small, big) is not None
