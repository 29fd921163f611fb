"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one Python int per vertex (bit ``j`` of row ``i`` set
iff ``i ~ j``).  Every operation returns a new graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations

MAX_VERTICES = 64


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input."""


class ConstructionError(ValueError):
    """Raised when a named family is asked for with invalid parameters."""


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """A simple undirected graph with vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int], *, check: bool = True):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("need exactly one adjacency row per vertex")
        if check:
            full = (1 << n) - 1
            for i, r in enumerate(rows):
                if r & ~full or (r >> i) & 1:
                    raise ValueError(f"row {i} has a loop or out-of-range bit")
                for j in _members(r):
                    if not (rows[j] >> i) & 1:
                        raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        n = len(matrix)
        rows = [_mask(j for j in range(n) if matrix[i][j]) for i in range(n)]
        return cls(n, rows)

    # -- basic queries -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __len__(self) -> int:
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _members(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def degree_sequence(self) -> dict[int, int]:
        """Degree -> multiplicity, largest degree first."""
        counts: dict[int, int] = {}
        for d in self.degrees():
            counts[d] = counts.get(d, 0) + 1
        return dict(sorted(counts.items(), reverse=True))

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _members(self.rows[i] >> (i + 1) << (i + 1))]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = _mask(vertices)
        return all(not (self.rows[v] & m) for v in _members(m))

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _members(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in _members(self.rows[v]):
                    if side[u] < 0:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return False
        return True

    def universal_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.rows[v].bit_count() == self.n - 1]

    # -- derived graphs ------------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; new vertex ``i`` is the ``i``-th smallest member."""
        members = sorted(set(vertices))
        index = {v: i for i, v in enumerate(members)}
        rows = []
        for v in members:
            r = 0
            for u in _members(self.rows[v]):
                if u in index:
                    r |= 1 << index[u]
            rows.append(r)
        return Graph(len(members), rows, check=False)

    def induced_mask(self, mask: int) -> "Graph":
        return self.induced(_members(mask))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in _members(self.rows[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(self.n, rows, check=False)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, [full & ~r & ~(1 << i) for i, r in enumerate(self.rows)], check=False)

    def delete(self, vertices: Iterable[int]) -> "Graph":
        gone = _mask(vertices)
        return self.induced(v for v in range(self.n) if not (gone >> v) & 1)


# -- module-level operations ----------------------------------------------------


def induce(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph together with the map new vertex -> old vertex."""
    members = tuple(sorted(set(vertices)))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph on {g.n} vertices")
    return g.induced(members), members


def seidel_switch(g: Graph, vertices: Iterable[int]) -> Graph:
    """Complement adjacency across the cut (X, V \\ X), keep it elsewhere."""
    x = _mask(vertices)
    if x & ~g.full_mask:
        raise ValueError("switching set not inside the graph")
    outside = g.full_mask & ~x
    rows = []
    for v, r in enumerate(g.rows):
        other = outside if (x >> v) & 1 else x
        rows.append(r ^ other)
    return Graph(g.n, rows, check=False)


def cone(g: Graph) -> Graph:
    """Add one vertex (the last one) adjacent to every vertex of ``g``."""
    n = g.n
    rows = [r | (1 << n) for r in g.rows] + [g.full_mask]
    return Graph(n + 1, rows, check=False)


def disjoint_union(*graphs: Graph) -> Graph:
    rows = []
    offset = 0
    for h in graphs:
        rows.extend(r << offset for r in h.rows)
        offset += h.n
    return Graph(offset, rows, check=False)


def complement(g: Graph) -> Graph:
    return g.complement()


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is the ``i``-th edge of ``g.edges()``."""
    return line_graph_with_edges(g)[0]


def line_graph_with_edges(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    edges = g.edges()
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return Graph(len(edges), rows, check=False), edges


# -- graph6 ---------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    bits = [(g.rows[i] >> j) & 1 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out.append(chr(63 + value))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphFormatError("empty graph6 record at byte offset 0")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ord(ch)!r} out of range at byte offset {pos}")
    if s[0] != "~":
        n, start = ord(s[0]) - 63, 1
    else:
        if len(s) < 4 or s[1] == "~":
            raise GraphFormatError("unsupported or truncated size header at byte offset 1")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        start = 4
        if n > MAX_VERTICES:
            raise GraphFormatError(f"vertex count {n} exceeds {MAX_VERTICES} (byte offset 1)")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[start:]
    if len(body) < need:
        raise GraphFormatError(f"record too short: expected {need} data bytes at byte offset {start + len(body)}")
    if len(body) > need:
        raise GraphFormatError(f"trailing garbage at byte offset {start + need}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need:
        pad = need * 6 - nbits
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise GraphFormatError(f"nonzero padding bits at byte offset {start + need - 1}")
    return Graph(n, rows, check=False)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [graph6_decode(line) for line in lines if line.strip()]


# -- named graphs -----------------------------------------------------------------


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(*sizes: int) -> Graph:
    part = []
    for idx, s in enumerate(sizes):
        part.extend([idx] * s)
    n = len(part)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def cocktail_party(m: int) -> Graph:
    return complete_multipartite(*([2] * m))


def path(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("A_n needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("C_n needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_tree(*arms: int) -> Graph:
    """Tree with one centre (vertex 0) and pendant paths of the given lengths."""
    edges = []
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def dynkin_d(n: int) -> Graph:
    if n < 4:
        raise ConstructionError("D_n needs n >= 4")
    return star_tree(1, 1, n - 3)


def dynkin_e(n: int) -> Graph:
    if n not in (6, 7, 8):
        raise ConstructionError("E_n is defined for n in {6, 7, 8}")
    return star_tree(1, 2, n - 4)


def smith_w(n: int) -> Graph:
    if n < 5:
        raise ConstructionError("W_n needs n >= 5")
    if n == 5:
        return complete_multipartite(1, 4)
    k = n - 4
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(0, k), (0, k + 1), (k - 1, k + 2), (k - 1, k + 3)]
    return Graph.from_edges(n, edges)


def smith_f(n: int) -> Graph:
    arms = {7: (2, 2, 2), 8: (1, 3, 3), 9: (1, 2, 5)}
    if n not in arms:
        raise ConstructionError("F_n is defined for n in {7, 8, 9}")
    return star_tree(*arms[n])


def petersen() -> Graph:
    return line_graph(complete(5)).complement()


def net() -> Graph:
    """Triangle with a pendant edge at each corner."""
    return Graph.from_edges(6, [(0, 5), (1, 4), (2, 3), (3, 4), (3, 5), (4, 5)])


def sporadic_line_graph() -> Graph:
    """The 6-vertex line graph of the net: smallest non-trivially Hoffman colorable graph."""
    return line_graph(net())


def k8_edge_index() -> dict[tuple[int, int], int]:
    """Vertex of L(K8) for each K8 edge; K8 vertices are 1..8."""
    return {e: i for i, e in enumerate(combinations(range(1, 9), 2))}


def switched_lk8(edge_set: Iterable[tuple[int, int]]) -> Graph:
    """L(K8) Seidel-switched on the given set of K8 edges (vertices 1..8)."""
    index = k8_edge_index()
    return seidel_switch(line_graph(complete(8)), [index[tuple(sorted(e))] for e in edge_set])


CHANG_SWITCH_SETS = {
    1: [(1, 2), (3, 4), (5, 6), (7, 8)],
    2: [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1)],
    3: [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 7), (7, 8), (8, 6)],
}


def chang(which: int) -> Graph:
    if which not in CHANG_SWITCH_SETS:
        raise ConstructionError("Chang graphs are numbered 1, 2, 3")
    return switched_lk8(CHANG_SWITCH_SETS[which])


def schlaefli() -> Graph:
    index = k8_edge_index()
    lk8 = line_graph(complete(8))
    hub = index[(1, 2)]
    switched = seidel_switch(lk8, lk8.neighbors(hub))
    assert switched.degree(hub) == 0
    return switched.delete([hub])


def named_graph(family: str, *params) -> Graph:
    """Dispatch on a family name, e.g. ``named_graph("C", 5)`` or ``named_graph("Chang", 2)``."""
    fam = family.replace("_", "").replace("-", "").lower()
    table = {
        "k": complete,
        "complete": complete,
        "kmulti": complete_multipartite,
        "multipartite": complete_multipartite,
        "cp": cocktail_party,
        "a": path,
        "path": path,
        "c": cycle,
        "cycle": cycle,
        "d": dynkin_d,
        "e": dynkin_e,
        "w": smith_w,
        "f": smith_f,
        "chang": chang,
        "cone": cone,
        "disjointunion": disjoint_union,
        "complement": complement,
        "linegraph": line_graph,
    }
    fixed = {
        "e6": lambda: dynkin_e(6),
        "e7": lambda: dynkin_e(7),
        "e8": lambda: dynkin_e(8),
        "f7": lambda: smith_f(7),
        "f8": lambda: smith_f(8),
        "f9": lambda: smith_f(9),
        "lk8": lambda: line_graph(complete(8)),
        "chang1": lambda: chang(1),
        "chang2": lambda: chang(2),
        "chang3": lambda: chang(3),
        "schlaefli": schlaefli,
        "schlafli": schlaefli,
        "petersen": petersen,
        "net": net,
        "fig1": sporadic_line_graph,
    }
    if fam in fixed:
        if params:
            raise ConstructionError(f"{family} takes no parameters")
        return fixed[fam]()
    if fam not in table:
        raise ConstructionError(f"unknown graph family {family!r}")
    try:
        return table[fam](*params)
    except TypeError as exc:
        raise ConstructionError(f"bad parameters for {family}: {params!r}") from exc
