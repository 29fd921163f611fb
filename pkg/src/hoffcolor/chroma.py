"""Chromatic numbers, Hoffman-bound reports and Hoffman coloring enumeration."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import exactspec as es
from .graph import Graph, _mask, _members, complete_multipartite


@dataclass(frozen=True)
class Coloring:
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Coloring":
        return cls(tuple(sorted(tuple(_members(m)) for m in masks)))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(_mask(c) for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.classes), reverse=True))

    def __len__(self) -> int:
        return len(self.classes)

    def is_valid(self, g: Graph) -> bool:
        seen = 0
        for m in self.masks:
            if seen & m or not g.is_independent(_members(m)):
                return False
            seen |= m
        return seen == g.full_mask

    def color_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}


@dataclass
class HoffmanReport:
    chi: int
    lambda_max: es.RationalInterval
    lambda_min: es.RationalInterval
    h_value: float
    h_integer: int | None
    colorable: bool
    witness: Coloring | None = field(default=None)

    def summary(self) -> str:
        h = str(self.h_integer) if self.h_integer is not None else f"{self.h_value:.6f}"
        return f"chi={self.chi} h={h} colorable={'yes' if self.colorable else 'no'}"


# ------------------------------------------------------------ cliques, colorings


def max_clique(rows: Sequence[int], cand: int) -> int:
    """A maximum clique (as a mask) inside ``cand``; greedy-coloring bound."""
    best = 0
    best_size = 0

    def bound_order(p: int) -> list[tuple[int, int]]:
        # greedy sequential coloring; returns (vertex, color number) ascending
        out = []
        color = 0
        uncolored = p
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~low & ~rows[v]
                uncolored &= ~low
                out.append((v, color))
        return out

    def expand(r: int, rsize: int, p: int) -> None:
        nonlocal best, best_size
        order = bound_order(p)
        for v, c in reversed(order):
            if rsize + c <= best_size:
                return
            bit = 1 << v
            nr = r | bit
            np_ = p & rows[v]
            if np_:
                expand(nr, rsize + 1, np_)
            elif rsize + 1 > best_size:
                best, best_size = nr, rsize + 1
            p &= ~bit

    if cand:
        expand(0, 0, cand)
    return best


def clique_number(g: Graph) -> int:
    return max_clique(g.rows, g.full_mask).bit_count()


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def _dsatur(rows: Sequence[int], verts: int, k: int | None) -> list[int] | None:
    """DSATUR search. With k: a k-coloring or None. Without k: greedy coloring."""
    vs = _members(verts)
    classes: list[int] = []

    def pick(uncolored: int) -> tuple[int, int]:
        best_v, best_key = -1, (-1, -1)
        m = uncolored
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            sat = sum(1 for c in classes if c & rows[v])
            key = (sat, (rows[v] & uncolored).bit_count())
            if key > best_key:
                best_v, best_key = v, key
        return best_v, best_key[0]

    if k is None:
        uncolored = verts
        while uncolored:
            v, _ = pick(uncolored)
            for i, c in enumerate(classes):
                if not c & rows[v]:
                    classes[i] |= 1 << v
                    break
            else:
                classes.append(1 << v)
            uncolored &= ~(1 << v)
        out = [0] * (max(vs) + 1 if vs else 0)
        for i, c in enumerate(classes):
            for v in _members(c):
                out[v] = i
        return out

    def rec(uncolored: int) -> bool:
        if not uncolored:
            return True
        v, sat = pick(uncolored)
        if sat >= k and len(classes) >= k:
            return False
        bit = 1 << v
        for i in range(len(classes)):
            if not classes[i] & rows[v]:
                classes[i] |= bit
                if rec(uncolored & ~bit):
                    return True
                classes[i] &= ~bit
        if len(classes) < k:
            classes.append(bit)
            if rec(uncolored & ~bit):
                return True
            classes.pop()
        return False

    if not rec(verts):
        return None
    out = [0] * (max(vs) + 1 if vs else 0)
    for i, c in enumerate(classes):
        for v in _members(c):
            out[v] = i
    return out


def _component_coloring(g: Graph, comp: int) -> list[list[int]]:
    """Optimal coloring of one component, as lists of vertices."""
    n_c = comp.bit_count()
    if n_c == 1:
        return [_members(comp)]
    omega = max_clique(g.rows, comp).bit_count()
    comp_rows = [(~g.rows[v]) & comp & ~(1 << v) for v in range(g.n)]
    alpha = max_clique(comp_rows, comp).bit_count()
    lb = max(omega, -(-n_c // alpha))
    greedy = _dsatur(g.rows, comp, None)
    vs = _members(comp)
    ub = 1 + max(greedy[v] for v in vs)
    best = greedy
    k_found = ub
    for k in range(lb, ub):
        col = _dsatur(g.rows, comp, k)
        if col is not None:
            best, k_found = col, k
            break
    groups: dict[int, list[int]] = {}
    for v in vs:
        groups.setdefault(best[v], []).append(v)
    out = list(groups.values())
    assert len(out) == k_found
    return out


@lru_cache(maxsize=4096)
def optimal_coloring(g: Graph) -> Coloring:
    """Some coloring with chi(g) classes."""
    if g.n == 0:
        return Coloring(())
    merged: list[list[int]] = []
    for comp in g.components():
        for i, cls in enumerate(_component_coloring(g, comp)):
            if i == len(merged):
                merged.append([])
            merged[i].extend(cls)
    return Coloring(tuple(sorted(tuple(sorted(c)) for c in merged)))


def chromatic_number(g: Graph) -> int:
    return len(optimal_coloring(g))


def brute_force_chromatic_number(g: Graph) -> int:
    """Exhaustive set-partition search (test oracle for small graphs)."""
    n = g.n
    if n == 0:
        return 0
    best = n
    classes: list[int] = []

    def rec(v: int) -> None:
        nonlocal best
        if len(classes) >= best:
            return
        if v == n:
            best = len(classes)
            return
        for i in range(len(classes)):
            if not classes[i] & g.rows[v]:
                classes[i] |= 1 << v
                rec(v + 1)
                classes[i] &= ~(1 << v)
        classes.append(1 << v)
        rec(v + 1)
        classes.pop()

    rec(0)
    return best


# ------------------------------------------------------------ Hoffman bound


class UndefinedBound(ValueError):
    pass


def hoffman_bound_value(g: Graph) -> float:
    ev = es.eigenvalues(g)
    return 1 - ev[-1] / ev[0]


def hoffman_integer(g: Graph) -> int | None:
    """The Hoffman bound when it is an integer (decided exactly), else None."""
    if g.num_edges == 0:
        raise UndefinedBound("the Hoffman bound needs at least one edge")
    h = hoffman_bound_value(g)
    m0 = round(h)
    for m in (m0, m0 - 1, m0 + 1):
        if m >= 2 and es.scaled_radius_relation(g, m):
            return m
    return None


@lru_cache(maxsize=4096)
def hoffman_report(g: Graph) -> HoffmanReport:
    if g.n == 0 or g.num_edges == 0:
        raise UndefinedBound("the Hoffman bound needs a graph with at least one edge")
    chi = chromatic_number(g)
    lmax = es.extreme_eigenvalue_interval(g, "max")
    lmin = es.extreme_eigenvalue_interval(g, "min")
    h_int = hoffman_integer(g)
    colorable = h_int is not None and h_int == chi
    return HoffmanReport(chi, lmax, lmin, hoffman_bound_value(g), h_int, colorable,
                         optimal_coloring(g) if colorable else None)


def is_hoffman_colorable(g: Graph) -> bool:
    if g.num_edges == 0:
        return False
    return hoffman_report(g).colorable


def is_trivially_colorable(g: Graph) -> bool:
    """Bipartite, or a regular complete multipartite graph."""
    if g.is_bipartite():
        return True
    comps = g.complement().components()
    sizes = {c.bit_count() for c in comps}
    if len(sizes) != 1:
        return False
    co = g.complement()
    return all(co.induced_mask(c).num_edges == c.bit_count() * (c.bit_count() - 1) // 2 for c in comps)


# ------------------------------------------------------------ Hoffman cocliques


@lru_cache(maxsize=4096)
def regular_coclique_data(g: Graph) -> tuple[int, int] | None:
    """(coclique size n/h, -lambda_min) for a regular graph with integral data."""
    if g.n == 0 or not g.is_regular() or g.num_edges == 0:
        return None
    lmin = es.integer_eigenvalue(g, "min")
    if lmin is None:
        return None
    k = g.degree(0)
    size = Fraction(g.n * (-lmin), k - lmin)
    if size.denominator != 1:
        return None
    return int(size), -lmin


def is_hoffman_coclique(g: Graph, c: Iterable[int] | int) -> bool:
    data = regular_coclique_data(g)
    if data is None:
        return False
    size, nu = data
    cm = c if isinstance(c, int) else _mask(c)
    if cm.bit_count() != size or not g.is_independent(_members(cm)):
        return False
    return all((g.rows[v] & cm).bit_count() == nu for v in range(g.n) if not (cm >> v) & 1)


def cocliques_of_size(g: Graph, k: int) -> list[int]:
    out: list[int] = []
    rows = g.rows

    def rec(mask: int, size: int, cand: int) -> None:
        if size == k:
            out.append(mask)
            return
        if cand.bit_count() < k - size:
            return
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            rec(mask | low, size + 1, m & ~rows[v])

    rec(0, 0, g.full_mask)
    return out


@lru_cache(maxsize=4096)
def hoffman_cocliques(g: Graph) -> tuple[int, ...]:
    """All Hoffman cocliques of a regular graph, as masks."""
    data = regular_coclique_data(g)
    if data is None:
        return ()
    size, nu = data
    out = []
    for c in cocliques_of_size(g, size):
        if all((g.rows[v] & c).bit_count() == nu for v in _members(g.full_mask & ~c)):
            out.append(c)
    return tuple(out)


def maximal_cocliques(g: Graph) -> list[int]:
    """All maximal cocliques (Bron-Kerbosch with pivoting on the complement)."""
    comp = [(~g.rows[v]) & g.full_mask & ~(1 << v) for v in range(g.n)]
    return maximal_cliques(comp, g.full_mask)


def maximal_cliques(rows: Sequence[int], universe: int) -> list[int]:
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pu = p | x
        # pivot maximizing |P & N(u)|
        best_u, best_c = -1, -1
        m = pu
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            c = (p & rows[u]).bit_count()
            if c > best_c:
                best_u, best_c = u, c
        cand = p & ~rows[best_u]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            bk(r | low, p & rows[v], x & rows[v])
            p &= ~low
            x |= low

    if universe:
        bk(0, universe, 0)
    return out


def exact_covers(full: int, pieces: Sequence[int], parts: int | None = None) -> list[frozenset[int]]:
    """Partitions of ``full`` into members of ``pieces`` (optionally with a fixed number of parts)."""
    by_vertex: dict[int, list[int]] = {}
    for p in pieces:
        for v in _members(p):
            by_vertex.setdefault(v, []).append(p)
    out: list[frozenset[int]] = []
    chosen: list[int] = []

    def rec(covered: int) -> None:
        if covered == full:
            if parts is None or len(chosen) == parts:
                out.append(frozenset(chosen))
            return
        if parts is not None and len(chosen) >= parts:
            return
        free = full & ~covered
        low = free & -free
        v = low.bit_length() - 1
        for p in by_vertex.get(v, ()):
            if not p & covered:
                chosen.append(p)
                rec(covered | p)
                chosen.pop()

    rec(0)
    return out


def _all_optimal_colorings(g: Graph, chi: int) -> list[frozenset[int]]:
    """All partitions into chi cocliques (general route)."""
    out: list[frozenset[int]] = []
    classes: list[int] = []
    n = g.n

    def rec(v: int) -> None:
        if v == n:
            if len(classes) == chi:
                out.append(frozenset(classes))
            return
        bit = 1 << v
        for i in range(len(classes)):
            if not classes[i] & g.rows[v]:
                classes[i] |= bit
                rec(v + 1)
                classes[i] &= ~bit
        if len(classes) < chi:
            classes.append(bit)
            rec(v + 1)
            classes.pop()

    rec(0)
    return out


@lru_cache(maxsize=2048)
def hoffman_coloring_masks(g: Graph) -> tuple[frozenset[int], ...]:
    """Every Hoffman coloring of g as a frozenset of class masks, sorted."""
    rep = hoffman_report(g)
    if not rep.colorable:
        return ()
    if g.is_regular():
        sols = exact_covers(g.full_mask, hoffman_cocliques(g), rep.chi)
    elif g.is_connected():
        # optimal colorings of a Hoffman colorable connected graph use maximal cocliques only
        sols = exact_covers(g.full_mask, maximal_cocliques(g), rep.chi)
    else:
        sols = _all_optimal_colorings(g, rep.chi)
    return tuple(sorted(set(sols), key=lambda s: sorted(s)))


def enumerate_hoffman_colorings(g: Graph) -> list[Coloring]:
    return [Coloring.from_masks(s) for s in hoffman_coloring_masks(g)]


def class_size_set(g: Graph) -> frozenset[int]:
    return frozenset(m.bit_count() for s in hoffman_coloring_masks(g) for m in s)


def hoffman_color_classes(g: Graph) -> frozenset[int]:
    """Every vertex set that is a class of some Hoffman coloring."""
    return frozenset(m for s in hoffman_coloring_masks(g) for m in s)


def chromatic_component(g: Graph, coloring: Coloring, picks: Iterable[int]) -> Graph:
    picks = list(picks)
    if len(picks) < 2:
        raise ValueError("a chromatic component uses at least two classes")
    verts = [v for i in picks for v in coloring.classes[i]]
    return g.induced(verts)


# ------------------------------------------------------------ structural checks


def decomposition_failures(g: Graph, coloring: Coloring) -> list[str]:
    """Check the dichromatic-component eigenvalue equalities for a Hoffman coloring."""
    fails = []
    chi = len(coloring)
    p = es.char_poly(g)
    ev = es.eigenvalues(g)
    for i in range(chi):
        for j in range(i + 1, chi):
            sub = g.induced(coloring.classes[i] + coloring.classes[j])
            for comp in sub.components():
                k = sub.induced_mask(comp)
                if k.n == 1:
                    fails.append(f"isolated vertex in classes {i},{j}")
                    continue
                pk = es.char_poly(k)
                evk = es.eigenvalues(k)
                scaled = pk.scale_roots(chi - 1)
                if not es.extreme_roots_equal(p, scaled, "max", ev, [(chi - 1) * x for x in evk]):
                    fails.append(f"lambda_max relation fails on classes {i},{j}")
                if not es.extreme_roots_equal(p, pk, "min", ev, evk):
                    fails.append(f"lambda_min relation fails on classes {i},{j}")
    return fails


def perron_restriction_failures(g: Graph, coloring: Coloring) -> list[str]:
    """The Perron vector restricted to each dichromatic component is an eigenvector there."""
    try:
        x = es.perron_vector_rational(g)
    except es.UnsupportedInput:
        return []
    chi = len(coloring)
    lam = es.integer_eigenvalue(g, "max")
    fails = []
    for i in range(chi):
        for j in range(i + 1, chi):
            vs = coloring.classes[i] + coloring.classes[j]
            for v in vs:
                s = sum(x[u] for u in vs if g.has_edge(u, v))
                if s * (chi - 1) != lam * x[v]:
                    fails.append(f"restriction not an eigenvector on classes {i},{j}")
                    break
    return fails


def neighbours_in_every_class(g: Graph, coloring: Coloring) -> bool:
    masks = coloring.masks
    for i, c in enumerate(coloring.classes):
        for v in c:
            for j, m in enumerate(masks):
                if j != i and not g.rows[v] & m:
                    return False
    return True


def constant_class_neighbours(g: Graph, coloring: Coloring, nu: int) -> bool:
    masks = coloring.masks
    for i, c in enumerate(coloring.classes):
        for v in c:
            for j, m in enumerate(masks):
                if j != i and (g.rows[v] & m).bit_count() != nu:
                    return False
    return True


def regular_complete_multipartite(m: int, parts: int) -> Graph:
    return complete_multipartite(*([m] * parts))
