"""Merge every route into one classification of Hoffman colorable exceptional graphs.

Maximality is decided on the merged list: a record is not maximal exactly
when it is isomorphic to R minus C for another record R and a Hoffman color
class C of R.  One step suffices because removing a class from a Hoffman
colorable connected graph keeps it Hoffman colorable, connected and
exceptional whenever the smaller graph is.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .. import certstore, chroma, exactspec as es, glg, rootsys, surd
from ..canon import canonical_key, induced_embedding
from ..graph import Graph, graph6_encode, schlaefli, _members
from . import reference as ref
from .lattice import LatticeDiagram, build_g3_lattice
from .regular import (ConeResult, InducedResult, algorithm1_results, cone_closure, cone_inputs,
                      nontrivial)
from .typea import TypeAResult, typea_graphs
from .typebc import COMPLETENESS_CAVEAT, HostSet, algorithm2, host_set
from ..graph import chang, complete, line_graph

log = logging.getLogger(__name__)

TYPEBC_BUCKETS = ("{2,5}", "{2,5,8}", "{3,5}", "{3,6}")


class ClassificationError(AssertionError):
    pass


@dataclass
class ClassificationRecord:
    graph: Graph
    key: bytes
    bucket: frozenset[int]
    route: str                    # algorithm1 | cone | lattice-hat | algorithm2 | certificate
    host: str | None = None
    maximal: bool = False
    certificate: str | None = None
    label: str | None = None
    parent: tuple[bytes, int] | None = None   # (record key, class mask) with parent minus class = self

    @property
    def bucket_label(self) -> str:
        return ref.bucket_label(self.bucket)


# ------------------------------------------------------------------ routes

@dataclass
class RouteOutputs:
    regular3: list[InducedResult]
    regular4: list[InducedResult]
    cones: list[ConeResult]
    lattice: LatticeDiagram
    typea: list[TypeAResult]
    typea_maximal: list[TypeAResult]
    typebc: list[tuple[Graph, str, str | None]]   # (graph, route, host or certificate id)
    typebc_non_hoffman: list[tuple[Graph, int, int]] = field(default_factory=list)  # (graph, parts, host)
    caveat: str | None = None


def ratio4_hosts() -> list[Graph]:
    return [line_graph(complete(8)), chang(1), chang(2), chang(3)]


def regular_routes(workers: int | None = None):
    r3 = nontrivial(algorithm1_results([schlaefli()], workers=workers))
    r4 = nontrivial(algorithm1_results(ratio4_hosts(), workers=workers))
    cones = [c for c in cone_closure(cone_inputs(r.graph for r in r4)) if not c.is_glg]
    return r3, r4, cones


def _typebc_filter(h: Graph, known: set[bytes]) -> bool:
    if not h.is_connected() or chroma.is_trivially_colorable(h):
        return False
    if canonical_key(h) in known:
        return False
    return glg.is_exceptional(h)


def typebc_route(hosts: HostSet, known: set[bytes], certs: list[certstore.Certificate]):
    """Algorithm 2 over the hosts; certificates fill in when the host set is incomplete."""
    found: dict[bytes, tuple[Graph, str, str | None]] = {}
    non_hoffman = []
    for hi, g in enumerate(hosts.hosts):
        hoff, non = algorithm2(g, host_index=hi)
        for r in hoff:
            if r.key not in found and _typebc_filter(r.graph, known):
                found[r.key] = (r.graph, "algorithm2", f"host{hi}:{hosts.kinds[hi]}")
        non_hoffman += [(r.graph, r.parts, hi) for r in non if r.graph.is_connected()]
    if hosts.external:
        return list(found.values()), non_hoffman, None
    for c in certs:
        if c.bucket in TYPEBC_BUCKETS:
            k = canonical_key(c.graph())
            if k not in found:
                found[k] = (c.graph(), "certificate", c.id)
    return list(found.values()), non_hoffman, COMPLETENESS_CAVEAT


def run_routes(hosts_file: str | Path | None = None, workers: int | None = None,
               e7: list[Graph] | None = None) -> RouteOutputs:
    r3, r4, cones = regular_routes(workers)
    d = build_g3_lattice()
    ta, ta_max = typea_graphs(d)
    known = {r.key for r in r3 + r4} | {c.key for c in cones} | {t.key for t in ta}
    hs = host_set(hosts_file, e7)
    for i, why in hs.rejected:
        log.warning("host %d rejected: %s", i, why)
    bc, non, caveat = typebc_route(hs, known, certstore.load_certificates())
    return RouteOutputs(r3, r4, cones, d, ta, ta_max, bc, non, caveat)


# ------------------------------------------------------------------ assembly

@dataclass
class Classification:
    records: list[ClassificationRecord]
    caveat: str | None = None

    def by_key(self) -> dict[bytes, ClassificationRecord]:
        return {r.key: r for r in self.records}

    def maximal(self) -> list[ClassificationRecord]:
        return [r for r in self.records if r.maximal]

    def bucket_counts(self) -> dict[frozenset[int], tuple[int, int]]:
        out: dict[frozenset[int], list[int]] = {}
        for r in self.records:
            c = out.setdefault(r.bucket, [0, 0])
            c[0] += 1
            c[1] += r.maximal
        return {b: (a, m) for b, (a, m) in out.items()}

    def labelled(self, label: str) -> ClassificationRecord:
        for r in self.records:
            if r.label == label:
                return r
        raise KeyError(label)


def _records_from_routes(out: RouteOutputs) -> list[ClassificationRecord]:
    recs: dict[bytes, ClassificationRecord] = {}

    def add(g: Graph, key: bytes, route: str, host: str | None, bucket=None) -> None:
        if key in recs:
            return
        b = chroma.class_size_set(g) if bucket is None else bucket
        recs[key] = ClassificationRecord(g, key, b, route, host)

    for r in out.regular3 + out.regular4:
        if glg.is_exceptional(r.graph):
            add(r.graph, r.key, "algorithm1", f"host{r.host_index}")
    for c in out.cones:
        add(c.graph, c.key, "cone", None, frozenset({1, 4}))
    for t in out.typea:
        add(t.graph, t.key, "lattice-hat", f"{t.upper}->{t.lower}", frozenset({3, 4}))
    for g, route, host in out.typebc:
        add(g, canonical_key(g), route, host)
    return sorted(recs.values(), key=lambda r: (sorted(r.bucket), r.graph.n, r.key))


def _flag_maximal(recs: list[ClassificationRecord]) -> None:
    keys = {r.key: r for r in recs}
    for r in recs:
        r.maximal = True
    for big in recs:
        for c in sorted(chroma.hoffman_color_classes(big.graph)):
            low = big.graph.induced_mask(big.graph.full_mask & ~c)
            k = canonical_key(low)
            small = keys.get(k)
            if small is not None and small is not big:
                small.maximal = False
                if small.parent is None:
                    small.parent = (big.key, c)


def verify_chain(rec: ClassificationRecord, keys: dict[bytes, ClassificationRecord]) -> ClassificationRecord:
    """Follow parents to a maximal record M and check rec is a chromatic component of M.

    The removed classes and an optimal coloring of rec are carried up to M;
    together they must form a proper coloring of M with chi(M) classes.
    """
    g = rec.graph
    col = chroma.optimal_coloring(g)
    image = list(range(g.n))            # vertex of rec -> vertex of current top
    classes = [list(c) for c in col.classes]
    removed: list[list[int]] = []
    cur = rec
    seen = set()
    while cur.parent is not None:
        if cur.key in seen:
            raise ClassificationError("cycle in the chromatic-component relation")
        seen.add(cur.key)
        pkey, cmask = cur.parent
        top = keys[pkey]
        rest = [v for v in range(top.graph.n) if not (cmask >> v) & 1]
        emb = induced_embedding(cur.graph, top.graph.induced(rest))
        if emb is None:
            raise ClassificationError("parent link does not embed")
        lift = [rest[emb[v]] for v in range(cur.graph.n)]
        image = [lift[v] for v in image]
        classes = [[lift[v] for v in cl] for cl in classes]
        removed = [[lift[v] for v in cl] for cl in removed] + [_members(cmask)]
        cur = top
    if not cur.maximal:
        raise ClassificationError("chain ends at a non-maximal record")
    allc = classes + removed
    top = cur.graph
    flat = sorted(v for cl in allc for v in cl)
    if flat != list(range(top.n)):
        raise ClassificationError("assembled classes do not partition the maximal graph")
    if any(not top.is_independent(cl) for cl in allc):
        raise ClassificationError("assembled class is not a coclique")
    if len(allc) != chroma.chromatic_number(top):
        raise ClassificationError("assembled coloring is not optimal")
    if sorted(image) != sorted(v for cl in classes for v in cl):
        raise ClassificationError("image is not the union of the carried classes")
    return cur


def _attach_labels(recs: list[ClassificationRecord], certs: list[certstore.Certificate],
                   typea_max: list[TypeAResult]) -> None:
    """Certificate and designated-line labels first; the rest by their published row."""
    keys = {r.key: r for r in recs}
    for c in certs:
        r = keys.get(canonical_key(c.graph()))
        if r is None or c.is_e7:
            continue
        if r.certificate is None:
            r.certificate = c.id
        lab = c.claim("label")
        if lab and lab.startswith("M"):
            r.label = lab
    for t in typea_max:
        if t.maximal_label and keys[t.key].label is None:
            keys[t.key].label = t.maximal_label
    # remaining maximal records: schlaefli, the regular 21-vertex graph and the maximal cones
    s_key = canonical_key(schlaefli())
    if s_key in keys:
        keys[s_key].label = "M24"
    taken = {r.label for r in recs if r.label}
    for row in ref.MAXIMAL_ROWS:
        free = [i for i in row.ids if i not in taken]
        if not free:
            continue
        cands = [r for r in recs if r.maximal and r.label is None and r.graph.n == row.order
                 and not certstore.check_row(r.graph, row)]
        cands.sort(key=lambda r: (_cone_rank(r), r.key))
        for lab, r in zip(free, cands):
            r.label = lab
            taken.add(lab)


def _cone_rank(r: ClassificationRecord) -> int:
    """Cones over L(K8) before the Chang cones, so that M26 is the cone over L(K8)."""
    if r.route == "cone" and r.graph.n == 29:
        base = r.graph.induced([v for v in range(r.graph.n) if v not in r.graph.universal_vertices()[:1]])
        for i, h in enumerate(ratio4_hosts()):
            if canonical_key(h) == canonical_key(base):
                return i
    return 0


def assemble_classification(out: RouteOutputs, certs: list[certstore.Certificate] | None = None) -> Classification:
    certs = certstore.load_certificates() if certs is None else certs
    recs = _records_from_routes(out)
    _flag_maximal(recs)
    keys = {r.key: r for r in recs}
    for r in recs:
        if not r.maximal:
            verify_chain(r, keys)
    _attach_labels(recs, certs, out.typea_maximal)
    return Classification(recs, out.caveat)


# ------------------------------------------------------------------ checks against the tables

def compare_with_reference(cl: Classification) -> list[str]:
    """Every difference from the published counts and maximal-graph rows."""
    diff = []
    if len(cl.records) != ref.TOTAL_GRAPHS:
        diff.append(f"total {len(cl.records)} != {ref.TOTAL_GRAPHS}")
    nmax = len(cl.maximal())
    if nmax != ref.TOTAL_MAXIMAL:
        diff.append(f"maximal {nmax} != {ref.TOTAL_MAXIMAL}")
    got = cl.bucket_counts()
    for b, n, m in ref.BUCKET_COUNTS:
        if got.get(b, (0, 0)) != (n, m):
            diff.append(f"bucket {ref.bucket_label(b)}: {got.get(b, (0, 0))} != {(n, m)}")
    extra = set(got) - {b for b, _, _ in ref.BUCKET_COUNTS}
    for b in sorted(extra, key=sorted):
        diff.append(f"unexpected bucket {ref.bucket_label(b)}")
    for row in ref.MAXIMAL_ROWS:
        for lab in row.ids:
            try:
                r = cl.labelled(lab)
            except KeyError:
                diff.append(f"{lab} not found")
                continue
            if not r.maximal:
                diff.append(f"{lab} is not maximal")
            for f in certstore.check_row(r.graph, row):
                diff.append(f"{lab}: {f}")
            if r.bucket != row.bucket:
                diff.append(f"{lab}: bucket {r.bucket_label}")
    unlabelled = [r for r in cl.maximal() if r.label is None]
    if unlabelled:
        diff.append(f"{len(unlabelled)} maximal records without a published row")
    return diff


def structural_checks(cl: Classification, out: RouteOutputs) -> list[str]:
    """Smallest eigenvalue, route overlap and diagram symmetry checks."""
    bad = []
    for r in cl.records:
        if es.integer_eigenvalue(r.graph, "min") != -2:
            bad.append(f"record {r.key.hex()[:12]} has smallest eigenvalue other than -2")
    ta = {t.key for t in out.typea}
    other = {r.key for r in out.regular3 + out.regular4} | {c.key for c in out.cones}
    if ta & other:
        bad.append("a switched-cone graph also comes out of the regular or cone routes")
    for t in out.typea:
        if t.graph.is_regular() or not rootsys.in_S8(t.graph):
            bad.append("switched-cone graph is regular or outside S8")
    for c in out.cones:
        if rootsys.in_S8(c.graph):
            bad.append("a cone graph lies in S8")
    bad += lattice_symmetry_failures(out.lattice)
    return bad


def lattice_symmetry_failures(d: LatticeDiagram) -> list[str]:
    """Complements inside the Schläfli graph pair row i with row 9 - i."""
    s = schlaefli()
    bad = []
    for key, nd in d.nodes.items():
        emb = induced_embedding(nd.graph, s)
        if emb is None:
            bad.append(f"{nd.label} is not induced in the Schläfli graph")
            continue
        rest = [v for v in range(s.n) if v not in set(emb)]
        k = canonical_key(s.induced(rest))
        other = d.nodes.get(k)
        if other is None or other.row != 9 - nd.row:
            bad.append(f"complement of {nd.label} is not a node of row {9 - nd.row}")
    return bad


# ------------------------------------------------------------------ tables

def _power_list(values, descending: bool) -> str:
    cnt = Counter(values)
    items = sorted(cnt.items(), reverse=descending)
    return ",".join(f"{v}^{m}" if m > 1 else f"{v}" for v, m in items)


def _group_rows(rows: list[tuple[str, tuple]]) -> list[tuple[str, tuple]]:
    """Merge consecutive labels with identical cells, written M1,M2 or M6,...,M9."""
    out: list[tuple[list[str], tuple]] = []
    for lab, cells in rows:
        if out and out[-1][1] == cells:
            out[-1][0].append(lab)
        else:
            out.append(([lab], cells))
    res = []
    for labs, cells in out:
        name = labs[0] if len(labs) == 1 else (",".join(labs) if len(labs) == 2 else f"{labs[0]},...,{labs[-1]}")
        res.append((name, cells))
    return res


def _label_order(r: ClassificationRecord) -> int:
    return int(r.label[1:]) if r.label and r.label[1:].isdigit() else 10 ** 6


_ROUTE_SECTION = {"algorithm1": "regular", "cone": "regular", "lattice-hat": "switched-cone",
                  "algorithm2": "maximal-coclique", "certificate": "maximal-coclique"}


def table1_rows(cl: Classification) -> list[tuple[str, tuple]]:
    rows = []
    for r in sorted(cl.maximal(), key=_label_order):
        shapes = sorted(certstore.coloring_shapes(r.graph), key=lambda s: (max(s), s))
        sizes = " or ".join(_power_list(s, False) for s in shapes)
        rows.append((r.label or "?", (r.graph.n, chroma.chromatic_number(r.graph), sizes,
                                      _ROUTE_SECTION[r.route])))
    return _group_rows(rows)


def table2_rows(cl: Classification) -> list[tuple[str, tuple]]:
    rows = []
    for r in sorted(cl.maximal(), key=_label_order):
        g = r.graph
        spec = surd.format_spectrum(surd.exact_roots(es.char_poly(g), es.eigenvalues(g)))
        rows.append((r.label or "?", (g.n, _power_list(g.degrees(), True), spec)))
    return _group_rows(rows)


def table3_rows(cl: Classification) -> list[tuple[str, int, int, str]]:
    counts = cl.bucket_counts()
    out = []
    for b, _, _ in ref.BUCKET_COUNTS:
        n, m = counts.get(b, (0, 0))
        routes = sorted({_ROUTE_SECTION[r.route] for r in cl.records if r.bucket == b})
        out.append((ref.bucket_label(b), n, m, ",".join(routes)))
    extra = [b for b in counts if b not in {x for x, _, _ in ref.BUCKET_COUNTS}]
    for b in sorted(extra, key=sorted):
        out.append((ref.bucket_label(b), *counts[b], "unexpected"))
    out.append(("total", len(cl.records), len(cl.maximal()), ""))
    return out


def write_tables(cl: Classification, outdir: str | Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def emit(name: str, header: list[str], rows: list[list]) -> None:
        p = outdir / name
        lines = ["\t".join(header)] + ["\t".join(str(x) for x in row) for row in rows]
        p.write_text("\n".join(lines) + "\n")
        written.append(p)

    emit("table1.tsv", ["graph identifier", "order", "chromatic number", "color class sizes", "route"],
         [[name, *cells] for name, cells in table1_rows(cl)])
    emit("table2.tsv", ["graph", "order", "degree sequence", "spectrum"],
         [[name, *cells] for name, cells in table2_rows(cl)])
    emit("table3.tsv", ["class sizes", "graphs", "maximal graphs", "route"],
         [list(r) for r in table3_rows(cl)])
    for b in sorted({r.bucket for r in cl.records}, key=sorted):
        name = "bucket_" + "_".join(str(x) for x in sorted(b)) + ".g6"
        p = outdir / name
        p.write_text("".join(graph6_encode(r.graph) + "\n" for r in cl.records if r.bucket == b))
        written.append(p)
    p = outdir / "records.tsv"
    lines = ["key\tbucket\troute\thost\tmaximal\tlabel\tcertificate\tgraph6"]
    for r in cl.records:
        lines.append("\t".join([r.key.hex()[:16], r.bucket_label, r.route, r.host or "-",
                                "yes" if r.maximal else "no", r.label or "-", r.certificate or "-",
                                graph6_encode(r.graph)]))
    p.write_text("\n".join(lines) + "\n")
    written.append(p)
    return written
