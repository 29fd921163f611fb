"""Command-line entry point: ``hoffcolor <command> ...``.

Exit status 0 means every computed count or table matched the reference
values; 1 means a mismatch (a diff is printed); 2 means bad input.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import certstore, chroma, exactspec as es, glg
from .graph import GraphFormatError, graph6_decode, graph6_encode

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_graph(text: str):
    if text == "-":
        text = sys.stdin.readline()
    try:
        return graph6_decode(text.strip())
    except GraphFormatError as exc:
        raise InputError(f"not a graph6 string: {exc}") from exc


def _emit_graph6(path: Path, graphs) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(graph6_encode(g) + "\n" for g in graphs))


def _expect(diffs: list[str], label: str, got, want) -> None:
    if got != want:
        diffs.append(f"{label}: got {got}, expected {want}")


def _finish(diffs: list[str]) -> int:
    for d in diffs:
        print(f"MISMATCH {d}")
    return EXIT_MISMATCH if diffs else EXIT_OK


# ------------------------------------------------------------------ commands

def cmd_spectrum(args) -> int:
    g = _read_graph(args.graph6)
    fp = es.fingerprint(g, Fraction(args.width))
    print(f"char_poly: {fp.poly}")
    print(f"spectrum: {fp.display()}")
    return EXIT_OK


def cmd_hoffman(args) -> int:
    g = _read_graph(args.graph6)
    if g.num_edges == 0:
        raise InputError("the Hoffman bound needs at least one edge")
    rep = chroma.hoffman_report(g)
    print(rep.summary())
    if rep.colorable:
        print("classes: " + " | ".join(" ".join(map(str, c)) for c in rep.witness.classes))
        print(f"trivial: {'yes' if chroma.is_trivially_colorable(g) else 'no'}")
    return EXIT_OK


def cmd_glg_balance(args) -> int:
    h = _read_graph(args.root)
    try:
        spec = glg.balanced_spec(h, args.c)
    except glg.BalanceError as exc:
        raise InputError(str(exc)) from exc
    g = glg.build_glg(spec)
    ok = glg.verify_balanced_certificate(spec)
    print(graph6_encode(g))
    print(f"capacities: {' '.join(map(str, spec.capacities))}")
    print(f"certificate: {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_classify_regular(args) -> int:
    from .canon import canonical_key
    from .graph import complete, line_graph, schlaefli
    from .pipeline import assemble as asm
    from .pipeline.regular import algorithm1

    r3, r4, cones = asm.regular_routes(args.workers)
    diffs: list[str] = []
    ex3 = [r for r in r3 if glg.is_exceptional(r.graph)]
    ex4 = [r for r in r4 if glg.is_exceptional(r.graph)]
    print(f"ratio bound 3: {len(r3)} graphs, {len(ex3)} exceptional")
    print(f"ratio bound 4: {len(r4)} graphs, {len(ex4)} exceptional")
    _expect(diffs, "ratio bound 3", (len(r3), len(ex3)), (21, 17))
    _expect(diffs, "ratio bound 4", (len(r4), len(ex4)), (87, 70))
    top = algorithm1(schlaefli(), maximal_only=True)
    names = []
    for g in top:
        if canonical_key(g) == canonical_key(schlaefli()):
            names.append("Schlaefli")
        elif canonical_key(g) == canonical_key(line_graph(complete(6))):
            names.append("L(K6)")
        elif g.n == 21 and g.is_regular() and glg.is_exceptional(g):
            names.append("M20")
        else:
            names.append(f"unexpected order {g.n}")
    print(f"maximal with ratio bound 3: {', '.join(sorted(names))}")
    _expect(diffs, "maximal ratio-3 set", sorted(names), ["L(K6)", "M20", "Schlaefli"])
    max4 = {r.key for r in r4 if r.maximal}
    nmax = sum(1 for c in cones if canonical_key(c.base) in max4)
    print(f"exceptional cones: {len(cones)}, maximal {nmax}")
    _expect(diffs, "exceptional cones", (len(cones), nmax), (87, 13))
    if args.out:
        out = Path(args.out)
        _emit_graph6(out / "regular3.g6", [r.graph for r in r3])
        _emit_graph6(out / "regular4.g6", [r.graph for r in r4])
        _emit_graph6(out / "cones.g6", [c.graph for c in cones])
    return _finish(diffs)


def cmd_classify_typea(args) -> int:
    from .certstore import check_row, maximal_row
    from .pipeline.lattice import build_g3_lattice
    from .pipeline.reference import NOT_HOFFMAN_COLORABLE_NODES
    from .pipeline.typea import typea_graphs

    d = build_g3_lattice()
    diffs: list[str] = []
    above = d.full_lines(min_lower_vertices=6)
    print(f"diagram: {len(d.nodes)} nodes, {len(above)} full lines above C6")
    _expect(diffs, "diagram nodes", len(d.nodes), 30)
    _expect(diffs, "full lines above C6", len(above), 35)
    for name in NOT_HOFFMAN_COLORABLE_NODES:
        if d.reaches_empty(d.labels[name]):
            diffs.append(f"{name} has a full path to the empty graph")
    res, top = typea_graphs(d)
    print(f"switched-cone graphs: {len(res)}, maximal {', '.join(sorted(r.maximal_label for r in top))}")
    _expect(diffs, "switched-cone graphs", len(res), 35)
    _expect(diffs, "maximal labels", sorted(r.maximal_label for r in top), ["M22", "M23", "M25", "M5"])
    for r in top:
        for f in check_row(r.graph, maximal_row(r.maximal_label)):
            diffs.append(f"{r.maximal_label}: {f}")
    if args.out:
        _emit_graph6(Path(args.out) / "typea.g6", [r.graph for r in res])
    return _finish(diffs)


def cmd_classify_typebc(args) -> int:
    from .pipeline import assemble as asm
    from .pipeline.lattice import build_g3_lattice
    from .pipeline.typea import typea_graphs
    from .pipeline.typebc import host_set

    r3, r4, cones = asm.regular_routes(args.workers)
    ta, _ = typea_graphs(build_g3_lattice())
    known = {r.key for r in r3 + r4} | {c.key for c in cones} | {t.key for t in ta}
    hs = host_set(args.hosts)
    for i, why in hs.rejected:
        print(f"rejected host {i}: {why}")
    found, non, caveat = asm.typebc_route(hs, known, certstore.load_certificates())
    counts: dict[str, int] = {}
    for g, _, _ in found:
        b = asm.ref.bucket_label(chroma.class_size_set(g))
        counts[b] = counts.get(b, 0) + 1
    routes = {}
    for _, route, _ in found:
        routes[route] = routes.get(route, 0) + 1
    print(f"graphs: {len(found)} " + " ".join(f"{b}={counts.get(b, 0)}" for b in asm.TYPEBC_BUCKETS))
    print("routes: " + " ".join(f"{k}={v}" for k, v in sorted(routes.items())))
    if non:
        print(f"non-Hoffman unions: {len(non)} (hosts {sorted({h for _, _, h in non})})")
    if caveat:
        print(f"caveat: {caveat}")
    diffs: list[str] = []
    _expect(diffs, "graphs", len(found), 36)
    _expect(diffs, "buckets", [counts.get(b, 0) for b in asm.TYPEBC_BUCKETS], [17, 6, 3, 10])
    if args.out:
        _emit_graph6(Path(args.out) / "typebc.g6", [g for g, _, _ in found])
    return _finish(diffs)


def cmd_e7_maximal(args) -> int:
    from .pipeline.e7max import e7_maximal

    s = e7_maximal()
    print(s.line())
    diffs: list[str] = []
    _expect(diffs, "counts", (len(s.graphs), len(s.schlaefli), len(s.cones), len(s.other)), (39, 1, 27, 11))
    if s.other_in_s8:
        diffs.append(f"{len(s.other_in_s8)} non-cone graphs lie in S8")
    if s.containments:
        diffs.append(f"containments between maximal graphs: {s.containments}")
    if args.out:
        _emit_graph6(Path(args.out) / "e7_maximal.g6", [r.graph for r in s.graphs])
    return _finish(diffs)


def cmd_classify_all(args) -> int:
    from .pipeline import assemble as asm

    out = asm.run_routes(args.hosts, args.workers)
    cl = asm.assemble_classification(out)
    print(f"{len(cl.records)} graphs, {len(cl.maximal())} maximal")
    for row in asm.table3_rows(cl):
        print("\t".join(map(str, row)))
    if cl.caveat:
        print(f"caveat: {cl.caveat}")
    diffs = asm.compare_with_reference(cl) + asm.structural_checks(cl, out)
    if args.out:
        for p in asm.write_tables(cl, args.out):
            print(f"wrote {p}")
    return _finish(diffs)


def cmd_verify_certs(args) -> int:
    from .pipeline.lattice import build_g3_lattice

    certs = certstore.load_certificates()
    if certstore.export_certificates(certs) != certstore.raw_certificate_text():
        print("MISMATCH export does not round-trip")
        return EXIT_MISMATCH
    lattice = build_g3_lattice()
    reps = certstore.verify_all(certs, lattice)
    for r in reps:
        print(r.line())
    bad = [r for r in reps if not r.ok]
    exc = [c for c in certs if not c.is_e7]
    print(f"{len(reps) - len(bad)}/{len(reps)} certificates verified "
          f"({len(exc)} exceptional, {len(certs) - len(exc)} E7-maximal)")
    if args.export:
        Path(args.export).write_text(certstore.export_certificates(certs))
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_small_order(args) -> int:
    from .pipeline import assemble as asm
    from .pipeline.smallorder import order20_outside_m10, small_order_graphs

    cl = asm.assemble_classification(asm.run_routes(args.hosts, args.workers))
    res = small_order_graphs(cl)
    for s in res:
        print(f"{s.graph.n}\t{s.chi}\t{s.source}\t{graph6_encode(s.graph)}")
    diffs: list[str] = []
    _expect(diffs, "orders", sorted(s.graph.n for s in res), [6, 11, 11, 13, 13, 15, 17, 20, 20, 22])
    outside = order20_outside_m10(cl)
    print(f"order-20 component of M21 outside M10: {'yes' if outside else 'no'}")
    if not outside:
        diffs.append("order-20 component of M21 is a chromatic component of M10")
    return _finish(diffs)


def cmd_from_multiset(args) -> int:
    from .pipeline.smallorder import SizeTwoMultiset, graph_from_multiset, multiset_report

    try:
        s = SizeTwoMultiset.parse(args.multiset)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    g = graph_from_multiset(s)
    print(graph6_encode(g))
    for k, v in multiset_report(s).items():
        print(f"{k}: {v}")
    return EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hoffcolor", description=__doc__.splitlines()[0])
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: HOFFCOLOR_WORKERS or 1)")
    p.add_argument("--width", default="1/1000000", help="isolation width for spectra")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="characteristic polynomial and isolated spectrum")
    s.add_argument("graph6", help="graph6 string or - for stdin")
    s.set_defaults(fn=cmd_spectrum)
    s = sub.add_parser("hoffman", help="Hoffman bound report")
    s.add_argument("graph6")
    s.set_defaults(fn=cmd_hoffman)
    s = sub.add_parser("glg-balance", help="chromatically balanced generalized line graph")
    s.add_argument("root", help="graph6 of the root graph")
    s.add_argument("c", type=int)
    s.set_defaults(fn=cmd_glg_balance)
    for name, fn, hosts, doc in (
            ("classify-regular", cmd_classify_regular, False, "regular and cone graphs"),
            ("classify-typea", cmd_classify_typea, False, "hat-switched line graphs"),
            ("classify-typebc", cmd_classify_typebc, True, "graphs from type (b)/(c) hosts"),
            ("e7-maximal", cmd_e7_maximal, False, "maximal E7-representable graphs"),
            ("classify-all", cmd_classify_all, True, "full classification with tables")):
        s = sub.add_parser(name, help=doc)
        s.add_argument("--out", help="directory for graph6 and table files")
        if hosts:
            s.add_argument("--hosts", help="graph6 file of type (b)/(c) hosts with a .manifest sidecar")
            s.add_argument("--enumerate-e8", action="store_true",
                           help="derive the type (b)/(c) hosts from E8 (not supported)")
        s.set_defaults(fn=fn)
    s = sub.add_parser("verify-certs", help="check every stored representation")
    s.add_argument("--export", help="write the certificate records to this file")
    s.set_defaults(fn=cmd_verify_certs)
    s = sub.add_parser("small-order", help="graphs with fewer than 3 chi vertices")
    s.add_argument("--hosts", help="graph6 file of type (b)/(c) hosts with a .manifest sidecar")
    s.set_defaults(fn=cmd_small_order)
    s = sub.add_parser("from-multiset", help="graph with one 5-class from a multiset over {1,2,3}")
    s.add_argument("multiset", help="e.g. 1^2,2,3")
    s.set_defaults(fn=cmd_from_multiset)
    return p


def _validate(args) -> None:
    if args.workers is not None and args.workers < 1:
        raise InputError("--workers must be positive")
    if args.workers is not None:
        os.environ["HOFFCOLOR_WORKERS"] = str(args.workers)
    try:
        w = Fraction(args.width)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --width: {exc}") from exc
    if w <= 0:
        raise InputError("--width must be positive")
    if getattr(args, "enumerate_e8", False):
        raise InputError("deriving type (b)/(c) hosts from E8 is not supported; pass --hosts")
    hosts = getattr(args, "hosts", None)
    if hosts and not Path(hosts).exists():
        raise InputError(f"host file {hosts} not found")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        _validate(args)
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
