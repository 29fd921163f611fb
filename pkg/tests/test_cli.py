import dataclasses
import io

import pytest

from hoffcolor import cli
from hoffcolor.graph import Graph, complete, complete_multipartite, graph6_decode, graph6_encode, sporadic_line_graph
from hoffcolor.pipeline import assemble as asm, e7max, lattice as lat, typebc


@pytest.fixture
def patched(monkeypatch, routes, classification, lattice, e7_summary):
    """Route the heavy pipeline calls to the session results."""
    monkeypatch.setattr(asm, "regular_routes", lambda workers=None: (routes.regular3, routes.regular4, routes.cones))
    monkeypatch.setattr(asm, "run_routes", lambda hosts=None, workers=None, e7=None: routes)
    monkeypatch.setattr(asm, "assemble_classification", lambda out, certs=None: classification)
    monkeypatch.setattr(lat, "build_g3_lattice", lambda seeds=None: lattice)
    monkeypatch.setattr(e7max, "e7_maximal", lambda: e7_summary)
    real_host_set = typebc.host_set
    monkeypatch.setattr(typebc, "host_set", lambda path=None, e7=None: real_host_set(path, e7_summary.other_graphs()))


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ------------------------------------------------------------------ small commands

def test_hoffman_on_sporadic_line_graph(capsys):
    code, out, _ = run(capsys, "hoffman", graph6_encode(sporadic_line_graph()))
    assert code == 0
    assert out.splitlines()[0] == "chi=3 h=3 colorable=yes"
    assert "trivial: no" in out


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", graph6_encode(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])))
    assert code == 0
    assert "char_poly: t^4 - 4t^2" in out and "spectrum: 2, 0^2, -2" in out


def test_spectrum_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(graph6_encode(complete(3)) + "\n"))
    code, out, _ = run(capsys, "spectrum", "-")
    assert code == 0 and "spectrum: 2, -1^2" in out


def test_glg_balance(capsys):
    code, out, _ = run(capsys, "glg-balance", graph6_encode(complete(4)), "3")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "certificate: ok"
    assert graph6_decode(lines[0]).n == 6


def test_from_multiset(capsys):
    code, out, _ = run(capsys, "from-multiset", "1^2,2")
    assert code == 0
    assert graph6_decode(out.splitlines()[0]).n == 11
    assert "hoffman_colorable: True" in out and "class_sizes: [2, 5]" in out


# ------------------------------------------------------------------ bad input

@pytest.mark.parametrize("argv,msg", [
    (["hoffman", "A"], "graph6"),
    (["hoffman", "B?"], "at least one edge"),
    (["--workers", "0", "spectrum", "A_"], "workers"),
    (["--width", "0", "spectrum", "A_"], "width"),
    (["--width", "x", "spectrum", "A_"], "width"),
    (["classify-typebc", "--enumerate-e8"], "not supported"),
    (["classify-all", "--hosts", "/nonexistent/hosts.g6"], "not found"),
    (["from-multiset", "4"], "1, 2 or 3"),
])
def test_bad_input_exit_code(capsys, argv, msg):
    code, _, err = run(capsys, *argv)
    assert code == cli.EXIT_INPUT
    assert msg in err


def test_unbalanced_root_is_bad_input(capsys):
    code, _, err = run(capsys, "glg-balance", graph6_encode(complete_multipartite(1, 3)), "2")
    assert code == cli.EXIT_INPUT and "vertex" in err


# ------------------------------------------------------------------ pipeline commands

def test_classify_regular(capsys, patched, tmp_path):
    code, out, _ = run(capsys, "classify-regular", "--out", str(tmp_path))
    assert code == 0, out
    assert "ratio bound 3: 21 graphs, 17 exceptional" in out
    assert "ratio bound 4: 87 graphs, 70 exceptional" in out
    assert "maximal with ratio bound 3: L(K6), M20, Schlaefli" in out
    assert "exceptional cones: 87, maximal 13" in out
    assert len((tmp_path / "cones.g6").read_text().split()) == 87


def test_classify_typea(capsys, patched):
    code, out, _ = run(capsys, "classify-typea")
    assert code == 0, out
    assert "diagram: 30 nodes, 35 full lines above C6" in out
    assert "switched-cone graphs: 35, maximal M22, M23, M25, M5" in out


def test_classify_typebc(capsys, patched):
    code, out, _ = run(capsys, "classify-typebc")
    assert code == 0, out
    assert "graphs: 36 {2,5}=17 {2,5,8}=6 {3,5}=3 {3,6}=10" in out
    assert "caveat: " + typebc.COMPLETENESS_CAVEAT in out


def test_e7_maximal(capsys, patched):
    code, out, _ = run(capsys, "e7-maximal")
    assert code == 0
    assert out.splitlines()[0] == "39 graphs (1 Schläfli, 27 cones, 11 other)"


def test_mismatch_exit_code(capsys, monkeypatch, e7_summary):
    short = dataclasses.replace(e7_summary, other=e7_summary.other[:-1])
    monkeypatch.setattr(e7max, "e7_maximal", lambda: short)
    code, out, _ = run(capsys, "e7-maximal")
    assert code == cli.EXIT_MISMATCH
    assert "MISMATCH counts" in out


def test_classify_all_writes_tables(capsys, patched, tmp_path):
    code, out, _ = run(capsys, "classify-all", "--out", str(tmp_path))
    assert code == 0, out
    assert out.splitlines()[0] == "245 graphs, 29 maximal"
    assert (tmp_path / "table1.tsv").exists() and (tmp_path / "table3.tsv").exists()
    assert "total\t245\t29" in out


def test_verify_certs(capsys, patched, tmp_path):
    dest = tmp_path / "certs.txt"
    code, out, _ = run(capsys, "verify-certs", "--export", str(dest))
    assert code == 0
    assert "110/110 certificates verified (71 exceptional, 39 E7-maximal)" in out
    from hoffcolor.certstore import raw_certificate_text
    assert dest.read_text() == raw_certificate_text()


def test_small_order(capsys, patched):
    code, out, _ = run(capsys, "small-order")
    assert code == 0, out
    rows = [ln for ln in out.splitlines() if ln[:1].isdigit()]
    assert [int(r.split("\t")[0]) for r in rows] == [6, 11, 11, 13, 13, 15, 17, 20, 20, 22]
    assert "order-20 component of M21 outside M10: yes" in out
