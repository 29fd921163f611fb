import random
from fractions import Fraction

import pytest

from hoffcolor.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_regular(rng: random.Random, n: int, k: int, tries: int = 200) -> Graph | None:
    """Pairing model with rejection of loops and multi-edges."""
    if n * k % 2 or k >= n:
        return None
    for _ in range(tries):
        points = [v for v in range(n) for _ in range(k)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for a, b in zip(points[::2], points[1::2]):
            e = (min(a, b), max(a, b))
            if a == b or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph.from_edges(n, edges)
    return None


def fraction_det(m):
    """Determinant by plain Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


@pytest.fixture(scope="session")
def e7_summary():
    from hoffcolor.pipeline.e7max import e7_maximal
    return e7_maximal()


@pytest.fixture(scope="session")
def routes(e7_summary):
    from hoffcolor.pipeline.assemble import run_routes
    return run_routes(e7=e7_summary.other_graphs())


@pytest.fixture(scope="session")
def classification(routes):
    from hoffcolor.pipeline.assemble import assemble_classification
    return assemble_classification(routes)


@pytest.fixture(scope="session")
def lattice():
    from hoffcolor.pipeline.lattice import build_g3_lattice
    return build_g3_lattice()


@pytest.fixture(scope="session")
def certificates():
    from hoffcolor.certstore import load_certificates
    return load_certificates()


def random_s8_member(rng: random.Random):
    """Switch the line graph of a random 8-vertex graph on a random set of its edges.

    Returns (graph, root graph, switching set).
    """
    from hoffcolor.graph import line_graph, seidel_switch
    while True:
        h = random_graph(rng, 8, rng.uniform(0.2, 0.8))
        if h.num_edges:
            break
    lg = line_graph(h)
    x = [v for v in range(lg.n) if rng.random() < 0.5]
    return seidel_switch(lg, x), h, x


# ------------------------------------------------------------------ acceptance summary

_CRITERIA: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        status = "PASS" if rep.passed else "SKIP" if rep.skipped else "FAIL"
        _CRITERIA.append((str(mark.args[0]), status, mark.args[1]))


def _criterion_order(entry):
    label = entry[0]
    digits = "".join(ch for ch in label if ch.isdigit())
    return int(digits), label


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, text in sorted(_CRITERIA, key=_criterion_order):
        terminalreporter.write_line(f"criterion {label}: {status}  {text}")
