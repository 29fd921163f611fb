"""Stored E8 representations and their verification.

Record format (``data/certificates.txt``), one block per certificate,
blocks separated by a blank line, each field on its own line::

    id: <identifier>
    bucket: <class-size set such as {3,4}, or e7:a / e7:b / e7:c>
    vectors: <space-separated root names, see rootsys>
    claims: <space-separated key=value items, possibly empty>

Claim keys: ``label`` (a maximal graph id such as M10), ``upper``/``lower``
(lattice node names of the line the graph comes from), ``fives`` (number of
classes of size 5), ``perp`` (the root the E7 copy is orthogonal to) and
``fano`` (yes for the Fano-plane pattern).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources

from . import chroma, exactspec as es, glg, rootsys, surd
from .canon import canonical_key
from .graph import Graph, seidel_switch
from .pipeline import reference as ref

FIELDS = ("id", "bucket", "vectors", "claims")


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    id: str
    bucket: str
    vectors: tuple[str, ...]
    claims: tuple[tuple[str, str], ...] = ()

    @property
    def is_e7(self) -> bool:
        return self.bucket.startswith("e7:")

    @property
    def e7_type(self) -> str | None:
        return self.bucket[3:] if self.is_e7 else None

    @property
    def class_sizes(self) -> frozenset[int] | None:
        if self.is_e7:
            return None
        return frozenset(int(x) for x in self.bucket.strip("{}").split(","))

    def claim(self, key: str) -> str | None:
        for k, v in self.claims:
            if k == key:
                return v
        return None

    def graph(self) -> Graph:
        return rootsys.decode_representation(self.vectors)


# ------------------------------------------------------------------ text format

def parse_certificates(text: str) -> list[Certificate]:
    out = []
    for block in text.strip().split("\n\n"):
        lines = block.split("\n")
        if len(lines) != len(FIELDS):
            raise CertificateFormatError(f"record needs {len(FIELDS)} lines: {block!r}")
        vals = {}
        for want, line in zip(FIELDS, lines):
            key, sep, val = line.partition(": ")
            if not sep and line == f"{want}:":
                key, val = want, ""
            if key != want:
                raise CertificateFormatError(f"expected field {want!r}, got {line!r}")
            vals[key] = val
        claims = []
        for item in vals["claims"].split():
            k, sep, v = item.partition("=")
            if not sep:
                raise CertificateFormatError(f"claim {item!r} is not key=value")
            claims.append((k, v))
        out.append(Certificate(vals["id"], vals["bucket"], tuple(vals["vectors"].split()), tuple(claims)))
    ids = [c.id for c in out]
    if len(set(ids)) != len(ids):
        raise CertificateFormatError("duplicate certificate id")
    return out


def export_certificates(certs: list[Certificate]) -> str:
    blocks = []
    for c in certs:
        claims = " ".join(f"{k}={v}" for k, v in c.claims)
        blocks.append(f"id: {c.id}\nbucket: {c.bucket}\nvectors: {' '.join(c.vectors)}\nclaims: {claims}\n")
    return "\n".join(blocks)


def raw_certificate_text() -> str:
    return resources.files("hoffcolor").joinpath("data/certificates.txt").read_text()


def load_certificates() -> list[Certificate]:
    return parse_certificates(raw_certificate_text())


# ------------------------------------------------------------------ verification

@dataclass
class Report:
    id: str
    failures: list[str] = field(default_factory=list)
    facts: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL " + "; ".join(self.failures)
        return f"{self.id}\t{status}"


def parse_power_list(text: str) -> Counter:
    """'6^2,4^2,3' -> Counter({6: 2, 4: 2, 3: 1})."""
    out: Counter = Counter()
    for item in text.split(","):
        base, _, mult = item.strip().partition("^")
        out[int(base)] += int(mult or 1)
    return out


def coloring_shapes(g: Graph) -> set[tuple[int, ...]]:
    return {tuple(sorted(m.bit_count() for m in col)) for col in chroma.hoffman_coloring_masks(g)}


def _shape(text: str) -> tuple[int, ...]:
    return tuple(sorted(parse_power_list(text).elements()))


def maximal_row(label: str) -> ref.MaximalRow | None:
    for row in ref.MAXIMAL_ROWS:
        if label in row.ids:
            return row
    return None


def check_row(g: Graph, row: ref.MaximalRow) -> list[str]:
    """Compare a graph with a published maximal-graph row; spectra exactly and numerically."""
    bad = []
    if g.n != row.order:
        bad.append(f"order {g.n} != {row.order}")
    chi = chroma.chromatic_number(g)
    if chi != row.chi:
        bad.append(f"chi {chi} != {row.chi}")
    if Counter(g.degrees()) != parse_power_list(row.degrees):
        bad.append(f"degrees {dict(Counter(g.degrees()))} != {row.degrees}")
    shapes = coloring_shapes(g)
    want = {_shape(s) for s in row.class_sizes}
    if shapes != want:
        bad.append(f"coloring shapes {sorted(shapes)} != {sorted(want)}")
    spec = surd.parse_spectrum(row.spectrum)
    if surd.spectrum_size(spec) != g.n:
        bad.append("published spectrum has the wrong number of eigenvalues")
    elif es.char_poly(g) != surd.spectrum_polynomial(spec):
        bad.append("characteristic polynomial differs from the published spectrum")
    else:
        num = sorted(es.eigenvalues(g))
        if any(abs(a - b) > 1e-6 for a, b in zip(num, surd.spectrum_floats(spec))):
            bad.append("numerical eigenvalues differ from the published spectrum")
    return bad


def _switch_line_candidates(h: Graph) -> list[tuple[Graph, int]]:
    """(upper graph, 3-class) pairs with h = switch(cone(upper), class), apex last."""
    out = []
    for u in range(h.n):
        c = h.full_mask & ~h.rows[u] & ~(1 << u)
        if c.bit_count() != 3:
            continue
        sw = seidel_switch(h, [v for v in range(h.n) if (c >> v) & 1])
        rest = [v for v in range(h.n) if v != u]
        upper = sw.induced(rest)
        cls = 0
        for i, v in enumerate(rest):
            if (c >> v) & 1:
                cls |= 1 << i
        out.append((upper, cls))
    return out


def _check_switch_line(g: Graph, upper: str, lower: str, lattice) -> list[str]:
    want_u = lattice.labels.get(upper)
    want_l = lattice.labels.get(lower)
    if want_u is None or want_l is None:
        return [f"unknown lattice node {upper!r} or {lower!r}"]
    for up, cls in _switch_line_candidates(g):
        if canonical_key(up) != want_u:
            continue
        low = up.induced_mask(up.full_mask & ~cls)
        if canonical_key(low) == want_l and chroma.is_hoffman_coclique(up, cls):
            return []
    return [f"no vertex undoes the switch to the line {upper} -> {lower}"]


def verify_certificate(c: Certificate, lattice=None) -> Report:
    """Decode the vectors and check every stated property.

    ``lattice`` (a LatticeDiagram) enables the upper/lower line check.
    """
    rep = Report(c.id)
    try:
        g = c.graph()
    except (rootsys.InvalidCertificate, KeyError, ValueError) as exc:
        rep.failures.append(f"invalid representation: {exc}")
        return rep
    rep.facts["order"] = g.n
    rep.facts["key"] = canonical_key(g)
    if not g.is_connected():
        rep.failures.append("disconnected")
    if c.is_e7:
        rep.failures += _verify_e7(c, g)
        return rep
    if not glg.is_exceptional(g):
        rep.failures.append("not exceptional")
    if not chroma.is_hoffman_colorable(g):
        rep.failures.append("not Hoffman colorable")
        return rep
    if chroma.is_trivially_colorable(g):
        rep.failures.append("trivially Hoffman colorable")
    got = chroma.class_size_set(g)
    rep.facts["bucket"] = got
    if got != c.class_sizes:
        rep.failures.append(f"class sizes {sorted(got)} != {c.bucket}")
    fives = c.claim("fives")
    if fives is not None:
        counts = {sum(1 for m in col if m.bit_count() == 5) for col in chroma.hoffman_coloring_masks(g)}
        if counts != {int(fives)}:
            rep.failures.append(f"classes of size 5: {sorted(counts)} != {fives}")
    label = c.claim("label")
    if label is not None:
        row = maximal_row(label)
        if row is None:
            rep.failures.append(f"no published row for {label}")
        else:
            rep.failures += check_row(g, row)
            if row.bucket != got:
                rep.failures.append("published bucket differs")
    if c.claim("upper") is not None:
        if es.integer_eigenvalue(g, "min") != -2 or g.is_regular() or not rootsys.in_S8(g):
            rep.failures.append("switch-line graph must be irregular, in S8 and have smallest eigenvalue -2")
        if lattice is not None:
            rep.failures += _check_switch_line(g, c.claim("upper"), c.claim("lower"), lattice)
    return rep


def _verify_e7(c: Certificate, g: Graph) -> list[str]:
    bad = []
    perp = c.claim("perp")
    if perp is None:
        return ["E7 certificate without a perp claim"]
    p = rootsys.root(perp)
    vecs = [rootsys.root(v) for v in c.vectors]
    if any(rootsys.inner(v, p) != 0 for v in vecs):
        bad.append(f"a vector is not orthogonal to {perp}")
    names = set(c.vectors)
    for r in rootsys.subsystem([perp]):
        if r.name not in names and all(rootsys.inner(r, v) in (0, 4) for v in vecs):
            bad.append(f"extendable by {r.name}")
            break
    dmax = max(g.degrees())
    kind = c.e7_type
    if kind == "c" and dmax >= 16:
        bad.append("type (c) needs maximum degree below 16")
    if kind in ("a", "b") and dmax != 16:
        bad.append("types (a) and (b) need maximum degree 16")
    if kind == "a" and not g.universal_vertices():
        bad.append("type (a) should be a cone")
    if c.claim("fano") == "yes":
        fano = {frozenset(x) for x in ("123", "145", "167", "246", "257", "347", "356")}
        ds = {frozenset(v[1:4]) for v in c.vectors if v.startswith("d")}
        if ds != fano:
            bad.append("d-vectors do not follow the Fano lines")
    return bad


def verify_all(certs: list[Certificate] | None = None, lattice=None) -> list[Report]:
    certs = load_certificates() if certs is None else certs
    return [verify_certificate(c, lattice) for c in certs]


# ------------------------------------------------------------------ cross-check

@dataclass
class CrossReport:
    name: str
    only_certificates: list[str]
    only_pipeline: list[str]

    @property
    def ok(self) -> bool:
        return not self.only_certificates and not self.only_pipeline

    def line(self) -> str:
        if self.ok:
            return f"{self.name}\tok"
        return (f"{self.name}\tFAIL certificates-only={self.only_certificates} "
                f"pipeline-only={self.only_pipeline}")


def crosscheck(name: str, certs: list[Certificate], graphs: list[Graph]) -> CrossReport:
    """Isomorphism-level bijection between certificate graphs and pipeline graphs."""
    ck: dict[bytes, str] = {}
    for c in certs:
        ck.setdefault(canonical_key(c.graph()), c.id)
    pk = {canonical_key(g) for g in graphs}
    only_c = sorted(ck[k] for k in ck if k not in pk)
    only_p = sorted(k.hex()[:16] for k in pk if k not in ck)
    if len(ck) != len(certs):
        only_c.append("duplicate certificate graphs")
    return CrossReport(name, only_c, only_p)


def group(certs: list[Certificate], bucket: str) -> list[Certificate]:
    if bucket == "e7":
        return [c for c in certs if c.is_e7]
    return [c for c in certs if c.bucket == bucket]


def certificate_graphs(certs: list[Certificate], buckets: set[str]) -> list[tuple[Certificate, Graph]]:
    return [(c, c.graph()) for c in certs if c.bucket in buckets]

