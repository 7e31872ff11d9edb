"""Packaged algebras, diagrams and endomorphism sets, plus the reproduction tables.

Rows whose diagram has not been transcribed carry ``file=None`` and are
reported as SKIPPED by :func:`reproduce`.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .algebra import FiniteAlgebra, make_alexander_biquandle, make_jablan_psyquandle, parse_algebra
from .coloring import enumerate_colorings
from .diagram import DiagramCode, parse_diagram
from .endo import EndoSet, enumerate_endomorphisms, identity, make_endo_set, parse_endo_set
from .quiver import build_quiver, in_degree_polynomial, parse_polynomial

DATA = resources.files("psyquiver") / "data"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    file: str | None
    provenance: str
    # figure label x_i sits on semiarc figure_order[i-1]
    figure_order: tuple[int, ...] | None = None

    @property
    def present(self) -> bool:
        return self.file is not None

    def load(self) -> DiagramCode:
        if self.file is None:
            raise FileNotFoundError(f"{self.name} has not been transcribed")
        return parse_diagram((DATA / "diagrams" / self.file).read_text())


_ENTRIES = [
    CorpusEntry("unknot", "unknot.txt", "crossingless circle"),
    CorpusEntry("3_1", "trefoil.txt", "right-handed trefoil, passes in figure order"),
    CorpusEntry("1l1", "1l1.txt", "2-bouquet 1^l_1; orientation found by search against the 1^l_1 row",
                figure_order=(0, 2, 1, 3)),
    CorpusEntry("3_1.1", "3_1.1.txt", "pseudoknot 3_1.1, trefoil shadow with precrossings only"),
    CorpusEntry("L7a1", "L7a1.txt", "LinkInfo L7a1{0} PD code via scripts/linkinfo_to_gauss.py"),
    CorpusEntry("L7a2", "L7a2.txt", "LinkInfo L7a2{0} PD code via scripts/linkinfo_to_gauss.py"),
    CorpusEntry("v2.1", "v2.1.txt", "virtual trefoil, Gauss code O1-O2-U1-U2-"),
]
_ENTRIES += [CorpusEntry(f"v{k}", None, "virtual knot table; no Gauss code source available")
             for k in ("3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "4.1", "4.2", "4.3", "4.4")]
_BOUQUETS = ["3l1", "4l1", "5l1", "5l2", "5l3", "6l1", "6l2", "6l3", "6l4", "6l5", "6l6",
             "6l7", "6l8", "6l9", "6l10", "6l11", "6l12"]
_ENTRIES += [CorpusEntry(b, None, "2-bouquet table; figure only") for b in _BOUQUETS]
_ENTRIES += [CorpusEntry(k, None, "figure only") for k in ("K1", "K2", "Pa", "Pb")]

CORPUS: dict[str, CorpusEntry] = {e.name: e for e in _ENTRIES}


def packaged_algebras() -> list[str]:
    return sorted(p.name[:-4] for p in (DATA / "algebras").iterdir() if p.name.endswith(".txt"))


def load_algebra(ref: str) -> FiniteAlgebra:
    """A file path, a packaged name, or ``alexander:n:t:s`` / ``jablan:n:t:s``."""
    kind, _, params = ref.partition(":")
    if kind in ("alexander", "jablan") and params:
        n, t, s = (int(v) for v in params.split(":"))
        make = make_alexander_biquandle if kind == "alexander" else make_jablan_psyquandle
        return make(n, t, s)
    path = Path(ref)
    if path.is_file():
        return parse_algebra(path.read_text())
    packaged = DATA / "algebras" / f"{ref}.txt"
    if packaged.is_file():
        return parse_algebra(packaged.read_text())
    raise FileNotFoundError(f"no algebra {ref!r}")


def load_diagram(ref: str) -> DiagramCode:
    path = Path(ref)
    if path.is_file():
        return parse_diagram(path.read_text())
    if ref in CORPUS:
        return CORPUS[ref].load()
    raise FileNotFoundError(f"no diagram {ref!r}")


def load_endos(alg: FiniteAlgebra, source: str) -> EndoSet:
    """``all``, ``identity``, ``file:<path>`` or a packaged endo-set name."""
    if source == "all":
        return enumerate_endomorphisms(alg)
    if source == "identity":
        return make_endo_set([identity(alg.n)])
    if source.startswith("file:"):
        return parse_endo_set(alg, Path(source[5:]).read_text())
    packaged = DATA / "endos" / f"{source}.txt"
    if packaged.is_file():
        return parse_endo_set(alg, packaged.read_text())
    raise FileNotFoundError(f"no endomorphism set {source!r}")


# -- reproduction tables ------------------------------------------------------------

@dataclass(frozen=True)
class Row:
    diagram: str
    expected: str
    count: int | None = None  # expected counting invariant when stated separately


@dataclass(frozen=True)
class Table:
    algebra: str
    endos: str
    rows: tuple[Row, ...]


_P708 = "u^708 + 3u^388 + 12u^164 + 4u^144 + 8u^88 + 24u^12"
_P516 = "u^516 + 3u^292 + 4u^96 + 12u^68 + 8u^40"
_P1044 = "u^1044 + 3u^580 + 4u^192 + 12u^164 + 8u^88 + 36u^12"
_P852 = "u^852 + 3u^484 + 4u^144 + 12u^68 + 8u^40 + 12u^12"
_P612 = "u^612 + 3u^340 + 4u^120 + 12u^116 + 8u^64 + 12u^12"
_V15 = "u^15 + 2u^6"
_V21 = "u^21 + 2u^12 + 6u^6"

TABLES: dict[str, Table] = {
    "bouquet-table": Table("order8_singular", "all", tuple(Row(d, p) for d, p in [
        ("1l1", _P708), ("3l1", _P516), ("4l1", _P708), ("5l1", _P516), ("5l2", _P1044),
        ("5l3", _P708), ("6l1", _P852), ("6l2", _P708), ("6l3", _P516), ("6l4", _P1044),
        ("6l5", _P1044), ("6l6", _P708), ("6l7", _P1044), ("6l8", _P612), ("6l9", _P852),
        ("6l10", _P612), ("6l11", _P612), ("6l12", _P516)])),
    "virtual-table": Table("alexander:9:4:5", "all", tuple(Row(d, p) for d, p in [
        ("v2.1", _V15), ("v3.1", _V21), ("v3.2", _V15), ("v3.3", _V15), ("v3.4", _V15),
        ("v3.5", _V21), ("v3.6", "u^51 + 2u^24 + 24u^6"), ("v3.7", "u^33 + 8u^6"),
        ("v4.1", _V15), ("v4.2", _V21), ("v4.3", _V21), ("v4.4", _V15)])),
    "pseudo-pair": Table("order8_pseudo", "all", (
        Row("Pa", "u^132 + 4u^72 + 3u^52 + 8u^32 + 24u^12", 40),
        Row("Pb", "u^180 + 4u^84 + 3u^52 + 8u^20 + 24u^12", 40))),
    "k1k2-pair": Table("order8_singular", "order8_singular_phi", (
        Row("K1", "u^25 + u^15 + u^9 + u^3 + 48", 52),
        Row("K2", "2u^15 + u^13 + u^9 + 48", 52))),
    "l7a-pair": Table("order4_links", "l7a_S", (
        Row("L7a1", "2u^10 + 2u^6 + 12", 16),
        Row("L7a2", "2u^12 + 2u^4 + 12", 16))),
}

MATCH, MISMATCH, SKIPPED = "match", "MISMATCH", "SKIPPED"


@dataclass(frozen=True)
class RowResult:
    diagram: str
    expected: str
    computed: str | None
    count: int | None
    status: str


def reproduce(table_id: str) -> list[RowResult]:
    table = TABLES[table_id]
    alg = load_algebra(table.algebra)
    S = load_endos(alg, table.endos)
    results = []
    for row in table.rows:
        entry = CORPUS[row.diagram]
        if not entry.present:
            results.append(RowResult(row.diagram, row.expected, None, None, SKIPPED))
            continue
        cs = enumerate_colorings(alg, entry.load())
        poly = in_degree_polynomial(build_quiver(cs, S))
        ok = poly == parse_polynomial(row.expected) and row.count in (None, cs.count)
        results.append(RowResult(row.diagram, row.expected, str(poly), cs.count,
                                 MATCH if ok else MISMATCH))
    return results
