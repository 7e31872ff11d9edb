"""Recompute the reference tables from the packaged corpus.

    python scripts/reproduce_tables.py                 # every table
    python scripts/reproduce_tables.py l7a-pair --show-dot

Rows whose diagram has no transcription are reported as SKIPPED.
"""

import argparse
import sys
from dataclasses import dataclass, field

from psyquiver.coloring import enumerate_colorings
from psyquiver.corpus import CORPUS, MISMATCH, SKIPPED, TABLES, load_algebra, load_endos, reproduce
from psyquiver.quiver import build_quiver, export_dot


@dataclass
class ReproduceConfig:
    tables: list[str] = field(default_factory=lambda: list(TABLES))
    show_dot: bool = False


def run(cfg: ReproduceConfig) -> int:
    mismatches = 0
    for tid in cfg.tables:
        table = TABLES[tid]
        print(f"== {tid}  algebra={table.algebra}  endos={table.endos}")
        rows = reproduce(tid)
        for r in rows:
            shown = r.computed if r.computed is not None else "-"
            print(f"  {r.diagram:8} {r.status:9} expected {r.expected:45} computed {shown}")
        present = [r for r in rows if r.status != SKIPPED]
        mismatches += sum(r.status == MISMATCH for r in rows)
        print(f"  {sum(r.status != MISMATCH for r in present)}/{len(present)} present rows match, "
              f"{len(rows) - len(present)} skipped")
        if cfg.show_dot:
            alg = load_algebra(table.algebra)
            S = load_endos(alg, table.endos)
            for r in present:
                q = build_quiver(enumerate_colorings(alg, CORPUS[r.diagram].load()), S)
                print(export_dot(q, name=r.diagram.replace(".", "_")))
    return 1 if mismatches else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("tables", nargs="*", default=[])
    ap.add_argument("--show-dot", action="store_true")
    args = ap.parse_args(argv)
    unknown = [t for t in args.tables if t not in TABLES]
    if unknown:
        ap.error(f"unknown table(s) {unknown}; choose from {list(TABLES)}")
    return run(ReproduceConfig(tables=args.tables or list(TABLES), show_dot=args.show_dot))


if __name__ == "__main__":
    sys.exit(main())
