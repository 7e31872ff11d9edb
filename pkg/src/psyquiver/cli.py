"""Command-line interface.

Exit codes: 0 success, 1 domain failure (invalid algebra, mismatch,
incompatible inputs), 2 parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .algebra import AlgebraError, AlgebraParseError, serialize_algebra, validate
from .coloring import ColoringError, enumerate_colorings
from .corpus import MISMATCH, SKIPPED, TABLES, load_algebra, load_diagram, load_endos, reproduce
from .diagram import MOVES, DiagramError, perturb, serialize_diagram
from .endo import EndoError, enumerate_endomorphisms, serialize_endo_set
from .quiver import QuiverError, build_quiver, export_dot, in_degree_polynomial

FORMATS = ("text", "dot", "json-lines")


@dataclass
class RunConfig:
    command: str
    algebra: str | None = None
    diagrams: list[str] = field(default_factory=list)
    endos: str = "all"
    format: str = "text"
    seed: int = 0
    moves: list[str] = field(default_factory=list)
    list_colorings: bool = False
    poly: bool = False
    gen: tuple | None = None
    table: str | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        cfg = cls(ns.command)
        cfg.algebra = getattr(ns, "algebra", None)
        cfg.diagrams = [ns.diagram] if getattr(ns, "diagram", None) else []
        cfg.endos = getattr(ns, "endos", "all")
        cfg.format = getattr(ns, "format", "text")
        if getattr(ns, "dot", False):
            cfg.format = "dot"
        cfg.seed = getattr(ns, "seed", 0)
        cfg.moves = [m for m in getattr(ns, "moves", "").split(",") if m]
        cfg.list_colorings = getattr(ns, "list", False)
        cfg.poly = getattr(ns, "poly", False)
        if ns.command == "gen":
            cfg.gen = (ns.kind, ns.n, ns.t, ns.s)
        cfg.table = getattr(ns, "table", None)
        return cfg


def _tuple(t) -> str:
    return "(" + ", ".join(map(str, t)) + ")"


def cmd_validate(cfg: RunConfig, out) -> int:
    report = validate(load_algebra(cfg.algebra))
    failed = report.failed_axioms()
    axioms = ["0", "i", "ii", "iii"] + (["iv", "v"] if report.flavor == "psyquandle" else [])
    for ax in axioms:
        print(f"axiom {ax}: {'FAIL' if ax in failed else 'ok'}", file=out)
    for v in report.violations:
        print(f"  {v}", file=out)
    status = "valid" if report.valid else "invalid"
    suffix = ""
    if report.flavor == "psyquandle":
        suffix = ", pI-adequate" if report.pI_adequate else ", not pI-adequate"
    print(f"{status} {report.flavor}{suffix}", file=out)
    return 0 if report.valid else 1


def cmd_colorings(cfg: RunConfig, out) -> int:
    alg = load_algebra(cfg.algebra)
    cs = enumerate_colorings(alg, load_diagram(cfg.diagrams[0]))
    if cfg.format == "json-lines":
        for c in cs:
            print(json.dumps({"tuple": list(c)}), file=out)
        return 0
    print(cs.count, file=out)
    if cfg.list_colorings:
        for c in cs:
            print(_tuple(c), file=out)
    return 0


def cmd_endos(cfg: RunConfig, out) -> int:
    S = enumerate_endomorphisms(load_algebra(cfg.algebra))
    if cfg.format == "json-lines":
        for f in S:
            print(json.dumps({"tuple": list(f)}), file=out)
    else:
        out.write(serialize_endo_set(S))
    return 0


def cmd_quiver(cfg: RunConfig, out) -> int:
    alg = load_algebra(cfg.algebra)
    cs = enumerate_colorings(alg, load_diagram(cfg.diagrams[0]))
    q = build_quiver(cs, load_endos(alg, cfg.endos))
    if cfg.format == "dot":
        out.write(export_dot(q))
        if cfg.poly:
            print(f"// {in_degree_polynomial(q)}", file=out)
    elif cfg.format == "json-lines":
        for v, deg in zip(q.vertices, q.in_degrees()):
            print(json.dumps({"tuple": list(v), "indegree": deg}), file=out)
        for s, t, k in q.edges:
            print(json.dumps({"source": s, "target": t, "endo": k}), file=out)
    else:
        print(in_degree_polynomial(q), file=out)
    return 0


def cmd_gen(cfg: RunConfig, out) -> int:
    kind, n, t, s = cfg.gen
    out.write(serialize_algebra(load_algebra(f"{kind}:{n}:{t}:{s}")))
    return 0


def cmd_perturb(cfg: RunConfig, out) -> int:
    d = load_diagram(cfg.diagrams[0])
    out.write(serialize_diagram(perturb(d, cfg.moves, cfg.seed)))
    return 0


def cmd_reproduce(cfg: RunConfig, out) -> int:
    rows = reproduce(cfg.table)
    width = max(len(r.diagram) for r in rows)
    for r in rows:
        computed = r.computed if r.computed is not None else "-"
        print(f"{r.diagram:<{width}}  {r.status:<8}  expected {r.expected}  computed {computed}", file=out)
    done = [r for r in rows if r.status != SKIPPED]
    bad = [r for r in done if r.status == MISMATCH]
    print(f"{len(done) - len(bad)}/{len(done)} present rows match, {len(rows) - len(done)} skipped",
          file=out)
    return 1 if bad else 0


COMMANDS = {
    "validate": cmd_validate,
    "colorings": cmd_colorings,
    "endos": cmd_endos,
    "quiver": cmd_quiver,
    "gen": cmd_gen,
    "perturb": cmd_perturb,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="psyquiver", description="psyquandle coloring quivers")
    sub = ap.add_subparsers(dest="command", required=True)
    alg_help = "algebra file, packaged name, or alexander:n:t:s / jablan:n:t:s"

    p = sub.add_parser("validate", help="check the axioms")
    p.add_argument("algebra", help=alg_help)

    p = sub.add_parser("colorings", help="count (and list) colorings")
    p.add_argument("algebra", help=alg_help)
    p.add_argument("diagram", help="diagram file or corpus name")
    p.add_argument("--list", action="store_true")
    p.add_argument("--format", choices=("text", "json-lines"), default="text")

    p = sub.add_parser("endos", help="list all endomorphisms")
    p.add_argument("algebra", help=alg_help)
    p.add_argument("--format", choices=("text", "json-lines"), default="text")

    p = sub.add_parser("quiver", help="coloring quiver and in-degree polynomial")
    p.add_argument("algebra", help=alg_help)
    p.add_argument("diagram", help="diagram file or corpus name")
    p.add_argument("--endos", default="all", help="all, identity, file:<path> or packaged name")
    p.add_argument("--dot", action="store_true", help="same as --format dot")
    p.add_argument("--poly", action="store_true", help="print the polynomial (default for text)")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("gen", help="emit a modular algebra file")
    p.add_argument("kind", choices=("alexander", "jablan"))
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)
    p.add_argument("s", type=int)

    p = sub.add_parser("perturb", help="apply seeded R1/R2 moves")
    p.add_argument("diagram", help="diagram file or corpus name")
    p.add_argument("--moves", default="r1+", help=f"comma-separated from {', '.join(MOVES)}")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("reproduce", help="recompute a table of polynomials")
    p.add_argument("table", choices=sorted(TABLES))
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    cfg = RunConfig.from_args(build_parser().parse_args(argv))
    try:
        return COMMANDS[cfg.command](cfg, out)
    except (OSError, AlgebraParseError, DiagramError, EndoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AlgebraError, ColoringError, QuiverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
