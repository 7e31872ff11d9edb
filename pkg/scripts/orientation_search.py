"""Try every sign / direction variant of a diagram against a target polynomial.

    python scripts/orientation_search.py qui1 1l1 --endos all \
        --target "u^708 + 3u^388 + 12u^164 + 4u^144 + 8u^88 + 24u^12"

Variants: each component may be reversed and each crossing may have its sign
flipped.  Useful when a diagram is only available as a picture and the
orientation conventions of the encoding are uncertain.
"""

import argparse
import itertools
import sys
from dataclasses import dataclass

from psyquiver.coloring import ColoringError, enumerate_colorings
from psyquiver.corpus import load_algebra, load_diagram, load_endos
from psyquiver.diagram import CrossingPass, DiagramCode, serialize_diagram
from psyquiver.quiver import build_quiver, in_degree_polynomial, parse_polynomial


@dataclass
class SearchConfig:
    algebra: str
    diagram: str
    endos: str = "all"
    target: str | None = None
    max_variants: int = 4096


def variants(d: DiagramCode):
    crossings = sorted({p.crossing for p in d.passes if p.sign is not None})
    ncomp = len(d.components)
    for rev in itertools.product((False, True), repeat=ncomp):
        for flips in itertools.product((1, -1), repeat=len(crossings)):
            flip = dict(zip(crossings, flips))
            comps = []
            for c, r in zip(d.components, rev):
                c = tuple(reversed(c)) if r else c
                comps.append(tuple(p if p.sign is None else
                                   CrossingPass(p.kind, p.crossing, p.sign * flip[p.crossing], p.role)
                                   for p in c))
            yield DiagramCode(tuple(comps))


def run(cfg: SearchConfig) -> int:
    alg = load_algebra(cfg.algebra)
    S = load_endos(alg, cfg.endos)
    target = parse_polynomial(cfg.target) if cfg.target else None
    seen, hits = set(), 0
    for i, v in enumerate(variants(load_diagram(cfg.diagram))):
        if i >= cfg.max_variants:
            print(f"stopped after {cfg.max_variants} variants")
            break
        text = serialize_diagram(v).strip()
        if text in seen:
            continue
        seen.add(text)
        try:
            p = in_degree_polynomial(build_quiver(enumerate_colorings(alg, v), S))
        except ColoringError as e:
            print(f"{text.replace(chr(10), ' / ')}: {e}")
            continue
        mark = ""
        if target is not None and p == target:
            mark, hits = "  <- match", hits + 1
        print(f"{text.replace(chr(10), ' / ')}: {p}{mark}")
    return 0 if target is None or hits else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("algebra")
    ap.add_argument("diagram")
    ap.add_argument("--endos", default="all")
    ap.add_argument("--target")
    ap.add_argument("--max-variants", type=int, default=4096)
    a = ap.parse_args(argv)
    return run(SearchConfig(a.algebra, a.diagram, a.endos, a.target, a.max_variants))


if __name__ == "__main__":
    sys.exit(main())
