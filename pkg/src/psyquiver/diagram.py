"""Oriented signed Gauss codes with singular, pre- and virtual crossings.

One component per line.  Tokens::

    O3+  U3+        classical over / under pass of crossing 3
    Sa1  Sb1-       singular crossing 1, roles a / b, optional sign (default +)
    Pa2  Pb2        precrossing 2
    V4              virtual crossing 4
    ()              a component with no crossings

A semiarc runs from one non-virtual pass to the next along a component.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass

OVER, UNDER, SINGULAR, PRE, VIRTUAL = "over", "under", "singular", "pre", "virtual"
CLASSICAL = "classical"

_TOKEN = re.compile(r"^(O|U|Sa|Sb|Pa|Pb|V)(\d+)([+\-−]?)$")
_PREFIX_KIND = {"O": OVER, "U": UNDER, "Sa": SINGULAR, "Sb": SINGULAR,
                "Pa": PRE, "Pb": PRE, "V": VIRTUAL}
EMPTY_COMPONENT = "()"


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class CrossingPass:
    kind: str
    crossing: int
    sign: int | None = None
    role: str | None = None

    @property
    def crossing_kind(self) -> str:
        return CLASSICAL if self.kind in (OVER, UNDER) else self.kind

    def __str__(self):
        if self.kind == VIRTUAL:
            return f"V{self.crossing}"
        prefix = {OVER: "O", UNDER: "U", SINGULAR: "S", PRE: "P"}[self.kind] + (self.role or "")
        return f"{prefix}{self.crossing}{'+' if self.sign > 0 else '-'}"


def parse_token(tok: str) -> CrossingPass:
    m = _TOKEN.match(tok)
    if not m:
        raise DiagramError(f"bad token {tok!r}")
    prefix, ident, sign_text = m.groups()
    kind = _PREFIX_KIND[prefix]
    if kind == VIRTUAL:
        if sign_text:
            raise DiagramError(f"virtual pass {tok!r} takes no sign")
        return CrossingPass(VIRTUAL, int(ident))
    if not sign_text:
        if kind in (OVER, UNDER):
            raise DiagramError(f"classical pass {tok!r} needs a sign")
        sign_text = "+"
    sign = 1 if sign_text == "+" else -1
    role = prefix[1] if kind in (SINGULAR, PRE) else None
    return CrossingPass(kind, int(ident), sign, role)


@dataclass(frozen=True)
class DiagramCode:
    components: tuple[tuple[CrossingPass, ...], ...]

    def __post_init__(self):
        _check_code(self.components)

    @property
    def passes(self):
        return [p for comp in self.components for p in comp]

    @property
    def kinds(self) -> set[str]:
        return {p.crossing_kind for p in self.passes}

    @property
    def kind(self) -> str:
        real = self.kinds - {VIRTUAL}
        if len(real) > 1:
            return "mixed"
        if real == {SINGULAR}:
            return "singular"
        if real == {PRE}:
            return "pseudo"
        return "virtual" if VIRTUAL in self.kinds else "classical"

    @property
    def crossing_ids(self) -> list[int]:
        return sorted({p.crossing for p in self.passes})

    def __str__(self):
        return serialize_diagram(self)


def _check_code(components) -> None:
    if not components:
        raise DiagramError("no components")
    by_id: dict[int, list[CrossingPass]] = {}
    for p in (p for comp in components for p in comp):
        by_id.setdefault(p.crossing, []).append(p)
    for ident, ps in sorted(by_id.items()):
        if len(ps) != 2:
            raise DiagramError(f"crossing {ident} appears {len(ps)} times")
        a, b = ps
        if a.crossing_kind != b.crossing_kind:
            raise DiagramError(f"crossing {ident} mixes {a.kind} and {b.kind} passes")
        if a.kind == VIRTUAL:
            continue
        if a.sign != b.sign:
            raise DiagramError(f"crossing {ident} has mismatched signs")
        if a.kind in (OVER, UNDER):
            if a.kind == b.kind:
                raise DiagramError(f"classical crossing {ident} has two {a.kind} passes")
        elif a.role == b.role:
            raise DiagramError(f"crossing {ident} has two role-{a.role} passes")


def parse_diagram(text: str) -> DiagramCode:
    components = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == EMPTY_COMPONENT:
            components.append(())
            continue
        components.append(tuple(parse_token(tok) for tok in line.split()))
    return DiagramCode(tuple(components))


def serialize_diagram(d: DiagramCode) -> str:
    lines = [" ".join(str(p) for p in comp) if comp else EMPTY_COMPONENT for comp in d.components]
    return "\n".join(lines) + "\n"


# -- semiarcs and constraints -------------------------------------------------------

@dataclass(frozen=True)
class Semiarc:
    index: int
    component: int
    from_pass: int | None  # position in the component; None for a crossingless one
    to_pass: int | None


@dataclass(frozen=True)
class CrossingConstraint:
    """Slots are semiarc indices; for classical crossings a = under, b = over."""
    crossing: int
    kind: str
    sign: int
    in_a: int
    in_b: int
    out_a: int
    out_b: int

    @property
    def slots(self) -> tuple[int, int, int, int]:
        return (self.in_a, self.in_b, self.out_a, self.out_b)


def _layout(d: DiagramCode):
    """Semiarcs plus, per (component, position), the incoming/outgoing semiarc."""
    arcs: list[Semiarc] = []
    around: dict[tuple[int, int], tuple[int, int]] = {}
    for c, comp in enumerate(d.components):
        real = [i for i, p in enumerate(comp) if p.kind != VIRTUAL]
        if not real:
            arcs.append(Semiarc(len(arcs), c, None, None))
            continue
        first = len(arcs)
        m = len(real)
        for j, pos in enumerate(real):
            arcs.append(Semiarc(first + j, c, pos, real[(j + 1) % m]))
        for j, pos in enumerate(real):
            around[(c, pos)] = (first + (j - 1) % m, first + j)
    return arcs, around


def semiarcs(d: DiagramCode) -> list[Semiarc]:
    return _layout(d)[0]


def crossing_constraints(d: DiagramCode) -> list[CrossingConstraint]:
    _, around = _layout(d)
    slots: dict[int, dict[str, tuple[int, int]]] = {}
    info: dict[int, CrossingPass] = {}
    for c, comp in enumerate(d.components):
        for pos, p in enumerate(comp):
            if p.kind == VIRTUAL:
                continue
            strand = {OVER: "b", UNDER: "a"}.get(p.kind, p.role)
            slots.setdefault(p.crossing, {})[strand] = around[(c, pos)]
            info[p.crossing] = p
    out = []
    for ident in sorted(slots):
        (ia, oa), (ib, ob) = slots[ident]["a"], slots[ident]["b"]
        p = info[ident]
        out.append(CrossingConstraint(ident, p.crossing_kind, p.sign, ia, ib, oa, ob))
    return out


# -- Reidemeister perturbations ---------------------------------------------------------

MOVES = ("r1+", "r1-", "r2")


def perturb(d: DiagramCode, moves, seed: int) -> DiagramCode:
    """Apply classical R1 kinks and R2 pokes at seeded random positions.

    R2 pokes join two arbitrary points of the diagram (Gauss-code R2, which
    is a virtual isotopy when the strands are not adjacent in a plane).
    """
    rng = random.Random(seed)
    comps = [list(c) for c in d.components]
    fresh = max((p.crossing for p in d.passes), default=0) + 1

    def spot():
        c = rng.randrange(len(comps))
        return c, rng.randint(0, len(comps[c]))

    for move in moves:
        if move not in MOVES:
            raise DiagramError(f"unknown move {move!r}")
        if move in ("r1+", "r1-"):
            sign = 1 if move == "r1+" else -1
            k = fresh
            fresh += 1
            kink = [CrossingPass(OVER, k, sign), CrossingPass(UNDER, k, sign)]
            if rng.random() < 0.5:
                kink.reverse()
            c, i = spot()
            comps[c][i:i] = kink
            continue
        k, m = fresh, fresh + 1
        fresh += 2
        sk = rng.choice((1, -1))
        top, bottom = (OVER, UNDER) if rng.random() < 0.5 else (UNDER, OVER)
        first = [CrossingPass(top, k, sk), CrossingPass(top, m, -sk)]
        second = [CrossingPass(bottom, k, sk), CrossingPass(bottom, m, -sk)]
        if rng.random() < 0.5:
            second.reverse()  # antiparallel strands
        (c1, i1), (c2, i2) = spot(), spot()
        if (c1, i1) == (c2, i2):
            comps[c1][i1:i1] = first + second
        else:
            if (c1, i1) > (c2, i2):
                (c1, i1), (c2, i2) = (c2, i2), (c1, i1)
            # insert the later point first so the earlier index stays valid
            comps[c2][i2:i2] = second
            comps[c1][i1:i1] = first
    return DiagramCode(tuple(tuple(c) for c in comps))


def relabel(d: DiagramCode) -> DiagramCode:
    """Renumber crossings 1, 2, ... in order of first appearance."""
    new: dict[int, int] = {}
    for p in d.passes:
        new.setdefault(p.crossing, len(new) + 1)
    return DiagramCode(tuple(
        tuple(CrossingPass(p.kind, new[p.crossing], p.sign, p.role) for p in comp)
        for comp in d.components))


def crossing_counts(d: DiagramCode) -> Counter:
    return Counter(p.crossing_kind for p in d.passes)
