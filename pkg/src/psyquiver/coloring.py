"""Enumeration of X-colorings of a diagram.

Each crossing is a relation on (in_a, in_b, out_a, out_b); for classical
crossings strand a is the under strand.  Draw the crossing with both strands
pointing up and call x, y the labels of strands a, b on its left side.  The
right side then carries x ul y on strand a and y ol x on strand b.  Strand a
runs right to left at a positive crossing and left to right at a negative
one, so

    sign +   in_a = x ul y   in_b = y        out_a = x        out_b = y ol x
    sign -   in_a = x        in_b = y ol x   out_a = x ul y   out_b = y

Singular and pre crossings use ub/ob in the same two forms.  With this
reading x ul x = x ol x is exactly the condition a kink imposes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .algebra import PSYQUANDLE, FiniteAlgebra
from .diagram import CLASSICAL, PRE, SINGULAR, DiagramCode, crossing_constraints, semiarcs

ORACLE_LIMIT = 10**7

Coloring = tuple[int, ...]


class ColoringError(ValueError):
    """Algebra and diagram cannot be combined."""


@dataclass(frozen=True)
class ColoringSet:
    colorings: tuple[Coloring, ...]

    @property
    def count(self) -> int:
        return len(self.colorings)

    def __len__(self):
        return len(self.colorings)

    def __iter__(self):
        return iter(self.colorings)

    def __contains__(self, item):
        return tuple(item) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.colorings)

    def index(self, coloring: Coloring) -> int:
        return self.colorings.index(tuple(coloring))


def check_compatible(alg: FiniteAlgebra, d: DiagramCode) -> None:
    kinds = d.kinds
    if not alg.right_invertible:
        raise ColoringError("algebra is not right-invertible")
    if kinds & {SINGULAR, PRE} and alg.flavor != PSYQUANDLE:
        raise ColoringError("singular or pre crossings need a psyquandle")
    if PRE in kinds and not alg.pI_adequate:
        raise ColoringError("pre crossings need a pI-adequate psyquandle")


def crossing_relation(alg: FiniteAlgebra, kind: str, sign: int) -> list[tuple[int, int, int, int]]:
    """All (in_a, in_b, out_a, out_b) allowed at a crossing, 0-based elements."""
    lower, upper = ("ul", "ol") if kind == CLASSICAL else ("ub", "ob")
    lo, up = alg.tables[lower], alg.tables[upper]
    rel = []
    for x, y in product(range(alg.n), repeat=2):
        a, b = lo[x][y] - 1, up[y][x] - 1
        rel.append((a, y, x, b) if sign > 0 else (x, b, a, y))
    return rel


def _index(rel):
    """mask -> known values -> candidate tuples, for every subset of slots."""
    idx = []
    for mask in range(16):
        table: dict[tuple, list] = {}
        for t in rel:
            key = tuple(t[i] for i in range(4) if mask >> i & 1)
            table.setdefault(key, []).append(t)
        idx.append(table)
    return idx


def _setup(alg: FiniteAlgebra, d: DiagramCode):
    check_compatible(alg, d)
    arcs = semiarcs(d)
    cons = crossing_constraints(d)
    indexes = {}
    prepared = []
    for c in cons:
        key = (c.kind, c.sign)
        if key not in indexes:
            indexes[key] = _index(crossing_relation(alg, c.kind, c.sign))
        prepared.append((c.slots, indexes[key]))
    return len(arcs), prepared


def _consistent(t, slots) -> bool:
    # repeated semiarcs (kinks) must receive one value
    seen = {}
    for v, s in zip(t, slots):
        if seen.setdefault(s, v) != v:
            return False
    return True


def enumerate_colorings(alg: FiniteAlgebra, d: DiagramCode) -> ColoringSet:
    """All colorings, by depth-first search with forced-value propagation."""
    m, cons = _setup(alg, d)
    n = alg.n
    watch: list[list[int]] = [[] for _ in range(m)]
    for ci, (slots, _) in enumerate(cons):
        for s in set(slots):
            watch[s].append(ci)
    degenerate = [len(set(slots)) < 4 for slots, _ in cons]

    values = [-1] * m
    found: list[Coloring] = []

    def candidates(ci):
        slots, idx = cons[ci]
        mask = 0
        key = []
        for i, s in enumerate(slots):
            if values[s] >= 0:
                mask |= 1 << i
                key.append(values[s])
        cands = idx[mask].get(tuple(key), ())
        if degenerate[ci]:
            cands = [t for t in cands if _consistent(t, slots)]
        return mask, cands

    def propagate(queue, trail) -> bool:
        while queue:
            ci = queue.pop()
            slots, _ = cons[ci]
            mask, cands = candidates(ci)
            if not cands:
                return False
            if mask == 15:
                continue
            for i, s in enumerate(slots):
                if values[s] >= 0:
                    continue
                first = cands[0][i]
                if all(t[i] == first for t in cands):
                    values[s] = first
                    trail.append(s)
                    queue.extend(watch[s])
        return True

    def domain(s):
        allowed = set(range(n))
        for ci in watch[s]:
            mask, cands = candidates(ci)
            if mask == 0:
                continue
            pos = [i for i, t in enumerate(cons[ci][0]) if t == s]
            allowed &= {t[pos[0]] for t in cands}
        return sorted(allowed)

    def pick():
        best, best_score = -1, None
        for s in range(m):
            if values[s] >= 0:
                continue
            score = -sum(1 for ci in watch[s] for t in cons[ci][0] if values[t] >= 0)
            if best_score is None or score < best_score:
                best, best_score = s, score
        return best

    def search():
        s = pick()
        if s < 0:
            found.append(tuple(v + 1 for v in values))
            return
        for v in domain(s):
            values[s] = v
            trail = [s]
            if propagate(list(watch[s]), trail):
                search()
            for t in trail:
                values[t] = -1

    search()
    return ColoringSet(tuple(sorted(found)))


def brute_force_colorings(alg: FiniteAlgebra, d: DiagramCode) -> ColoringSet:
    """Filter every assignment against every crossing relation."""
    m, cons = _setup(alg, d)
    if alg.n ** m > ORACLE_LIMIT:
        raise ColoringError(f"{alg.n}^{m} assignments exceed the oracle bound")
    rels = [(slots, set(idx[0][()])) for slots, idx in cons]
    found = []
    for values in product(range(alg.n), repeat=m):
        if all(tuple(values[s] for s in slots) in rel for slots, rel in rels):
            found.append(tuple(v + 1 for v in values))
    return ColoringSet(tuple(found))


def counting_invariant(alg: FiniteAlgebra, d: DiagramCode) -> int:
    return enumerate_colorings(alg, d).count
