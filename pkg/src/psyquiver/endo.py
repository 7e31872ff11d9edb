"""Endomorphisms of a finite biquandle or psyquandle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import FiniteAlgebra

ENDO_LIMIT = 12

EndoMap = tuple[int, ...]


class EndoError(ValueError):
    pass


@dataclass(frozen=True)
class EndoSet:
    maps: tuple[EndoMap, ...]
    closed_under_composition: bool

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __contains__(self, f):
        return tuple(f) in self.maps


def compose(f: EndoMap, g: EndoMap) -> EndoMap:
    """f after g."""
    return tuple(f[v - 1] for v in g)


def identity(n: int) -> EndoMap:
    return tuple(range(1, n + 1))


def endomorphism_violation(alg: FiniteAlgebra, f) -> tuple[str, int, int] | None:
    """First (op, x, y) with f(x op y) != f(x) op f(y), or None."""
    f = tuple(f)
    if len(f) != alg.n or any(not 1 <= v <= alg.n for v in f):
        raise EndoError(f"{f} is not a map on 1..{alg.n}")
    for op in alg.ops:
        t = alg.tables[op]
        for x, y in product(range(alg.n), repeat=2):
            if f[t[x][y] - 1] != t[f[x] - 1][f[y] - 1]:
                return op, x + 1, y + 1
    return None


def is_endomorphism(alg: FiniteAlgebra, f) -> bool:
    return endomorphism_violation(alg, f) is None


def is_closed(maps) -> bool:
    present = set(maps)
    return all(compose(f, g) in present for f in present for g in present)


def make_endo_set(maps) -> EndoSet:
    maps = tuple(sorted(set(tuple(f) for f in maps)))
    return EndoSet(maps, is_closed(maps))


def enumerate_endomorphisms(alg: FiniteAlgebra) -> EndoSet:
    """Backtrack over images of 1..n; f(x op y) is forced once f(x), f(y) are set."""
    n = alg.n
    if n > ENDO_LIMIT:
        raise EndoError(f"exhaustive search is limited to n <= {ENDO_LIMIT}")
    tables = [[[v - 1 for v in row] for row in alg.tables[op]] for op in alg.ops]
    f = [-1] * n
    found = []

    def propagate(trail) -> bool:
        changed = True
        while changed:
            changed = False
            for t in tables:
                for x in range(n):
                    fx = f[x]
                    if fx < 0:
                        continue
                    row, frow = t[x], t[fx]
                    for y in range(n):
                        fy = f[y]
                        if fy < 0:
                            continue
                        z, want = row[y], frow[fy]
                        if f[z] < 0:
                            f[z] = want
                            trail.append(z)
                            changed = True
                        elif f[z] != want:
                            return False
        return True

    def search():
        try:
            x = f.index(-1)
        except ValueError:
            found.append(tuple(v + 1 for v in f))
            return
        for v in range(n):
            f[x] = v
            trail = [x]
            if propagate(trail):
                search()
            for z in trail:
                f[z] = -1

    search()
    return make_endo_set(found)


def parse_endo_set(alg: FiniteAlgebra, text: str) -> EndoSet:
    maps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            f = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise EndoError(f"line {lineno}: images must be integers") from None
        bad = endomorphism_violation(alg, f)
        if bad is not None:
            op, x, y = bad
            raise EndoError(f"line {lineno}: {f} is not an endomorphism "
                            f"({op} fails at x={x}, y={y})")
        maps.append(f)
    return make_endo_set(maps)


def serialize_endo_set(S: EndoSet) -> str:
    return "".join(" ".join(map(str, f)) + "\n" for f in S.maps)
