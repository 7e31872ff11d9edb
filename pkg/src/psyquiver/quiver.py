"""Coloring quivers and their in-degree polynomials."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .coloring import ColoringSet
from .endo import EndoMap, EndoSet

ISO_LIMIT = 12


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int, int], ...]  # (source, target, endo index)
    endos: tuple[EndoMap, ...] = ()

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for _, t, _ in self.edges:
            deg[t] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for s, _, _ in self.edges:
            deg[s] += 1
        return deg

    def multiplicities(self) -> Counter:
        return Counter((s, t) for s, t, _ in self.edges)


def build_quiver(colorings: ColoringSet, S: EndoSet) -> Quiver:
    """One edge f -> phi(f) for every coloring f and every phi in S."""
    verts = tuple(colorings.colorings)
    where = {c: i for i, c in enumerate(verts)}
    maps = tuple(S.maps)
    edges = []
    for i, f in enumerate(verts):
        for k, phi in enumerate(maps):
            g = tuple(phi[v - 1] for v in f)
            if g not in where:
                raise QuiverError(f"{phi} sends coloring {f} to non-coloring {g}")
            edges.append((i, where[g], k))
    q = Quiver(verts, tuple(edges), maps)
    assert sum(q.in_degrees()) == len(maps) * len(verts)
    return q


# -- polynomials ---------------------------------------------------------------------

@dataclass(frozen=True)
class InDegreePolynomial:
    terms: tuple[tuple[int, int], ...]  # (exponent, coefficient), exponent descending

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> InDegreePolynomial:
        return cls(tuple(sorted(((e, c) for e, c in terms.items() if c), reverse=True)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __call__(self, u: int) -> int:
        return sum(c * u**e for e, c in self.terms)

    def __str__(self):
        return polynomial_to_string(self)


def in_degree_polynomial(q: Quiver) -> InDegreePolynomial:
    return InDegreePolynomial.from_dict(Counter(q.in_degrees()))


def polynomial_to_string(p: InDegreePolynomial) -> str:
    parts = []
    for e, c in p.terms:
        coef = "" if c == 1 and e else str(c)
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append(f"{coef}u")
        else:
            parts.append(f"{coef}u^{e}")
    return " + ".join(parts) if parts else "0"


_TERM = re.compile(r"^(\d*)(?:(u)(?:\^\{?(\d+)\}?)?)?$")


def parse_polynomial(text: str) -> InDegreePolynomial:
    """Read 'u^21 + 2u^12 + 6u^6' style text (LaTeX braces tolerated)."""
    terms: Counter = Counter()
    for raw in text.replace(" ", "").split("+"):
        m = _TERM.match(raw)
        if not raw or not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"bad polynomial term {raw!r}")
        coef, u, exp = m.groups()
        c = int(coef) if coef else 1
        e = 0 if not u else int(exp) if exp else 1
        terms[e] += c
    return InDegreePolynomial.from_dict(terms)


# -- export and comparison ---------------------------------------------------------------

def _label(t) -> str:
    return "(" + ", ".join(map(str, t)) + ")"


def export_dot(q: Quiver, name: str = "quiver") -> str:
    lines = [f"digraph {name} {{"]
    for i, v in enumerate(q.vertices):
        lines.append(f'  v{i} [label="{_label(v)}"];')
    for s, t, k in q.edges:
        lines.append(f'  v{s} -> v{t} [label="phi{k + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quivers_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    """Exact search for a vertex bijection preserving edge multiplicities."""
    n = len(q1.vertices)
    if max(n, len(q2.vertices)) > ISO_LIMIT:
        raise QuiverError(f"isomorphism search is limited to {ISO_LIMIT} vertices")
    if n != len(q2.vertices) or len(q1.edges) != len(q2.edges):
        return False
    m1, m2 = q1.multiplicities(), q2.multiplicities()

    def signature(q, m):
        ind, outd = q.in_degrees(), q.out_degrees()
        return [(ind[v], outd[v], m[(v, v)]) for v in range(len(q.vertices))]

    sig1, sig2 = signature(q1, m1), signature(q2, m2)
    if sorted(sig1) != sorted(sig2):
        return False
    # most constrained classes first
    order = sorted(range(n), key=lambda v: (sig1.count(sig1[v]), v))
    image = [-1] * n
    used = [False] * n

    def extend(depth):
        if depth == n:
            return True
        v = order[depth]
        for w in range(n):
            if used[w] or sig2[w] != sig1[v]:
                continue
            ok = all(m1[(v, u)] == m2[(w, image[u])] and m1[(u, v)] == m2[(image[u], w)]
                     for u in order[:depth])
            if not ok:
                continue
            image[v], used[w] = w, True
            if extend(depth + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)
