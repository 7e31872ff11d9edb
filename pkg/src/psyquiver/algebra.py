"""Finite biquandles and psyquandles given by operation tables.

Elements are the integers ``1..n``.  A table ``t`` stores ``x op y`` at
``t[x - 1][y - 1]``.  Operation ids:

    ul  under-triangle      ol  over-triangle
    ub  under-bullet        ob  over-bullet

and ``<id>_inv`` for the right inverses, derived from the column permutations.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

BIQUANDLE = "biquandle"
PSYQUANDLE = "psyquandle"
FLAVORS = (BIQUANDLE, PSYQUANDLE)

OPS_BY_FLAVOR = {
    BIQUANDLE: ("ul", "ol"),
    PSYQUANDLE: ("ul", "ol", "ub", "ob"),
}
OP_SYMBOLS = {"ul": "▷̲", "ol": "▷̄", "ub": "•̲", "ob": "•̄"}

Table = tuple[tuple[int, ...], ...]


class AlgebraError(ValueError):
    """Raised for unusable algebras or bad constructor parameters."""


class AlgebraParseError(AlgebraError):
    def __init__(self, message: str, line: int, column: int | None = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


def _column_inverse(table: Table) -> Table | None:
    """Right-inverse table, or None when some column is not a permutation."""
    n = len(table)
    inv = [[0] * n for _ in range(n)]
    for y in range(n):
        seen = set()
        for x in range(n):
            z = table[x][y]
            if z in seen:
                return None
            seen.add(z)
            inv[z - 1][y] = x + 1
    return tuple(tuple(row) for row in inv)


@dataclass(frozen=True)
class FiniteAlgebra:
    flavor: str
    n: int
    tables: dict[str, Table]
    inverse_tables: dict[str, Table | None] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise AlgebraError(f"unknown flavor {self.flavor!r}")
        if set(self.tables) != set(OPS_BY_FLAVOR[self.flavor]):
            raise AlgebraError(f"{self.flavor} needs tables {OPS_BY_FLAVOR[self.flavor]}")
        for op, t in self.tables.items():
            if len(t) != self.n or any(len(row) != self.n for row in t):
                raise AlgebraError(f"table {op} is not {self.n}x{self.n}")
            if any(not 1 <= v <= self.n for row in t for v in row):
                raise AlgebraError(f"table {op} has entries outside 1..{self.n}")
        inverses = {op: _column_inverse(t) for op, t in self.tables.items()}
        object.__setattr__(self, "inverse_tables", inverses)

    @property
    def ops(self) -> tuple[str, ...]:
        return OPS_BY_FLAVOR[self.flavor]

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    @property
    def right_invertible(self) -> bool:
        return all(t is not None for t in self.inverse_tables.values())

    @property
    def pI_adequate(self) -> bool:
        if self.flavor != PSYQUANDLE:
            return False
        ub, ob = self.tables["ub"], self.tables["ob"]
        return all(ub[i][i] == ob[i][i] for i in range(self.n))

    def table(self, op_id: str) -> Table:
        base, _, inv = op_id.partition("_")
        if base not in self.tables or (inv and inv != "inv"):
            raise AlgebraError(f"operation {op_id!r} is not available for a {self.flavor}")
        if not inv:
            return self.tables[base]
        t = self.inverse_tables[base]
        if t is None:
            raise AlgebraError(f"operation {base!r} is not right-invertible")
        return t

    def op(self, op_id: str, x: int, y: int) -> int:
        return self.table(op_id)[x - 1][y - 1]

    def pair_map_S(self) -> dict[tuple[int, int], tuple[int, int]]:
        """(x, y) -> (y ol x, x ul y)."""
        ul, ol = self.tables["ul"], self.tables["ol"]
        return {(x, y): (ol[y - 1][x - 1], ul[x - 1][y - 1])
                for x, y in product(self.elements, repeat=2)}

    def pair_map_Sprime(self) -> dict[tuple[int, int], tuple[int, int]]:
        """(x, y) -> (y ob x, x ub y); psyquandles only."""
        ub, ob = self.table("ub"), self.table("ob")
        return {(x, y): (ob[y - 1][x - 1], ub[x - 1][y - 1])
                for x, y in product(self.elements, repeat=2)}

    def biquandle_part(self) -> FiniteAlgebra:
        return FiniteAlgebra(BIQUANDLE, self.n, {op: self.tables[op] for op in ("ul", "ol")})


def op_apply(alg: FiniteAlgebra, op_id: str, x: int, y: int) -> int:
    return alg.op(op_id, x, y)


# -- file format ---------------------------------------------------------------

_HEADER = re.compile(r"^\s*(\S+)\s+(\S+)\s*$")


def parse_algebra(text: str) -> FiniteAlgebra:
    """Parse an algebra file.

    Line 1 (after ``#`` comments and blank lines) is ``<flavor> <n>``, then
    ``n`` rows of ``2n`` or ``4n`` integers.  ``|`` characters are ignored so
    block matrices can be pasted as printed.
    """
    lines = [(i + 1, raw.replace("|", " ")) for i, raw in enumerate(text.splitlines())]
    lines = [(no, s) for no, s in lines if s.strip() and not s.lstrip().startswith("#")]
    if not lines:
        raise AlgebraParseError("empty algebra file", 1)
    no, header = lines[0]
    m = _HEADER.match(header)
    if not m:
        raise AlgebraParseError("header must be '<flavor> <n>'", no)
    flavor, n_text = m.groups()
    if flavor not in FLAVORS:
        raise AlgebraParseError(f"unknown flavor {flavor!r}", no, 1)
    if not n_text.isdigit() or int(n_text) < 1:
        raise AlgebraParseError(f"bad carrier size {n_text!r}", no, 2)
    n = int(n_text)
    ops = OPS_BY_FLAVOR[flavor]
    width = len(ops) * n
    body = lines[1:]
    if len(body) != n:
        last = body[-1][0] if body else no
        raise AlgebraParseError(f"expected {n} rows, found {len(body)}", last)
    rows = []
    for no, s in body:
        tokens = s.split()
        if len(tokens) != width:
            raise AlgebraParseError(f"expected {width} entries, found {len(tokens)}", no)
        row = []
        for col, tok in enumerate(tokens, start=1):
            if not tok.lstrip("-").isdigit():
                raise AlgebraParseError(f"not an integer: {tok!r}", no, col)
            v = int(tok)
            if not 1 <= v <= n:
                raise AlgebraParseError(f"entry {v} outside 1..{n}", no, col)
            row.append(v)
        rows.append(row)
    tables = {op: tuple(tuple(r[k * n:(k + 1) * n]) for r in rows) for k, op in enumerate(ops)}
    return FiniteAlgebra(flavor, n, tables)


def serialize_algebra(alg: FiniteAlgebra) -> str:
    out = [f"{alg.flavor} {alg.n}"]
    width = len(str(alg.n))
    for i in range(alg.n):
        blocks = [" ".join(f"{v:>{width}}" for v in alg.tables[op][i]) for op in alg.ops]
        out.append(" | ".join(blocks))
    return "\n".join(out) + "\n"


# -- validation -----------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    axiom: str
    equation: str
    witness: tuple[int, ...]
    lhs: int | tuple | None = None
    rhs: int | tuple | None = None

    def __str__(self):
        vals = "" if self.lhs is None else f": {self.lhs} != {self.rhs}"
        return f"axiom ({self.axiom}) {self.equation} at {self.witness}{vals}"


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    flavor: str
    pI_adequate: bool
    violations: tuple[Violation, ...]

    def failed_axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}


# Each equation: (name, arity, lhs(o, *args), rhs(o, *args)); ``o`` maps an op
# id to a binary function on elements.
Equation = tuple[str, int, Callable, Callable]

_EXCHANGE: list[Equation] = [
    ("ul/ul/ul", 3,
     lambda o, x, y, z: o.ul(o.ul(x, y), o.ul(z, y)),
     lambda o, x, y, z: o.ul(o.ul(x, z), o.ol(y, x))),
    ("ul/ol/ol", 3,
     lambda o, x, y, z: o.ol(o.ul(x, y), o.ul(z, y)),
     lambda o, x, y, z: o.ul(o.ol(x, z), o.ol(y, x))),
    ("ol/ol/ol", 3,
     lambda o, x, y, z: o.ol(o.ol(x, y), o.ol(z, y)),
     lambda o, x, y, z: o.ol(o.ol(x, z), o.ul(y, x))),
]

_MIXED: list[Equation] = [
    ("iv-1", 2,
     lambda o, x, y: o.ub(x, o.ob_inv(o.ol(y, x), x)),
     lambda o, x, y: o.ol(o.ob_inv(o.ul(x, y), y), o.ub_inv(o.ol(y, x), x))),
    ("iv-2", 2,
     lambda o, x, y: o.ub(y, o.ob_inv(o.ul(x, y), y)),
     lambda o, x, y: o.ul(o.ob_inv(o.ol(y, x), x), o.ob_inv(o.ul(x, y), y))),
]

_SINGULAR_PASS: list[Equation] = [
    ("v-1", 3,
     lambda o, x, y, z: o.ol(o.ol(x, y), o.ob(z, y)),
     lambda o, x, y, z: o.ol(o.ol(x, z), o.ub(y, z))),
    ("v-2", 3,
     lambda o, x, y, z: o.ul(o.ul(x, y), o.ob(z, y)),
     lambda o, x, y, z: o.ul(o.ul(x, z), o.ub(y, z))),
    ("v-3", 3,
     lambda o, x, y, z: o.ob(o.ol(x, y), o.ol(z, y)),
     lambda o, x, y, z: o.ol(o.ob(x, z), o.ul(y, z))),
    ("v-4", 3,
     lambda o, x, y, z: o.ub(o.ul(x, y), o.ul(z, y)),
     lambda o, x, y, z: o.ul(o.ub(x, z), o.ol(y, z))),
    ("v-5", 3,
     lambda o, x, y, z: o.ub(o.ol(x, y), o.ol(z, y)),
     lambda o, x, y, z: o.ol(o.ub(x, z), o.ul(y, z))),
    ("v-6", 3,
     lambda o, x, y, z: o.ob(o.ul(x, y), o.ul(z, y)),
     lambda o, x, y, z: o.ul(o.ob(x, z), o.ol(y, z))),
]


class _Ops:
    """Attribute access to table lookups: ``o.ul(x, y)``, ``o.ob_inv(x, y)``."""

    def __init__(self, alg: FiniteAlgebra):
        self._alg = alg

    def __getattr__(self, name):
        t = self._alg.table(name)
        return lambda x, y: t[x - 1][y - 1]


def _check(o: _Ops, axiom: str, equations: list[Equation], n: int) -> list[Violation]:
    found = []
    for name, arity, lhs, rhs in equations:
        for args in product(range(1, n + 1), repeat=arity):
            a, b = lhs(o, *args), rhs(o, *args)
            if a != b:
                found.append(Violation(axiom, name, args, a, b))
    return found


def _bijectivity(pairs: dict, axiom: str, name: str) -> list[Violation]:
    first: dict = {}
    found = []
    for src, img in pairs.items():
        if img in first:
            found.append(Violation(axiom, name, first[img] + src, img, img))
        else:
            first[img] = src
    return found


def validate(alg: FiniteAlgebra) -> ValidationReport:
    """Check every axiom exhaustively and report all violations."""
    n = alg.n
    o = _Ops(alg)
    violations: list[Violation] = []
    for op in alg.ops:
        t = alg.tables[op]
        for y in range(n):
            column = [t[x][y] for x in range(n)]
            if len(set(column)) != n:
                violations.append(Violation("0", f"column of {op}", (y + 1,), tuple(column)))
    for x in alg.elements:
        a, b = o.ul(x, x), o.ol(x, x)
        if a != b:
            violations.append(Violation("i", "x ul x = x ol x", (x,), a, b))
    violations += _bijectivity(alg.pair_map_S(), "ii", "S")
    violations += _check(o, "iii", _EXCHANGE, n)
    if alg.flavor == PSYQUANDLE:
        violations += _bijectivity(alg.pair_map_Sprime(), "ii", "S'")
        if alg.inverse_tables["ub"] is not None and alg.inverse_tables["ob"] is not None:
            violations += _check(o, "iv", _MIXED, n)
        violations += _check(o, "v", _SINGULAR_PASS, n)
    return ValidationReport(not violations, alg.flavor, alg.pI_adequate, tuple(violations))


# -- constructors ------------------------------------------------------------------

def _from_functions(flavor: str, n: int, funcs: dict[str, Callable[[int, int], int]]) -> FiniteAlgebra:
    # functions act on residues 0..n-1; element k encodes residue k-1
    tables = {
        op: tuple(tuple(f(x, y) % n + 1 for y in range(n)) for x in range(n))
        for op, f in funcs.items()
    }
    return FiniteAlgebra(flavor, n, tables)


def _require_units(n: int, **params: int) -> None:
    for name, v in params.items():
        if math.gcd(v, n) != 1:
            raise AlgebraError(f"{name}={v} is not a unit mod {n}")


def make_alexander_biquandle(n: int, t: int, s: int) -> FiniteAlgebra:
    """x ul y = t x + (s - t) y,  x ol y = s x  (mod n)."""
    if n < 1:
        raise AlgebraError("modulus must be positive")
    _require_units(n, t=t, s=s)
    return _from_functions(BIQUANDLE, n, {
        "ul": lambda x, y: t * x + (s - t) * y,
        "ol": lambda x, y: s * x,
    })


def make_jablan_psyquandle(n: int, t: int, s: int) -> FiniteAlgebra:
    """Alexander biquandle plus x ub y = x ob y = ((s+t)/2) x + ((s-t)/2) y."""
    if n < 1 or n % 2 == 0:
        raise AlgebraError("modulus must be odd")
    _require_units(n, t=t, s=s)
    # the bullet columns are x -> ((s+t)/2) x + c, bijective only for a unit s+t
    _require_units(n, **{"s+t": s + t})
    half = pow(2, -1, n) if n > 1 else 0
    p, q = (s + t) * half, (s - t) * half
    bullet = lambda x, y: p * x + q * y  # noqa: E731
    return _from_functions(PSYQUANDLE, n, {
        "ul": lambda x, y: t * x + (s - t) * y,
        "ol": lambda x, y: s * x,
        "ub": bullet,
        "ob": bullet,
    })
