"""Convert LinkInfo PD codes into diagram files.

Usage:
    python scripts/linkinfo_to_gauss.py L7a1{0} L7a2{1}
    python scripts/linkinfo_to_gauss.py --pd "{{4,1,3,2},{2,3,1,4}}"

Needs the ``database_knotinfo`` package for name lookups.  A PD crossing
X[i,j,k,l] lists edges counterclockwise from the incoming under-edge i; the
crossing is positive when the over strand runs from l to j.
"""

import argparse
import ast
import csv
import os
import sys


def components_of(pd):
    """Edge-label ranges per component (PD labels are consecutive per component)."""
    parent = {}

    def find(e):
        while parent.setdefault(e, e) != e:
            e = parent[e]
        return e

    for i, j, k, l in pd:
        parent[find(i)] = find(k)
        parent[find(j)] = find(l)
    groups = {}
    for e in list(parent):
        groups.setdefault(find(e), []).append(e)
    ranges = sorted((min(g), max(g)) for g in groups.values())
    return ranges


def pd_to_gauss(pd):
    ranges = components_of(pd)

    def succ(e):
        for lo, hi in ranges:
            if lo <= e <= hi:
                return lo if e == hi else e + 1
        raise ValueError(e)

    # each edge is incoming at exactly one crossing; two-edge components make
    # the successor test ambiguous, so settle those by elimination
    options = {}
    for c, (i, j, k, l) in enumerate(pd, start=1):
        options[c] = [e for e, f in ((l, j), (j, l)) if succ(e) == f]
    taken = {i for i, *_ in pd}
    chosen = {}
    while len(chosen) < len(pd):
        progress = False
        for c, opts in options.items():
            if c in chosen:
                continue
            free = [e for e in opts if e not in taken]
            if len(free) == 1:
                chosen[c] = free[0]
                taken.add(free[0])
                progress = True
        if not progress:
            raise ValueError("cannot orient over strands")
    ends = {}  # incoming edge -> (crossing, 'O'/'U')
    signs = {}
    for c, (i, j, k, l) in enumerate(pd, start=1):
        signs[c] = "+" if chosen[c] == l else "-"
        ends[i] = (c, "U")
        ends[chosen[c]] = (c, "O")
    lines = []
    for lo, hi in ranges:
        toks = []
        for e in range(lo, hi + 1):
            c, side = ends[e]
            toks.append(f"{side}{c}{signs[c]}")
        lines.append(" ".join(toks))
    return "\n".join(lines) + "\n"


def parse_pd(text):
    return [tuple(x) for x in ast.literal_eval(text.replace("{", "[").replace("}", "]"))]


def linkinfo_pd(name):
    import database_knotinfo

    csv.field_size_limit(10**9)
    data = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data",
                        "linkinfo_data_complete.csv")
    with open(data) as fh:
        rows = csv.reader(fh, delimiter="|")
        header = next(rows)
        col = header.index("pd_notation_vector")
        for row in rows:
            if row[0] == name:
                return parse_pd(row[col])
    raise KeyError(name)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*")
    ap.add_argument("--pd")
    args = ap.parse_args(argv)
    if args.pd:
        sys.stdout.write(pd_to_gauss(parse_pd(args.pd)))
    for name in args.names:
        pd = linkinfo_pd(name)
        sys.stdout.write(f"# {name} from LinkInfo, PD {pd}\n")
        sys.stdout.write(pd_to_gauss(pd))


if __name__ == "__main__":
    main()
