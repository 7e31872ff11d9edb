import time
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psyquiver.algebra import make_alexander_biquandle, make_jablan_psyquandle, parse_algebra
from psyquiver.coloring import (
    ColoringError,
    brute_force_colorings,
    counting_invariant,
    crossing_relation,
    enumerate_colorings,
)
from psyquiver.corpus import CORPUS
from psyquiver.diagram import CLASSICAL, MOVES, SINGULAR, parse_diagram, perturb

from conftest import torus_2


def in_figure_order(cs, order):
    return {tuple(c[i] for i in order) for c in cs}


def test_trefoil_qui1_biquandle(algebras, diagrams):
    cs = enumerate_colorings(algebras["qui1_biquandle"], diagrams["3_1"])
    assert list(cs) == [(1, 1, 1, 1, 1, 1), (2, 3, 2, 3, 2, 3), (3, 2, 3, 2, 3, 2), (4, 4, 4, 4, 4, 4)]


def test_1l1_qui1(algebras, diagrams):
    cs = enumerate_colorings(algebras["qui1"], diagrams["1l1"])
    assert in_figure_order(cs, CORPUS["1l1"].figure_order) == \
        {(1, 1, 1, 1), (1, 4, 1, 4), (4, 1, 4, 1), (4, 4, 4, 4)}


def test_pseudo_trefoil_qui1(algebras, diagrams):
    cs = enumerate_colorings(algebras["qui1"], diagrams["3_1.1"])
    assert set(cs) == {(x,) * 6 for x in range(1, 5)}


def test_unknot_and_unlink(algebras):
    for name in ["qui1", "order4_links", "alex945"]:
        assert counting_invariant(algebras[name], parse_diagram("()")) == algebras[name].n
    X = make_alexander_biquandle(3, 1, 2)
    assert brute_force_colorings(X, parse_diagram("()")).count == 3
    assert brute_force_colorings(X, parse_diagram("()\n()")).count == 9


def test_paper_counts(algebras, diagrams):
    assert counting_invariant(algebras["order4_links"], diagrams["L7a1"]) == 16
    assert counting_invariant(algebras["order4_links"], diagrams["L7a2"]) == 16
    assert counting_invariant(algebras["alex945"], diagrams["v2.1"]) == 3


def test_flavor_gating(algebras, diagrams):
    with pytest.raises(ColoringError, match="psyquandle"):
        enumerate_colorings(algebras["qui1_biquandle"], diagrams["1l1"])
    not_pi = parse_algebra("""psyquandle 3
1 1 1 | 1 1 1 | 2 2 2 | 1 1 1
2 2 2 | 2 2 2 | 3 3 3 | 2 2 2
3 3 3 | 3 3 3 | 1 1 1 | 3 3 3
""")
    assert not not_pi.pI_adequate
    with pytest.raises(ColoringError, match="pI-adequate"):
        enumerate_colorings(not_pi, diagrams["3_1.1"])
    enumerate_colorings(not_pi, diagrams["1l1"])  # singular crossings are fine


def test_relations_are_functional(algebras):
    # inputs determine outputs and vice versa
    for name in ["qui1", "order8_singular", "alex945"]:
        X = algebras[name]
        kinds = [CLASSICAL] + ([SINGULAR] if X.flavor == "psyquandle" else [])
        for kind, sign in product(kinds, (1, -1)):
            rel = crossing_relation(X, kind, sign)
            assert len({t[:2] for t in rel}) == len(rel) == X.n ** 2
            assert len({t[2:] for t in rel}) == len(rel)


def test_negative_classical_with_first_argument_ops(algebras):
    X = algebras["qui1_biquandle"]
    for in_a, in_b, out_a, out_b in crossing_relation(X, CLASSICAL, -1):
        # out_a = in_a ul out_b and in_b = out_b ol in_a, solved by exhaustive pair search
        sols = [(a, b) for a, b in product(range(4), repeat=2)
                if X.tables["ul"][in_a][b] - 1 == a and X.tables["ol"][b][in_a] - 1 == in_b]
        assert sols == [(out_a, out_b)]


def oracle_cases(algebras, diagrams):
    small = {k: v for k, v in algebras.items() if v.n <= 4}
    small["alex3"] = make_alexander_biquandle(3, 1, 2)
    small["jab3"] = make_jablan_psyquandle(3, 1, 1)
    small["jab5"] = make_jablan_psyquandle(5, 1, 3)
    ds = dict(diagrams)
    ds["3_1+r1"] = perturb(diagrams["3_1"], ["r1-"], 4)
    ds["1l1+r2"] = perturb(diagrams["1l1"], ["r2"], 1)
    ds["hopf"] = parse_diagram("O1+ U2+\nU1+ O2+")
    ds["mixed"] = parse_diagram("Sa1+ U2- Pa3 V4\nSb1+ O2- Pb3 V4")
    ds["neg-singular"] = parse_diagram("Sa1- O2+\nSb1- U2+")
    cases = []
    for an, X in small.items():
        for dn, d in ds.items():
            m = sum(len(c) for c in d.components) or 1
            if m > 8 or X.n ** m > 10**6:
                continue
            try:
                enumerate_colorings(X, d)
            except ColoringError:
                continue
            cases.append((an, dn, X, d))
    return cases


def test_oracle_equivalence(algebras, diagrams):
    cases = oracle_cases(algebras, diagrams)
    assert len(cases) >= 20
    for an, dn, X, d in cases:
        assert enumerate_colorings(X, d) == brute_force_colorings(X, d), (an, dn)


def test_determinism(algebras, diagrams):
    X, d = algebras["order4_links"], diagrams["L7a1"]
    assert enumerate_colorings(X, d) == enumerate_colorings(X, d)


def test_monochromatic_closure(algebras):
    d = torus_2(5)
    for name in ["qui1", "qui1_biquandle", "order4_links", "order8_singular", "alex945", "alex972"]:
        X = algebras[name]
        cs = enumerate_colorings(X, d)
        for x in X.elements:
            fixed = X.op("ul", x, x) == X.op("ol", x, x) == x
            assert ((x,) * 10 in cs) == fixed


def test_twenty_crossings_n8_under_budget(algebras):
    d = torus_2(21)
    for name in ["order8_singular", "order8_pseudo"]:
        start = time.perf_counter()
        cs = enumerate_colorings(algebras[name], d)
        assert time.perf_counter() - start < 10
        assert cs.count >= 1


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(MOVES), min_size=1, max_size=3), st.integers(0, 10**6))
def test_oracle_on_perturbed_trefoil(algebras, diagrams, moves, seed):
    d = perturb(diagrams["3_1"], moves, seed)
    m = sum(len(c) for c in d.components)
    X = algebras["qui1_biquandle"]
    if 4 ** m <= 10**6:
        assert enumerate_colorings(X, d) == brute_force_colorings(X, d)
    else:
        assert counting_invariant(X, d) == 4
