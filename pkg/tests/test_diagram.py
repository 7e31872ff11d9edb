import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psyquiver.coloring import counting_invariant
from psyquiver.diagram import (
    CLASSICAL,
    MOVES,
    DiagramError,
    crossing_constraints,
    crossing_counts,
    parse_diagram,
    perturb,
    relabel,
    semiarcs,
    serialize_diagram,
)

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


def test_trefoil_semiarcs():
    d = parse_diagram(TREFOIL)
    assert len(semiarcs(d)) == 6
    assert d.kind == "classical"


def test_virtual_passes_are_transparent():
    d = parse_diagram("O1+ V4 U2+ O3+ U1+ V4 O2+ U3+")
    assert len(semiarcs(d)) == 6
    assert d.kind == "virtual"
    assert [c.slots for c in crossing_constraints(d)] == \
        [c.slots for c in crossing_constraints(parse_diagram(TREFOIL))]


def test_crossingless_component():
    d = parse_diagram("()")
    assert len(semiarcs(d)) == 1
    assert crossing_constraints(d) == []
    assert len(semiarcs(parse_diagram("()\n()"))) == 2


def test_singular_with_classical():
    d = parse_diagram("Sa1+ U2+ Sb1+ O2+")
    assert len(semiarcs(d)) == 4
    assert d.kind == "mixed"


def test_trefoil_constraint_slots():
    # semiarc k runs from pass k to pass k+1
    c1 = crossing_constraints(parse_diagram(TREFOIL))[0]
    assert (c1.in_b, c1.out_b) == (5, 0)  # O1 at position 0
    assert (c1.in_a, c1.out_a) == (2, 3)  # U1 at position 3
    assert c1.kind == CLASSICAL and c1.sign == 1


def test_default_sign_on_singular_tokens():
    d = parse_diagram("Pa1 Pb1\nSa2 Sb2")
    assert all(p.sign == 1 for p in d.passes)
    assert serialize_diagram(d) == "Pa1+ Pb1+\nSa2+ Sb2+\n"


@pytest.mark.parametrize("text, msg", [
    ("", "no components"),
    ("O1+ U1+ O1+", "appears 3 times"),
    ("O1+ O1+", "two over"),
    ("Sa1 Sa1", "two role-a"),
    ("O1+ U1-", "mismatched signs"),
    ("O1+ Sa1", "mixes"),
    ("O1 U1", "needs a sign"),
    ("V1+ V1", "takes no sign"),
    ("X1+", "bad token"),
])
def test_rejects_bad_codes(text, msg):
    with pytest.raises(DiagramError, match=msg):
        parse_diagram(text)


def test_kink_slots_coincide():
    c = crossing_constraints(parse_diagram("O1+ U1+"))[0]
    assert len(set(c.slots)) == 2


# -- random codes ---------------------------------------------------------------------

@st.composite
def gauss_codes(draw):
    k = draw(st.integers(0, 6))
    passes = []
    for ident in range(1, k + 1):
        kind = draw(st.sampled_from(["O", "S", "P", "V"]))
        sign = draw(st.sampled_from(["+", "-"]))
        if kind == "O":
            passes += [f"O{ident}{sign}", f"U{ident}{sign}"]
        elif kind == "V":
            passes += [f"V{ident}", f"V{ident}"]
        else:
            passes += [f"{kind}a{ident}{sign}", f"{kind}b{ident}{sign}"]
    passes = draw(st.permutations(passes))
    cuts = sorted(draw(st.lists(st.integers(0, len(passes)), max_size=2)))
    comps, last = [], 0
    for c in cuts + [len(passes)]:
        comps.append(passes[last:c])
        last = c
    return "\n".join(" ".join(c) if c else "()" for c in comps) + "\n"


@settings(max_examples=150, deadline=None)
@given(gauss_codes())
def test_serialize_round_trip(text):
    d = parse_diagram(text)
    assert serialize_diagram(d) == text
    assert parse_diagram(serialize_diagram(d)) == d


@settings(max_examples=150, deadline=None)
@given(gauss_codes())
def test_semiarc_count(text):
    d = parse_diagram(text)
    expected = 0
    for comp in d.components:
        real = [p for p in comp if p.kind != "virtual"]
        expected += len(real) if real else 1
    assert len(semiarcs(d)) == expected
    # each semiarc is the input of exactly one pass and the output of exactly one
    ins = [s for c in crossing_constraints(d) for s in (c.in_a, c.in_b)]
    outs = [s for c in crossing_constraints(d) for s in (c.out_a, c.out_b)]
    assert sorted(ins) == sorted(outs)
    assert len(set(ins)) == len(ins)


# -- perturbations ---------------------------------------------------------------------

def test_perturb_r1_adds_a_kink():
    d = parse_diagram(TREFOIL)
    p = perturb(d, ["r1+"], 7)
    assert len(p.passes) == 8
    assert crossing_counts(p)[CLASSICAL] == 8
    assert perturb(d, ["r1+"], 7) == p


def test_perturb_r2_on_unknot(algebras):
    p = perturb(parse_diagram("()"), ["r2"], 3)
    assert len(p.passes) == 4
    for name in ["qui1_biquandle", "order4_links", "alex945", "alex972"]:
        assert counting_invariant(algebras[name], p) == algebras[name].n


def test_perturb_rejects_unknown_move():
    with pytest.raises(DiagramError):
        perturb(parse_diagram(TREFOIL), ["r3"], 0)


@pytest.mark.parametrize("code", ["O1+ U1+", "U1+ O1+", "O1- U1-", "U1- O1-"])
@pytest.mark.parametrize("name", ["qui1_biquandle", "order4_links", "alex945", "alex972"])
def test_every_kink_is_trivial(algebras, code, name):
    assert counting_invariant(algebras[name], parse_diagram(code)) == algebras[name].n


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(MOVES), min_size=1, max_size=4), st.integers(0, 10**6))
def test_perturb_preserves_counts(algebras, moves, seed):
    d = parse_diagram(TREFOIL)
    for name in ["alex945", "order4_links", "qui1_biquandle"]:
        X = algebras[name]
        assert counting_invariant(X, perturb(d, moves, seed)) == counting_invariant(X, d)


def test_relabel_is_first_appearance():
    d = perturb(parse_diagram(TREFOIL), ["r2", "r1-"], 11)
    r = relabel(d)
    firsts = []
    for p in r.passes:
        if p.crossing not in firsts:
            firsts.append(p.crossing)
    assert firsts == list(range(1, len(firsts) + 1))
