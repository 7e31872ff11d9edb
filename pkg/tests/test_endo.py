from itertools import product

import pytest

from psyquiver.algebra import make_alexander_biquandle, parse_algebra
from psyquiver.corpus import DATA
from psyquiver.endo import (
    EndoError,
    compose,
    endomorphism_violation,
    enumerate_endomorphisms,
    identity,
    is_endomorphism,
    make_endo_set,
    parse_endo_set,
    serialize_endo_set,
)

from conftest import VALID_ALGEBRAS


def brute_force(alg):
    return tuple(f for f in product(alg.elements, repeat=alg.n) if is_endomorphism(alg, f))


def test_paper_endomorphisms(algebras):
    assert is_endomorphism(algebras["qui1"], (1, 4, 4, 1))
    assert is_endomorphism(algebras["order8_singular"], (3, 3, 3, 3, 7, 7, 3, 7))
    for name in VALID_ALGEBRAS:
        assert is_endomorphism(algebras[name], identity(algebras[name].n))


def test_violation_witness(algebras):
    X, phi = algebras["qui1"], (2, 2, 2, 2)
    # phi(2 ul 2) = phi(3) = 2, but phi(2) ul phi(2) = 2 ul 2 = 3
    assert phi[X.op("ul", 2, 2) - 1] == 2 and X.op("ul", phi[1], phi[1]) == 3
    op, x, y = endomorphism_violation(X, phi)
    assert phi[X.op(op, x, y) - 1] != X.op(op, phi[x - 1], phi[y - 1])


def test_alexander_hom_counts():
    assert len(enumerate_endomorphisms(make_alexander_biquandle(9, 7, 2))) == 9
    assert len(enumerate_endomorphisms(make_alexander_biquandle(9, 4, 5))) == 9


def test_one_element():
    assert enumerate_endomorphisms(parse_algebra("biquandle 1\n1 1\n")).maps == ((1,),)


@pytest.mark.parametrize("name", ["qui1", "qui1_biquandle", "order4_links", "three_element"])
def test_matches_brute_force(algebras, name):
    assert enumerate_endomorphisms(algebras[name]).maps == brute_force(algebras[name])


@pytest.mark.parametrize("name", VALID_ALGEBRAS + ["alex945", "alex972"])
def test_monoid(algebras, name):
    S = enumerate_endomorphisms(algebras[name])
    assert identity(algebras[name].n) in S
    assert S.closed_under_composition
    assert list(S.maps) == sorted(set(S.maps))


@pytest.mark.parametrize("name", VALID_ALGEBRAS)
def test_constant_maps(algebras, name):
    X = algebras[name]
    for c in X.elements:
        idempotent = all(X.op(op, c, c) == c for op in X.ops)
        assert is_endomorphism(X, (c,) * X.n) == idempotent


def test_parse_endo_sets(algebras):
    qui1 = algebras["qui1"]
    S = parse_endo_set(qui1, (DATA / "endos" / "qui2_S.txt").read_text())
    assert S.maps == ((1, 1, 1, 4), (4, 4, 4, 1))
    assert parse_endo_set(qui1, "").maps == ()
    with pytest.raises(EndoError, match=r"line 2: \(2, 2, 2, 2\) is not an endomorphism \(ul fails"):
        parse_endo_set(qui1, "1 2 3 4\n2 2 2 2\n")
    with pytest.raises(EndoError, match="integers"):
        parse_endo_set(qui1, "1 a 3 4\n")
    with pytest.raises(EndoError, match="not a map"):
        parse_endo_set(qui1, "1 2 3\n")
    assert parse_endo_set(qui1, serialize_endo_set(S)) == S


def test_compose_order():
    f, g = (2, 2, 3), (3, 1, 2)
    assert compose(f, g) == (3, 2, 2)
    assert make_endo_set([f, g, f]).maps == ((2, 2, 3), (3, 1, 2))


def test_bound():
    with pytest.raises(EndoError):
        enumerate_endomorphisms(make_alexander_biquandle(13, 2, 3))
