import pytest

from psyquiver.corpus import CORPUS, load_algebra, packaged_algebras
from psyquiver.diagram import parse_diagram

VALID_ALGEBRAS = ["qui1", "qui1_biquandle", "order4_links", "order8_singular", "order8_pseudo"]


def torus_2(n: int, sign: str = "+"):
    """Gauss code of the (2, n) torus knot, n odd."""
    toks = [f"{'O' if p % 2 == 0 else 'U'}{p % n + 1}{sign}" for p in range(2 * n)]
    return parse_diagram(" ".join(toks))


@pytest.fixture(scope="session")
def algebras():
    found = {name: load_algebra(name) for name in packaged_algebras()}
    found["alex945"] = load_algebra("alexander:9:4:5")
    found["alex972"] = load_algebra("alexander:9:7:2")
    return found


@pytest.fixture(scope="session")
def diagrams():
    return {name: e.load() for name, e in CORPUS.items() if e.present}
