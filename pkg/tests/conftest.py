from pathlib import Path

import pytest

from gscct.complex import load_facets, parse_facets
from gscct.scalars import field_make

CORPUS = Path(__file__).resolve().parents[1] / "src" / "gscct" / "corpus"
CORPUS_NAMES = ["interval", "circle", "triangle", "sphere", "rp2", "torus"]


def corpus(name):
    return load_facets(CORPUS / f"{name}.facets")


@pytest.fixture(scope="session")
def complexes():
    return {name: corpus(name) for name in CORPUS_NAMES}


@pytest.fixture
def edge():
    return parse_facets("a b")


@pytest.fixture
def circle():
    return parse_facets("a b\nb c\nc a")


@pytest.fixture
def triangle():
    return parse_facets("a b c")


@pytest.fixture(params=["z101", "q"])
def field(request):
    return field_make(request.param)


@pytest.fixture
def q():
    return field_make("q")


@pytest.fixture
def z7():
    return field_make("z7")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
