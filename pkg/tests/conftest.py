import pytest

from leavitt_partial.corpus import load_corpus_graph
from leavitt_partial.fields import RATIONALS, prime_field
from leavitt_partial.graph import Graph

GF5 = prime_field(5)


@pytest.fixture
def loop():
    return load_corpus_graph("loop")


@pytest.fixture
def rose2():
    return load_corpus_graph("rose2")


@pytest.fixture
def a2():
    return load_corpus_graph("a2")


@pytest.fixture
def toep():
    return load_corpus_graph("toeplitz")


@pytest.fixture(params=["loop", "rose2", "a2", "toeplitz"])
def any_graph(request):
    return load_corpus_graph(request.param)


@pytest.fixture(params=[RATIONALS, GF5], ids=["QQ", "GF5"])
def field(request):
    return request.param


def make_graph(vertices, edges, name=""):
    """edges as 'f:v->w' strings."""
    spec = []
    for e in edges:
        f, rest = e.split(":")
        s, d = rest.split("->")
        spec.append({"id": f, "src": s, "dst": d})
    return Graph.from_dict({"vertices": list(vertices), "edges": spec}, name=name)
