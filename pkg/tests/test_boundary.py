import pytest

from leavitt_partial.boundary import (
    EventuallyPeriodic,
    FiniteToSink,
    boundary_paths,
    cylinder_label,
    cylinder_partition,
    finite,
    in_cylinder,
    periodic,
    representative,
    theta_apply,
)
from leavitt_partial.corpus import random_graphs
from leavitt_partial.graph import GraphError, Path
from leavitt_partial.words import Word, words_up_to


def test_in_cylinder_examples(loop, a2):
    f_inf = periodic(loop, (), ("f",))
    assert in_cylinder(f_inf, loop.path("f.f"))
    assert not in_cylinder(finite(a2, "w"), Path("v"))
    assert in_cylinder(finite(a2, "f"), a2.path("f"))


def test_partition_examples(a2, loop, rose2):
    assert set(cylinder_partition(a2, 1)) == {a2.path("f"), Path("w")}
    assert cylinder_partition(loop, 2) == [loop.path("f.f")]
    assert cylinder_partition(rose2, 1) == [rose2.path("a"), rose2.path("b")]
    assert cylinder_label(rose2.path("a")) == "X[a]"


def test_theta_examples(a2, loop, rose2):
    assert theta_apply(a2, Word.parse("f"), finite(a2, "w")) == finite(a2, "f")
    f_inf = periodic(loop, (), "f")
    assert theta_apply(loop, "f", f_inf) == f_inf
    xi = periodic(rose2, ("b",), ("a",))
    assert theta_apply(rose2, Word.parse("a.b'"), xi) == periodic(rose2, ("a",), ("a",))
    # outside X_{g^-1}
    assert theta_apply(a2, "f", finite(a2, "f")) is None
    assert theta_apply(rose2, Word.parse("a'.b"), xi) is None


def test_periodic_normalization(rose2):
    # ab ab ab ... written three ways
    p1 = periodic(rose2, (), ("a", "b"))
    p2 = periodic(rose2, ("a",), ("b", "a"))
    p3 = periodic(rose2, ("a", "b"), ("a", "b", "a", "b"))
    assert p1 == p2 == p3
    assert p1.head(5) == ("a", "b", "a", "b", "a")
    # a rotation is a different path
    assert periodic(rose2, (), ("b", "a")) != p1
    with pytest.raises(GraphError):
        periodic(rose2, (), ())


def test_finite_requires_sink(a2):
    with pytest.raises(GraphError):
        finite(a2, "v")


def _graphs():
    gs = random_graphs(10, seed=3)
    return list(gs.values())


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_partition_is_disjoint_cover(any_graph, d):
    cells = cylinder_partition(any_graph, d)
    for xi in boundary_paths(any_graph, d + 2):
        assert sum(in_cylinder(xi, c) for c in cells) == 1


def test_partition_random_graphs():
    for g in _graphs():
        for d in range(3):
            cells = cylinder_partition(g, d)
            for xi in boundary_paths(g, d + 2):
                assert sum(in_cylinder(xi, c) for c in cells) == 1


def test_every_cylinder_nonempty():
    for g in _graphs():
        for c in g.paths_up_to(3):
            assert in_cylinder(representative(g, c), c)


def test_theta_identity_and_inverse(any_graph):
    paths = boundary_paths(any_graph, 4)
    for g in words_up_to(any_graph, 3):
        for xi in paths:
            assert theta_apply(any_graph, Word(), xi) == xi
            y = theta_apply(any_graph, g, xi)
            if y is not None:
                assert theta_apply(any_graph, ~g, y) == xi


def test_boundary_paths_kinds(a2, loop):
    assert set(boundary_paths(a2, 3)) == {FiniteToSink(Path("w")), finite(a2, "f")}
    assert boundary_paths(loop, 3) == [EventuallyPeriodic("v", (), ("f",))]
