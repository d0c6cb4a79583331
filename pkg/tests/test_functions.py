import pytest

from leavitt_partial.boundary import finite, periodic
from leavitt_partial.fields import RATIONALS, scalar
from leavitt_partial.functions import DFunction, indicator_word, parse_dfunction
from leavitt_partial.graph import GraphError, Path

from oracles import cell_values, random_pair, random_terms, seeded


def ind(g, c, field=RATIONALS):
    return DFunction.indicator(g, c, field)


def test_indicator_examples(a2, loop, rose2):
    assert ind(a2, "f") == ind(a2, "v")
    assert ind(a2, "f").terms == {Path("v"): 1}
    assert ind(loop, "f.f") == ind(loop, "v")
    assert ind(rose2, "a").terms == {rose2.path("a"): 1}


def test_linear_examples(rose2):
    assert ind(rose2, "a") + ind(rose2, "b") == ind(rose2, "v")
    assert ind(rose2, "v").scale(0) == DFunction.zero(rose2)
    assert ind(rose2, "v") + ind(rose2, "v").scale(-1) == DFunction.zero(rose2)


def test_multiply_examples(rose2, a2):
    assert ind(rose2, "a") * ind(rose2, "a.b") == ind(rose2, "a.b")
    assert ind(rose2, "a") * ind(rose2, "b") == DFunction.zero(rose2)
    assert ind(a2, "v") * ind(a2, "w") == DFunction.zero(a2)


def test_normalize_examples(rose2, a2, loop):
    assert (ind(rose2, "a") + ind(rose2, "b")).terms == {Path("v"): 1}
    assert ind(a2, "f").terms == {Path("v"): 1}
    x = ind(loop, "f").scale(2) - ind(loop, "f.f")
    assert x.terms == {Path("v"): 1}


def test_evaluate_examples(a2, loop):
    assert ind(a2, "v").evaluate(finite(a2, "f")) == 1
    assert ind(a2, "v").evaluate(finite(a2, "w")) == 0
    assert ind(loop, "f.f").evaluate(periodic(loop, (), "f")) == 1


def test_equals_examples(rose2, any_graph):
    assert (ind(rose2, "a") + ind(rose2, "b")).equals(ind(rose2, "v"))
    assert not ind(rose2, "a").equals(ind(rose2, "v"))
    assert DFunction.zero(any_graph).equals(DFunction.zero(any_graph))


def test_graph_mismatch(rose2, a2):
    with pytest.raises(GraphError):
        ind(rose2, "a") + ind(a2, "f")


def test_parse_and_print(rose2):
    x = parse_dfunction("1/2 * 1[a] - 3 * 1[a.b] + 1[b]", rose2)
    assert x == ind(rose2, "a").scale(scalar(RATIONALS, "1/2")) - ind(rose2, "a.b").scale(3) + ind(rose2, "b")
    assert parse_dfunction(str(x), rose2) == x
    assert parse_dfunction("0", rose2) == DFunction.zero(rose2)
    assert parse_dfunction("2", rose2) == DFunction.unit(rose2).scale(2)
    with pytest.raises(ValueError):
        parse_dfunction("1[a] 1[b]", rose2)


def test_indicator_word_for_inverse(a2, toep):
    assert indicator_word(a2, "f'") == ind(a2, "w")
    # X_{g^-1} = X_{r(g)}, and X_{f.g'} = X_f
    assert indicator_word(toep, "g'") == ind(toep, "w")
    assert indicator_word(toep, "f.f'") == DFunction.unit(toep)


def _build(g, field, terms):
    return DFunction.combination(g, field, [(c, p) for c, p in terms])


def test_normal_form_matches_oracle(any_graph, field):
    rng = seeded(f"nf:{any_graph.name}:{field}")
    for _ in range(150):
        tx, ty = random_pair(any_graph, field, rng, 4)
        x, y = _build(any_graph, field, tx), _build(any_graph, field, ty)
        same = cell_values(any_graph, field, tx, 4) == cell_values(any_graph, field, ty, 4)
        assert x.equals(y) == same
        # the canonical form still evaluates like the raw terms
        assert cell_values(any_graph, field, [(v, c) for c, v in x.terms.items()], 4) == cell_values(any_graph, field, tx, 4)


def test_ring_laws(any_graph, field):
    rng = seeded(f"ring:{any_graph.name}")
    for _ in range(60):
        x, y, z = (_build(any_graph, field, random_terms(any_graph, field, rng, 3)) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * DFunction.unit(any_graph, field) == x


def test_indicators_idempotent(any_graph):
    for p in any_graph.paths_up_to(3):
        e = ind(any_graph, p)
        assert e * e == e


def test_vertex_decomposition(any_graph):
    for v in any_graph.vertices:
        out = any_graph.out_edges(v)
        if out:
            total = DFunction.zero(any_graph)
            for f in out:
                total = total + ind(any_graph, f)
            assert total == ind(any_graph, v)


def test_no_zero_coefficients(any_graph, field):
    rng = seeded(3)
    for _ in range(50):
        x = _build(any_graph, field, random_terms(any_graph, field, rng, 3))
        assert all(v for v in x.terms.values())
