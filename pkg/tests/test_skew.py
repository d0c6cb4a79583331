import pytest

from leavitt_partial.functions import DFunction
from leavitt_partial.partial_action import alpha_apply, membership, unit_of
from leavitt_partial.skew import (
    Inverse,
    NotInvertible,
    SkewElement,
    check_associativity,
    check_strong_grading,
    grade_component,
    identity,
    live_words,
    multiply,
    parse_skew,
    random_element,
    support,
    try_invert_homogeneous,
)
from leavitt_partial.words import Word

from oracles import seeded

W = Word.parse


def mono(g, c, w):
    return SkewElement.monomial(DFunction.indicator(g, c), W(w))


def test_product_examples(a2, loop, rose2):
    assert mono(a2, "w", "f'") * mono(a2, "v", "f") == mono(a2, "w", "e")
    assert mono(loop, "v", "f") * mono(loop, "v", "f'") == mono(loop, "v", "e")
    assert (SkewElement.generator(rose2, "a'") * SkewElement.generator(rose2, "b")).is_zero()


def test_identity_examples(loop, a2, any_graph):
    assert identity(loop) == mono(loop, "v", "e")
    assert identity(a2) == SkewElement(a2, comps={Word(): DFunction.indicator(a2, "v") + DFunction.indicator(a2, "w")})
    rng = seeded(5)
    one = identity(any_graph)
    for _ in range(20):
        x = random_element(any_graph, one.field, rng, 2)
        assert one * x == x == x * one


def test_components(loop, a2):
    x = mono(loop, "v", "f")
    assert grade_component(x, W("f")) == DFunction.indicator(loop, "v")
    assert grade_component(x, Word()).is_zero()
    assert support(identity(a2)) == {Word()}


def test_membership_enforced(rose2):
    with pytest.raises(ValueError):
        SkewElement(rose2, comps={W("a"): DFunction.indicator(rose2, "b")})


def test_parse_roundtrip(rose2):
    x = parse_skew("(1[a] - 1/2 * 1[a.b]) d[a] + 2 * 1[v] d[e]", rose2)
    assert parse_skew(str(x), rose2) == x
    assert parse_skew("0", rose2).is_zero()


def test_associativity_examples(loop, rose2):
    assert check_associativity(loop, 100, 2).passed
    assert check_associativity(rose2, 100, 2).passed


def untransported(x, y):
    """Product that forgets to pull r back through alpha_{g^-1}."""
    comps = {}
    for g, r in x.comps.items():
        for h, s in y.comps.items():
            c = alpha_apply(g, unit_of(x.graph, ~g, x.field) * r * s)
            comps[g * h] = comps[g * h] + c if g * h in comps else c
    return SkewElement(x.graph, x.field, comps, check=False)


def test_associativity_catches_mutation(rose2):
    assert not check_associativity(rose2, 30, 2, mul=untransported).passed


def test_strong_grading_examples(loop, rose2, a2):
    v = check_strong_grading(loop, 4)
    assert v.strongly_graded and len(v.factorizations) == 8 and v.verify(loop)
    v = check_strong_grading(rose2)
    assert not v.strongly_graded and v.witness_word == W("a") and v.verify(rose2)
    v = check_strong_grading(a2)
    assert not v.strongly_graded and v.witness_cell.start == "w" and v.verify(a2)


def test_inverse_examples(loop, rose2, a2):
    res = try_invert_homogeneous(mono(loop, "v", "f"))
    assert isinstance(res, Inverse) and res.inverse == mono(loop, "v", "f'")
    x = SkewElement.generator(rose2, "a")
    res = try_invert_homogeneous(x)
    assert isinstance(res, NotInvertible)
    assert res.annihilator == SkewElement.generator(rose2, "b'")
    assert (res.annihilator * x).is_zero()
    res = try_invert_homogeneous(mono(a2, "v", "f"))
    assert isinstance(res, NotInvertible) and res.annihilator == mono(a2, "w", "e")
    with pytest.raises(ValueError):
        try_invert_homogeneous(identity(a2) + mono(a2, "v", "f"))


def test_loop_scaled_inverse(loop, field):
    x = SkewElement.generator(loop, "f.f", field).scale(field.convert(3))
    res = try_invert_homogeneous(x)
    assert isinstance(res, Inverse)
    assert x * res.inverse == identity(loop, field) == res.inverse * x


def test_certificates_reverify(any_graph):
    for w in live_words(any_graph, 2):
        x = SkewElement.generator(any_graph, w)
        res = try_invert_homogeneous(x)
        if isinstance(res, Inverse):
            assert x * res.inverse == identity(any_graph) == res.inverse * x
        else:
            assert isinstance(res, NotInvertible)
            z = res.annihilator
            assert z and (z * x if res.side == "left" else x * z).is_zero()


def test_grading_law_and_distributivity(any_graph, field):
    rng = seeded(f"grade:{any_graph.name}")
    for _ in range(30):
        x, y, z = (random_element(any_graph, field, rng, 2) for _ in range(3))
        p = multiply(x, y)
        allowed = {g * h for g in support(x) for h in support(y)}
        assert support(p) <= allowed
        for g, r in p.comps.items():
            assert membership(r, g)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z


def test_edge_triple(any_graph):
    for f in any_graph.edges:
        x = SkewElement.generator(any_graph, f)
        y = SkewElement.generator(any_graph, W(f + "'"))
        assert x * y * x == x
