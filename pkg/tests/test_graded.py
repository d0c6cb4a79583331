import pytest

from leavitt_partial.corpus import random_graphs
from leavitt_partial.fields import RATIONALS, scalar
from leavitt_partial.functions import DFunction
from leavitt_partial.graded import (
    AnnihilatorWitness,
    InverseTable,
    LoopStructure,
    SeparatingCell,
    UnitRegularTriples,
    decide_graded_clean,
    decide_graded_unit_regular,
    decide_strongly_graded,
    equivalence_crosscheck,
    is_loop,
    laurent_check,
    unit_regular_component_lemma_check,
)
from leavitt_partial.graph import Graph, GraphError, Path
from leavitt_partial.skew import Inverse, SkewElement, identity, try_invert_homogeneous
from leavitt_partial.words import Word

W = Word.parse


def certs(verdict, kind):
    return [c for c in verdict.certificates if isinstance(c, kind)]


def test_is_loop_examples(loop, rose2, a2):
    assert is_loop(loop)
    assert not is_loop(rose2)
    assert not is_loop(a2)


def test_strongly_graded_examples(loop, rose2, a2):
    v = decide_strongly_graded(loop)
    assert v.holds and v.verify(loop)
    (table,) = certs(v, InverseTable)
    assert len(table.entries) == 8
    v = decide_strongly_graded(rose2)
    assert not v.holds and v.verify(rose2)
    (cell,) = certs(v, SeparatingCell)
    assert cell.cell == rose2.path("b") and cell.word == W("a")
    (cell,) = certs(decide_strongly_graded(a2), SeparatingCell)
    assert cell.cell == Path("w")


def test_clean_examples(loop, rose2, toep, field):
    v = decide_graded_clean(loop, field)
    assert v.holds and v.verify(loop, field)
    v = decide_graded_clean(rose2)
    (w,) = certs(v, AnnihilatorWitness)
    assert w.z == SkewElement.generator(rose2, "b'") and w.x == SkewElement.generator(rose2, "a")
    assert (w.z * w.x).is_zero() and v.verify(rose2)
    (w,) = certs(decide_graded_clean(toep), AnnihilatorWitness)
    assert w.z == SkewElement.generator(toep, "g'") and w.x == SkewElement.generator(toep, "f")


def test_unit_regular_examples(loop, rose2, a2, field):
    v = decide_graded_unit_regular(loop, field)
    assert v.holds and v.verify(loop, field)
    lam = scalar(RATIONALS, "2/3")
    x = SkewElement.generator(loop, "f.f").scale(lam)
    u = SkewElement.generator(loop, "f'.f'").scale(1 / lam)
    assert x * u * x == x
    # the triple with the right side 1_p d_p only holds for lam = 1
    assert x * u * x != SkewElement.generator(loop, "f.f")
    (w,) = certs(decide_graded_unit_regular(rose2), AnnihilatorWitness)
    assert w == certs(decide_graded_clean(rose2), AnnihilatorWitness)[0]
    (w,) = certs(decide_graded_unit_regular(a2), AnnihilatorWitness)
    assert w.z == SkewElement(a2, comps={Word(): DFunction.indicator(a2, "w")})


def test_tampered_certificates_fail(loop, rose2):
    assert not LoopStructure("v", "f").verify(rose2)
    z = SkewElement.generator(rose2, "a'")
    x = SkewElement.generator(rose2, "a")
    assert not AnnihilatorWitness(z, x).verify(rose2)
    assert not AnnihilatorWitness(SkewElement.zero(rose2), x).verify(rose2)
    assert not SeparatingCell(rose2.path("a"), W("a")).verify(rose2)
    bad = InverseTable([(SkewElement.generator(loop, "f"), SkewElement.generator(loop, "f"))])
    assert not bad.verify(loop)
    two = SkewElement.generator(loop, "f").scale(2)
    assert not UnitRegularTriples([(two, SkewElement.generator(loop, "f'"), two)]).verify(loop)


def test_deciders_need_edges():
    g = Graph(["v"], [])
    for decide in (decide_strongly_graded, decide_graded_clean, decide_graded_unit_regular):
        with pytest.raises(GraphError):
            decide(g)


def test_component_lemma(loop, rose2):
    rep = unit_regular_component_lemma_check(loop, 3)
    assert rep.passed and len(rep) == 7
    assert {r.name for r in rep.records} >= {"f.f.f", "f'.f'.f'"}
    rep = unit_regular_component_lemma_check(loop, 0)
    assert [r.name for r in rep.records] == ["e"]
    with pytest.raises(ValueError):
        unit_regular_component_lemma_check(rose2)


def test_laurent_examples(loop, rose2):
    rep = laurent_check(loop, 5)
    assert rep.passed and len(rep) == 121
    by = {(r.data["m"], r.data["n"]): r.data["product"] for r in rep.records}
    assert by[(2, -3)] == str(SkewElement.generator(loop, "f'"))
    assert by[(0, 0)] == str(identity(loop))
    assert by[(5, 5)] == str(SkewElement.generator(loop, Word.edge("f") ** 10))
    with pytest.raises(ValueError):
        laurent_check(rose2)


def test_crosscheck_examples(loop, rose2, a2, toep):
    rows = equivalence_crosscheck({"loop": loop, "rose2": rose2, "a2": a2, "toeplitz": toep})
    assert [r.name for r in rows] == ["a2", "loop", "rose2", "toeplitz"]
    table = {r.name: r.as_tuple() for r in rows}
    assert table["loop"] == (True,) * 4
    assert table["rose2"] == table["a2"] == table["toeplitz"] == (False,) * 4
    assert all(r.certificates_verified for r in rows)
    (row,) = equivalence_crosscheck([loop])
    assert row.as_tuple() == (True,) * 4


def test_crosscheck_random(field):
    rows = equivalence_crosscheck(random_graphs(8, seed=21), field)
    assert all(r.consistent and r.certificates_verified for r in rows)


def test_loop_components_invertible_by_search(loop):
    # corroborates the clean verdict by brute-force search
    for w in ("f", "f'", "f.f", "e"):
        x = SkewElement.generator(loop, w).scale(3)
        assert isinstance(try_invert_homogeneous(x), Inverse)
