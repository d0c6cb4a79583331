"""Deciders for strong grading, graded cleanness and graded unit-regularity.

All three properties of the free-group grading hold exactly when the graph
is a single loop.  Each decider answers through that criterion and attaches
certificates that re-verify by direct multiplication, so no verdict is
trusted on its own.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Union

from .boundary import in_cylinder, representative
from .fields import RATIONALS, format_scalar, sample_scalars
from .functions import DFunction
from .graph import Graph, GraphError, Path
from .partial_action import is_global, unit_of
from .report import Report
from .skew import SkewElement, identity, multiply
from .words import Word


def is_loop(graph: Graph) -> bool:
    if len(graph.vertices) != 1 or len(graph.edges) != 1:
        return False
    (e,) = graph.edges.values()
    return e.src == e.dst


def _require_edges(graph: Graph) -> None:
    if not graph.edges:
        raise GraphError("graded properties are only decided for graphs with at least one edge")


# -- certificates -----------------------------------------------------------------

@dataclass
class LoopStructure:
    vertex: str
    edge: str

    def verify(self, graph: Graph, field=RATIONALS) -> bool:
        return (graph.vertices == (self.vertex,) and tuple(graph.edges) == (self.edge,)
                and graph.src(self.edge) == graph.dst(self.edge) == self.vertex)

    def describe(self) -> str:
        return f"single vertex {self.vertex} with single loop {self.edge}"


@dataclass
class AnnihilatorWitness:
    """Nonzero z, x with z x = 0 (side "left") or x z = 0 (side "right")."""

    z: SkewElement
    x: SkewElement
    side: str = "left"

    def verify(self, graph: Graph, field=RATIONALS) -> bool:
        if self.z.is_zero() or self.x.is_zero():
            return False
        if not (self.z.is_homogeneous() and self.x.is_homogeneous()):
            return False
        prod = multiply(self.z, self.x) if self.side == "left" else multiply(self.x, self.z)
        return prod.is_zero()

    def describe(self) -> str:
        lhs = f"[{self.z}] [{self.x}]" if self.side == "left" else f"[{self.x}] [{self.z}]"
        return f"{lhs} = 0"


@dataclass
class SeparatingCell:
    """A cylinder disjoint from X_word, so 1_word is not the unit and D_word != D(X)."""

    cell: Path
    word: Word

    def verify(self, graph: Graph, field=RATIONALS) -> bool:
        xi = representative(graph, self.cell)
        return in_cylinder(xi, self.cell) and not unit_of(graph, self.word, field).evaluate(xi)

    def describe(self) -> str:
        return f"X[{self.cell}] lies outside X_{self.word}"


@dataclass
class InverseTable:
    entries: list[tuple[SkewElement, SkewElement]]

    def verify(self, graph: Graph, field=RATIONALS) -> bool:
        one = identity(graph, field)
        return bool(self.entries) and all(
            multiply(x, y) == one and multiply(y, x) == one for x, y in self.entries)

    def describe(self) -> str:
        return f"{len(self.entries)} homogeneous elements with two-sided inverses"


@dataclass
class CleanDecompositions:
    """Entries (x, u, u_inverse, a) with x = u + a, u a unit and a idempotent, all in degree e."""

    entries: list[tuple[SkewElement, SkewElement, SkewElement, SkewElement]]

    def verify(self, graph: Graph, field=RATIONALS) -> bool:
        one = identity(graph, field)
        for x, u, u_inv, a in self.entries:
            if u + a != x or multiply(a, a) != a:
                return False
            if multiply(u, u_inv) != one or multiply(u_inv, u) != one:
                return False
            if not all(t.support() <= {Word()} for t in (x, u, u_inv, a)):
                return False
        return bool(self.entries)

    def describe(self) -> str:
        return f"{len(self.entries)} clean decompositions in the identity component"


@dataclass
class UnitRegularTriples:
    """Entries (x, u, u_inverse) with x u x = x and u a homogeneous unit."""

    entries: list[tuple[SkewElement, SkewElement, SkewElement]]

    def verify(self, graph: Graph, field=RATIONALS) -> bool:
        one = identity(graph, field)
        for x, u, u_inv in self.entries:
            if multiply(multiply(x, u), x) != x:
                return False
            if not u.is_homogeneous() or multiply(u, u_inv) != one or multiply(u_inv, u) != one:
                return False
        return bool(self.entries)

    def describe(self) -> str:
        return f"{len(self.entries)} identities x u x = x with u a homogeneous unit"


Certificate = Union[LoopStructure, AnnihilatorWitness, SeparatingCell, InverseTable,
                    CleanDecompositions, UnitRegularTriples]


@dataclass
class Verdict:
    prop: str
    holds: bool
    certificates: list = dc_field(default_factory=list)

    def verify(self, graph: Graph, field=RATIONALS) -> bool:
        return bool(self.certificates) and all(c.verify(graph, field) for c in self.certificates)

    def describe(self) -> str:
        return "; ".join(c.describe() for c in self.certificates)


# -- deciders -------------------------------------------------------------------------

def _loop_parts(graph: Graph) -> tuple[str, str]:
    (f,) = graph.edges
    return graph.vertices[0], f


def _power_words(f: str, bound: int, include_identity: bool = False) -> list[Word]:
    ks = [k for k in range(-bound, bound + 1) if include_identity or k]
    return sorted(Word.edge(f) ** k for k in ks)


def _homogeneous(graph: Graph, field, lam, w: Word) -> SkewElement:
    return SkewElement(graph, field, {w: unit_of(graph, w, field).scale(lam)})


def loop_inverse_table(graph: Graph, field=RATIONALS, bound: int = 4, scalars: Iterable | None = None) -> InverseTable:
    _, f = _loop_parts(graph)
    scalars = list(scalars) if scalars is not None else [field.one]
    entries = []
    for w in _power_words(f, bound):
        for lam in scalars:
            entries.append((_homogeneous(graph, field, lam, w), _homogeneous(graph, field, field.one / lam, w.inverse())))
    return InverseTable(entries)


def obstruction(graph: Graph, field=RATIONALS) -> AnnihilatorWitness:
    """The zero-divisor shared by the negative clean and unit-regular cases.

    With a second edge l, z = 1_{l^-1} d_{l^-1} kills x = 1_f d_f from the left,
    and z generates R_{l^-1} as a left R_e-module; otherwise an extra vertex w
    gives z = 1_w d_e.
    """
    f = next(iter(graph.edges))
    x = SkewElement.generator(graph, f, field)
    others = [l for l in graph.edges if l != f]
    if others:
        z = SkewElement.generator(graph, Word.edge(others[-1], -1), field)
    else:
        w = next(v for v in graph.vertices if v != graph.src(f))
        z = SkewElement(graph, field, {Word(): DFunction.indicator(graph, Path(w), field)})
    return AnnihilatorWitness(z, x, "left")


def decide_strongly_graded(graph: Graph, field=RATIONALS) -> Verdict:
    _require_edges(graph)
    if is_loop(graph):
        v, f = _loop_parts(graph)
        return Verdict("strongly graded", True, [LoopStructure(v, f), loop_inverse_table(graph, field)])
    g = is_global(graph, field)
    return Verdict("strongly graded", False, [SeparatingCell(g.cell, g.word)])


def decide_graded_clean(graph: Graph, field=RATIONALS) -> Verdict:
    _require_edges(graph)
    if not is_loop(graph):
        return Verdict("graded clean", False, [obstruction(graph, field)])
    v, f = _loop_parts(graph)
    one = identity(graph, field)
    decomps = []
    for lam in [field.zero] + sample_scalars(field):
        x = one.scale(lam)
        if lam == field.one:
            u, a = one, SkewElement.zero(graph, field)
        else:
            u, a = one.scale(lam - field.one), one
        decomps.append((x, u, one.scale(field.one / (lam - field.one)) if lam != field.one else one, a))
    table = loop_inverse_table(graph, field, 4, sample_scalars(field))
    return Verdict("graded clean", True, [LoopStructure(v, f), CleanDecompositions(decomps), table])


def decide_graded_unit_regular(graph: Graph, field=RATIONALS) -> Verdict:
    _require_edges(graph)
    if not is_loop(graph):
        return Verdict("graded unit-regular", False, [obstruction(graph, field)])
    v, f = _loop_parts(graph)
    triples = []
    for w in _power_words(f, 4, include_identity=True):
        for lam in sample_scalars(field):
            x = _homogeneous(graph, field, lam, w)
            u = _homogeneous(graph, field, field.one / lam, w.inverse())
            triples.append((x, u, x))
    return Verdict("graded unit-regular", True, [LoopStructure(v, f), UnitRegularTriples(triples)])


def unit_regular_component_lemma_check(graph: Graph, bound: int = 3, field=RATIONALS) -> Report:
    """For each component R_g with |g| <= bound, exhibit an invertible element."""
    if not is_loop(graph):
        raise ValueError("only the loop graph is graded unit-regular; no component check applies")
    _, f = _loop_parts(graph)
    report = Report(f"invertible element in every component, |g| <= {bound}")
    one = identity(graph, field)
    for w in _power_words(f, bound, include_identity=True):
        x = SkewElement.generator(graph, w, field)
        y = SkewElement.generator(graph, w.inverse(), field)
        ok = multiply(x, y) == one and multiply(y, x) == one
        report.add(str(w), ok, f"[{x}]^-1 = [{y}]", word=str(w))
    return report


def laurent_check(graph: Graph, n: int = 5, field=RATIONALS) -> Report:
    """x^k -> 1_v d_{f^k} is multiplicative on the (2n+1)^2 table of exponents."""
    if not is_loop(graph):
        raise ValueError("the Laurent check needs the loop graph")
    _, f = _loop_parts(graph)
    power = lambda k: SkewElement.generator(graph, Word.edge(f) ** k, field)  # noqa: E731
    report = Report(f"Laurent polynomial products, |m|,|n| <= {n}")
    for m in range(-n, n + 1):
        for k in range(-n, n + 1):
            got = multiply(power(m), power(k))
            want = power(m + k)
            report.add(f"({m},{k})", got == want, str(got), m=m, n=k, product=str(got))
    return report


@dataclass
class CrosscheckRow:
    name: str
    strongly_graded: bool
    graded_clean: bool
    graded_unit_regular: bool
    loop: bool
    certificates_verified: bool
    verdicts: list[Verdict] = dc_field(default_factory=list, repr=False)

    @property
    def consistent(self) -> bool:
        return self.strongly_graded == self.graded_clean == self.graded_unit_regular == self.loop

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.strongly_graded, self.graded_clean, self.graded_unit_regular, self.loop)


def decide_all(graph: Graph, field=RATIONALS) -> list[Verdict]:
    return [decide_strongly_graded(graph, field), decide_graded_clean(graph, field),
            decide_graded_unit_regular(graph, field)]


def equivalence_crosscheck(graphs: Mapping[str, Graph] | Iterable[Graph], field=RATIONALS) -> list[CrosscheckRow]:
    """One row per graph, ordered by name, with every certificate re-verified."""
    if not isinstance(graphs, Mapping):
        graphs = {g.name or f"graph{i}": g for i, g in enumerate(graphs)}
    rows = []
    for name in sorted(graphs):
        g = graphs[name]
        verdicts = decide_all(g, field)
        rows.append(CrosscheckRow(
            name, *(v.holds for v in verdicts), is_loop(g),
            all(v.verify(g, field) for v in verdicts), verdicts))
    return rows


def describe_scalar(field, lam) -> str:
    return format_scalar(field, lam)
