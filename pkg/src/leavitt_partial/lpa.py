"""Leavitt path algebra terms and their image in the partial skew group ring.

Grammar::

    term      := sum
    sum       := ['-'] prod (('+'|'-') prod)*
    prod      := atom+
    atom      := scalar '*' atom | generator | '(' sum ')'
    generator := id | id '*'
    scalar    := integer | integer '/' integer

``f*`` is the ghost edge of ``f``; juxtaposition is the product.  Equality of
terms is decided by comparing images under phi, which is faithful.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .fields import RATIONALS, format_scalar, scalar
from .functions import DFunction
from .graph import Graph, GraphError, Path
from .report import Report
from .skew import SkewElement, multiply
from .words import Word


class LpaSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# -- terms ------------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    id: str
    kind: str  # "vertex", "edge" or "ghost"

    def __str__(self) -> str:
        return self.id + "*" if self.kind == "ghost" else self.id


@dataclass(frozen=True)
class Sum:
    terms: tuple

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class Prod:
    factors: tuple

    def __str__(self) -> str:
        return " ".join(f"({f})" if isinstance(f, Sum) else str(f) for f in self.factors)


@dataclass(frozen=True)
class Scaled:
    coef: Fraction
    term: object

    def __str__(self) -> str:
        inner = f"({self.term})" if isinstance(self.term, (Sum, Prod)) else str(self.term)
        return f"{self.coef} * {inner}"


LpaTerm = Union[Gen, Sum, Prod, Scaled]


def vertex(v: str) -> Gen:
    return Gen(v, "vertex")


def edge(f: str) -> Gen:
    return Gen(f, "edge")


def ghost(f: str) -> Gen:
    return Gen(f, "ghost")


def prod(*factors) -> LpaTerm:
    return factors[0] if len(factors) == 1 else Prod(tuple(factors))


def total(terms: Iterable) -> LpaTerm:
    terms = tuple(terms)
    return terms[0] if len(terms) == 1 else Sum(terms)


# -- parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[*+\-()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = text[pos:].lstrip()
            where = len(text) - len(bad)
            hint = "; ghost edges are written f*, not f'" if bad.startswith("'") else ""
            raise LpaSyntaxError(f"unexpected character {bad[0]!r}{hint}", where)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, graph: Graph | None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.graph = graph

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise LpaSyntaxError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> LpaTerm:
        t = self.sum()
        if self.peek()[0] != "end":
            tok = self.peek()
            raise LpaSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return t

    def sum(self) -> LpaTerm:
        terms = []
        negate = False
        if self.peek()[1] == "-":
            self.take()
            negate = True
        while True:
            p = self.prod()
            terms.append(Scaled(Fraction(-1), p) if negate else p)
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                negate = tok[1] == "-"
            else:
                return total(terms)

    def starts_atom(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("num", "id") or (kind == "op" and val == "(")

    def prod(self) -> LpaTerm:
        if not self.starts_atom():
            tok = self.peek()
            raise LpaSyntaxError(f"expected a generator, scalar or '(', found {tok[1] or 'end of input'!r}", tok[2])
        factors = [self.atom()]
        while self.starts_atom():
            factors.append(self.atom())
        return prod(*factors)

    def atom(self) -> LpaTerm:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            self.take("op", "*")
            return Scaled(Fraction(val), self.atom())
        if kind == "op" and val == "(":
            self.take()
            inner = self.sum()
            self.take("op", ")")
            return inner
        self.take("id")
        if self.peek()[:2] == ("op", "*"):
            self.take()
            return self.generator(val, pos, True)
        return self.generator(val, pos, False)

    def generator(self, name: str, pos: int, is_ghost: bool) -> Gen:
        g = self.graph
        if g is None:
            return Gen(name, "ghost" if is_ghost else "edge")
        is_edge, is_vertex = name in g.edges, name in g.vertices
        if is_edge and is_vertex:
            raise LpaSyntaxError(f"{name!r} names both a vertex and an edge", pos)
        if is_ghost:
            if not is_edge:
                raise GraphError(f"unknown edge {name!r} for ghost generator at position {pos}")
            return ghost(name)
        if is_edge:
            return edge(name)
        if is_vertex:
            return vertex(name)
        raise GraphError(f"unknown generator {name!r} at position {pos}")


def parse(text: str, graph: Graph | None = None) -> LpaTerm:
    """Parse a term; with a graph, generator ids are resolved and checked."""
    return _Parser(text, graph).parse()


# -- the isomorphism phi ------------------------------------------------------------

def phi(t: LpaTerm | str, graph: Graph, field=RATIONALS) -> SkewElement:
    """Image of a term: f -> 1_f d_f, f* -> 1_{f^-1} d_{f^-1}, v -> 1_v d_e."""
    if isinstance(t, str):
        t = parse(t, graph)
    if isinstance(t, Gen):
        if t.kind == "vertex":
            graph.vertex_path(t.id)
            return SkewElement(graph, field, {Word(): DFunction.indicator(graph, Path(t.id), field)}, check=False)
        graph.edge(t.id)
        w = Word.edge(t.id, -1 if t.kind == "ghost" else 1)
        return SkewElement.generator(graph, w, field)
    if isinstance(t, Scaled):
        return phi(t.term, graph, field).scale(scalar(field, t.coef))
    if isinstance(t, Sum):
        out = SkewElement.zero(graph, field)
        for s in t.terms:
            out = out + phi(s, graph, field)
        return out
    if isinstance(t, Prod):
        out = phi(t.factors[0], graph, field)
        for s in t.factors[1:]:
            out = multiply(out, phi(s, graph, field))
        return out
    raise TypeError(f"not a term: {t!r}")


def lpa_equals(t1: LpaTerm | str, t2: LpaTerm | str, graph: Graph, field=RATIONALS) -> bool:
    return phi(t1, graph, field) == phi(t2, graph, field)


def ck_relations(graph: Graph) -> list[tuple[str, str, LpaTerm, LpaTerm]]:
    """Every instance of the relations (1)-(4) as (family, label, lhs, rhs)."""
    rels = []
    for f, e in graph.edges.items():
        rels.append(("1", f"s({f}){f} = {f}", prod(vertex(e.src), edge(f)), edge(f)))
        rels.append(("1", f"{f}r({f}) = {f}", prod(edge(f), vertex(e.dst)), edge(f)))
    for f, e in graph.edges.items():
        rels.append(("2", f"r({f}){f}* = {f}*", prod(vertex(e.dst), ghost(f)), ghost(f)))
        rels.append(("2", f"{f}*s({f}) = {f}*", prod(ghost(f), vertex(e.src)), ghost(f)))
    for f, e in graph.edges.items():
        for f2 in graph.edges:
            rhs = vertex(e.dst) if f == f2 else Scaled(Fraction(0), vertex(e.dst))
            rels.append(("3", f"{f}*{f2} = {'r(' + f + ')' if f == f2 else '0'}", prod(ghost(f), edge(f2)), rhs))
    for v in graph.vertices:
        out = graph.out_edges(v)
        if out:
            rhs = total(prod(edge(f), ghost(f)) for f in out)
            rels.append(("4", f"{v} = " + " + ".join(f"{f}{f}*" for f in out), vertex(v), rhs))
    return rels


def verify_ck(graph: Graph, field=RATIONALS) -> Report:
    report = Report("Cuntz-Krieger relations under phi")
    for family, label, lhs, rhs in ck_relations(graph):
        a, b = phi(lhs, graph, field), phi(rhs, graph, field)
        report.add(f"({family}) {label}", a == b, "" if a == b else f"{a} != {b}")
    return report


# -- gradings by group morphisms -------------------------------------------------------

class GradeMorphism:
    """A homomorphism from the free group to Z^k given by its values on edges."""

    def __init__(self, graph: Graph, values: Mapping[str, int | tuple[int, ...]] | None = None):
        values = dict(values or {f: 1 for f in graph.edges})
        missing = set(graph.edges) - set(values)
        if missing:
            raise ValueError(f"grade morphism misses edges {sorted(missing)}")
        vecs = {f: (v,) if isinstance(v, int) else tuple(v) for f, v in values.items()}
        dims = {len(v) for v in vecs.values()}
        if len(dims) > 1:
            raise ValueError("grade vectors must share one dimension")
        self.dim = dims.pop() if dims else 1
        self.values = vecs

    def degree(self, w: Word):
        acc = [0] * self.dim
        for f, s in w.letters:
            for i, x in enumerate(self.values[f]):
                acc[i] += s * x
        return acc[0] if self.dim == 1 else tuple(acc)


def grade_decompose(t: LpaTerm | str | SkewElement, graph: Graph, morphism: GradeMorphism | None = None,
                    field=RATIONALS) -> dict:
    """Split phi(t) into components indexed by the morphism's values (Z-grading by default)."""
    morphism = morphism or GradeMorphism(graph)
    x = t if isinstance(t, SkewElement) else phi(t, graph, field)
    parts: dict = {}
    for g, r in x.comps.items():
        d = morphism.degree(g)
        piece = SkewElement(graph, field, {g: r}, check=False)
        parts[d] = parts[d] + piece if d in parts else piece
    return dict(sorted(parts.items()))


def format_coefficient(field, c) -> str:
    return format_scalar(field, c)
