"""The commutative algebra D(X) spanned by cylinder indicators.

Every :class:`DFunction` is kept in a canonical form: the maximal cylinders
of the path tree on which the function is constant, with their nonzero
values.  Two functions are equal on X exactly when their canonical forms
coincide, because every cylinder of a finite graph is nonempty.
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping

from .boundary import BoundaryPath, Cylinder, in_cylinder
from .fields import RATIONALS, format_scalar, scalar
from .graph import Graph, GraphError, Path
from .words import Identity, InvPath, PathPair, PathShape, WordLike, as_word, classify


def _ancestors(c: Cylinder):
    """Strict ancestors of ``c`` in the path tree, root vertex first."""
    if c.edges:
        yield Path(c.start)
    for k in range(1, len(c)):
        yield Path(c.start, c.edges[:k], "?")


def normalize_terms(graph: Graph, field, terms: Mapping[Cylinder, object]) -> dict[Cylinder, object]:
    """Canonical form of the function ``sum(coef * 1_c)``; cylinders may overlap."""
    support = {}
    for c, coef in terms.items():
        if coef:
            key = (c.start, c.edges)
            support[key] = support.get(key, field.zero) + coef
    if not support:
        return {}
    expanded = {(a.start, a.edges) for s, e in support for a in _ancestors(Path(s, e, "?"))}
    result: dict[Cylinder, object] = {}

    def visit(node: Path, inherited):
        # returns the constant value on node if the subtree merges, else None
        value = inherited + support.get((node.start, node.edges), field.zero)
        if (node.start, node.edges) not in expanded:
            return value
        kids = graph.children(node)
        values = [visit(k, value) for k in kids]
        if all(v is not None for v in values) and all(v == values[0] for v in values):
            return values[0]
        for k, v in zip(kids, values):
            if v is not None and v:
                result[k] = v
        return None

    for v in sorted({s for s, _ in support}):
        value = visit(Path(v), field.zero)
        if value is not None and value:
            result[Path(v)] = value
    return dict(sorted(result.items()))


def word_cylinder(graph: Graph, g: WordLike) -> Cylinder | None:
    """The cylinder equal to X_g, or ``None`` for X_e = X and for empty X_g.

    Use :func:`indicator_word` when the identity matters.
    """
    return _word_cylinder(as_word(g), graph)


@lru_cache(maxsize=1 << 16)
def _word_cylinder(g, graph: Graph) -> Cylinder | None:
    shape = classify(g, graph)
    if isinstance(shape, (PathShape, PathPair)):
        return shape.a
    if isinstance(shape, InvPath):
        return Path(shape.b.end)
    return None


class DFunction:
    """A finite linear combination of cylinder indicators, in canonical form."""

    __slots__ = ("graph", "field", "terms", "_hash")

    def __init__(self, graph: Graph, field=RATIONALS, terms: Mapping[Cylinder, object] | None = None,
                 normalized: bool = False):
        self.graph = graph
        self.field = field
        terms = terms or {}
        self.terms: dict[Cylinder, object] = dict(terms) if normalized else normalize_terms(graph, field, terms)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, graph: Graph, field=RATIONALS) -> "DFunction":
        return cls(graph, field, normalized=True)

    @classmethod
    def indicator(cls, graph: Graph, c: Cylinder | str | Iterable[str], field=RATIONALS) -> "DFunction":
        if not isinstance(c, Path):
            c = graph.path(c)
        return cls(graph, field, {c: field.one})

    @classmethod
    def unit(cls, graph: Graph, field=RATIONALS) -> "DFunction":
        """The constant function 1 = sum of all vertex indicators."""
        return cls(graph, field, {Path(v): field.one for v in graph.vertices})

    @classmethod
    def combination(cls, graph: Graph, field, pairs: Iterable[tuple[object, Cylinder]]) -> "DFunction":
        terms: dict[Cylinder, object] = {}
        for coef, c in pairs:
            coef = scalar(field, coef)
            terms[c] = terms.get(c, field.zero) + coef
        return cls(graph, field, terms)

    # -- structure ----------------------------------------------------
    def _check(self, other: "DFunction") -> None:
        if not isinstance(other, DFunction):
            raise TypeError(f"expected a DFunction, got {type(other).__name__}")
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphError("functions live over different graphs")
        if other.field != self.field:
            raise ValueError("functions use different scalar fields")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def depth(self) -> int:
        return max((len(c) for c in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DFunction):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def equals(self, other: "DFunction") -> bool:
        return self == other

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: "DFunction") -> "DFunction":
        self._check(other)
        terms = dict(self.terms)
        for c, coef in other.terms.items():
            terms[c] = terms.get(c, self.field.zero) + coef
        return DFunction(self.graph, self.field, terms)

    def __neg__(self) -> "DFunction":
        return DFunction(self.graph, self.field, {c: -v for c, v in self.terms.items()}, normalized=True)

    def __sub__(self, other: "DFunction") -> "DFunction":
        return self + (-other)

    def scale(self, lam) -> "DFunction":
        lam = scalar(self.field, lam)
        if not lam:
            return DFunction.zero(self.graph, self.field)
        return DFunction(self.graph, self.field, {c: lam * v for c, v in self.terms.items()}, normalized=True)

    def __mul__(self, other):
        if not isinstance(other, DFunction):
            return self.scale(other)
        self._check(other)
        terms: dict[Cylinder, object] = {}
        for c1, v1 in self.terms.items():
            for c2, v2 in other.terms.items():
                if c1.is_prefix_of(c2):
                    cell = c2
                elif c2.is_prefix_of(c1):
                    cell = c1
                else:
                    continue
                terms[cell] = terms.get(cell, self.field.zero) + v1 * v2
        return DFunction(self.graph, self.field, terms)

    def __rmul__(self, lam):
        return self.scale(lam)

    def evaluate(self, xi: BoundaryPath):
        total = self.field.zero
        for c, v in self.terms.items():
            if in_cylinder(xi, c):
                total += v
        return total

    # -- text -----------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for c, v in self.terms.items():
            text = format_scalar(self.field, v)
            sign = "-" if text.startswith("-") else "+"
            term = f"{text.lstrip('-')} * 1[{cylinder_literal(c)}]"
            out = (f"-{term}" if sign == "-" else term) if not out else f"{out} {sign} {term}"
        return out

    def __repr__(self) -> str:
        return f"DFunction({self})"


def cylinder_literal(c: Cylinder) -> str:
    return ".".join(c.edges) if c.edges else c.start


def indicator_word(graph: Graph, g: WordLike, field=RATIONALS) -> DFunction:
    """The characteristic function 1_g of X_g."""
    return _indicator_word(as_word(g), graph, field)


@lru_cache(maxsize=1 << 16)
def _indicator_word(g, graph: Graph, field) -> DFunction:
    if isinstance(classify(g, graph), Identity):
        return DFunction.unit(graph, field)
    c = word_cylinder(graph, g)
    if c is None:
        return DFunction.zero(graph, field)
    return DFunction(graph, field, {c: field.one})


def evaluate(x: DFunction, xi: BoundaryPath):
    return x.evaluate(xi)


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)(?!\d*\[)\s*(?P<star>\*)?\s*)?(?:1\[(?P<body>[^\]]*)\])?\s*"
)


def parse_dfunction(text: str, graph: Graph, field=RATIONALS) -> DFunction:
    """Parse ``q * 1[a] + q * 1[v] + ...``; ``1[...]`` takes a vertex id or a word literal."""
    text = text.strip()
    pos, total, first = 0, DFunction.zero(graph, field), True
    if text == "0":
        return total
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group("sign") is None and not first):
            raise ValueError(f"cannot parse function at position {pos}: {text[pos:]!r}")
        coef = scalar(field, m.group("coef") or "1")
        if m.group("sign") == "-":
            coef = -coef
        body = m.group("body")
        if body is None:
            if m.group("star") or m.group("coef") is None:
                raise ValueError(f"missing indicator at position {pos} in {text!r}")
            term = DFunction.unit(graph, field)
        elif body.strip() in graph.vertices and body.strip() not in graph.edges:
            term = DFunction.indicator(graph, graph.vertex_path(body.strip()), field)
        else:
            term = indicator_word(graph, body, field)
        total = total + term.scale(coef)
        pos, first = m.end(), False
    return total
