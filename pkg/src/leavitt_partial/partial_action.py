"""The partial action alpha of the free group on D(X).

Each domain ideal D_g = 1_g D(X) is principal, generated by the idempotent
1_g, so membership and ideal equality reduce to products with 1_g.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .boundary import Cylinder, cylinder_partition, representative
from .fields import RATIONALS, random_scalar
from .functions import DFunction, indicator_word, word_cylinder
from .graph import Graph, GraphError, Path
from .report import Report
from .words import EmptyDomain, GroupShape, Identity, Word, WordLike, as_word, classify, words_up_to


class DomainError(ValueError):
    """An argument lies outside the domain ideal an operation requires."""


@dataclass(frozen=True)
class DomainIdeal:
    word: Word
    shape: GroupShape
    unit: DFunction

    @property
    def is_zero(self) -> bool:
        return self.unit.is_zero()

    @property
    def is_full(self) -> bool:
        return isinstance(self.shape, Identity)

    def __contains__(self, x: DFunction) -> bool:
        return self.unit * x == x


@lru_cache(maxsize=65536)
def _unit(graph: Graph, g: Word, field) -> DFunction:
    return indicator_word(graph, g, field)


def unit_of(graph: Graph, g: WordLike, field=RATIONALS) -> DFunction:
    """Generating idempotent 1_g of D_g (the constant 1 for g = e)."""
    return _unit(graph, as_word(g), field)


def domain_ideal(graph: Graph, g: WordLike, field=RATIONALS) -> DomainIdeal:
    g = as_word(g)
    return DomainIdeal(g, classify(g, graph), unit_of(graph, g, field))


def membership(x: DFunction, g: WordLike) -> bool:
    return unit_of(x.graph, g, x.field) * x == x


def alpha_apply(g: WordLike, x: DFunction) -> DFunction:
    """alpha_g(x) for x in D_{g^-1}, extending alpha_g(1_{g^-1} 1_h) = 1_g 1_{gh} linearly."""
    g = as_word(g)
    graph, field = x.graph, x.field
    if g.is_identity():
        return x
    if not membership(x, g.inverse()):
        raise DomainError(f"{x} is not in the domain ideal D_{{{g.inverse()}}}")
    if x.is_zero():
        return x
    # x = sum coef * 1_c over disjoint cells, all inside X_{g^-1} = X_b
    b = word_cylinder(graph, g.inverse())
    image = DFunction.zero(graph, field)
    for c, coef in x.terms.items():
        cell = c if b.is_prefix_of(c) else b
        h = Word.from_path(cell)  # 1_{g^-1} 1_h = 1_cell; h = e for a vertex cell
        image = image + (unit_of(graph, g, field) * unit_of(graph, g * h, field)).scale(coef)
    return image


def spanning_set(unit: DFunction, depth: int) -> list[DFunction]:
    """Nonzero elements ``unit * 1_c`` for cylinders c of length <= depth, deduplicated."""
    seen: dict[DFunction, None] = {}
    if unit.is_zero():
        return []
    seen[unit] = None
    for c in unit.graph.paths_up_to(depth):
        y = unit * DFunction.indicator(unit.graph, c, unit.field)
        if y:
            seen[y] = None
    return list(seen)


def _axiom_words(graph: Graph, bound: int, rng: random.Random, empty_samples: int = 4) -> list[Word]:
    words = words_up_to(graph, bound)
    live = [w for w in words if not isinstance(classify(w, graph), EmptyDomain)]
    dead = [w for w in words if isinstance(classify(w, graph), EmptyDomain)]
    return live + sorted(rng.sample(dead, min(empty_samples, len(dead))))


def verify_axioms(graph: Graph, bound: int = 2, sample_depth: int = 1, field=RATIONALS,
                  alpha: Callable[[Word, DFunction], DFunction] = alpha_apply, seed: int = 0) -> Report:
    """Check (P1)-(P3) for all word pairs of length <= bound; the report lists violations only."""
    if bound < 1:
        raise ValueError("word bound must be at least 1")
    rng = random.Random(seed)
    words = _axiom_words(graph, bound, rng)
    report = Report(f"partial action axioms, |g|,|h| <= {bound}")
    u = lambda w: unit_of(graph, w, field)  # noqa: E731
    checked = {"P1": 0, "P2": 0, "P3": 0}

    for x in spanning_set(DFunction.unit(graph, field), sample_depth + 1):
        checked["P1"] += 1
        if alpha(Word(), x) != x:
            report.add("P1", False, f"alpha_e({x}) != {x}")

    for g in words:
        ginv = g.inverse()
        for h in words:
            gh = g * h
            # (P2): the generator of D_{g^-1} cap D_h goes to the generator of D_g cap D_gh
            source = u(ginv) * u(h)
            target = u(g) * u(gh)
            checked["P2"] += 1
            try:
                image = alpha(g, source)
            except DomainError as exc:
                report.add("P2", False, str(exc), g=str(g), h=str(h))
                continue
            if image != target:
                report.add("P2", False, f"alpha_{g}({source}) = {image}, expected {target}",
                           g=str(g), h=str(h))
            for y in spanning_set(source, sample_depth):
                img = alpha(g, y)
                if target * img != img:
                    report.add("P2", False, f"alpha_{g}({y}) = {img} leaves D_{g} cap D_{gh}",
                               g=str(g), h=str(h))
            # (P3) on D_{h^-1} cap D_{(gh)^-1}
            dom = u(h.inverse()) * u(gh.inverse())
            for x in spanning_set(dom, sample_depth):
                checked["P3"] += 1
                try:
                    lhs = alpha(g, alpha(h, x))
                    rhs = alpha(gh, x)
                except DomainError as exc:
                    report.add("P3", False, str(exc), g=str(g), h=str(h))
                    continue
                if lhs != rhs:
                    report.add("P3", False, f"alpha_{g} alpha_{h}({x}) = {lhs} but alpha_{gh} gives {rhs}",
                               g=str(g), h=str(h))
    report.summary.update(checked)
    return report


@dataclass(frozen=True)
class GlobalVerdict:
    is_global: bool
    explanation: str
    word: Word | None = None
    cell: Cylinder | None = None

    def __bool__(self) -> bool:
        return self.is_global


def is_global(graph: Graph, field=RATIONALS) -> GlobalVerdict:
    """Decide whether D_g = D(X) for every generator, naming a separating cell otherwise."""
    if not graph.edges:
        raise GraphError("the free group on an edgeless graph is trivial")
    one = DFunction.unit(graph, field)
    cells = cylinder_partition(graph, 1)
    for f in graph.edges:
        for g in (Word.edge(f), Word.edge(f, -1)):
            ug = unit_of(graph, g, field)
            if ug == one:
                continue
            for c in cells:
                if not ug.evaluate(representative(graph, c)):
                    return GlobalVerdict(False, f"X[{c}] is not contained in X_{g}", g, c)
    return GlobalVerdict(True, "every D_f and D_f^-1 equals D(X)")


def global_structurally(graph: Graph) -> bool:
    """The closed-form criterion: one vertex, one edge, which is a loop."""
    if len(graph.edges) != 1:
        return False
    (edge,) = graph.edges.values()
    return len(graph.vertices) == 1 and edge.src == edge.dst and not graph.sinks


def source_of(graph: Graph, g: Word) -> str:
    """The vertex s(g) with s(h^{-1}) = r(h) for pure inverse words; g must have a nonempty domain."""
    c = word_cylinder(graph, g)
    if c is None:
        raise ValueError(f"s({g}) is undefined")
    return c.start


def idempotency_check(graph: Graph, bound: int, field=RATIONALS, trials: int = 20, seed: int = 0) -> Report:
    """D_g D_g = D_g for |g| <= bound, with D_e handled by the y = sum 1_v witness."""
    report = Report(f"domain ideals idempotent, |g| <= {bound}")
    words = words_up_to(graph, bound)
    for g in words:
        ug = unit_of(graph, g, field)
        if ug * ug != ug:
            report.add(f"D_{g}", False, f"1_{g} is not idempotent")
            continue
        report.add(f"D_{g}", True, "generated by the idempotent 1_g")
    live = [w for w in words if not w.is_identity() and not isinstance(classify(w, graph), EmptyDomain)]
    rng = random.Random(seed)
    for t in range(trials):
        chosen = rng.sample(live, min(len(live), rng.randint(1, 3))) if live else []
        verts = rng.sample(list(graph.vertices), rng.randint(0, min(2, len(graph.vertices))))
        x = DFunction.zero(graph, field)
        support: set[str] = set()
        for w in chosen:
            x = x + unit_of(graph, w, field).scale(random_scalar(field, rng, nonzero=True))
            support.add(source_of(graph, w))
        for v in verts:
            x = x + DFunction.indicator(graph, Path(v), field).scale(random_scalar(field, rng, nonzero=True))
            support.add(v)
        y = DFunction.zero(graph, field)
        for v in sorted(support):
            y = y + DFunction.indicator(graph, Path(v), field)
        ok = x * y == x
        report.add(f"D_e witness #{t}", ok, f"x = {x}, y = {y}")
    return report
