"""The partial skew group ring D(X) * F of the action alpha."""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Mapping

from sympy.polys.matrices import DomainMatrix

from .boundary import cylinder_partition, representative
from .fields import RATIONALS, random_scalar
from .functions import DFunction, parse_dfunction, word_cylinder
from .graph import Graph, GraphError, Path
from .partial_action import DomainError, alpha_apply, is_global, membership, unit_of
from .report import Report
from .words import EmptyDomain, Word, WordLike, as_word, classify, words_up_to


class SkewElement:
    """A finite sum of terms r delta_g with r in D_g."""

    __slots__ = ("graph", "field", "comps")

    def __init__(self, graph: Graph, field=RATIONALS, comps: Mapping[Word, DFunction] | None = None,
                 check: bool = True):
        self.graph = graph
        self.field = field
        self.comps: dict[Word, DFunction] = {}
        for g, r in (comps or {}).items():
            g = as_word(g)
            if r.is_zero():
                continue
            if check and not membership(r, g):
                raise DomainError(f"component {r} does not lie in D_{g}")
            self.comps[g] = r
        self.comps = dict(sorted(self.comps.items()))

    @classmethod
    def zero(cls, graph: Graph, field=RATIONALS) -> "SkewElement":
        return cls(graph, field)

    @classmethod
    def monomial(cls, r: DFunction, g: WordLike) -> "SkewElement":
        return cls(r.graph, r.field, {as_word(g): r})

    @classmethod
    def generator(cls, graph: Graph, g: WordLike, field=RATIONALS) -> "SkewElement":
        """1_g delta_g."""
        g = as_word(g)
        return cls(graph, field, {g: unit_of(graph, g, field)})

    def _check(self, other: "SkewElement") -> None:
        if not isinstance(other, SkewElement):
            raise TypeError(f"expected a SkewElement, got {type(other).__name__}")
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphError("elements live over different graphs")
        if other.field != self.field:
            raise ValueError("elements use different scalar fields")

    def component(self, g: WordLike) -> DFunction:
        return self.comps.get(as_word(g), DFunction.zero(self.graph, self.field))

    def support(self) -> set[Word]:
        return set(self.comps)

    def is_zero(self) -> bool:
        return not self.comps

    def __bool__(self) -> bool:
        return bool(self.comps)

    def is_homogeneous(self) -> bool:
        return len(self.comps) <= 1

    def degree(self) -> Word:
        if len(self.comps) != 1:
            raise ValueError("element is not homogeneous and nonzero")
        return next(iter(self.comps))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewElement):
            return NotImplemented
        self._check(other)
        return self.comps == other.comps

    def __hash__(self) -> int:
        return hash(tuple(self.comps.items()))

    def __add__(self, other: "SkewElement") -> "SkewElement":
        self._check(other)
        comps = dict(self.comps)
        for g, r in other.comps.items():
            comps[g] = comps[g] + r if g in comps else r
        return SkewElement(self.graph, self.field, comps, check=False)

    def __neg__(self) -> "SkewElement":
        return SkewElement(self.graph, self.field, {g: -r for g, r in self.comps.items()}, check=False)

    def __sub__(self, other: "SkewElement") -> "SkewElement":
        return self + (-other)

    def scale(self, lam) -> "SkewElement":
        return SkewElement(self.graph, self.field, {g: r.scale(lam) for g, r in self.comps.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, SkewElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, lam):
        return self.scale(lam)

    def __str__(self) -> str:
        if not self.comps:
            return "0"
        return " + ".join(f"({r}) d[{g}]" for g, r in self.comps.items())

    def __repr__(self) -> str:
        return f"SkewElement({self})"


def product_term(g: Word, r: DFunction, h: Word, s: DFunction) -> tuple[Word, DFunction]:
    """(r delta_g)(s delta_h) = alpha_g(alpha_{g^-1}(r) s) delta_{gh}."""
    return g * h, alpha_apply(g, alpha_apply(g.inverse(), r) * s)


def multiply(x: SkewElement, y: SkewElement) -> SkewElement:
    x._check(y)
    comps: dict[Word, DFunction] = {}
    for g, r in x.comps.items():
        for h, s in y.comps.items():
            gh, c = product_term(g, r, h, s)
            comps[gh] = comps[gh] + c if gh in comps else c
    return SkewElement(x.graph, x.field, comps, check=False)


def identity(graph: Graph, field=RATIONALS) -> SkewElement:
    """sum over vertices of 1_v delta_e."""
    return SkewElement(graph, field, {Word(): DFunction.unit(graph, field)}, check=False)


def grade_component(x: SkewElement, g: WordLike) -> DFunction:
    return x.component(g)


def support(x: SkewElement) -> set[Word]:
    return x.support()


_TERM = re.compile(r"\s*(?P<sign>[+-])?\s*(?:\((?P<f>[^()]*)\)|(?P<bare>[^()+\-]*?))\s*d\[(?P<w>[^\]]*)\]\s*")


def parse_skew(text: str, graph: Graph, field=RATIONALS) -> SkewElement:
    """Parse ``(<function>) d[<word>] + ...``; parentheses may be dropped around a single term."""
    text = text.strip()
    if text == "0":
        return SkewElement.zero(graph, field)
    pos, total = 0, SkewElement.zero(graph, field)
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or (pos and m.group("sign") is None):
            raise ValueError(f"cannot parse skew element at position {pos}: {text[pos:]!r}")
        r = parse_dfunction(m.group("f") if m.group("f") is not None else m.group("bare"), graph, field)
        if m.group("sign") == "-":
            r = -r
        total = total + SkewElement(graph, field, {Word.parse(m.group("w")): r})
        pos = m.end()
    return total


# -- random elements and checks ---------------------------------------------

def live_words(graph: Graph, bound: int) -> list[Word]:
    return [w for w in words_up_to(graph, bound) if not isinstance(classify(w, graph), EmptyDomain)]


def random_dfunction(graph: Graph, field, rng: random.Random, depth: int, terms: int = 3) -> DFunction:
    paths = graph.paths_up_to(depth)
    x = DFunction.zero(graph, field)
    for _ in range(rng.randint(1, terms)):
        x = x + DFunction.indicator(graph, rng.choice(paths), field).scale(random_scalar(field, rng))
    return x


def random_element(graph: Graph, field, rng: random.Random, word_bound: int, depth: int = 2,
                   terms: int = 3) -> SkewElement:
    words = live_words(graph, word_bound)
    comps: dict[Word, DFunction] = {}
    for _ in range(rng.randint(1, terms)):
        g = rng.choice(words)
        r = unit_of(graph, g, field) * random_dfunction(graph, field, rng, depth)
        comps[g] = comps[g] + r if g in comps else r
    return SkewElement(graph, field, comps, check=False)


def check_associativity(graph: Graph, trials: int = 100, depth: int = 2, field=RATIONALS, seed: int = 0,
                        mul: Callable[[SkewElement, SkewElement], SkewElement] = multiply) -> Report:
    if trials < 1:
        raise ValueError("trials must be positive")
    report = Report(f"associativity, {trials} trials, |g| <= {depth}")
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        x, y, z = (random_element(graph, field, rng, depth) for _ in range(3))
        lhs, rhs = mul(mul(x, y), z), mul(x, mul(y, z))
        if lhs != rhs:
            report.add(f"trial {t}", False, f"(xy)z != x(yz) for x={x}, y={y}, z={z}")
    report.summary["trials"] = trials
    return report


@dataclass
class StrongGradingVerdict:
    strongly_graded: bool
    explanation: str
    factorizations: list[tuple[SkewElement, SkewElement]]
    witness_word: Word | None = None
    witness_cell: Path | None = None

    def verify(self, graph: Graph, field=RATIONALS) -> bool:
        one = identity(graph, field)
        if self.strongly_graded:
            return bool(self.factorizations) and all(x * y == one for x, y in self.factorizations)
        # R_g R_{g^-1} lies in D_g delta_e, and 1 is not in D_g
        g = self.witness_word
        ug = unit_of(graph, g, field)
        rep = representative(graph, self.witness_cell)
        return ug * one.component(Word()) != one.component(Word()) and not ug.evaluate(rep)


def check_strong_grading(graph: Graph, bound: int = 4, field=RATIONALS) -> StrongGradingVerdict:
    """Strong grading holds exactly when the action is global; evidence is attached either way."""
    verdict = is_global(graph, field)
    if verdict:
        pairs = []
        for w in live_words(graph, bound):
            if w.is_identity():
                continue
            pairs.append((SkewElement.generator(graph, w, field), SkewElement.generator(graph, w.inverse(), field)))
        return StrongGradingVerdict(True, "the action is global: 1_g delta_g 1_g^-1 delta_g^-1 = 1", pairs)
    g = verdict.word
    return StrongGradingVerdict(
        False,
        f"1 delta_e is not in R_{g} R_{g.inverse()}, which lies in D_{g} delta_e; {verdict.explanation}",
        [], g, verdict.cell,
    )


# -- homogeneous inverses ------------------------------------------------------

@dataclass
class Inverse:
    inverse: SkewElement


@dataclass
class NotInvertible:
    annihilator: SkewElement
    side: str  # "left": z x = 0, "right": x z = 0


@dataclass
class Unknown:
    bound: int


def _solve(field, rows: list[list], rhs: list):
    """One solution of rows * c = rhs over ``field`` or None."""
    n = len(rows[0]) if rows else 0
    aug = DomainMatrix([list(r) + [b] for r, b in zip(rows, rhs)], (len(rows), n + 1), field)
    rref, pivots = aug.rref()
    if n in pivots:
        return None
    sol = [field.zero] * n
    mat = rref.to_list()
    for i, p in enumerate(pivots):
        sol[p] = mat[i][n]
    return sol


def try_invert_homogeneous(x: SkewElement, bound: int = 2):
    """Search a homogeneous inverse with cell depth <= bound, else an annihilator."""
    if x.is_zero() or not x.is_homogeneous():
        raise ValueError("try_invert_homogeneous needs a nonzero homogeneous element")
    graph, field = x.graph, x.field
    g = x.degree()
    one = identity(graph, field)
    b = word_cylinder(graph, g.inverse()) if not g.is_identity() else None
    if g.is_identity():
        cells = cylinder_partition(graph, bound)
    else:
        cells = [c for c in cylinder_partition(graph, max(bound, len(b))) if b.is_prefix_of(c)]
    basis = [SkewElement(graph, field, {g.inverse(): DFunction.indicator(graph, c, field)}) for c in cells]
    right = [multiply(x, y).component(Word()) for y in basis]
    left = [multiply(y, x).component(Word()) for y in basis]
    unit = one.component(Word())
    deepest = max([unit.depth()] + [f.depth() for f in right + left])
    reps = [representative(graph, c) for c in cylinder_partition(graph, deepest)]
    rows = [[f.evaluate(xi) for f in right] for xi in reps] + [[f.evaluate(xi) for f in left] for xi in reps]
    rhs = [unit.evaluate(xi) for xi in reps] * 2
    sol = _solve(field, rows, rhs)
    if sol is not None:
        y = SkewElement.zero(graph, field)
        for coef, e in zip(sol, basis):
            y = y + e.scale(coef)
        if multiply(x, y) == one and multiply(y, x) == one:
            return Inverse(y)
    z = find_annihilator(x, bound)
    if z is not None:
        return z
    return Unknown(bound)


def annihilator_candidates(graph: Graph, field, bound: int) -> list[SkewElement]:
    cands = [SkewElement(graph, field, {Word(): DFunction.indicator(graph, Path(v), field)})
             for v in graph.vertices]
    cands += [SkewElement.generator(graph, w, field) for w in live_words(graph, 1) if not w.is_identity()]
    cands += [SkewElement(graph, field, {Word(): DFunction.indicator(graph, c, field)})
              for c in cylinder_partition(graph, bound)]
    return cands


def find_annihilator(x: SkewElement, bound: int = 2) -> NotInvertible | None:
    cands = annihilator_candidates(x.graph, x.field, bound)
    for z in cands:
        if z and multiply(z, x).is_zero():
            return NotInvertible(z, "left")
    for z in cands:
        if z and multiply(x, z).is_zero():
            return NotInvertible(z, "right")
    return None
