"""The alternative realization D^s(X) *_beta F for graphs without isolated vertices.

Elements of D^s(X) are kept in their generating presentation, a finite
combination of indicators 1_p of words p, and vertex indicators are
replaced by edge sums (regular vertices) or 1_{f^-1} for an incoming edge
(sinks).  The partial action beta is stored only through the edge maps
beta_f and composed letter by letter on demand.  Equality goes through the
canonical form of D(X).
"""
from __future__ import annotations

from typing import Callable, Mapping, Optional

from .fields import RATIONALS, format_scalar, scalar
from .functions import DFunction, indicator_word, word_cylinder
from .graph import Graph, GraphError
from .lpa import edge as edge_term, ghost as ghost_term, vertex as vertex_term, phi
from .partial_action import DomainError
from .report import Report
from .skew import SkewElement
from .words import EmptyDomain, Word, WordLike, as_word, classify, words_up_to


def word_product(graph: Graph, p: Word, r: Word) -> Optional[Word]:
    """1_p 1_r is 0 or one of the factors; return that factor's word, or None for 0."""
    if p.is_identity():
        return r if not isinstance(classify(r, graph), EmptyDomain) else None
    if r.is_identity():
        return p if not isinstance(classify(p, graph), EmptyDomain) else None
    cp, cr = word_cylinder(graph, p), word_cylinder(graph, r)
    if cp is None or cr is None:
        return None
    if cp.is_prefix_of(cr):
        return r
    if cr.is_prefix_of(cp):
        return p
    return None


class DsFunction:
    """A finite combination sum(coef * 1_p) over words p, kept as written."""

    __slots__ = ("graph", "field", "terms", "_df")

    def __init__(self, graph: Graph, field=RATIONALS, terms: Mapping[Word, object] | None = None):
        self.graph = graph
        self.field = field
        self._df = None
        self.terms: dict[Word, object] = {}
        for w, c in (terms or {}).items():
            w = as_word(w)
            if isinstance(classify(w, graph), EmptyDomain):
                continue
            c = self.terms.get(w, field.zero) + c
            if c:
                self.terms[w] = c
            else:
                self.terms.pop(w, None)

    @classmethod
    def indicator(cls, graph: Graph, p: WordLike, field=RATIONALS) -> "DsFunction":
        return cls(graph, field, {as_word(p): field.one})

    def to_dfunction(self) -> DFunction:
        if self._df is None:
            cells: dict = {}
            for w, c in self.terms.items():
                for cell, v in indicator_word(self.graph, w, self.field).terms.items():
                    cells[cell] = cells.get(cell, self.field.zero) + c * v
            self._df = DFunction(self.graph, self.field, cells)
        return self._df

    def is_zero(self) -> bool:
        return self.to_dfunction().is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, DsFunction):
            return self.to_dfunction() == other.to_dfunction()
        if isinstance(other, DFunction):
            return self.to_dfunction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_dfunction())

    def __add__(self, other: "DsFunction") -> "DsFunction":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, self.field.zero) + c
        return DsFunction(self.graph, self.field, terms)

    def __neg__(self) -> "DsFunction":
        return self.scale(-self.field.one)

    def __sub__(self, other: "DsFunction") -> "DsFunction":
        return self + (-other)

    def scale(self, lam) -> "DsFunction":
        lam = scalar(self.field, lam)
        return DsFunction(self.graph, self.field, {w: lam * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, DsFunction):
            return self.scale(other)
        terms: dict[Word, object] = {}
        for p, a in self.terms.items():
            for r, b in other.terms.items():
                w = word_product(self.graph, p, r)
                if w is not None:
                    terms[w] = terms.get(w, self.field.zero) + a * b
        return DsFunction(self.graph, self.field, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_scalar(self.field, c)} * 1[{w}]" for w, c in sorted(self.terms.items()))

    def __repr__(self) -> str:
        return f"DsFunction({self})"


def vertex_replacement(graph: Graph, v: str, field=RATIONALS) -> DsFunction:
    """Stand-in for 1_v: 1_{f^-1} for the least edge f into a sink, else the sum of 1_f over s(f) = v."""
    out = graph.out_edges(v)
    if out:
        return DsFunction(graph, field, {Word.edge(f): field.one for f in out})
    inc = graph.in_edges(v)
    if not inc:
        raise GraphError(f"vertex {v!r} is isolated and has no replacement")
    return DsFunction(graph, field, {Word.edge(inc[0], -1): field.one})


def in_ds_domain(x: DsFunction, w: Word) -> bool:
    """x in D^s_w = 1_w D^s(X)."""
    return (DsFunction.indicator(x.graph, w, x.field) * x) == x


def beta_generator(letter: WordLike, x: DsFunction) -> DsFunction:
    """beta_l(1_{l^-1} 1_h) = 1_l 1_{lh} for a letter l = f or f^-1, extended linearly."""
    letter = as_word(letter)
    if len(letter) != 1:
        raise ValueError(f"{letter} is not a single letter")
    graph, field = x.graph, x.field
    if not in_ds_domain(x, letter.inverse()):
        raise DomainError(f"{x} is not in D^s_{letter.inverse()}")
    terms: dict[Word, object] = {}
    for h, c in x.terms.items():
        w = word_product(graph, letter, letter * h)
        if w is not None:
            terms[w] = terms.get(w, field.zero) + c
    return DsFunction(graph, field, terms)


def beta_extend(g: WordLike, x: DsFunction) -> Optional[DsFunction]:
    """beta_g as the composite of generator maps along g; None once x leaves a running domain."""
    g = as_word(g)
    for f, s in reversed(g.letters):
        letter = Word.edge(f, s)
        if not in_ds_domain(x, letter.inverse()):
            return None
        x = beta_generator(letter, x)
    return x


def spanning_elements(graph: Graph, bound: int, field=RATIONALS) -> list[DsFunction]:
    words = [w for w in words_up_to(graph, bound)
             if not w.is_identity() and not isinstance(classify(w, graph), EmptyDomain)]
    elems = [DsFunction.indicator(graph, w, field) for w in words]
    elems += [vertex_replacement(graph, v, field) for v in graph.vertices if v not in graph.isolated]
    return elems


def _reduced_concat(t: Word, s: Word) -> bool:
    return len(t * s) == len(t) + len(s)


def verify_semi_saturated(graph: Graph, bound: int = 3, field=RATIONALS,
                          extend: Callable[[Word, DsFunction], Optional[DsFunction]] = beta_extend) -> Report:
    """beta_{ts} = beta_t beta_s whenever |ts| = |t| + |s| <= bound, domains included."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    report = Report(f"semi-saturation, |t|+|s| <= {bound}")
    words = words_up_to(graph, bound)
    elems = spanning_elements(graph, bound, field)
    pairs = 0
    for t in words:
        for s in words:
            if len(t) + len(s) > bound or not _reduced_concat(t, s):
                continue
            pairs += 1
            ts = t * s
            for x in elems:
                inner = extend(s, x)
                lhs = extend(ts, x)
                rhs = None if inner is None else extend(t, inner)
                if (lhs is None) != (rhs is None) or (lhs is not None and lhs != rhs):
                    report.add(f"t={t}, s={s}", False, f"on {x}: beta_ts gives {lhs}, beta_t beta_s gives {rhs}")
    report.summary["pairs"] = pairs
    report.summary["elements"] = len(elems)
    return report


def verify_domains(graph: Graph, bound: int = 3, field=RATIONALS) -> Report:
    """beta_t is defined on x exactly when 1_{t^-1} x = x, and beta_{t^-1} undoes beta_t."""
    report = Report(f"domains of beta, |t| <= {bound}")
    elems = spanning_elements(graph, bound, field)
    for t in words_up_to(graph, bound):
        tinv = t.inverse()
        unit = indicator_word(graph, tinv, field)
        for x in elems:
            image = beta_extend(t, x)
            expected = unit * x.to_dfunction() == x.to_dfunction()
            if (image is not None) != expected:
                report.add(f"domain of beta_{t}", False, f"on {x}: defined={image is not None}, expected {expected}")
            elif image is not None and beta_extend(tinv, image) != x:
                report.add(f"inverse of beta_{t}", False, f"beta_{tinv}(beta_{t}({x})) != {x}")
    return report


def verify_orthogonality(graph: Graph, field=RATIONALS) -> Report:
    """For distinct edges a, b: 1_a 1_b = 0, so D^s_a and D^s_b meet only in 0."""
    report = Report("orthogonality of edge ideals")
    edges = list(graph.edges)
    for i, a in enumerate(edges):
        for b in edges[i + 1:]:
            wa, wb = Word.edge(a), Word.edge(b)
            symbolic = word_product(graph, wa, wb) is None
            functional = (indicator_word(graph, wa, field) * indicator_word(graph, wb, field)).is_zero()
            report.add(f"D_{a} . D_{b}", symbolic and functional,
                       "" if symbolic and functional else "generating idempotents do not annihilate")
    report.summary["pairs"] = len(edges) * (len(edges) - 1) // 2
    return report


# -- the skew ring over beta ---------------------------------------------------------

class BetaElement:
    """A finite sum of r delta_g with r in D^s_g, multiplied through beta."""

    def __init__(self, graph: Graph, field=RATIONALS, comps: Mapping[Word, DsFunction] | None = None):
        self.graph, self.field = graph, field
        self.comps = {as_word(g): r for g, r in (comps or {}).items() if not r.is_zero()}

    def __add__(self, other: "BetaElement") -> "BetaElement":
        comps = dict(self.comps)
        for g, r in other.comps.items():
            comps[g] = comps[g] + r if g in comps else r
        return BetaElement(self.graph, self.field, comps)

    def __mul__(self, other: "BetaElement") -> "BetaElement":
        comps: dict[Word, DsFunction] = {}
        for g, r in self.comps.items():
            for h, s in other.comps.items():
                pre = beta_extend(g.inverse(), r)
                if pre is None:
                    raise DomainError(f"{r} is not in D^s_{g}")
                c = beta_extend(g, pre * s)
                if c is None:
                    raise DomainError(f"product leaves D^s_{g.inverse()}")
                gh = g * h
                comps[gh] = comps[gh] + c if gh in comps else c
        return BetaElement(self.graph, self.field, comps)

    def to_skew(self) -> SkewElement:
        return SkewElement(self.graph, self.field, {g: r.to_dfunction() for g, r in self.comps.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, BetaElement):
            other = other.to_skew()
        if isinstance(other, SkewElement):
            return self.to_skew() == other
        return NotImplemented

    __hash__ = None

    def __str__(self) -> str:
        if not self.comps:
            return "0"
        return " + ".join(f"({r}) d[{g}]" for g, r in sorted(self.comps.items()))


def _check_beta_graph(graph: Graph) -> None:
    if not graph.edges:
        raise GraphError("the beta construction needs at least one edge")
    if graph.isolated:
        raise GraphError(f"graph has isolated vertices {list(graph.isolated)}; the beta construction excludes them")


def beta_generators(graph: Graph, field=RATIONALS) -> dict[str, BetaElement]:
    """Images of v, f and f* on the beta side, keyed by their term text."""
    _check_beta_graph(graph)
    gens: dict[str, BetaElement] = {}
    for v in graph.vertices:
        gens[v] = BetaElement(graph, field, {Word(): vertex_replacement(graph, v, field)})
    for f in graph.edges:
        gens[f] = BetaElement(graph, field, {Word.edge(f): DsFunction.indicator(graph, Word.edge(f), field)})
        fi = Word.edge(f, -1)
        gens[f + "*"] = BetaElement(graph, field, {fi: DsFunction.indicator(graph, fi, field)})
    return gens


def iso_agreement_check(graph: Graph, field=RATIONALS) -> Report:
    """CK relations on the beta side, plus agreement of every generator product with the alpha side."""
    gens = beta_generators(graph, field)
    report = Report("beta realization of the Leavitt path algebra")
    zero = BetaElement(graph, field)

    def rel(family: str, label: str, lhs: BetaElement, rhs: BetaElement) -> None:
        ok = lhs == rhs
        report.add(f"({family}) {label}", ok, "" if ok else f"{lhs} != {rhs}", kind="relation")

    for f, e in graph.edges.items():
        rel("1", f"s({f}){f} = {f}", gens[e.src] * gens[f], gens[f])
        rel("1", f"{f}r({f}) = {f}", gens[f] * gens[e.dst], gens[f])
    for f, e in graph.edges.items():
        rel("2", f"r({f}){f}* = {f}*", gens[e.dst] * gens[f + "*"], gens[f + "*"])
        rel("2", f"{f}*s({f}) = {f}*", gens[f + "*"] * gens[e.src], gens[f + "*"])
    for f, e in graph.edges.items():
        for f2 in graph.edges:
            rel("3", f"{f}*{f2} = {'r(' + f + ')' if f == f2 else '0'}",
                gens[f + "*"] * gens[f2], gens[e.dst] if f == f2 else zero)
    for v in graph.vertices:
        out = graph.out_edges(v)
        if out:
            rhs = zero
            for f in out:
                rhs = rhs + gens[f] * gens[f + "*"]
            rel("4", f"{v} = " + " + ".join(f"{f}{f}*" for f in out), gens[v], rhs)
    unit = zero
    for v in graph.vertices:
        unit = unit + gens[v]
    rel("unit", "sum of vertex replacements = 1", unit,
        BetaElement(graph, field, {Word(): DsFunction.indicator(graph, Word(), field)}))

    alpha_images = {}
    for name in gens:
        if name.endswith("*"):
            alpha_images[name] = phi(ghost_term(name[:-1]), graph, field)
        elif name in graph.edges:
            alpha_images[name] = phi(edge_term(name), graph, field)
        else:
            alpha_images[name] = phi(vertex_term(name), graph, field)
    for a in gens:
        if gens[a] != alpha_images[a]:
            report.add(f"agree {a}", False, f"{gens[a]} != {alpha_images[a]}", kind="agreement")
        for b in gens:
            ok = (gens[a] * gens[b]) == alpha_images[a] * alpha_images[b]
            report.add(f"agree {a}.{b}", ok, "" if ok else "beta and alpha products differ", kind="agreement")
    report.summary["relations"] = sum(1 for r in report.records if r.data.get("kind") == "relation")
    report.summary["agreements"] = sum(1 for r in report.records if r.data.get("kind") == "agreement")
    return report
