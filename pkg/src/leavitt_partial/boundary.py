"""The boundary path space X of a finite graph, its cylinders, and theta.

X consists of finite paths ending at a sink (sink vertices included) and
infinite paths.  Infinite paths are represented by eventually periodic
ones, which suffices to witness every cylinder of a finite graph.
Cylinders are :class:`~leavitt_partial.graph.Path` values: a vertex path
``v`` stands for X_v and an edge path ``a`` for X_a.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .graph import Graph, GraphError, Path
from .words import Identity, WordLike, as_word, classify, transport_pair

Cylinder = Path


def cylinder_label(c: Cylinder) -> str:
    return f"X[{c}]"


@dataclass(frozen=True)
class FiniteToSink:
    """A finite path whose range is a sink; a bare sink vertex when ``path`` has no edges."""

    path: Path

    @property
    def start(self) -> str:
        return self.path.start

    def head(self, n: int) -> tuple[str, ...] | None:
        return self.path.edges[:n] if n <= len(self.path) else None

    def __str__(self) -> str:
        return str(self.path)


@dataclass(frozen=True)
class EventuallyPeriodic:
    """The infinite path ``prefix cycle cycle ...``.

    Always build through :func:`periodic`, which normalizes to the primitive
    cycle with the shortest prefix so that structural and path equality agree.
    """

    start: str
    prefix: tuple[str, ...]
    cycle: tuple[str, ...]

    def head(self, n: int) -> tuple[str, ...]:
        out = list(self.prefix[:n])
        while len(out) < n:
            out.extend(self.cycle)
        return tuple(out[:n])

    def __str__(self) -> str:
        cyc = "".join(self.cycle)
        return f"{''.join(self.prefix)}({cyc})^inf"


BoundaryPath = Union[FiniteToSink, EventuallyPeriodic]


def _primitive_root(cycle: tuple[str, ...]) -> tuple[str, ...]:
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle[:d] * (n // d) == cycle:
            return cycle[:d]
    return cycle


def periodic(graph: Graph, prefix, cycle) -> EventuallyPeriodic:
    prefix, cycle = tuple(prefix), tuple(cycle)
    if not cycle:
        raise GraphError("an eventually periodic path needs a nonempty cycle")
    graph.path(prefix + cycle + cycle[:1])  # composability, including the wrap-around
    cycle = _primitive_root(cycle)
    while prefix and prefix[-1] == cycle[-1]:
        prefix = prefix[:-1]
        cycle = cycle[-1:] + cycle[:-1]
    start = graph.src(prefix[0] if prefix else cycle[0])
    return EventuallyPeriodic(start, prefix, cycle)


def finite(graph: Graph, edges_or_vertex) -> FiniteToSink:
    p = graph.path(edges_or_vertex)
    if not graph.is_sink(p.end):
        raise GraphError(f"{p} does not end at a sink, so it is not a boundary path")
    return FiniteToSink(p)


def in_cylinder(xi: BoundaryPath, c: Cylinder) -> bool:
    if xi.start != c.start:
        return False
    if c.is_vertex:
        return True
    return xi.head(len(c)) == c.edges


def drop(graph: Graph, xi: BoundaryPath, k: int) -> BoundaryPath:
    """Remove the first ``k`` edges of ``xi``."""
    if k == 0:
        return xi
    if isinstance(xi, FiniteToSink):
        rest = xi.path.edges[k:]
        if k > len(xi.path):
            raise ValueError("cannot drop more edges than the path has")
        return FiniteToSink(graph.path(rest) if rest else Path(xi.path.end))
    if k <= len(xi.prefix):
        return periodic(graph, xi.prefix[k:], xi.cycle)
    shift = (k - len(xi.prefix)) % len(xi.cycle)
    return periodic(graph, (), xi.cycle[shift:] + xi.cycle[:shift])


def prepend(graph: Graph, a: Path, xi: BoundaryPath) -> BoundaryPath:
    if a.end != xi.start:
        raise GraphError(f"cannot prepend {a} to a path starting at {xi.start}")
    if a.is_vertex:
        return xi
    if isinstance(xi, FiniteToSink):
        return FiniteToSink(graph.concat(a, xi.path))
    return periodic(graph, a.edges + xi.prefix, xi.cycle)


def theta_apply(graph: Graph, g: WordLike, xi: BoundaryPath) -> Optional[BoundaryPath]:
    """Apply theta_g to ``xi``; ``None`` when ``xi`` lies outside X_{g^-1}."""
    shape = classify(as_word(g), graph)
    if isinstance(shape, Identity):
        return xi
    pair = transport_pair(shape, graph)
    if pair is None:
        return None
    a, b = pair
    if not in_cylinder(xi, b):
        return None
    return prepend(graph, a, drop(graph, xi, len(b)))


def cylinder_partition(graph: Graph, d: int) -> list[Cylinder]:
    """Disjoint cylinders covering X: depth-``d`` paths plus shorter sink-ending atoms."""
    if d < 0:
        raise ValueError("depth must be nonnegative")
    cells: list[Cylinder] = []
    layer = [Path(v) for v in graph.vertices]
    for depth in range(d + 1):
        nxt = []
        for p in layer:
            if graph.is_sink(p.end) or depth == d:
                cells.append(p)
            else:
                nxt.extend(graph.children(p))
        layer = nxt
    return sorted(cells)


def representative(graph: Graph, c: Cylinder) -> BoundaryPath:
    """A boundary path inside cylinder ``c``, walking least edges forward."""
    walk: list[str] = []
    seen = {c.end: 0}
    v = c.end
    while True:
        out = graph.out_edges(v)
        if not out:
            edges = c.edges + tuple(walk)
            return FiniteToSink(graph.path(edges) if edges else Path(c.start))
        f = out[0]
        walk.append(f)
        v = graph.dst(f)
        if v in seen:
            i = seen[v]
            return periodic(graph, c.edges + tuple(walk[:i]), walk[i:])
        seen[v] = len(walk)


def _closed_paths(graph: Graph, max_len: int) -> Iterator[tuple[str, ...]]:
    for p in graph.paths_up_to(max_len):
        if p.edges and p.start == p.end:
            yield p.edges


def boundary_paths(graph: Graph, max_len: int) -> list[BoundaryPath]:
    """Sink-ending paths of length <= max_len and periodic ones with |prefix|+|cycle| <= max_len."""
    found: dict[BoundaryPath, None] = {}
    paths = graph.paths_up_to(max_len)
    for p in paths:
        if graph.is_sink(p.end):
            found[FiniteToSink(p)] = None
    for cyc in _closed_paths(graph, max_len):
        for p in paths:
            if p.end == graph.src(cyc[0]) and len(p) + len(cyc) <= max_len:
                found[periodic(graph, p.edges, cyc)] = None
    return list(found)
