"""Finite directed graphs, vertex classification and finite paths."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path as FsPath
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Raised for malformed graphs or ids that do not belong to a graph."""


class VertexClass(enum.Enum):
    SINK = "sink"
    SOURCE = "source"
    ISOLATED = "isolated"
    REGULAR = "regular"
    # never produced for finite graphs
    INFINITE_EMITTER = "infinite_emitter"


@dataclass(frozen=True, order=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Path:
    """A finite path: a bare vertex (length 0) or a composable edge sequence.

    ``start`` and ``end`` are the source and range vertices.  Build instances
    through :meth:`Graph.path` or :meth:`Graph.vertex_path` so composability
    is checked.
    """

    start: str
    edges: tuple[str, ...] = ()
    end: str = ""

    def __post_init__(self):
        if not self.end:
            if self.edges:
                raise GraphError("a path with edges needs an explicit range")
            object.__setattr__(self, "end", self.start)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def sort_key(self):
        return (self.edges, self.start)

    def __lt__(self, other: "Path") -> bool:
        return self.sort_key() < other.sort_key()

    def is_prefix_of(self, other: "Path") -> bool:
        if self.start != other.start:
            return False
        return other.edges[: len(self.edges)] == self.edges

    def __str__(self) -> str:
        return "".join(self.edges) if self.edges else self.start


class Graph:
    """A finite directed graph ``E = (E0, E1, r, s)``.

    Construction does not validate; call :meth:`validate` (or use
    :meth:`from_dict` / :func:`load_graph`, which reject invalid input).
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge | tuple], name: str = ""):
        self._vertex_list = tuple(vertices)
        self._edge_list = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        self.name = name
        self.vertices: tuple[str, ...] = tuple(sorted(set(self._vertex_list)))
        self.edges: dict[str, Edge] = {e.id: e for e in sorted(self._edge_list)}

    # -- construction -------------------------------------------------
    @classmethod
    def from_dict(cls, data: Mapping, name: str = "") -> "Graph":
        try:
            vertices = [str(v) for v in data["vertices"]]
            edges = [Edge(str(e["id"]), str(e["src"]), str(e["dst"])) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph document: {exc}") from exc
        graph = cls(vertices, edges, name=name or str(data.get("name", "")))
        problems = graph.validate()
        if problems:
            raise GraphError("invalid graph: " + "; ".join(problems))
        return graph

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in self.edges.values()],
        }

    def __repr__(self) -> str:
        edges = ", ".join(f"{e.id}:{e.src}->{e.dst}" for e in self.edges.values())
        label = f"{self.name} " if self.name else ""
        return f"<Graph {label}{{{', '.join(self.vertices)}; {edges}}}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.vertices, tuple(self.edges.values())))

    # -- validation and classification --------------------------------
    def validate(self) -> list[str]:
        """Return a list of human-readable violations; empty means valid."""
        problems = []
        if not self._vertex_list:
            problems.append("graph has no vertices")
        seen: set[str] = set()
        for v in self._vertex_list:
            if v in seen:
                problems.append(f"duplicate vertex id {v!r}")
            seen.add(v)
        seen_edges: set[str] = set()
        for e in self._edge_list:
            if e.id in seen_edges:
                problems.append(f"duplicate edge id {e.id!r}")
            seen_edges.add(e.id)
            for end in (e.src, e.dst):
                if end not in seen:
                    problems.append(f"edge {e.id!r} uses unknown vertex {end!r}")
        return problems

    def _check_vertex(self, v: str) -> None:
        if v not in self._out:
            raise GraphError(f"unknown vertex {v!r}")

    def edge(self, f: str) -> Edge:
        try:
            return self.edges[f]
        except KeyError:
            raise GraphError(f"unknown edge {f!r}") from None

    @cached_property
    def _out(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges.values():
            out[e.src].append(e.id)
        return {v: tuple(sorted(ids)) for v, ids in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[str, ...]]:
        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges.values():
            inc[e.dst].append(e.id)
        return {v: tuple(sorted(ids)) for v, ids in inc.items()}

    def out_edges(self, v: str) -> tuple[str, ...]:
        self._check_vertex(v)
        return self._out[v]

    def in_edges(self, v: str) -> tuple[str, ...]:
        self._check_vertex(v)
        return self._in[v]

    def src(self, f: str) -> str:
        return self.edge(f).src

    def dst(self, f: str) -> str:
        return self.edge(f).dst

    def is_sink(self, v: str) -> bool:
        return not self.out_edges(v)

    def is_source(self, v: str) -> bool:
        return not self.in_edges(v)

    def classify(self, v: str) -> VertexClass:
        sink, source = self.is_sink(v), self.is_source(v)
        if sink and source:
            return VertexClass.ISOLATED
        if sink:
            return VertexClass.SINK
        if source:
            return VertexClass.SOURCE
        return VertexClass.REGULAR

    @property
    def sinks(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.is_sink(v))

    @property
    def isolated(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.classify(v) is VertexClass.ISOLATED)

    def emits(self, v: str) -> bool:
        """True when ``v`` has outgoing edges (a non-sink)."""
        return bool(self.out_edges(v))

    # -- paths --------------------------------------------------------
    def vertex_path(self, v: str) -> Path:
        self._check_vertex(v)
        return Path(v)

    def path(self, edges: Iterable[str] | str) -> Path:
        """Build the path through ``edges``; a string names a vertex, an edge, or ``f.g.h``."""
        if isinstance(edges, str):
            if "." in edges:
                edges = edges.split(".")
            elif edges in self.edges:
                edges = (edges,)
            else:
                return self.vertex_path(edges)
        edges = tuple(edges)
        if not edges:
            raise GraphError("an empty edge sequence does not determine a vertex")
        for f, g in zip(edges, edges[1:]):
            if self.dst(f) != self.src(g):
                raise GraphError(f"edges {f!r} and {g!r} are not composable")
        return Path(self.src(edges[0]), edges, self.dst(edges[-1]))

    def is_composable(self, edges: Iterable[str]) -> bool:
        edges = tuple(edges)
        return all(self.dst(f) == self.src(g) for f, g in zip(edges, edges[1:]))

    def extend(self, p: Path, f: str) -> Path:
        if self.src(f) != p.end:
            raise GraphError(f"edge {f!r} does not continue {p}")
        return Path(p.start, p.edges + (f,), self.dst(f))

    def concat(self, p: Path, q: Path) -> Path:
        if p.end != q.start:
            raise GraphError(f"paths {p} and {q} are not composable")
        if q.is_vertex:
            return p
        if p.is_vertex:
            return q
        return Path(p.start, p.edges + q.edges, q.end)

    def children(self, p: Path) -> list[Path]:
        """One-edge extensions of ``p``; empty when ``p`` ends at a sink."""
        return [Path(p.start, p.edges + (f,), self.dst(f)) for f in self.out_edges(p.end)]

    def paths_up_to(self, d: int) -> list[Path]:
        """All finite paths of length at most ``d``, vertices included."""
        if d < 0:
            raise ValueError("length bound must be nonnegative")
        found: list[Path] = []
        layer = [Path(v) for v in self.vertices]
        found.extend(layer)
        for _ in range(d):
            layer = [q for p in layer for q in self.children(p)]
            found.extend(layer)
        return sorted(found)


def load_graph(path) -> Graph:
    """Read a graph JSON file; raises :class:`GraphError` if it is invalid."""
    path = FsPath(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphError(f"cannot read graph file {path}: {exc}") from exc
    return Graph.from_dict(data, name=data.get("name", path.stem) if isinstance(data, dict) else path.stem)
