"""The shipped example graphs and a seeded random graph generator."""
from __future__ import annotations

import json
import random
from importlib import resources

from .graph import Edge, Graph

CORPUS_NAMES = ("a2", "loop", "rose2", "toeplitz")


def load_corpus_graph(name: str) -> Graph:
    text = resources.files("leavitt_partial.data").joinpath(f"{name}.json").read_text()
    return Graph.from_dict(json.loads(text), name=name)


def corpus() -> dict[str, Graph]:
    """LOOP, ROSE2, A2 and the Toeplitz graph T, keyed by name."""
    return {name: load_corpus_graph(name) for name in CORPUS_NAMES}


def random_graph(rng: random.Random, max_vertices: int = 5, max_edges: int = 8,
                 allow_isolated: bool = False, name: str = "") -> Graph:
    """A random graph with at least one edge; redrawn until it has no isolated vertex unless allowed."""
    while True:
        n = rng.randint(1, max_vertices)
        m = rng.randint(1, max_edges)
        verts = [f"v{i}" for i in range(n)]
        edges = [Edge(f"e{j}", rng.choice(verts), rng.choice(verts)) for j in range(m)]
        g = Graph(verts, edges, name=name)
        if allow_isolated or not g.isolated:
            return g


def random_graphs(count: int, seed: int = 0, **kwargs) -> dict[str, Graph]:
    rng = random.Random(seed)
    return {f"random{i:02d}": random_graph(rng, name=f"random{i:02d}", **kwargs) for i in range(count)}
