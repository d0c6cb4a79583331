"""Reduced words in the free group on the edges of a graph.

Literal syntax: letters separated by ``.``, a trailing ``'`` marks an inverse
and ``e`` alone is the identity, e.g. ``a.b'`` is a b^{-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .graph import Graph, GraphError, Path

Letter = tuple[str, int]


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for edge, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        if stack and stack[-1][0] == edge and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((edge, sign))
    return tuple(stack)


class Word:
    """An element of the free group, always stored in reduced form."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters: tuple[Letter, ...] = _reduce(letters)

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    @classmethod
    def edge(cls, f: str, sign: int = 1) -> "Word":
        return cls(((f, sign),))

    @classmethod
    def from_path(cls, p: Path) -> "Word":
        return cls((f, 1) for f in p.edges)

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if text in ("", "e"):
            return cls()
        letters = []
        for chunk in text.split("."):
            chunk = chunk.strip()
            sign = 1
            if chunk.endswith("'"):
                chunk, sign = chunk[:-1], -1
            if not chunk or "'" in chunk:
                raise ValueError(f"malformed word literal {text!r}")
            letters.append((chunk, sign))
        return cls(letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word((f, -s) for f, s in reversed(self.letters))

    __invert__ = inverse

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return ".".join(f if s > 0 else f + "'" for f, s in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


WordLike = Union[Word, str]


def as_word(w: WordLike) -> Word:
    return w if isinstance(w, Word) else Word.parse(w)


# -- shapes --------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class PathShape:
    """Word a for a composable path a."""
    a: Path


@dataclass(frozen=True)
class InvPath:
    """Word b^{-1} for a composable path b."""
    b: Path


@dataclass(frozen=True)
class PathPair:
    """Reduced word a b^{-1} with r(a) = r(b)."""
    a: Path
    b: Path


@dataclass(frozen=True)
class EmptyDomain:
    pass


GroupShape = Union[Identity, PathShape, InvPath, PathPair, EmptyDomain]


def classify(w: WordLike, graph: Graph) -> GroupShape:
    """Sort ``w`` into one of the shapes that carry a nonempty set X_g."""
    return _classify(as_word(w), graph)


@lru_cache(maxsize=1 << 16)
def _classify(w: Word, graph: Graph) -> GroupShape:
    for f, _ in w.letters:
        if f not in graph.edges:
            raise GraphError(f"unknown edge {f!r} in word {w}")
    if w.is_identity():
        return Identity()
    signs = [s for _, s in w.letters]
    split = next((i for i, s in enumerate(signs) if s < 0), len(signs))
    if any(s > 0 for s in signs[split:]):
        return EmptyDomain()
    pos = [f for f, _ in w.letters[:split]]
    neg = [f for f, _ in reversed(w.letters[split:])]
    if not (graph.is_composable(pos) and graph.is_composable(neg)):
        return EmptyDomain()
    if not neg:
        return PathShape(graph.path(pos))
    if not pos:
        return InvPath(graph.path(neg))
    a, b = graph.path(pos), graph.path(neg)
    if a.end != b.end:
        return EmptyDomain()
    return PathPair(a, b)


def transport_pair(shape: GroupShape, graph: Graph) -> tuple[Path, Path] | None:
    """Return ``(a, b)`` with X_g = X_a, X_{g^-1} = X_b and theta_g(b t) = a t.

    Vertex paths stand in for the missing side of Path / InvPath shapes.
    ``None`` for the identity and for empty domains.
    """
    if isinstance(shape, PathShape):
        return shape.a, graph.vertex_path(shape.a.end)
    if isinstance(shape, InvPath):
        return graph.vertex_path(shape.b.end), shape.b
    if isinstance(shape, PathPair):
        return shape.a, shape.b
    return None


def words_up_to(graph: Graph, bound: int) -> list[Word]:
    """All reduced words of length at most ``bound`` over the graph's edges."""
    letters = [(f, s) for f in graph.edges for s in (1, -1)]
    words = [Word()]
    layer = [Word()]
    for _ in range(bound):
        nxt = []
        for w in layer:
            for f, s in letters:
                if w.letters and w.letters[-1] == (f, -s):
                    continue
                nxt.append(Word(w.letters + ((f, s),)))
        words.extend(nxt)
        layer = nxt
    return sorted(words)
