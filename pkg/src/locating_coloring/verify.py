"""Coloring values and the locating / neighbor-locating verifiers.

A coloring of a graph on n vertices is a map onto {1..k}: every color class is
nonempty (enforced when the Coloring value is built, and nowhere else).

Two ways a proper coloring can distinguish same-colored vertices:

* locating: the color code of v, the vector of hop distances from v to each
  color class, is distinct across all vertices.  Needs a connected graph.
* neighbor-locating: same-colored vertices see different color sets on their
  neighborhoods.  Works on disconnected graphs too.

Clamping every code entry at 2 gives the modified code; modified codes are
distinct exactly when the coloring is neighbor-locating, which the property
tests exercise.  For paths and cycles the same information is carried by
segments [[r,s,t]] (color s flanked by r and t, unordered): a proper sequence
is neighbor-locating exactly when no segment repeats.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import DisconnectedGraphError, ImproperColoringError, ParameterError
from .graphs import Graph

Mode = Literal["locating", "nl"]
Topology = Literal["path", "cycle"]


@dataclass(frozen=True)
class Coloring:
    """Vertex colors 1..k, onto; index = vertex."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError("coloring needs k >= 1")
        if not self.colors:
            raise ParameterError("coloring needs at least one vertex")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ParameterError(f"color {c} of vertex {v} outside 1..{self.k}")
        missing = set(range(1, self.k + 1)) - set(self.colors)
        if missing:
            raise ParameterError(f"empty color classes: {sorted(missing)}")

    @staticmethod
    def from_sequence(seq: Iterable[int]) -> "Coloring":
        colors = tuple(seq)
        if not colors:
            raise ParameterError("coloring needs at least one vertex")
        return Coloring(max(colors), colors)

    @property
    def n(self) -> int:
        return len(self.colors)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out


def _check_sizes(g: Graph, f: Coloring) -> None:
    if g.n != f.n:
        raise ParameterError(f"coloring covers {f.n} vertices but the graph has {g.n}")


def first_improper_edge(g: Graph, f: Coloring) -> tuple[int, int] | None:
    """Lexicographically first monochromatic edge, or None."""
    _check_sizes(g, f)
    for u in range(g.n):
        for v in g.adjacency[u]:
            if u < v and f.colors[u] == f.colors[v]:
                return (u, v)
    return None


def is_proper(g: Graph, f: Coloring) -> bool:
    return first_improper_edge(g, f) is None


def _require_proper(g: Graph, f: Coloring) -> None:
    edge = first_improper_edge(g, f)
    if edge is not None:
        raise ImproperColoringError(
            f"adjacent vertices v_{edge[0] + 1} and v_{edge[1] + 1} share color {f.colors[edge[0]]}",
            edge=edge,
        )


def _class_distances(g: Graph, members: list[int]) -> list[int | None]:
    # multi-source BFS: distance from every vertex to the nearest member
    dist: list[int | None] = [None] * g.n
    queue = deque()
    for v in members:
        dist[v] = 0
        queue.append(v)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def color_codes(g: Graph, f: Coloring) -> tuple[tuple[int | None, ...], ...]:
    """Code of v = (d(v,V_1), ..., d(v,V_k)); None marks an unreachable class.

    Callers own properness; is_locating refuses disconnected graphs, this does not.
    """
    _check_sizes(g, f)
    per_class = [_class_distances(g, members) for members in f.classes()]
    return tuple(tuple(per_class[i][v] for i in range(f.k)) for v in range(g.n))


def modified_color_codes(g: Graph, f: Coloring) -> tuple[tuple[int, ...], ...]:
    """Codes with every entry clamped at 2; unreachable classes clamp to 2 as well."""
    return tuple(
        tuple(2 if d is None else min(2, d) for d in code) for code in color_codes(g, f)
    )


def is_locating(g: Graph, f: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Whether all color codes are distinct; on failure also the first bad pair.

    The witness is the lexicographically first pair (u, v), u < v, with equal
    codes, scanning by vertex index.  Raises on improper colorings and on
    disconnected graphs (the locating predicate is undefined there).
    """
    _check_sizes(g, f)
    _require_proper(g, f)
    codes = color_codes(g, f)
    if any(d is None for d in codes[0]):
        raise DisconnectedGraphError("locating verdicts are undefined for disconnected graphs")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if codes[u] == codes[v]:
                return (False, (u, v))
    return (True, None)


def neighbor_color_sets(g: Graph, f: Coloring) -> tuple[frozenset[int], ...]:
    _check_sizes(g, f)
    return tuple(frozenset(f.colors[w] for w in g.adjacency[v]) for v in range(g.n))


def is_neighbor_locating(g: Graph, f: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Whether same-colored vertices always differ on neighborhood color sets.

    Witness as in is_locating.  Disconnected graphs are fine; improper raises.
    """
    _check_sizes(g, f)
    _require_proper(g, f)
    sets = neighbor_color_sets(g, f)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if f.colors[u] == f.colors[v] and sets[u] == sets[v]:
                return (False, (u, v))
    return (True, None)


# ---------------------------------------------------------------------------
# Segments


@dataclass(frozen=True, order=True)
class Segment:
    """Color s flanked by colors {r, t}; ends are unordered and may coincide."""

    center: int
    ends: tuple[int, int]  # sorted

    def __str__(self) -> str:
        return f"[[{self.ends[0]},{self.center},{self.ends[1]}]]"


def _segment(left: int, center: int, right: int) -> Segment:
    if left == center or right == center:
        raise ImproperColoringError("segment ends cannot equal the center color")
    return Segment(center, (min(left, right), max(left, right)))


def segments_of(seq: Iterable[int], topology: Topology) -> list[Segment]:
    """Per-vertex segments of a proper color sequence; leaves repeat their one neighbor."""
    entries = list(seq)
    n = len(entries)
    if topology == "path":
        if n < 2:
            raise ParameterError("path segments need at least 2 entries")
    elif topology == "cycle":
        if n < 3:
            raise ParameterError("cycle segments need at least 3 entries")
    else:
        raise ParameterError(f"unknown topology {topology!r}")
    for i in range(n - 1):
        if entries[i] == entries[i + 1]:
            raise ImproperColoringError(
                f"equal adjacent colors at positions {i + 1} and {i + 2}", edge=(i, i + 1)
            )
    if topology == "cycle" and entries[0] == entries[-1]:
        raise ImproperColoringError(
            "equal colors at the cycle seam (first and last entries)", edge=(0, n - 1)
        )
    segments = []
    for i in range(n):
        if topology == "cycle":
            segments.append(_segment(entries[i - 1], entries[i], entries[(i + 1) % n]))
        elif i == 0:
            segments.append(_segment(entries[1], entries[0], entries[1]))
        elif i == n - 1:
            segments.append(_segment(entries[n - 2], entries[n - 1], entries[n - 2]))
        else:
            segments.append(_segment(entries[i - 1], entries[i], entries[i + 1]))
    return segments


def all_segments_unique(seq: Iterable[int], topology: Topology) -> bool:
    """Observation: a proper sequence is neighbor-locating iff no segment repeats."""
    segments = segments_of(seq, topology)
    return len(set(segments)) == len(segments)
