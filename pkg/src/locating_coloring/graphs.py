"""Simple undirected graphs, the spec mini-language, and distance computations.

Vertices are 0-based integers internally; the CLI and docs render them 1-based
(v_1..v_n).  Every family builder assigns a canonical numbering so that
colorings written as sequences line up with vertex indices:

* path:N, cycle:N   sequence order (vertex i adjacent to i+1, cycles wrap)
* complete:N        any order (all pairs adjacent)
* multipartite:...  part 0 first, then part 1, and so on
* cliques:TxM       copy 0 occupies vertices 0..M-1, copy 1 the next M, ...
* join(S1,S2)       left operand keeps its numbering, right is shifted by |V(S1)|
* friendship:T      expands to join(complete:1, cliques:Tx2); the hub is vertex 0
* custom:N:...      vertex labels are 1-based in the text form
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Union

from .errors import ParameterError, SpecSyntaxError


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with sorted adjacency tuples."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise ParameterError("adjacency length disagrees with vertex count")
        for u, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise ParameterError(f"adjacency of vertex {u} is not sorted and duplicate-free")
            for v in row:
                if not 0 <= v < self.n:
                    raise ParameterError(f"vertex {v} out of range in adjacency of {u}")
                if v == u:
                    raise ParameterError(f"self-loop at vertex {u}")
                if u not in self.adjacency[v]:
                    raise ParameterError(f"edge {u}-{v} is not symmetric")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        if n < 1:
            raise ParameterError("graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge {u}-{v} out of range for {n} vertices")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParameterError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return Graph(n, tuple(tuple(sorted(row)) for row in adj))

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]


# ---------------------------------------------------------------------------
# Graph specs


@dataclass(frozen=True)
class PathSpec:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("path needs n >= 1")


@dataclass(frozen=True)
class CycleSpec:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ParameterError("cycle needs n >= 3")


@dataclass(frozen=True)
class CompleteSpec:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("complete graph needs n >= 1")


@dataclass(frozen=True)
class MultipartiteSpec:
    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes:
            raise ParameterError("multipartite needs at least one part")
        if any(s < 1 for s in self.sizes):
            raise ParameterError("multipartite part sizes must be >= 1")


@dataclass(frozen=True)
class CliqueFamilySpec:
    """t disjoint copies of K_m."""

    t: int
    m: int

    def __post_init__(self):
        if self.t < 1 or self.m < 1:
            raise ParameterError("clique family needs t >= 1 and m >= 1")


@dataclass(frozen=True)
class FriendshipSpec:
    """t triangles sharing one hub vertex: join(K_1, t disjoint K_2)."""

    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ParameterError("friendship graph needs t >= 1")


@dataclass(frozen=True)
class JoinSpec:
    left: "GraphSpec"
    right: "GraphSpec"


@dataclass(frozen=True)
class CustomSpec:
    n: int
    edges: tuple[tuple[int, int], ...]  # 0-based, normalized u < v, sorted

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("custom graph needs n >= 1")


GraphSpec = Union[
    PathSpec,
    CycleSpec,
    CompleteSpec,
    MultipartiteSpec,
    CliqueFamilySpec,
    FriendshipSpec,
    JoinSpec,
    CustomSpec,
]


def _parse_int(text: str, what: str) -> int:
    if not text.isdigit():
        raise SpecSyntaxError(f"expected an integer for {what}, got {text!r}")
    return int(text)


def parse_spec(text: str) -> GraphSpec:
    """Parse the spec mini-language.  Whitespace inside a spec token is a syntax error."""
    if not text or any(ch.isspace() for ch in text):
        raise SpecSyntaxError(f"bad graph spec {text!r}")
    if text.startswith("join(") and text.endswith(")"):
        inner = text[len("join(") : -1]
        depth = 0
        split = -1
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                split = i
                break
        if split < 0:
            raise SpecSyntaxError(f"join needs two comma-separated operands: {text!r}")
        return JoinSpec(parse_spec(inner[:split]), parse_spec(inner[split + 1 :]))
    head, sep, rest = text.partition(":")
    if not sep:
        raise SpecSyntaxError(f"bad graph spec {text!r}")
    try:
        if head == "path":
            return PathSpec(_parse_int(rest, "path length"))
        if head == "cycle":
            return CycleSpec(_parse_int(rest, "cycle length"))
        if head == "complete":
            return CompleteSpec(_parse_int(rest, "complete graph order"))
        if head == "multipartite":
            parts = rest.split(",")
            return MultipartiteSpec(tuple(_parse_int(p, "part size") for p in parts))
        if head == "cliques":
            t_text, sep2, m_text = rest.partition("x")
            if not sep2:
                raise SpecSyntaxError(f"cliques spec needs TxM, got {rest!r}")
            return CliqueFamilySpec(_parse_int(t_text, "copy count"), _parse_int(m_text, "clique order"))
        if head == "friendship":
            return FriendshipSpec(_parse_int(rest, "triangle count"))
        if head == "custom":
            n_text, sep2, edge_text = rest.partition(":")
            if not sep2:
                raise SpecSyntaxError(f"custom spec needs custom:N:EDGES, got {text!r}")
            n = _parse_int(n_text, "vertex count")
            edges = []
            if edge_text:
                for token in edge_text.split(","):
                    u_text, sep3, v_text = token.partition("-")
                    if not sep3:
                        raise SpecSyntaxError(f"bad edge token {token!r}")
                    u = _parse_int(u_text, "vertex label") - 1
                    v = _parse_int(v_text, "vertex label") - 1
                    if not (0 <= u < n and 0 <= v < n):
                        raise SpecSyntaxError(f"edge {token!r} out of range for {n} vertices")
                    if u == v:
                        raise SpecSyntaxError(f"self-loop {token!r}")
                    edges.append((min(u, v), max(u, v)))
            if len(set(edges)) != len(edges):
                raise SpecSyntaxError("duplicate edge in custom spec")
            return CustomSpec(n, tuple(sorted(edges)))
    except ParameterError as exc:
        raise SpecSyntaxError(str(exc)) from exc
    raise SpecSyntaxError(f"unknown graph family {head!r}")


def format_spec(spec: GraphSpec) -> str:
    """Render a spec in the canonical text form; parse_spec(format_spec(s)) == s."""
    if isinstance(spec, PathSpec):
        return f"path:{spec.n}"
    if isinstance(spec, CycleSpec):
        return f"cycle:{spec.n}"
    if isinstance(spec, CompleteSpec):
        return f"complete:{spec.n}"
    if isinstance(spec, MultipartiteSpec):
        return "multipartite:" + ",".join(str(s) for s in spec.sizes)
    if isinstance(spec, CliqueFamilySpec):
        return f"cliques:{spec.t}x{spec.m}"
    if isinstance(spec, FriendshipSpec):
        return f"friendship:{spec.t}"
    if isinstance(spec, JoinSpec):
        return f"join({format_spec(spec.left)},{format_spec(spec.right)})"
    if isinstance(spec, CustomSpec):
        edge_text = ",".join(f"{u + 1}-{v + 1}" for u, v in spec.edges)
        return f"custom:{spec.n}:{edge_text}"
    raise ParameterError(f"not a graph spec: {spec!r}")


def spec_order(spec: GraphSpec) -> int:
    """Number of vertices of the graph the spec describes."""
    if isinstance(spec, (PathSpec, CycleSpec, CompleteSpec, CustomSpec)):
        return spec.n
    if isinstance(spec, MultipartiteSpec):
        return sum(spec.sizes)
    if isinstance(spec, CliqueFamilySpec):
        return spec.t * spec.m
    if isinstance(spec, FriendshipSpec):
        return 2 * spec.t + 1
    if isinstance(spec, JoinSpec):
        return spec_order(spec.left) + spec_order(spec.right)
    raise ParameterError(f"not a graph spec: {spec!r}")


def build_graph(spec: GraphSpec) -> Graph:
    if isinstance(spec, PathSpec):
        return Graph.from_edges(spec.n, [(i, i + 1) for i in range(spec.n - 1)])
    if isinstance(spec, CycleSpec):
        edges = [(i, i + 1) for i in range(spec.n - 1)] + [(spec.n - 1, 0)]
        return Graph.from_edges(spec.n, edges)
    if isinstance(spec, CompleteSpec):
        n = spec.n
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if isinstance(spec, MultipartiteSpec):
        bounds = []
        start = 0
        for size in spec.sizes:
            bounds.append(range(start, start + size))
            start += size
        edges = [
            (u, v)
            for i, part in enumerate(bounds)
            for other in bounds[i + 1 :]
            for u in part
            for v in other
        ]
        return Graph.from_edges(start, edges)
    if isinstance(spec, CliqueFamilySpec):
        edges = []
        for copy in range(spec.t):
            base = copy * spec.m
            edges.extend(
                (base + a, base + b) for a in range(spec.m) for b in range(a + 1, spec.m)
            )
        return Graph.from_edges(spec.t * spec.m, edges)
    if isinstance(spec, FriendshipSpec):
        return build_graph(JoinSpec(CompleteSpec(1), CliqueFamilySpec(spec.t, 2)))
    if isinstance(spec, JoinSpec):
        return join(build_graph(spec.left), build_graph(spec.right))
    if isinstance(spec, CustomSpec):
        return Graph.from_edges(spec.n, spec.edges)
    raise ParameterError(f"not a graph spec: {spec!r}")


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; g2's vertices are shifted by g1.n."""
    shift = g1.n
    edges = g1.edges()
    edges.extend((u + shift, v + shift) for u, v in g2.edges())
    edges.extend((u, v + shift) for u in range(g1.n) for v in range(g2.n))
    return Graph.from_edges(g1.n + g2.n, edges)


# ---------------------------------------------------------------------------
# Distances


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop distances; None marks unreachable pairs."""

    n: int
    rows: tuple[tuple[int | None, ...], ...]

    def get(self, u: int, v: int) -> int | None:
        return self.rows[u][v]


def single_source_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> DistanceTable:
    return DistanceTable(g.n, tuple(tuple(single_source_distances(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    return None not in single_source_distances(g, 0)


def diameter(g: Graph) -> int | float:
    """Largest hop distance; math.inf when the graph is disconnected."""
    best = 0
    for s in range(g.n):
        dist = single_source_distances(g, s)
        for d in dist:
            if d is None:
                return math.inf
            best = max(best, d)
    return best
