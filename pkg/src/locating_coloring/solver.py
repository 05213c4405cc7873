"""Exact minimum-color search by pruned backtracking.

Vertices are colored in index order, colors tried ascending.  With symmetry
breaking on (the default) a vertex may open color c only when 1..c-1 already
appear earlier; the first complete assignment found is then the
lexicographically least valid coloring overall, so witnesses are
deterministic.  Colorings must be onto 1..k, enforced by a remaining-vertex
bound during the search and again at the leaves.

Mode checks:

* nl: whenever a vertex and its whole neighborhood are colored, its pair
  (color, neighborhood color set) is final; two vertices sharing a pair can
  never be completed into a valid coloring, so the search backtracks there.
* locating: color codes are only defined for a full assignment, so codes are
  computed and compared at the leaves.

On paths and cycles (recognized by their canonical numbering) nl mode also
prunes on repeated segments and on any color class growing past (k^2-k)/2.
Both facts are neighbor-locating-specific, so locating mode never uses them.
node_limit caps committed color placements per k probed; hitting it surfaces
as an explicit inconclusive outcome, never a silent miss.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Literal

from .errors import DisconnectedGraphError, ParameterError, SearchInconclusive
from .graphs import Graph, is_connected
from .verify import Coloring, Mode


@dataclass(frozen=True)
class SearchConfig:
    max_k: int | None = None  # color ceiling for min_colors_exact; None means |V|
    node_limit: int | None = None  # cap on committed placements per k probed
    symmetry_breaking: bool = True
    segment_pruning: bool = True

    def __post_init__(self):
        if self.max_k is not None and self.max_k < 1:
            raise ParameterError("max_k must be >= 1")
        if self.node_limit is not None and self.node_limit < 1:
            raise ParameterError("node_limit must be >= 1")


@dataclass(frozen=True)
class SolveResult:
    status: Literal["solved", "inconclusive"]
    value: int | None
    witness: Coloring | None
    nodes_explored: int
    refuted_up_to: int | None  # largest k this run certified impossible
    search_mode: str = "sequential"


class _Limit(Exception):
    """Internal: node budget exhausted."""


def _sequence_topology(g: Graph) -> str | None:
    """Detect path/cycle graphs in canonical numbering (vertex i next to i+1)."""
    n = g.n
    if n >= 2:
        if (
            g.adjacency[0] == (1,)
            and g.adjacency[n - 1] == (n - 2,)
            and all(g.adjacency[i] == (i - 1, i + 1) for i in range(1, n - 1))
        ):
            return "path"
    if n >= 3:
        if all(
            g.adjacency[i] == tuple(sorted({(i - 1) % n, (i + 1) % n}))
            for i in range(n)
        ):
            return "cycle"
    return None


class _Search:
    def __init__(self, g: Graph, k: int, mode: Mode, cfg: SearchConfig):
        self.g = g
        self.k = k
        self.mode = mode
        self.cfg = cfg
        self.nodes = 0
        self.colors = [0] * g.n
        self.counts = [0] * (k + 1)
        self.used = 0  # distinct colors placed so far
        # vertices whose (self + neighborhood) becomes fully colored at index i
        self.completed_at: list[list[int]] = [[] for _ in range(g.n)]
        for u in range(g.n):
            hi = max(g.adjacency[u]) if g.adjacency[u] else u
            self.completed_at[max(hi, u)].append(u)
        self.registry: dict[tuple[int, frozenset[int]], int] = {}
        self.topology = None
        if mode == "nl" and cfg.segment_pruning:
            self.topology = _sequence_topology(g)
        self.class_cap = (k * k - k) // 2
        self.seen_segments: set[tuple[int, int, int]] = set()

    def run(self) -> tuple[int, ...] | None:
        if self._place(0):
            return tuple(self.colors)
        return None

    def _completed_segments(self, i: int) -> list[tuple[int, int, int]]:
        # segments that become final when vertex i receives its color
        c = self.colors
        n = self.g.n
        segs: list[tuple[int, int, int]] = []

        def seg(center: int, a: int, b: int) -> tuple[int, int, int]:
            return (center, a, b) if a <= b else (center, b, a)

        if self.topology == "path":
            if i >= 1:
                if i == 1:
                    segs.append(seg(c[0], c[1], c[1]))
                else:
                    segs.append(seg(c[i - 1], c[i - 2], c[i]))
            if i == n - 1:
                segs.append(seg(c[n - 1], c[n - 2], c[n - 2]))
        else:  # cycle
            if i >= 2:
                segs.append(seg(c[i - 1], c[i - 2], c[i]))
            if i == n - 1:
                segs.append(seg(c[n - 1], c[n - 2], c[0]))
                segs.append(seg(c[0], c[n - 1], c[1]))
        return segs

    def _register_neighborhoods(self, i: int) -> tuple[bool, list]:
        added = []
        for u in self.completed_at[i]:
            key = (self.colors[u], frozenset(self.colors[w] for w in self.g.adjacency[u]))
            holder = self.registry.setdefault(key, u)
            if holder != u:
                return False, added
            added.append(key)
        return True, added

    def _codes_distinct(self) -> bool:
        g, k = self.g, self.k
        codes = [[0] * k for _ in range(g.n)]
        for c in range(1, k + 1):
            dist = [-1] * g.n
            queue = deque()
            for v in range(g.n):
                if self.colors[v] == c:
                    dist[v] = 0
                    queue.append(v)
            while queue:
                u = queue.popleft()
                for w in g.adjacency[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            for v in range(g.n):
                codes[v][c - 1] = dist[v]
        seen = set()
        for row in codes:
            t = tuple(row)
            if t in seen:
                return False
            seen.add(t)
        return True

    def _place(self, i: int) -> bool:
        g, k = self.g, self.k
        if i == g.n:
            if self.used < k:
                return False
            if self.mode == "locating":
                return self._codes_distinct()
            return True
        limit = min(k, self.used + 1) if self.cfg.symmetry_breaking else k
        for c in range(1, limit + 1):
            if any(self.colors[w] == c for w in g.adjacency[i]):
                continue
            opens = self.counts[c] == 0
            # every missing color still needs a vertex of its own
            if k - (self.used + (1 if opens else 0)) > g.n - i - 1:
                continue
            if self.cfg.node_limit is not None and self.nodes >= self.cfg.node_limit:
                raise _Limit
            self.nodes += 1
            self.colors[i] = c
            self.counts[c] += 1
            if opens:
                self.used += 1
            ok = True
            added_segs: list[tuple[int, int, int]] = []
            added_keys: list = []
            if self.topology is not None:
                if self.counts[c] > self.class_cap:
                    ok = False
                else:
                    for s in self._completed_segments(i):
                        if s in self.seen_segments:
                            ok = False
                            break
                        self.seen_segments.add(s)
                        added_segs.append(s)
            if ok and self.mode == "nl":
                ok, added_keys = self._register_neighborhoods(i)
            if ok and self._place(i + 1):
                return True
            for key in added_keys:
                del self.registry[key]
            for s in added_segs:
                self.seen_segments.discard(s)
            self.colors[i] = 0
            self.counts[c] -= 1
            if opens:
                self.used -= 1
        return False


def _check_mode(mode: str) -> None:
    if mode not in ("locating", "nl"):
        raise ParameterError(f"unknown mode {mode!r}; expected 'locating' or 'nl'")


def find_coloring(g: Graph, k: int, mode: Mode, cfg: SearchConfig = SearchConfig()) -> Coloring | None:
    """Lexicographically least valid onto k-coloring, or None when none exists.

    Raises SearchInconclusive when the node budget runs out first, and
    DisconnectedGraphError in locating mode on a disconnected graph.
    """
    _check_mode(mode)
    if k < 1:
        raise ParameterError("needs k >= 1")
    if mode == "locating" and not is_connected(g):
        raise DisconnectedGraphError("locating mode needs a connected graph")
    if k > g.n:
        return None  # no onto coloring exists
    search = _Search(g, k, mode, cfg)
    try:
        seq = search.run()
    except _Limit:
        raise SearchInconclusive(
            f"node limit {cfg.node_limit} hit while searching {k}-colorings", search.nodes
        ) from None
    return Coloring(k, seq) if seq is not None else None


def min_colors_exact(g: Graph, mode: Mode, cfg: SearchConfig = SearchConfig()) -> SolveResult:
    """Smallest k admitting a valid coloring, by exhausting k = 1, 2, ...

    Every k below the reported value is refuted by complete search, so the
    result is a certificate, not a heuristic.  With a node_limit the outcome
    may instead be inconclusive, reporting the largest fully refuted k.
    """
    _check_mode(mode)
    if mode == "locating" and not is_connected(g):
        raise DisconnectedGraphError("locating mode needs a connected graph")
    ceiling = g.n if cfg.max_k is None else min(cfg.max_k, g.n)
    total = 0
    for k in range(1, ceiling + 1):
        search = _Search(g, k, mode, cfg)
        try:
            seq = search.run()
        except _Limit:
            total += search.nodes
            return SolveResult(
                "inconclusive", None, None, total, refuted_up_to=k - 1 if k > 1 else None
            )
        total += search.nodes
        if seq is not None:
            return SolveResult(
                "solved", k, Coloring(k, seq), total, refuted_up_to=k - 1 if k > 1 else None
            )
    return SolveResult("inconclusive", None, None, total, refuted_up_to=ceiling)


def sequence_prefix_feasible(prefix, k: int, topology: str) -> bool:
    """Would the pruned nl search keep this partial path/cycle prefix alive?

    True unless the prefix is improper, overfills a color class past
    (k^2-k)/2, or repeats an already-final segment.  The input is treated as
    extendable; check complete sequences with all_segments_unique instead.
    """
    if k < 1:
        raise ParameterError("needs k >= 1")
    if topology not in ("path", "cycle"):
        raise ParameterError(f"unknown topology {topology!r}")
    entries = list(prefix)
    for e in entries:
        if not 1 <= e <= k:
            raise ParameterError(f"color {e} outside 1..{k}")
    cap = (k * k - k) // 2
    counts = [0] * (k + 1)
    for e in entries:
        counts[e] += 1
        if counts[e] > cap:
            return False
    n = len(entries)
    for i in range(n - 1):
        if entries[i] == entries[i + 1]:
            return False
    seen = set()
    segs = []
    if topology == "path" and n >= 2:
        segs.append((entries[0], entries[1], entries[1]))
    for i in range(1, n - 1):
        a, b = sorted((entries[i - 1], entries[i + 1]))
        segs.append((entries[i], a, b))
    for s in segs:
        if s in seen:
            return False
        seen.add(s)
    return True
