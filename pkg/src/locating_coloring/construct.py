"""Optimal neighbor-locating colorings for the supported families.

Path and cycle colorings are built as sequences.  Small paths (n <= 50) come
from a fixed table; larger ones are assembled recursively around the previous
complete palette: write n' = capacity(m-1), reuse f_{n'} (or all but its last
two entries) and append blocks built from the new color m.  The blocks:

    T        = [m,1,3, m,3,2, m,2,1]                   closing triple run
    A        = [m,m-4, m,m-5, ..., m,1]                pair run
    D_{i,j}  = [m,i,j, m,i,j-1, ..., m,i,1]            triple run, one center
    D_i      = [m,i-1,i] ++ D_{i,i-2}
    D_{[i]}  = D_i ++ D_{i-1} ++ ... ++ D_4

The complete palette coloring is f_{n'} ++ [m,m-1, m,m-2, m,m-3] ++ A ++
D_{[m-1]} ++ T, which realizes every segment over [m] exactly once; the
intermediate lengths interpolate between f_{n'} and that model in four stages
(twelve rewritten-tail steps, the A pairs, the D_4..D_{m-3} triples, and a
final stretch that swaps in shorter prefixes).  Every generated sequence is
re-checked for segment uniqueness before it leaves this module; a failure
raises ConstructionError and means the generator itself is broken.

Cycle colorings reuse the path sequences directly: they start [2,1, ...] and
end [..., 2,1], so closing the cycle changes no neighborhood color set.  The
exceptions are n < 9 (fixed small sequences; the n = 8 one was produced once
by exhaustive search) and n = capacity(k)-1, where the path coloring of
length n-1 is extended by the single new color k+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ConstructionError, ImproperColoringError, ParameterError
from .formulas import capacity, chi_L2_cycle, chi_L2_path, m_of, min_k_for_subsets
from .graphs import (
    CliqueFamilySpec,
    CompleteSpec,
    CustomSpec,
    CycleSpec,
    FriendshipSpec,
    Graph,
    GraphSpec,
    JoinSpec,
    MultipartiteSpec,
    PathSpec,
    build_graph,
    join,
)
from .verify import Coloring, all_segments_unique, is_neighbor_locating


@dataclass(frozen=True)
class ColoringSeq:
    """A coloring of a path or cycle written as [f(v_1), ..., f(v_n)]."""

    palette_size: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ParameterError("empty coloring sequence")
        if set(self.entries) != set(range(1, self.palette_size + 1)):
            raise ParameterError(
                f"palette is not exactly 1..{self.palette_size}: {sorted(set(self.entries))}"
            )
        for i in range(len(self.entries) - 1):
            if self.entries[i] == self.entries[i + 1]:
                raise ImproperColoringError(
                    f"equal adjacent entries at positions {i + 1}, {i + 2}", edge=(i, i + 1)
                )

    def __len__(self) -> int:
        return len(self.entries)

    def to_coloring(self) -> Coloring:
        return Coloring(self.palette_size, self.entries)


def concat(*parts: Sequence[int]) -> list[int]:
    """Sequence concatenation; rejects equal colors at any seam, skips empties."""
    out: list[int] = []
    for part in parts:
        if not part:
            continue
        if out and out[-1] == part[0]:
            raise ImproperColoringError(
                f"concatenation seam repeats color {part[0]}", edge=(len(out) - 1, len(out))
            )
        out.extend(part)
    return out


# ---------------------------------------------------------------------------
# Path colorings, fixed table for n <= 50

_LITERAL_ROWS = {
    2: (2, 1),
    3: (3, 2, 1),
    4: (1, 3, 2, 1),
    5: (2, 1, 3, 2, 1),
    6: (3, 2, 3, 1, 2, 1),
    7: (2, 1, 3, 2, 3, 2, 1),
    8: (3, 2, 3, 1, 3, 1, 2, 1),
    9: (2, 1, 3, 1, 3, 2, 3, 2, 1),
    10: (2, 1, 3, 1, 3, 2, 3, 4, 2, 1),
    11: (2, 1, 3, 1, 3, 2, 3, 2, 4, 2, 1),
    12: (2, 1, 3, 1, 3, 2, 3, 2, 1, 4, 2, 1),
    13: (2, 1, 3, 1, 3, 2, 3, 4, 3, 1, 4, 2, 1),
    14: (2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 4, 2, 1),
    15: (2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 3, 4, 2, 1),
    16: (2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 4, 2, 4, 2, 1),
    17: (2, 1, 3, 1, 3, 2, 3, 4, 3, 4, 1, 3, 4, 2, 4, 2, 1),
}

# shared tails: _TAIL_4 completes rows 22..24, _TAIL_5 lifts rows 9..24 to 35..50
_TAIL_4 = (4, 3, 4, 2, 4, 1, 4, 1, 3, 4, 3, 2, 4, 2, 1)
_TAIL_5 = (5, 4, 5, 3, 5, 2, 5, 1, 5, 3, 4, 5, 4, 2, 5, 4, 1, 5, 1, 3, 5, 3, 2, 5, 2, 1)

_MID_TAILS = {
    25: (5, 2, 1),
    26: (2, 5, 2, 1),
    27: (2, 1, 5, 2, 1),
    28: (5, 3, 1, 5, 2, 1),
    29: (5, 3, 5, 1, 5, 2, 1),
    30: (5, 3, 5, 1, 3, 5, 2, 1),
    31: (5, 3, 5, 1, 5, 2, 5, 2, 1),
    32: (5, 3, 5, 1, 3, 5, 2, 5, 2, 1),
}


def _table_row(n: int) -> list[int]:
    if n in _LITERAL_ROWS:
        return list(_LITERAL_ROWS[n])
    f = _path_sequence
    if n == 18:
        return concat(f(9), (4, 1, 3, 4, 3, 2, 4, 2, 1))
    if n == 19:
        return concat(f(9), (4, 1, 4, 3, 4, 3, 2, 4, 2, 1))
    if n == 20:
        return concat(f(9), (4, 3, 1, 4, 2, 4, 3, 2, 4, 2, 1))
    if n == 21:
        return concat(f(9), (4, 1, 4, 2, 4, 3, 4, 3, 2, 4, 2, 1))
    if n == 22:
        return concat(f(7), _TAIL_4)
    if n == 23:
        return concat(f(8), _TAIL_4)
    if n == 24:
        return concat(f(9), _TAIL_4)
    if 25 <= n <= 32:
        return concat(f(24)[:22], _MID_TAILS[n])
    if n == 33:
        return concat(f(24), (5, 1, 3, 5, 3, 2, 5, 2, 1))
    if n == 34:
        return concat(f(24), (5, 1, 5, 3, 5, 3, 2, 5, 2, 1))
    return concat(f(n - 26), _TAIL_5)  # 35..50


# ---------------------------------------------------------------------------
# Path colorings, recursive model for n >= 51


def _block_T(m: int) -> list[int]:
    return [m, 1, 3, m, 3, 2, m, 2, 1]


def _pairs_down(m: int, i: int) -> list[int]:
    # [m, i, m, i-1, ..., m, 1]; empty when i == 0
    out: list[int] = []
    for c in range(i, 0, -1):
        out += [m, c]
    return out


def _block_A(m: int) -> list[int]:
    return _pairs_down(m, m - 4)


def _block_D_ij(m: int, i: int, j: int) -> list[int]:
    # [m, i, j, m, i, j-1, ..., m, i, 1]; empty when j == 0
    out: list[int] = []
    for c in range(j, 0, -1):
        out += [m, i, c]
    return out


def _block_D_i(m: int, i: int) -> list[int]:
    return concat([m, i - 1, i], _block_D_ij(m, i, i - 2))


def _block_D_upto(m: int, i: int) -> list[int]:
    # D_i ++ D_{i-1} ++ ... ++ D_4; empty when i == 3
    out: list[int] = []
    for d in range(i, 3, -1):
        out = concat(out, _block_D_i(m, d))
    return out


def _step_tails(m: int) -> list[list[int]]:
    # the twelve rewritten tails replacing the final [2, 1] of the previous model
    return [
        [m, 2, 1],
        [2, m, 2, 1],
        [2, 1, m, 2, 1],
        [m, 3, 1, m, 2, 1],
        [m, 3, m, 1, m, 2, 1],
        [m, 3, m, 1, 3, m, 2, 1],
        [m, 3, m, 1, m, 2, m, 2, 1],
        [m, 3, m, 1, 3, m, 2, m, 2, 1],
        [2, 1, m, 1, 3, m, 3, 2, m, 2, 1],
        [2, 1, m, 1, m, 3, m, 3, 2, m, 2, 1],
        [2, 1, m, m - 1, 1, m, 3, m, 3, 2, m, 2, 1],
        [2, 1, m, m - 1, m - 2, m, 1, 3, m, 3, 2, m, 2, 1],
    ]


def _recursive_row(n: int) -> list[int]:
    m = m_of(n)
    base = capacity(m - 1)
    d = n - base
    prefix = list(_path_sequence(base))
    if d <= 12:
        return concat(prefix[:-2], _step_tails(m)[d - 1])
    core4 = [m, m - 1, m, m - 2]
    core3 = [m, m - 1, m - 2]
    tail = _block_T(m)
    pair_run = _block_A(m)
    offset = 12 + 2 * (m - 4)
    if d <= offset:
        j = d - 12
        i = (j + 1) // 2
        if j % 2 == 1:
            return concat(prefix, core4, _pairs_down(m, i - 1), tail)
        return concat(prefix, core3, _pairs_down(m, i), tail)
    for i in range(4, m - 2):  # D_4 .. D_{m-3}, three steps per added triple
        stage_len = 3 * (i - 1)
        if d <= offset + stage_len:
            r = d - offset
            j = (r + 2) // 3
            phase = r - 3 * (j - 1)
            partial = _block_D_ij(m, i, j - 1)
            done = _block_D_upto(m, i - 1)
            if phase == 1:
                return concat(prefix, core4, pair_run, partial, done, tail)
            if phase == 2:
                return concat(prefix, core3, [m, m - 3], pair_run, partial, done, tail)
            triple = [m, i, j] if j < i - 1 else [m, j, i]
            return concat(prefix, core3, pair_run, triple, partial, done, tail)
        offset += stage_len
    # final stretch: the complete model over progressively longer prefixes
    j = d - offset  # 1 .. 6m-12
    small = list(_path_sequence(base - (6 * m - 12) + j))
    return concat(
        small, [m, m - 1, m, m - 2, m, m - 3], pair_run, _block_D_upto(m, m - 1), tail
    )


@lru_cache(maxsize=None)
def _path_sequence(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    seq = _table_row(n) if n <= 50 else _recursive_row(n)
    expected_palette = set(range(1, chi_L2_path(n) + 1))
    if len(seq) != n:
        raise ConstructionError(f"path coloring for n={n} has {len(seq)} entries")
    if set(seq) != expected_palette:
        raise ConstructionError(f"path coloring for n={n} misses the palette {expected_palette}")
    if not all_segments_unique(seq, "path"):
        raise ConstructionError(f"path coloring for n={n} repeats a segment")
    return tuple(seq)


def path_coloring(n: int) -> ColoringSeq:
    """Neighbor-locating coloring of P_n on exactly chi_L2_path(n) colors.

    Ends [..., 2, 1]; for n >= 9 the third entry from the end is the palette
    maximum, and the sequence also starts [2, 1, ...] unless n = capacity(k)-1.
    """
    if n < 1:
        raise ParameterError("path needs n >= 1")
    return ColoringSeq(chi_L2_path(n), _path_sequence(n))


# ---------------------------------------------------------------------------
# Cycle colorings

_SMALL_CYCLE_ROWS = {
    3: (1, 2, 3),
    4: (1, 2, 3, 4),
    5: (1, 2, 1, 2, 3),
    6: (1, 2, 1, 3, 2, 4),
    7: (2, 1, 3, 2, 3, 2, 1),
    # found once by exhaustive search (lexicographically least valid sequence);
    # the regression test re-derives it with the exact solver
    8: (1, 2, 1, 2, 3, 1, 2, 4),
}


def cycle_coloring(n: int) -> ColoringSeq:
    """Neighbor-locating coloring of C_n on exactly chi_L2_cycle(n) colors."""
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    k = chi_L2_cycle(n)
    if n < 9:
        seq = list(_SMALL_CYCLE_ROWS[n])
    else:
        n0 = m_of(n)
        if n == capacity(n0) - 1:
            seq = concat(_path_sequence(n - 1), [n0 + 1])
        else:
            seq = list(_path_sequence(n))
    if len(seq) != n:
        raise ConstructionError(f"cycle coloring for n={n} has {len(seq)} entries")
    if set(seq) != set(range(1, k + 1)):
        raise ConstructionError(f"cycle coloring for n={n} does not use exactly 1..{k}")
    if not all_segments_unique(seq, "cycle"):
        raise ConstructionError(f"cycle coloring for n={n} repeats a segment")
    return ColoringSeq(k, tuple(seq))


# ---------------------------------------------------------------------------
# Joins and clique families


def join_coloring(g1: Graph, f1: Coloring, g2: Graph, f2: Coloring) -> Coloring:
    """Coloring of join(g1, g2): keep f1, shift f2's colors up by f1.k.

    Both inputs must be neighbor-locating on their graphs; the result is then
    neighbor-locating (hence locating) on the join and is re-checked here.
    """
    ok, _ = is_neighbor_locating(g1, f1)
    if not ok:
        raise ParameterError("left coloring is not neighbor-locating on its graph")
    ok, _ = is_neighbor_locating(g2, f2)
    if not ok:
        raise ParameterError("right coloring is not neighbor-locating on its graph")
    combined = Coloring(f1.k + f2.k, f1.colors + tuple(c + f1.k for c in f2.colors))
    ok, pair = is_neighbor_locating(join(g1, g2), combined)
    if not ok:
        raise ConstructionError(f"join composition failed its own check at {pair}")
    return combined


def _colex_subsets(m: int, count: int):
    """First `count` m-subsets of {1, 2, ...} in colex order."""

    def bounded(size: int, limit: int):
        if size == 0:
            yield ()
            return
        for top in range(size, limit + 1):
            for rest in bounded(size - 1, top - 1):
                yield rest + (top,)

    out: list[tuple[int, ...]] = []
    top = m
    while len(out) < count:
        for rest in bounded(m - 1, top - 1):
            out.append(rest + (top,))
            if len(out) == count:
                return out
        top += 1
    return out


def clique_family_coloring(t: int, m: int) -> Coloring:
    """Color t disjoint K_m copies: copy i gets the i-th m-subset of colors in
    colex order, ascending within the copy.  Distinct copies get distinct sets."""
    k = min_k_for_subsets(t, m)
    colors: list[int] = []
    for subset in _colex_subsets(m, t):
        colors.extend(subset)
    result = Coloring(k, tuple(colors))
    ok, pair = is_neighbor_locating(build_graph(CliqueFamilySpec(t, m)), result)
    if not ok:
        raise ConstructionError(f"clique family coloring failed its own check at {pair}")
    return result


# ---------------------------------------------------------------------------
# Spec dispatch


def optimal_coloring(spec: GraphSpec) -> Coloring:
    """A chi_L2-optimal neighbor-locating coloring for any constructible spec.

    For join-rooted specs this is also a locating coloring of the join on
    chi_L colors.  Custom specs have no construction; use the exact solver.
    """
    if isinstance(spec, PathSpec):
        return path_coloring(spec.n).to_coloring()
    if isinstance(spec, CycleSpec):
        return cycle_coloring(spec.n).to_coloring()
    if isinstance(spec, CompleteSpec):
        return Coloring(spec.n, tuple(range(1, spec.n + 1)))
    if isinstance(spec, MultipartiteSpec):
        total = sum(spec.sizes)
        return Coloring(total, tuple(range(1, total + 1)))
    if isinstance(spec, CliqueFamilySpec):
        return clique_family_coloring(spec.t, spec.m)
    if isinstance(spec, FriendshipSpec):
        return optimal_coloring(JoinSpec(CompleteSpec(1), CliqueFamilySpec(spec.t, 2)))
    if isinstance(spec, JoinSpec):
        return join_coloring(
            build_graph(spec.left),
            optimal_coloring(spec.left),
            build_graph(spec.right),
            optimal_coloring(spec.right),
        )
    if isinstance(spec, CustomSpec):
        raise ParameterError("no optimal construction for custom graphs; use the exact solver")
    raise ParameterError(f"not a graph spec: {spec!r}")
