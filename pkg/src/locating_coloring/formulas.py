"""Closed-form chromatic values for the supported graph families.

Central quantity: capacity(k) = (k^3 - k^2) / 2, the number of distinct
segments over k colors and hence the longest path admitting a
neighbor-locating k-coloring.  m_of(n) inverts it: the least k whose capacity
reaches n.

Every result carries a provenance tag, a stable string naming the single
branch that produced the value (e.g. "thm2", "thm3.capacity-minus-1",
"cor5.small-cycle").  Join values are always the sum of the two
neighbor-locating values; the corollary-specific tags are reporting only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DisconnectedGraphError, NoClosedFormError, ParameterError
from .graphs import (
    CliqueFamilySpec,
    CompleteSpec,
    CustomSpec,
    CycleSpec,
    FriendshipSpec,
    GraphSpec,
    JoinSpec,
    MultipartiteSpec,
    PathSpec,
    format_spec,
)


@dataclass(frozen=True)
class FormulaResult:
    value: int
    mode: str  # "locating" | "nl"
    provenance: str


def capacity(k: int) -> int:
    """Distinct segments over k colors: (k^3 - k^2) / 2."""
    if k < 1:
        raise ParameterError("capacity needs k >= 1")
    return (k**3 - k**2) // 2


def m_of(n: int) -> int:
    """Least k with capacity(k) >= n."""
    if n < 1:
        raise ParameterError("m_of needs n >= 1")
    k = 1
    while capacity(k) < n:
        k += 1
    return k


def chi_L2_path(n: int) -> int:
    if n < 1:
        raise ParameterError("path needs n >= 1")
    if n == 1:
        return 1
    return m_of(n)


def chi_L2_cycle(n: int) -> int:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    if n < 9:
        return 3 if n % 2 == 1 else 4
    n0 = m_of(n)
    return n0 + 1 if n == capacity(n0) - 1 else n0


def min_k_for_subsets(t: int, m: int) -> int:
    """Least k with C(k, m) >= t; color-set budget for t disjoint K_m copies."""
    if t < 1 or m < 1:
        raise ParameterError("needs t >= 1 and m >= 1")
    k = m
    while math.comb(k, m) < t:
        k += 1
    return k


def chi_L_friendship(t: int) -> int:
    """Hub color plus enough colors to give each triangle a distinct pair."""
    return 1 + min_k_for_subsets(t, 2)


def _cycle_branch(n: int) -> str:
    if n < 9:
        return "small-cycle"
    return "capacity-minus-1" if n == capacity(m_of(n)) - 1 else "generic"


def chi_L2_of(spec: GraphSpec) -> FormulaResult:
    """Neighbor-locating chromatic number of a spec, with provenance."""
    if isinstance(spec, PathSpec):
        if spec.n == 1:
            return FormulaResult(1, "nl", "path.single-vertex")
        return FormulaResult(chi_L2_path(spec.n), "nl", "thm2")
    if isinstance(spec, CycleSpec):
        branch = _cycle_branch(spec.n)
        tag = "cycle.small" if branch == "small-cycle" else (
            "thm3" if branch == "generic" else "thm3.capacity-minus-1"
        )
        return FormulaResult(chi_L2_cycle(spec.n), "nl", tag)
    if isinstance(spec, CompleteSpec):
        return FormulaResult(spec.n, "nl", "sec2.complete")
    if isinstance(spec, MultipartiteSpec):
        total = sum(spec.sizes)
        if len(spec.sizes) == 1:
            # no edges: all neighborhoods are empty, so colors must be distinct
            return FormulaResult(total, "nl", "multipartite.edgeless")
        return FormulaResult(total, "nl", "remark1.multipartite")
    if isinstance(spec, CliqueFamilySpec):
        return FormulaResult(min_k_for_subsets(spec.t, spec.m), "nl", "sec3.clique-family")
    if isinstance(spec, FriendshipSpec):
        return FormulaResult(chi_L_friendship(spec.t), "nl", "prop2")
    if isinstance(spec, JoinSpec):
        value = chi_L2_of(spec.left).value + chi_L2_of(spec.right).value
        return FormulaResult(value, "nl", "thm1.join")
    if isinstance(spec, CustomSpec):
        raise NoClosedFormError("no closed form for custom graphs; use the exact solver")
    raise ParameterError(f"not a graph spec: {spec!r}")


def chi_L_join(s1: GraphSpec, s2: GraphSpec) -> FormulaResult:
    """Locating chromatic number of join(s1, s2): the sum of the parts'
    neighbor-locating values, tagged with the matching corollary."""
    value = chi_L2_of(s1).value + chi_L2_of(s2).value
    return FormulaResult(value, "locating", _join_tag(s1, s2))


def _join_tag(s1: GraphSpec, s2: GraphSpec) -> str:
    pairs = [(s1, s2), (s2, s1)]
    for a, b in pairs:
        if isinstance(a, CompleteSpec) and isinstance(b, PathSpec) and b.n >= 2:
            return "cor2"
        if isinstance(a, MultipartiteSpec) and len(a.sizes) >= 2 and isinstance(b, PathSpec) and b.n >= 2:
            return "cor2.remark1"
    if isinstance(s1, PathSpec) and isinstance(s2, PathSpec) and s1.n >= 2 and s2.n >= 2:
        return "cor3"
    for a, b in pairs:
        if isinstance(a, PathSpec) and a.n >= 2 and isinstance(b, CycleSpec):
            return f"cor4.{_cycle_branch(b.n)}"
        if isinstance(a, CompleteSpec) and isinstance(b, CycleSpec):
            return f"cor5.{_cycle_branch(b.n)}"
        if isinstance(a, MultipartiteSpec) and len(a.sizes) >= 2 and isinstance(b, CycleSpec):
            return f"cor5.{_cycle_branch(b.n)}.remark1"
    if isinstance(s1, CycleSpec) and isinstance(s2, CycleSpec):
        m, n = sorted((s1.n, s2.n))
        if n < 9:
            return "cor6.both-small"
        if m < 9:
            suffix = ".capacity-minus-1" if _cycle_branch(n) == "capacity-minus-1" else ""
            return f"cor6.small-large{suffix}"
        left_boundary = _cycle_branch(m) == "capacity-minus-1"
        right_boundary = _cycle_branch(n) == "capacity-minus-1"
        if left_boundary and right_boundary:
            return "cor6.both-capacity-minus-1"
        if left_boundary or right_boundary:
            return "cor6.one-capacity-minus-1"
        return "cor6.generic"
    return "thm1.join"


def chi_L_of(spec: GraphSpec) -> FormulaResult:
    """Locating chromatic number of a spec (errors on disconnected graphs)."""
    if isinstance(spec, PathSpec):
        return FormulaResult(min(spec.n, 3), "locating", "base.path")
    if isinstance(spec, CycleSpec):
        if spec.n % 2 == 1:
            return FormulaResult(3, "locating", "base.cycle-odd")
        return FormulaResult(4, "locating", "base.cycle-even")
    if isinstance(spec, CompleteSpec):
        return FormulaResult(spec.n, "locating", "base.complete")
    if isinstance(spec, MultipartiteSpec):
        if len(spec.sizes) == 1:
            if spec.sizes[0] == 1:
                return FormulaResult(1, "locating", "base.complete")
            raise DisconnectedGraphError(
                "locating chromatic number is undefined for edgeless graphs"
            )
        return FormulaResult(sum(spec.sizes), "locating", "remark1.multipartite")
    if isinstance(spec, CliqueFamilySpec):
        if spec.t > 1:
            raise DisconnectedGraphError(
                "locating chromatic number is undefined for disconnected clique families"
            )
        return FormulaResult(spec.m, "locating", "base.complete")
    if isinstance(spec, FriendshipSpec):
        return FormulaResult(chi_L_friendship(spec.t), "locating", "prop2")
    if isinstance(spec, JoinSpec):
        return chi_L_join(spec.left, spec.right)
    if isinstance(spec, CustomSpec):
        raise NoClosedFormError(
            f"no closed form for {format_spec(spec)}; use the exact solver"
        )
    raise ParameterError(f"not a graph spec: {spec!r}")
