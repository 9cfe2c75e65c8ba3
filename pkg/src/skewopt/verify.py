"""Structural necessary conditions and walk-based oracles.

Two independent routes to the same Gram statement: common-neighborhood parity
filters on the underlying graph, and explicit signed-walk enumeration on the
orientation. Both are kept deliberately naive so they can cross-check the
matrix pipeline rather than share code with it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, OrientedGraph
from .matrices import power, skew_adjacency

PARITY_MODES = ("general-even", "four-regular")

WALK_LENGTH_CAP = 8


@dataclass(frozen=True)
class NeighborhoodReport:
    """Pairs whose common-neighbor count breaks the parity conditions.

    Each violation is (u, v, common_count, adjacent).
    """

    mode: str
    violations: tuple[tuple[int, int, int, bool], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class SignedWalkCount:
    positive: int
    negative: int

    @property
    def total(self) -> int:
        return self.positive + self.negative

    @property
    def difference(self) -> int:
        return self.positive - self.negative


def neighbor_parity_report(g: Graph, mode: str = "general-even") -> NeighborhoodReport:
    """Check every vertex pair's common-neighbor count against the mode.

    general-even: any odd count is a violation.
    four-regular: adjacent pairs must have count in {0, 2}, non-adjacent
    pairs in {0, 2, 4}; requires a 4-regular input.
    """
    if mode not in PARITY_MODES:
        raise ValueError(f"mode must be one of {PARITY_MODES}, got {mode!r}")
    if mode == "four-regular" and not g.is_regular(4):
        raise ValueError("four-regular mode needs a 4-regular graph")
    violations = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            count = len(g.common_neighbors(u, v))
            adjacent = g.has_edge(u, v)
            if mode == "general-even":
                bad = count % 2 != 0
            elif adjacent:
                bad = count not in (0, 2)
            else:
                bad = count not in (0, 2, 4)
            if bad:
                violations.append((u, v, count, adjacent))
    return NeighborhoodReport(mode, tuple(violations))


def signed_walk_counts(og: OrientedGraph, u: int, v: int, k: int) -> SignedWalkCount:
    """Count positive and negative length-k walks u -> v by explicit search.

    A walk's sign is the product of the skew entries along its steps. The
    enumeration is a plain depth-first expansion, intentionally not a matrix
    power, so it can serve as an oracle for one.
    """
    base = og.base
    if not 0 <= u < base.n or not 0 <= v < base.n:
        raise ValueError(f"vertices must lie in 0..{base.n - 1}")
    if not 1 <= k <= WALK_LENGTH_CAP:
        raise ValueError(f"walk length must lie in 1..{WALK_LENGTH_CAP}, got {k}")
    positive = 0
    negative = 0
    # stack of (vertex, steps taken, sign so far)
    stack = [(u, 0, 1)]
    while stack:
        x, steps, sign = stack.pop()
        if steps == k:
            if x == v:
                if sign > 0:
                    positive += 1
                else:
                    negative += 1
            continue
        for y in base.neighbors(x):
            stack.append((y, steps + 1, sign * og.sign(x, y)))
    return SignedWalkCount(positive, negative)


def walk_identity_holds(og: OrientedGraph, k_max: int) -> bool:
    """True iff enumerated signed-walk differences match skew-matrix powers.

    Checks every ordered vertex pair and every length 1..k_max.
    """
    if not 1 <= k_max <= WALK_LENGTH_CAP:
        raise ValueError(f"k_max must lie in 1..{WALK_LENGTH_CAP}, got {k_max}")
    s = skew_adjacency(og)
    n = og.base.n
    for k in range(1, k_max + 1):
        sk = power(s, k)
        for u in range(n):
            for v in range(n):
                if signed_walk_counts(og, u, v, k).difference != sk[u, v]:
                    return False
    return True


def two_walk_balanced(og: OrientedGraph) -> bool:
    """True iff every pair of distinct vertices has balanced signed 2-walks.

    For a k-regular oriented graph this is equivalent to the Gram matrix
    being exactly k times the identity; non-regular inputs are rejected so
    the equivalence is never silently weakened.
    """
    base = og.base
    degrees = set(base.degrees())
    if len(degrees) > 1:
        raise ValueError("two-walk balance test needs a regular graph")
    for u in range(base.n):
        for v in range(u + 1, base.n):
            counts = signed_walk_counts(og, u, v, 2)
            if counts.positive != counts.negative:
                return False
    return True
