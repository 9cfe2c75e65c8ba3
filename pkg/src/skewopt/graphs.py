"""Simple undirected graphs, edge orientations, and signed walks.

Vertices are dense integers 0..n-1.  Both graph classes are immutable after
construction; adjacency sets are precomputed so neighborhood queries cost
O(deg).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _normalize_edge(u: int, v: int, n: int) -> tuple[int, int]:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Duplicate edge pairs in the input (in either endpoint order) are
    collapsed; self-loops and out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        self.n = int(n)
        self.edges = tuple(sorted({_normalize_edge(u, v, self.n) for u, v in edges}))
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adj]

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] if 0 <= u < self.n else False

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        """N(u) intersect N(v) for distinct vertices u, v."""
        if u == v:
            raise ValueError(f"common_neighbors needs distinct vertices, got {u} twice")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range: ({u}, {v}) with n={self.n}")
        return self._adj[u] & self._adj[v]

    def is_regular(self, k: int) -> bool:
        return all(len(s) == k for s in self._adj)

    def is_connected(self) -> bool:
        """True iff the graph has a single component (vacuously for n=0)."""
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_triangle_free(self) -> bool:
        return all(not (self._adj[u] & self._adj[v]) for u, v in self.edges)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Image under vertex map v -> permutation[v]."""
        p = list(permutation)
        if sorted(p) != list(range(self.n)):
            raise ValueError("relabel needs a permutation of 0..n-1")
        return Graph(self.n, [(p[u], p[v]) for u, v in self.edges])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


class OrientedGraph:
    """A Graph plus one direction (tail, head) per edge."""

    __slots__ = ("base", "arcs", "_sign")

    def __init__(self, base: Graph, arcs: Iterable[tuple[int, int]]):
        self.base = base
        edge_set = set(base.edges)
        sign: dict[tuple[int, int], int] = {}
        for t, h in arcs:
            e = (t, h) if t < h else (h, t)
            if e not in edge_set:
                raise ValueError(f"arc ({t}, {h}) is not an edge of the base graph")
            if e in sign:
                raise ValueError(f"edge {e} oriented more than once")
            sign[e] = 1 if (t, h) == e else -1
        if len(sign) != len(base.edges):
            missing = sorted(edge_set - sign.keys())
            raise ValueError(f"orientation missing edges: {missing[:5]}")
        self._sign = sign
        self.arcs = tuple(
            sorted((u, v) if s == 1 else (v, u) for (u, v), s in sign.items())
        )

    def sign(self, u: int, v: int) -> int:
        """+1 if arc u->v, -1 if arc v->u, 0 if u,v non-adjacent.

        This is exactly the (u, v) entry of the skew-adjacency matrix.
        """
        if u == v:
            return 0
        e = (u, v) if u < v else (v, u)
        s = self._sign.get(e)
        if s is None:
            return 0
        return s if u < v else -s

    def switch(self, vertices: Iterable[int]) -> "OrientedGraph":
        """Reverse every arc with exactly one endpoint in the given set."""
        s = set(vertices)
        for v in s:
            if not (0 <= v < self.base.n):
                raise ValueError(f"switch vertex {v} out of range")
        flipped = [
            (h, t) if (t in s) != (h in s) else (t, h) for t, h in self.arcs
        ]
        return OrientedGraph(self.base, flipped)

    def relabel(self, permutation: Sequence[int]) -> "OrientedGraph":
        p = list(permutation)
        return OrientedGraph(
            self.base.relabel(p), [(p[t], p[h]) for t, h in self.arcs]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedGraph)
            and self.base == other.base
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.base, self.arcs))

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.base.n}, arcs={len(self.arcs)})"


def disjoint_union(a: OrientedGraph, b: OrientedGraph) -> OrientedGraph:
    """Side-by-side union; b's vertices are shifted up by a's vertex count."""
    off = a.base.n
    base = Graph(
        off + b.base.n,
        list(a.base.edges) + [(u + off, v + off) for u, v in b.base.edges],
    )
    return OrientedGraph(
        base, list(a.arcs) + [(t + off, h + off) for t, h in b.arcs]
    )


@dataclass(frozen=True)
class Walk:
    """A vertex sequence; consecutive vertices must be adjacent when signed."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a walk needs at least one vertex")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def sign(self, og: OrientedGraph) -> int:
        """Product of arc signs along the walk; steps must follow edges."""
        total = 1
        for a, b in zip(self.vertices, self.vertices[1:]):
            s = og.sign(a, b)
            if s == 0:
                raise ValueError(f"walk step ({a}, {b}) is not an edge")
            total *= s
        return total

    def reversed(self) -> "Walk":
        return Walk(tuple(reversed(self.vertices)))
