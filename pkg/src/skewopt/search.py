"""Exhaustive optimum-orientation search and the small-order census.

Orientations are enumerated one per switching class: flipping all arcs at a
vertex set conjugates the skew matrix by a diagonal sign matrix, which
preserves the Gram, so only a spanning tree's worth of arc choices can be
fixed and the remaining 2^(m-n+1) assignments cover every class. The census
pairs that search with the family classifier and flags any graph where the
two disagree.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .classify import Classification, _vertex_invariants, classify, isomorphic
from .families import C4, K2, K4, Q3, build_family, family_order
from .formats import emit_graph6
from .graphs import Graph, OrientedGraph
from .matrices import is_optimum
from .verify import neighbor_parity_report

ENUMERATION_ORDER_CAP = 12


@dataclass(frozen=True)
class SwitchingClassIndex:
    """One representative orientation: a fixed spanning-tree orientation plus
    one bit per non-tree edge (bit 0 = arc from smaller to larger endpoint)."""

    tree_arcs: tuple[tuple[int, int], ...]
    free_edges: tuple[tuple[int, int], ...]
    assignment: int

    def arcs(self) -> tuple[tuple[int, int], ...]:
        free = tuple(
            (a, b) if not (self.assignment >> i) & 1 else (b, a)
            for i, (a, b) in enumerate(self.free_edges)
        )
        return self.tree_arcs + free


def _switching_frame(g: Graph):
    # breadth-first tree from vertex 0, children in ascending order
    tree_arcs = []
    seen = {0} if g.n else set()
    queue = deque(seen)
    while queue:
        p = queue.popleft()
        for c in sorted(g.neighbors(p)):
            if c not in seen:
                seen.add(c)
                tree_arcs.append((p, c))
                queue.append(c)
    tree_edges = {(min(a, b), max(a, b)) for a, b in tree_arcs}
    free = tuple(e for e in g.edges if e not in tree_edges)
    return tuple(tree_arcs), free


def switching_classes(g: Graph):
    """Yield one orientation per switching class, in assignment order."""
    if not g.is_connected():
        raise ValueError("switching classes are enumerated for connected graphs")
    tree_arcs, free = _switching_frame(g)
    for assignment in range(1 << len(free)):
        yield OrientedGraph(g, SwitchingClassIndex(tree_arcs, free, assignment).arcs())


def _pair_terms(g: Graph, edge_index):
    # (S^T S)[u,v] = sum over common neighbors w of x_e1 * x_e2 * d,
    # where x_e is +1 when edge e is oriented small->large and d fixes
    # the two skew-entry signs relative to that convention
    pairs = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            terms = []
            for w in g.common_neighbors(u, v):
                e1 = edge_index[(min(w, u), max(w, u))]
                e2 = edge_index[(min(w, v), max(w, v))]
                d = (1 if w < u else -1) * (1 if w < v else -1)
                terms.append((e1, e2, d))
            if terms:
                pairs.append(tuple(terms))
    return pairs


def find_optimum_orientation(g: Graph, k: int):
    """First switching-class representative with Gram exactly k*I, or None.

    Non-k-regular or disconnected inputs are argument errors; graphs failing
    the common-neighborhood parity filter return None without enumeration.
    """
    if not g.is_regular(k):
        raise ValueError(f"input must be {k}-regular")
    if not g.is_connected():
        raise ValueError("input must be connected")
    mode = "four-regular" if k == 4 else "general-even"
    if not neighbor_parity_report(g, mode).passed:
        return None

    tree_arcs, free = _switching_frame(g)
    edge_index = {e: i for i, e in enumerate(g.edges)}
    pairs = _pair_terms(g, edge_index)
    x = [0] * len(g.edges)
    for p, c in tree_arcs:
        x[edge_index[(min(p, c), max(p, c))]] = 1 if p < c else -1
    free_slots = [edge_index[e] for e in free]

    for assignment in range(1 << len(free)):
        for i, slot in enumerate(free_slots):
            x[slot] = -1 if (assignment >> i) & 1 else 1
        ok = True
        for terms in pairs:
            total = 0
            for e1, e2, d in terms:
                total += x[e1] * x[e2] * d
            if total:
                ok = False
                break
        if ok:
            og = OrientedGraph(g, SwitchingClassIndex(tree_arcs, free, assignment).arcs())
            if not is_optimum(og, k):
                raise RuntimeError("fast pair check disagrees with the Gram matrix")
            return og
    return None


def _invariant_key(g: Graph):
    adj = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1.0
    spectrum = tuple(round(float(x), 6) for x in sorted(np.linalg.eigvalsh(adj)))
    return spectrum, tuple(sorted(_vertex_invariants(g)))


def enumerate_connected_k_regular(n: int, k: int):
    """One representative per isomorphism class, by orderly backtracking.

    Vertex 0's neighborhood is pinned to 1..k and new vertices are labeled in
    first-touch order, which keeps the labeled search space small while still
    reaching every class; survivors are deduplicated by invariant buckets
    plus explicit isomorphism tests.
    """
    if n < 1 or k < 0:
        raise ValueError("order must be >= 1 and degree >= 0")
    if n > ENUMERATION_ORDER_CAP:
        raise ValueError(
            f"built-in enumeration stops at n={ENUMERATION_ORDER_CAP}; "
            "ingest an external graph6 corpus instead"
        )
    if (n * k) % 2 or k >= n:
        if k == 0 and n == 1:
            yield Graph(1, [])
        return
    if k == 0:
        if n == 1:
            yield Graph(1, [])
        return

    deficit = [k] * n
    edges: list[tuple[int, int]] = []
    buckets: dict = {}

    def complete(v: int, next_fresh: int):
        if v == n:
            g = Graph(n, edges)
            key = _invariant_key(g)
            kept = buckets.setdefault(key, [])
            if all(isomorphic(g, rep) is None for rep in kept):
                kept.append(g)
                yield g
            return
        if deficit[v] == 0:
            yield from complete(v + 1, next_fresh)
            return
        if v > 0 and v == next_fresh:
            return  # untouched vertex: the finished part is already sealed off
        need = deficit[v]
        old = [w for w in range(v + 1, next_fresh) if deficit[w] > 0]
        fresh_avail = n - next_fresh
        for f in range(min(need, fresh_avail) + 1):
            r = need - f
            if r > len(old):
                continue
            fresh = list(range(next_fresh, next_fresh + f))
            for subset in combinations(old, r):
                chosen = list(subset) + fresh
                deficit[v] = 0
                for w in chosen:
                    deficit[w] -= 1
                    edges.append((v, w))
                yield from complete(v + 1, next_fresh + f)
                for w in chosen:
                    deficit[w] += 1
                    edges.pop()
                deficit[v] = need

    yield from complete(0, 1)


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    n: int
    has_optimum: bool
    classification: str | None
    witness: tuple[tuple[int, int], ...] | None
    violation: bool


@dataclass(frozen=True)
class CensusReport:
    records: tuple[CensusRecord, ...]
    skipped: tuple[tuple[str, str], ...]

    @property
    def violations(self) -> tuple[CensusRecord, ...]:
        return tuple(r for r in self.records if r.violation)

    def totals(self) -> tuple[tuple[int, int, int], ...]:
        """(order, graphs, graphs with an optimum orientation), sorted."""
        counts: dict[int, list[int]] = {}
        for r in self.records:
            row = counts.setdefault(r.n, [0, 0])
            row[0] += 1
            row[1] += r.has_optimum
        return tuple((n, c[0], c[1]) for n, c in sorted(counts.items()))


_SMALL_DEGREE_MEMBERS = {1: (K2,), 2: (C4,), 3: (K4, Q3)}


def _classification_for(g: Graph, k: int) -> Classification | None:
    if k == 4:
        return classify(g)
    if k in _SMALL_DEGREE_MEMBERS:
        for label in _SMALL_DEGREE_MEMBERS[k]:
            if family_order(label) == g.n:
                mapping = isomorphic(g, build_family(label))
                if mapping is not None:
                    return Classification(label, mapping)
        return Classification(None, None)
    return None


def _census_worker(args) -> CensusRecord:
    g, k = args
    witness = find_optimum_orientation(g, k)
    cls = _classification_for(g, k)
    label = None if cls is None or cls.label is None else str(cls.label)
    violation = cls is not None and (witness is not None) != (label is not None)
    return CensusRecord(
        graph6=emit_graph6(g).decode("ascii"),
        n=g.n,
        has_optimum=witness is not None,
        classification=label,
        witness=None if witness is None else witness.arcs,
        violation=violation,
    )


def census(inputs, k: int, *, workers: int = 1) -> CensusReport:
    """Search + classify every input graph; disagreements become violation
    records, malformed inputs become skip diagnostics instead of errors."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    jobs = []
    skipped = []
    for g in inputs:
        if not g.is_regular(k):
            skipped.append((emit_graph6(g).decode("ascii"), f"not {k}-regular"))
        elif not g.is_connected():
            skipped.append((emit_graph6(g).decode("ascii"), "not connected"))
        else:
            jobs.append((g, k))
    if workers == 1 or len(jobs) < 2:
        records = [_census_worker(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_census_worker, jobs, chunksize=4))
    return CensusReport(tuple(records), tuple(skipped))
