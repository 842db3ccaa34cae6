"""Looped simple graphs and multigraphs.

A looped simple graph is stored as a symmetric GF(2) adjacency matrix whose
diagonal marks loops.  Multigraphs keep an explicit edge list (loops and
parallel edges allowed) and collapse to looped simple graphs via simplify.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Literal, Sequence

from .gf2 import BitMatrix, nullity, popcount, principal_submatrix

VariantKind = Literal["plain", "loop", "loop_isolate"]
PivotKind = Literal["pivot", "dual_pivot"]


@dataclass(frozen=True)
class LoopedSimpleGraph:
    """A graph with at most one loop per vertex and no parallel edges."""

    labels: tuple[str, ...]
    adj: BitMatrix

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate vertex labels")
        if self.adj.rows != len(self.labels) or self.adj.cols != len(self.labels):
            raise ValueError("adjacency matrix size mismatch")
        if not self.adj.is_symmetric:
            raise ValueError("adjacency matrix must be symmetric")

    @classmethod
    def build(
        cls,
        labels: Sequence[str],
        edges: Iterable[tuple[str, str]] = (),
        loops: Iterable[str] = (),
    ) -> "LoopedSimpleGraph":
        labels = tuple(labels)
        index = {v: i for i, v in enumerate(labels)}
        rows = [0] * len(labels)
        for u, v in edges:
            if u not in index or v not in index:
                raise ValueError(f"unknown vertex in edge {u} {v}")
            if u == v:
                rows[index[u]] |= 1 << index[u]
            else:
                rows[index[u]] |= 1 << index[v]
                rows[index[v]] |= 1 << index[u]
        for v in loops:
            if v not in index:
                raise ValueError(f"unknown vertex in loop {v}")
            rows[index[v]] |= 1 << index[v]
        return cls(labels, BitMatrix(len(labels), len(labels), tuple(rows)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, v: str) -> int:
        try:
            return self.labels.index(v)
        except ValueError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def is_looped(self, v: str) -> bool:
        i = self.index(v)
        return bool(self.adj.entry(i, i))

    def adjacent(self, u: str, v: str) -> bool:
        i, j = self.index(u), self.index(v)
        if i == j:
            raise ValueError("adjacency is between distinct vertices")
        return bool(self.adj.entry(i, j))

    def neighbor_mask(self, v: str) -> int:
        i = self.index(v)
        return self.adj.data[i] & ~(1 << i)

    def neighbors(self, v: str) -> tuple[str, ...]:
        mask = self.neighbor_mask(v)
        return tuple(self.labels[i] for i in range(self.n) if (mask >> i) & 1)

    def loop_labels(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.labels) if self.adj.entry(i, i))

    def edge_pairs(self) -> tuple[tuple[str, str], ...]:
        """Non-loop edges as label pairs, in index order."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.adj.entry(i, j):
                    out.append((self.labels[i], self.labels[j]))
        return tuple(out)

    def local_complement(self, v: str) -> "LoopedSimpleGraph":
        """Toggle loops of v's neighbors and adjacency between distinct neighbors."""
        mask = self.neighbor_mask(v)
        rows = list(self.adj.data)
        for i in range(self.n):
            if (mask >> i) & 1:
                rows[i] ^= mask
        return LoopedSimpleGraph(self.labels, BitMatrix(self.n, self.n, tuple(rows)))

    def loop_complement(self, v: str) -> "LoopedSimpleGraph":
        i = self.index(v)
        rows = list(self.adj.data)
        rows[i] ^= 1 << i
        return LoopedSimpleGraph(self.labels, BitMatrix(self.n, self.n, tuple(rows)))

    def induced(self, s: Iterable[str]) -> "LoopedSimpleGraph":
        idx = sorted(self.index(v) for v in set(s))
        labels = tuple(self.labels[i] for i in idx)
        return LoopedSimpleGraph(labels, principal_submatrix(self.adj, idx))

    def minus(self, v: str) -> "LoopedSimpleGraph":
        self.index(v)
        return self.induced(u for u in self.labels if u != v)

    def variant(self, v: str, kind: VariantKind) -> "LoopedSimpleGraph":
        """The vertex variants: unloop v, loop v, or loop and isolate v."""
        i = self.index(v)
        rows = list(self.adj.data)
        if kind == "plain":
            rows[i] &= ~(1 << i)
        elif kind == "loop":
            rows[i] |= 1 << i
        elif kind == "loop_isolate":
            for j in range(self.n):
                if j != i:
                    rows[j] &= ~(1 << i)
            rows[i] = 1 << i
        else:
            raise ValueError(f"unknown variant kind {kind!r}")
        return LoopedSimpleGraph(self.labels, BitMatrix(self.n, self.n, tuple(rows)))

    def pivot_ops(self, v: str, kind: PivotKind) -> "LoopedSimpleGraph":
        """Local complement restricted by loop status: pivot needs a looped v,
        dual pivot an unlooped v."""
        looped = self.is_looped(v)
        if kind == "pivot" and not looped:
            raise ValueError(f"pivot needs a looped vertex, {v!r} is unlooped")
        if kind == "dual_pivot" and looped:
            raise ValueError(f"dual pivot needs an unlooped vertex, {v!r} is looped")
        if kind not in ("pivot", "dual_pivot"):
            raise ValueError(f"unknown pivot kind {kind!r}")
        return self.local_complement(v)


@dataclass(frozen=True)
class MultiGraph:
    """Vertices plus an explicit edge list; loops and parallels allowed."""

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    edge_labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate vertex labels")
        n = len(self.labels)
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge endpoint out of range")
        if not self.edge_labels:
            object.__setattr__(
                self, "edge_labels", tuple(f"e{i}" for i in range(len(self.edges)))
            )
        if len(self.edge_labels) != len(self.edges):
            raise ValueError("edge label count mismatch")
        if len(set(self.edge_labels)) != len(self.edge_labels):
            raise ValueError("duplicate edge labels")

    @classmethod
    def build(
        cls,
        labels: Sequence[str],
        edges: Iterable[tuple[str, str]],
        edge_labels: Sequence[str] = (),
    ) -> "MultiGraph":
        labels = tuple(labels)
        index = {v: i for i, v in enumerate(labels)}
        pairs = []
        for u, v in edges:
            if u not in index or v not in index:
                raise ValueError(f"unknown vertex in edge {u} {v}")
            pairs.append((index[u], index[v]))
        return cls(labels, tuple(pairs), tuple(edge_labels))

    @property
    def n(self) -> int:
        return len(self.labels)

    def degree(self, i: int) -> int:
        """Incidences at vertex i; a loop counts twice."""
        d = 0
        for u, v in self.edges:
            d += (u == i) + (v == i)
        return d

    def adjacency(self) -> BitMatrix:
        rows = [0] * self.n
        for u, v in self.edges:
            if u == v:
                rows[u] |= 1 << u
            else:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return BitMatrix(self.n, self.n, tuple(rows))

    def simplify(self) -> LoopedSimpleGraph:
        """Collapse parallels and repeated loops to a looped simple graph."""
        return LoopedSimpleGraph(self.labels, self.adjacency())

    def incidence_matrix(self) -> BitMatrix:
        """Vertex-by-edge GF(2) incidence; loop edges give zero columns."""
        rows = [0] * self.n
        for j, (u, v) in enumerate(self.edges):
            if u != v:
                rows[u] |= 1 << j
                rows[v] |= 1 << j
        return BitMatrix(self.n, len(self.edges), tuple(rows))

    def component_count(self) -> int:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(i) for i in range(self.n)})


def as_multigraph(g: LoopedSimpleGraph | MultiGraph) -> MultiGraph:
    if isinstance(g, MultiGraph):
        return g
    edges: list[tuple[int, int]] = []
    for i in range(g.n):
        if g.adj.entry(i, i):
            edges.append((i, i))
        for j in range(i + 1, g.n):
            if g.adj.entry(i, j):
                edges.append((i, j))
    return MultiGraph(g.labels, tuple(edges))


def reconstruct_from_nullity_oracle(
    labels: Sequence[str], oracle: Callable[[frozenset[str]], int]
) -> LoopedSimpleGraph:
    """Rebuild the unique looped simple graph matching an induced-subgraph
    nullity oracle on all vertex subsets of size at most 2.

    A vertex is looped iff its singleton nullity is 0; adjacency of a pair is
    decided by the pair nullity according to the loop statuses.
    """
    labels = tuple(labels)
    looped: dict[str, bool] = {}
    for v in labels:
        nu = oracle(frozenset({v}))
        if nu == 0:
            looped[v] = True
        elif nu == 1:
            looped[v] = False
        else:
            raise ValueError(f"inconsistent oracle: nullity {nu} on a single vertex")
    edges = []
    for u, v in itertools.combinations(labels, 2):
        nu = oracle(frozenset({u, v}))
        lu, lv = looped[u], looped[v]
        if lu and lv:
            table = {1: True, 0: False}
        elif lu or lv:
            table = {0: True, 1: False}
        else:
            table = {0: True, 2: False}
        if nu not in table:
            raise ValueError(
                f"inconsistent oracle: nullity {nu} on pair with loop pattern {(lu, lv)}"
            )
        if table[nu]:
            edges.append((u, v))
    return LoopedSimpleGraph.build(labels, edges, (v for v in labels if looped[v]))


def nullity_oracle_of(g: LoopedSimpleGraph) -> Callable[[frozenset[str]], int]:
    """The induced-subgraph nullity oracle of a concrete graph."""

    def oracle(s: frozenset[str]) -> int:
        idx = [g.index(v) for v in s]
        return nullity(principal_submatrix(g.adj, idx))

    return oracle


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(n))


def all_looped_simple_graphs(n: int, labels: Sequence[str] = ()) -> Iterator[LoopedSimpleGraph]:
    """Every looped simple graph on n labeled vertices (2^(n(n+1)/2) graphs)."""
    labels = tuple(labels) or default_labels(n)
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    for bits in range(1 << len(cells)):
        rows = [0] * n
        for k, (i, j) in enumerate(cells):
            if (bits >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield LoopedSimpleGraph(labels, BitMatrix(n, n, tuple(rows)))


def random_looped_simple_graph(
    rng: random.Random, n: int, labels: Sequence[str] = ()
) -> LoopedSimpleGraph:
    labels = tuple(labels) or default_labels(n)
    rows = [0] * n
    for i in range(n):
        for j in range(i, n):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return LoopedSimpleGraph(labels, BitMatrix(n, n, tuple(rows)))


def graph_isomorphism(
    g: LoopedSimpleGraph, h: LoopedSimpleGraph
) -> dict[str, str] | None:
    """Brute-force isomorphism of looped simple graphs; None if there is none."""
    if g.n != h.n:
        return None
    g_loops = sum(g.adj.entry(i, i) for i in range(g.n))
    h_loops = sum(h.adj.entry(i, i) for i in range(h.n))
    if g_loops != h_loops:
        return None

    def profile(x: LoopedSimpleGraph) -> list[tuple[int, int]]:
        return sorted(
            (x.adj.entry(i, i), popcount(x.adj.data[i] & ~(1 << i)))
            for i in range(x.n)
        )

    if profile(g) != profile(h):
        return None
    for perm in itertools.permutations(range(h.n)):
        ok = True
        for i in range(g.n):
            for j in range(i, g.n):
                if g.adj.entry(i, j) != h.adj.entry(perm[i], perm[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return {g.labels[i]: h.labels[perm[i]] for i in range(g.n)}
    return None
