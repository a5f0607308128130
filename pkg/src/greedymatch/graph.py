"""Mutable sparse graph used by the greedy matchers.

Nodes are integers. The first ``n`` ids are the original nodes; every
contraction appends a fresh id. Dead nodes stay tombstoned so that ids
recorded in the action log remain meaningful while unwinding.

Alive nodes are kept in degree buckets (swap-remove arrays with a position
map), which gives O(1) bucket moves and O(1) uniform sampling per bucket.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class GraphInputError(ValueError):
    """Malformed graph input (bad endpoint, bad edge-list file)."""


class GraphUsageError(RuntimeError):
    """An operation was called on a node or graph state that does not allow it."""


@dataclass(frozen=True)
class ContractionRecord:
    """How ``merged`` was built from the degree-2 node ``u`` and its neighbors.

    ``n1`` and ``n2`` are the neighborhoods of ``v1`` and ``v2`` at
    contraction time, excluding ``u``, ``v1`` and ``v2``.
    """

    u: int
    v1: int
    v2: int
    merged: int
    n1: frozenset
    n2: frozenset


class DynamicGraph:
    def __init__(self, n: int):
        if n < 0:
            raise GraphInputError(f"node count must be non-negative, got {n}")
        self.n = n
        self.adj: list[Optional[set]] = [set() for _ in range(n)]
        self.deg: list[int] = [0] * n
        self.alive: list[bool] = [True] * n
        self.buckets: list[list[int]] = [list(range(n))]
        self._pos: list[int] = list(range(n))
        self.m = 0
        self.alive_count = n
        self._min_hint = 1

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, n: int, edges: Iterable[Sequence[int]]) -> "DynamicGraph":
        """Build a simple graph; loops and duplicate pairs are dropped."""
        g = cls(n)
        adj = g.adj
        m = 0
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v or v in adj[u]:
                continue
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        g.m = m
        g._rebuild_buckets()
        return g

    def _rebuild_buckets(self) -> None:
        deg = [len(s) if s is not None else 0 for s in self.adj]
        top = max(deg, default=0)
        buckets: list[list[int]] = [[] for _ in range(top + 1)]
        pos = [-1] * len(deg)
        for x, d in enumerate(deg):
            if self.alive[x]:
                b = buckets[d]
                pos[x] = len(b)
                b.append(x)
        self.deg = deg
        self.buckets = buckets
        self._pos = pos
        self._min_hint = 1

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph.__new__(DynamicGraph)
        g.n = self.n
        g.adj = [set(s) if s is not None else None for s in self.adj]
        g.deg = list(self.deg)
        g.alive = list(self.alive)
        g.buckets = [list(b) for b in self.buckets]
        g._pos = list(self._pos)
        g.m = self.m
        g.alive_count = self.alive_count
        g._min_hint = self._min_hint
        return g

    # -- queries ------------------------------------------------------------

    @property
    def size(self) -> int:
        """Number of ids ever allocated (original plus contracted)."""
        return len(self.adj)

    def is_alive(self, x: int) -> bool:
        return 0 <= x < len(self.alive) and self.alive[x]

    def neighbors(self, x: int) -> set:
        self._check_alive(x)
        return self.adj[x]

    def degree(self, x: int) -> int:
        self._check_alive(x)
        return self.deg[x]

    def nodes(self) -> Iterator[int]:
        return (x for x, a in enumerate(self.alive) if a)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nb in enumerate(self.adj):
            if nb:
                for v in nb:
                    if u < v:
                        yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.is_alive(u) and v in self.adj[u]

    def bucket(self, d: int) -> list[int]:
        """Alive nodes of degree ``d`` (read-only view)."""
        return self.buckets[d] if d < len(self.buckets) else []

    def max_degree(self) -> int:
        b = self.buckets
        top = len(b) - 1
        while top > 0 and not b[top]:
            top -= 1
        return top

    def min_positive_degree(self) -> Optional[int]:
        """Smallest degree >= 1 among alive nodes, or None when no edge is left."""
        if self.m == 0:
            return None
        b = self.buckets
        d = self._min_hint
        while not b[d]:
            d += 1
        self._min_hint = d
        return d

    def random_node_of_degree(self, d: int, rng) -> int:
        b = self.bucket(d)
        if not b:
            raise GraphUsageError(f"no alive node has degree {d}")
        return b[rng.below(len(b))]

    # -- mutation -----------------------------------------------------------

    def _check_alive(self, x: int) -> None:
        if not self.is_alive(x):
            raise GraphUsageError(f"node {x} is not alive")

    def _move(self, x: int, old: int, new: int) -> None:
        buckets = self.buckets
        pos = self._pos
        src = buckets[old]
        i = pos[x]
        last = src.pop()
        if last != x:
            src[i] = last
            pos[last] = i
        if new >= len(buckets):
            buckets.extend([] for _ in range(new + 1 - len(buckets)))
        dst = buckets[new]
        pos[x] = len(dst)
        dst.append(x)
        self.deg[x] = new
        if 0 < new < self._min_hint:
            self._min_hint = new

    def _unbucket(self, x: int) -> None:
        src = self.buckets[self.deg[x]]
        i = self._pos[x]
        last = src.pop()
        if last != x:
            src[i] = last
            self._pos[last] = i
        self._pos[x] = -1

    def delete_node(self, u: int) -> None:
        """Remove ``u`` and its incident edges."""
        self._check_alive(u)
        adj = self.adj
        deg = self.deg
        for v in adj[u]:
            adj[v].discard(u)
            self._move(v, deg[v], deg[v] - 1)
        self.m -= deg[u]
        self._unbucket(u)
        deg[u] = 0
        adj[u] = None
        self.alive[u] = False
        self.alive_count -= 1

    def add_node(self, neighbors: Iterable[int]) -> int:
        """Append a fresh node adjacent to the given alive nodes."""
        x = len(self.adj)
        nb = set(neighbors)
        self.adj.append(nb)
        self.deg.append(0)
        self.alive.append(True)
        self._pos.append(0)
        self.buckets[0].append(x)
        self._pos[x] = len(self.buckets[0]) - 1
        self.alive_count += 1
        adj = self.adj
        deg = self.deg
        for v in nb:
            if v == x or not self.is_alive(v):
                raise GraphUsageError(f"cannot attach new node to {v}")
            adj[v].add(x)
            self._move(v, deg[v], deg[v] + 1)
        self._move(x, 0, len(nb))
        self.m += len(nb)
        return x

    def contract_triple(self, u: int, v1: int, v2: int) -> tuple[int, ContractionRecord]:
        """Merge the degree-2 node ``u`` with its neighbors ``v1`` and ``v2``.

        Self-loops and parallel edges created by the merge are dropped.
        """
        self._check_alive(u)
        if self.deg[u] != 2 or self.adj[u] != {v1, v2}:
            raise GraphUsageError(f"node {u} does not have neighborhood {{{v1}, {v2}}}")
        triple = (u, v1, v2)
        n1 = frozenset(x for x in self.adj[v1] if x not in triple)
        n2 = frozenset(x for x in self.adj[v2] if x not in triple)
        self.delete_node(u)
        self.delete_node(v1)
        self.delete_node(v2)
        merged = self.add_node(n1 | n2)
        return merged, ContractionRecord(u, v1, v2, merged, n1, n2)

    # -- invariants -----------------------------------------------------------

    def check(self) -> None:
        """Assert every structural invariant; used by tests."""
        m2 = 0
        alive = 0
        for x, nb in enumerate(self.adj):
            if not self.alive[x]:
                assert nb is None and self._pos[x] == -1, x
                continue
            alive += 1
            assert x not in nb, f"self-loop at {x}"
            assert self.deg[x] == len(nb), x
            for v in nb:
                assert self.alive[v], (x, v)
                assert x in self.adj[v], (x, v)
            m2 += len(nb)
            assert self.buckets[self.deg[x]][self._pos[x]] == x, x
        assert m2 == 2 * self.m
        assert alive == self.alive_count
        assert sum(len(b) for b in self.buckets) == alive
        d = self._min_hint
        assert all(not self.buckets[k] for k in range(1, min(d, len(self.buckets))))


def build(n: int, edges: Iterable[Sequence[int]]) -> DynamicGraph:
    return DynamicGraph.build(n, edges)


def read_edge_list(path) -> DynamicGraph:
    """Read the ``n m`` header plus ``u v`` lines format."""
    with open(path) as fh:
        tokens = fh.read().split()
    if len(tokens) < 2:
        raise GraphInputError(f"{path}: missing 'n m' header")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphInputError(f"{path}: {exc}") from None
    n, m = values[0], values[1]
    body = values[2:]
    if len(body) != 2 * m:
        raise GraphInputError(f"{path}: header announces {m} edges, found {len(body) / 2:g}")
    return DynamicGraph.build(n, zip(body[0::2], body[1::2]))


def write_edge_list(g: DynamicGraph, path) -> None:
    """Write alive edges of an uncontracted graph in edge-list format."""
    edges = sorted(g.edges())
    with open(path, "w") as fh:
        fh.write(f"{g.n} {len(edges)}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges, each stored as ``(min, max)``."""

    edges: tuple

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> "Matching":
        return cls(tuple(sorted((min(a, b), max(a, b)) for a, b in pairs)))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def mate_map(self) -> dict[int, int]:
        mate = {}
        for a, b in self.edges:
            mate[a] = b
            mate[b] = a
        return mate

    def violations(self, g: DynamicGraph) -> list[str]:
        """Reasons this is not a matching of ``g`` (empty when valid)."""
        problems = []
        seen = set()
        for a, b in self.edges:
            if a in seen or b in seen:
                problems.append(f"edge ({a}, {b}) reuses a matched node")
            seen.add(a)
            seen.add(b)
            if not g.has_edge(a, b):
                problems.append(f"edge ({a}, {b}) is not in the graph")
        return problems
