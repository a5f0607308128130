"""Expected potential pi(u) = sum of 1/deg(v) over the neighbors v of u.

Values are kept current under node deletion by two-hop updates and stored in
a binary heap with lazy invalidation (an entry is live only while its version
matches the node's current version).
"""

from __future__ import annotations

import heapq

from .graph import DynamicGraph, GraphUsageError

TIE_TOL = 1e-9
REBUILD_EVERY = 1 << 20


def potential_of(g: DynamicGraph, u: int) -> float:
    deg = g.deg
    return sum(1.0 / deg[v] for v in g.adj[u])


def potentials(g: DynamicGraph) -> dict[int, float]:
    """Full recomputation for every alive node of positive degree."""
    return {u: potential_of(g, u) for u in g.nodes() if g.deg[u] > 0}


class PotentialIndex:
    def __init__(self, g: DynamicGraph):
        self.g = g
        self.pi: list[float] = []
        self._ver: list[int] = []
        self._heap: list[tuple[float, int, int]] = []
        self._updates = 0
        self.rebuild()

    def rebuild(self) -> None:
        g = self.g
        size = g.size
        self.pi = [0.0] * size
        self._ver = [0] * size
        heap = []
        for u in g.nodes():
            if g.deg[u] > 0:
                val = potential_of(g, u)
                self.pi[u] = val
                heap.append((val, u, 0))
        heapq.heapify(heap)
        self._heap = heap
        self._updates = 0

    def _grow(self, size: int) -> None:
        extra = size - len(self.pi)
        if extra > 0:
            self.pi.extend([0.0] * extra)
            self._ver.extend([0] * extra)

    def _after_updates(self, count: int) -> None:
        # the graph may still be mid-deletion here; rebuild on the next query
        self._updates += count

    def _maybe_rebuild(self) -> None:
        if self._updates >= REBUILD_EVERY or len(self._heap) > 4 * self.g.alive_count + 1024:
            self.rebuild()

    def remove_node_update(self, x: int) -> None:
        """Account for the deletion of ``x``; call before ``g.delete_node(x)``."""
        g = self.g
        if not g.is_alive(x):
            raise GraphUsageError(f"node {x} is not alive")
        adj = g.adj
        deg = g.deg
        pi = self.pi
        dx = deg[x]
        touched = set()
        if dx:
            inv_x = 1.0 / dx
            for v in adj[x]:
                pi[v] -= inv_x
                touched.add(v)
                dv = deg[v]
                if dv > 1:
                    delta = 1.0 / (dv - 1) - 1.0 / dv
                    for w in adj[v]:
                        if w != x:
                            pi[w] += delta
                            touched.add(w)
        touched.discard(x)
        self._ver[x] += 1
        pi[x] = 0.0
        # the deletion has not happened yet: nodes whose degree will hit zero
        # must not be re-pushed
        for w in touched:
            self._ver[w] += 1
            if deg[w] - (1 if w in adj[x] else 0) > 0:
                heapq.heappush(self._heap, (pi[w], w, self._ver[w]))
            else:
                pi[w] = 0.0
        self._after_updates(len(touched) + 1)

    def refresh(self, nodes) -> None:
        """Recompute pi from scratch for ``nodes`` (after a contraction)."""
        g = self.g
        self._grow(g.size)
        count = 0
        for u in nodes:
            self._ver[u] += 1
            if g.alive[u] and g.deg[u] > 0:
                val = potential_of(g, u)
                self.pi[u] = val
                heapq.heappush(self._heap, (val, u, self._ver[u]))
            else:
                self.pi[u] = 0.0
            count += 1
        self._after_updates(count)

    def drop(self, u: int) -> None:
        """Invalidate ``u`` without touching its neighbors."""
        self._ver[u] += 1
        self.pi[u] = 0.0

    def _prune(self) -> None:
        self._maybe_rebuild()
        heap = self._heap
        ver = self._ver
        while heap and heap[0][2] != ver[heap[0][1]]:
            heapq.heappop(heap)

    def min_value(self) -> float:
        self._prune()
        if not self._heap:
            raise GraphUsageError("no node of positive degree")
        return self._heap[0][0]

    def min_tie_set(self) -> list[int]:
        """All nodes whose potential is within the tie tolerance of the minimum."""
        self._prune()
        heap = self._heap
        ver = self._ver
        if not heap:
            raise GraphUsageError("no node of positive degree")
        lo = heap[0][0]
        limit = lo + TIE_TOL * (1.0 + lo)
        taken = []
        ties = []
        while heap and heap[0][0] <= limit:
            entry = heapq.heappop(heap)
            if entry[2] == ver[entry[1]]:
                taken.append(entry)
                ties.append(entry[1])
        for entry in taken:
            heapq.heappush(heap, entry)
        return ties

    def check(self, tol: float = TIE_TOL) -> None:
        exact = potentials(self.g)
        for u, val in exact.items():
            assert abs(self.pi[u] - val) <= tol * (1.0 + val), (u, self.pi[u], val)
