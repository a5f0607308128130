"""Exact maximum-cardinality matching, used to score the greedy heuristics.

* :func:`max_matching_bipartite`: Hopcroft-Karp (BFS layering, DFS augmentation).
* :func:`max_matching_general`: Edmonds' blossom search, one root at a time.
  A root whose search fails leaves a Hungarian tree behind; those nodes can
  never lie on an augmenting path again, so they are dropped from later
  searches. Together with a greedy start this keeps the oracle close to
  linear on sparse random graphs.
* :func:`max_matching_brute`: memoised exhaustive search for tiny graphs.

All oracles read the original graph (no contracted nodes).
"""

from __future__ import annotations

import heapq
from collections import deque
from functools import lru_cache

from .graph import DynamicGraph, GraphInputError, GraphUsageError, Matching

BRUTE_MAX_EDGES = 24


def _adjacency(g: DynamicGraph) -> list[list[int]]:
    return [sorted(nb) if nb else [] for nb in g.adj]


def greedy_start(adj: list[list[int]]) -> list[int]:
    """Warm start: repeatedly match a node of least remaining degree to its
    least-degree free neighbor. Only a starting point for the exact search."""
    size = len(adj)
    mate = [-1] * size
    deg = [len(a) for a in adj]
    heap = [(d, x) for x, d in enumerate(deg) if d]
    heapq.heapify(heap)
    while heap:
        d, u = heapq.heappop(heap)
        if mate[u] != -1 or d != deg[u] or d == 0:
            continue
        best = -1
        for v in adj[u]:
            if mate[v] == -1 and (best == -1 or deg[v] < deg[best]):
                best = v
        mate[u] = best
        mate[best] = u
        for x in (u, best):
            for y in adj[x]:
                if mate[y] == -1:
                    deg[y] -= 1
                    if deg[y]:
                        heapq.heappush(heap, (deg[y], y))
    return mate


def _to_matching(mate: list[int]) -> Matching:
    return Matching.of((u, v) for u, v in enumerate(mate) if v > u)


# -- bipartite ----------------------------------------------------------------


def max_matching_bipartite(g: DynamicGraph, left_size: int) -> Matching:
    adj = _adjacency(g)
    size = len(adj)
    for u in range(size):
        for v in adj[u]:
            if (u < left_size) == (v < left_size):
                raise GraphInputError(f"edge ({u}, {v}) lies within one side")
    mate = greedy_start(adj)
    left = [u for u in range(min(left_size, size)) if adj[u]]
    inf = size + 1
    dist = [inf] * size

    while True:
        # BFS layering from free left nodes
        q = deque()
        for u in left:
            if mate[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = inf
        found = inf
        while q:
            u = q.popleft()
            du = dist[u]
            if du >= found:
                continue
            for v in adj[u]:
                w = mate[v]
                if w == -1:
                    if found == inf:
                        found = du + 1
                elif dist[w] == inf:
                    dist[w] = du + 1
                    q.append(w)
        if found == inf:
            break
        # iterative DFS along the layers
        it = {u: 0 for u in left}
        augmented = False
        for root in left:
            if mate[root] != -1:
                continue
            stack = [root]
            path_v = []
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                i = it[u]
                advanced = False
                while i < len(nbrs):
                    v = nbrs[i]
                    i += 1
                    w = mate[v]
                    if w == -1:
                        if dist[u] + 1 == found:
                            it[u] = i
                            path_v.append(v)
                            # flip the path
                            for x, y in zip(stack, path_v):
                                mate[x] = y
                                mate[y] = x
                            stack = []
                            augmented = True
                            advanced = True
                            break
                    elif dist[w] == dist[u] + 1:
                        it[u] = i
                        path_v.append(v)
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    it[u] = i
                    dist[u] = inf
                    stack.pop()
                    if path_v:
                        path_v.pop()
        if not augmented:
            break
    return _to_matching(mate)


# -- general graphs -------------------------------------------------------------


def max_matching_general(g: DynamicGraph) -> Matching:
    adj = _adjacency(g)
    size = len(adj)
    mate = greedy_start(adj)
    removed = [False] * size
    # blossom bases as a union-find forest; a set's root is its base
    uf = list(range(size))
    parent = [-1] * size
    outer = [False] * size
    mark = [0] * size
    stamp = 0

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def lca(a: int, b: int) -> int:
        nonlocal stamp
        stamp += 1
        while True:
            a = find(a)
            mark[a] = stamp
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = find(b)
            if mark[b] == stamp:
                return b
            b = parent[mate[b]]

    def search(root: int) -> list[int]:
        """Grow an alternating tree from ``root``; augments in place when a
        free node is reached. Returns every node the search touched."""
        visited = [root]
        outer[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if removed[to] or mate[v] == to:
                    continue
                bv = find(v)
                if bv == find(to):
                    continue
                if outer[to]:
                    cur = lca(v, to)
                    for x, child in ((v, to), (to, v)):
                        while find(x) != cur:
                            bx = find(x)
                            m = mate[x]
                            parent[x] = child
                            child = m
                            uf[bx] = cur
                            uf[find(m)] = cur
                            if not outer[m]:
                                outer[m] = True
                                q.append(m)
                            x = parent[m]
                elif parent[to] == -1:
                    parent[to] = v
                    visited.append(to)
                    if mate[to] == -1:
                        x = to
                        while x != -1:
                            pv = parent[x]
                            nxt = mate[pv]
                            mate[x] = pv
                            mate[pv] = x
                            x = nxt
                        return visited
                    w = mate[to]
                    outer[w] = True
                    visited.append(w)
                    q.append(w)
        return visited

    for root in range(size):
        if mate[root] != -1 or removed[root] or not adj[root]:
            continue
        visited = search(root)
        failed = mate[root] == -1
        for x in visited:
            if failed:
                removed[x] = True
            uf[x] = x
            parent[x] = -1
            outer[x] = False
    return _to_matching(mate)


# -- brute force ------------------------------------------------------------------


def max_matching_brute(g: DynamicGraph) -> int:
    """Exact size by exhaustive branching; refuses graphs with > 24 edges."""
    if g.m > BRUTE_MAX_EDGES:
        raise GraphUsageError(f"brute force limited to {BRUTE_MAX_EDGES} edges, got {g.m}")
    nodes = [x for x in g.nodes() if g.deg[x] > 0]
    pos = {x: i for i, x in enumerate(nodes)}
    nbr = [0] * len(nodes)
    for x in nodes:
        for y in g.adj[x]:
            nbr[pos[x]] |= 1 << pos[y]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        result = best(rest)
        cand = nbr[i] & rest
        while cand:
            bit = cand & -cand
            cand ^= bit
            result = max(result, 1 + best(rest ^ bit))
        return result

    return best((1 << len(nodes)) - 1)


def maximum_matching_size(g: DynamicGraph, left_size: int | None = None) -> int:
    if left_size is not None:
        return len(max_matching_bipartite(g, left_size))
    return len(max_matching_general(g))
