import random

import pytest

from greedymatch.graph import DynamicGraph

ACCEPTANCE_LINES: list[str] = []


def random_edges(n, c, rnd, bipartite=False):
    """Plain G(n;c) / B(n/2,n/2;c) sampler kept independent of the package generators."""
    edges = []
    if bipartite:
        half = n // 2
        p = min(1.0, 2.0 * c / n) if n else 0.0
        for u in range(half):
            for v in range(half, n):
                if rnd.random() < p:
                    edges.append((u, v))
    else:
        p = min(1.0, c / (n - 1)) if n > 1 else 0.0
        for u in range(n):
            for v in range(u + 1, n):
                if rnd.random() < p:
                    edges.append((u, v))
    return edges


def brute_size(edges):
    """Largest disjoint subset of ``edges`` by plain recursion (tiny inputs only)."""
    edges = list(edges)

    def rec(i, used):
        if i == len(edges):
            return 0
        u, v = edges[i]
        best = rec(i + 1, used)
        if u not in used and v not in used:
            best = max(best, 1 + rec(i + 1, used | {u, v}))
        return best

    return rec(0, frozenset())


def assert_valid_matching(pairs, edges):
    edge_set = {frozenset(e) for e in edges}
    seen = set()
    for u, v in pairs:
        assert u not in seen and v not in seen, (u, v)
        seen.update((u, v))
        assert frozenset((u, v)) in edge_set, (u, v)


@pytest.fixture
def rnd():
    return random.Random(20240601)


def path(k):
    return DynamicGraph.build(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k):
    return DynamicGraph.build(k, [(i, (i + 1) % k) for i in range(k)])


def star(leaves):
    return DynamicGraph.build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(k):
    return DynamicGraph.build(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return DynamicGraph.build(10, outer + spokes + inner)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
