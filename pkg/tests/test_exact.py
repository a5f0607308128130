import random

import networkx as nx
import pytest

from greedymatch.exact import (
    max_matching_bipartite,
    max_matching_brute,
    max_matching_general,
)
from greedymatch.generators import GraphFamily, generate
from greedymatch.graph import DynamicGraph, GraphInputError, GraphUsageError, build
from greedymatch.rng import SeededRng

from conftest import assert_valid_matching, brute_size, complete, cycle, path, petersen, random_edges


def k33():
    return build(6, [(u, v) for u in range(3) for v in range(3, 6)])


def test_k33_perfect():
    assert len(max_matching_bipartite(k33(), 3)) == 3


def test_p4_bipartite():
    # sides {0, 2} and {1, 3}: relabel to left 0..1, right 2..3
    g = build(4, [(0, 2), (2, 1), (1, 3)])
    assert len(max_matching_bipartite(g, 2)) == 2


def test_bipartite_rejects_inner_edge():
    with pytest.raises(GraphInputError):
        max_matching_bipartite(build(4, [(0, 1), (0, 2)]), 2)


def test_general_small_cases():
    assert len(max_matching_general(cycle(3))) == 1
    assert len(max_matching_general(cycle(5))) == 2
    assert len(max_matching_general(petersen())) == 5
    assert brute_size(list(petersen().edges())) == 5


def test_brute_small_cases():
    assert max_matching_brute(DynamicGraph(4)) == 0
    assert max_matching_brute(path(2)) == 1
    assert max_matching_brute(complete(4)) == 2


def test_brute_refuses_large_graphs():
    with pytest.raises(GraphUsageError):
        max_matching_brute(complete(8))


def test_brute_matches_naive_enumeration(rnd):
    for _ in range(200):
        n = rnd.randint(2, 9)
        edges = random_edges(n, rnd.uniform(0.5, 4), rnd)
        if len(edges) > 16:
            continue
        assert max_matching_brute(build(n, edges)) == brute_size(edges)


def test_bipartite_random_vs_brute(rnd):
    done = 0
    while done < 1000:
        g = build(40, random_edges(40, rnd.uniform(0.3, 1.2), rnd, bipartite=True))
        if g.m > 24:
            continue
        m = max_matching_bipartite(g, 20)
        assert_valid_matching(m.edges, list(g.edges()))
        assert len(m) == max_matching_brute(g)
        done += 1


@pytest.mark.parametrize("seed", range(8))
def test_general_vs_networkx(seed):
    rnd = random.Random(seed)
    n = rnd.randint(50, 400)
    g = build(n, random_edges(n, rnd.uniform(1, 6), rnd))
    ref = nx.Graph(list(g.edges()))
    m = max_matching_general(g)
    assert_valid_matching(m.edges, list(g.edges()))
    assert len(m) == len(nx.max_weight_matching(ref, maxcardinality=True))


@pytest.mark.parametrize("seed", range(6))
def test_bipartite_vs_networkx(seed):
    fam = GraphFamily("bipartite", 2000, 1.0 + seed)
    g = generate(fam, SeededRng(seed))
    ref = nx.Graph()
    ref.add_nodes_from(range(1000))
    ref.add_edges_from(g.edges())
    expected = len(nx.bipartite.hopcroft_karp_matching(ref, top_nodes=range(1000))) // 2
    m = max_matching_bipartite(g, 1000)
    assert len(m) == expected == len(max_matching_general(g))


def test_output_has_no_augmenting_path(rnd):
    # re-running on the matched graph: a maximum matching restricted to its own
    # edges is still maximum, and the induced alternating structure adds nothing
    for _ in range(50):
        g = build(60, random_edges(60, 3.0, rnd))
        m = max_matching_general(g)
        mate = m.mate_map()
        free = [x for x in g.nodes() if x not in mate and g.deg[x] > 0]
        # two adjacent free nodes would be a length-1 augmenting path
        assert not any(v in g.adj[u] for u in free for v in free if u < v)
        assert len(max_matching_general(g)) == len(m)
