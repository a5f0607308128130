import random

import pytest
from fractions import Fraction

from greedymatch.generators import GraphFamily, generate_direct
from greedymatch.graph import GraphUsageError, build
from greedymatch.potential import PotentialIndex, potentials
from greedymatch.rng import SeededRng

from conftest import path, petersen, star


def exact_potentials(g):
    """Rational-arithmetic scan, independent of the float index."""
    return {u: sum(Fraction(1, g.deg[v]) for v in g.adj[u]) for u in g.nodes() if g.deg[u] > 0}


def test_star_potentials():
    idx = PotentialIndex(star(3))
    assert idx.pi[0] == pytest.approx(3.0)
    assert idx.pi[1] == pytest.approx(1 / 3)


def test_path_potentials():
    idx = PotentialIndex(path(3))
    assert idx.pi[1] == pytest.approx(2.0)
    assert idx.pi[0] == idx.pi[2] == pytest.approx(0.5)


def test_three_regular_potentials_are_one():
    idx = PotentialIndex(petersen())
    assert all(idx.pi[u] == pytest.approx(1.0) for u in range(10))
    assert sorted(idx.min_tie_set()) == list(range(10))


def test_remove_path_end():
    g = path(3)
    idx = PotentialIndex(g)
    idx.remove_node_update(0)
    g.delete_node(0)
    assert idx.pi[1] == pytest.approx(1.0)
    assert idx.pi[2] == pytest.approx(1.0)
    idx.check()


def test_remove_star_leaf():
    g = star(3)
    idx = PotentialIndex(g)
    idx.remove_node_update(3)
    g.delete_node(3)
    assert idx.pi[0] == pytest.approx(2.0)
    assert idx.pi[1] == idx.pi[2] == pytest.approx(0.5)
    assert sorted(idx.min_tie_set()) == [1, 2]


def test_remove_dead_node_rejected():
    g = path(3)
    idx = PotentialIndex(g)
    idx.remove_node_update(0)
    g.delete_node(0)
    with pytest.raises(GraphUsageError):
        idx.remove_node_update(0)


def test_isolated_nodes_leave_the_index():
    g = path(2)
    idx = PotentialIndex(g)
    idx.remove_node_update(0)
    g.delete_node(0)
    with pytest.raises(GraphUsageError):
        idx.min_tie_set()


def test_star_tie_set_is_leaves():
    assert sorted(PotentialIndex(star(3)).min_tie_set()) == [1, 2, 3]


def test_unique_minimum_matches_scan():
    # star with a pendant chain: 0 is the hub, 1-2-3 a chain hanging off leaf 1
    g = build(7, [(0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (2, 3), (4, 5)])
    ties = PotentialIndex(g).min_tie_set()
    scan = exact_potentials(g)
    low = min(scan.values())
    assert ties == [u for u in sorted(scan) if scan[u] == low]
    assert len(ties) == 1


def test_random_deletions_match_full_recompute():
    g = generate_direct(GraphFamily("general", 200, 4.0), SeededRng(3))
    idx = PotentialIndex(g)
    rnd = random.Random(9)
    steps = 0
    while steps < 1000 and g.m:
        alive = [x for x in g.nodes() if g.deg[x] > 0]
        x = rnd.choice(alive)
        idx.remove_node_update(x)
        g.delete_node(x)
        steps += 1
        if g.m == 0:
            # start again on a fresh graph so the run reaches 1000 deletions
            g = generate_direct(GraphFamily("general", 200, 4.0), SeededRng(3 + steps))
            idx = PotentialIndex(g)
            continue
        idx.check()
        exact = exact_potentials(g)
        for u, val in exact.items():
            assert abs(idx.pi[u] - float(val)) <= 1e-9 * (1 + float(val))
    assert steps == 1000


def test_sum_of_potentials_counts_positive_degree_nodes():
    g = generate_direct(GraphFamily("general", 300, 5.0), SeededRng(12))
    idx = PotentialIndex(g)
    rnd = random.Random(1)
    for _ in range(100):
        x = rnd.choice([x for x in g.nodes() if g.deg[x] > 0])
        idx.remove_node_update(x)
        g.delete_node(x)
        positive = [u for u in g.nodes() if g.deg[u] > 0]
        assert abs(sum(idx.pi[u] for u in positive) - len(positive)) <= 1e-6 * 300


def test_tie_set_independent_of_deletion_order():
    base = generate_direct(GraphFamily("general", 60, 4.0), SeededRng(21))
    victims = [3, 17, 25, 40, 41, 59]
    results = []
    for order in (victims, victims[::-1], sorted(victims, key=lambda x: (x * 7) % 11)):
        g = base.copy()
        idx = PotentialIndex(g)
        for x in order:
            idx.remove_node_update(x)
            g.delete_node(x)
        results.append(sorted(idx.min_tie_set()))
    assert results[0] == results[1] == results[2]


def test_potential_bounds():
    g = generate_direct(GraphFamily("general", 300, 6.0), SeededRng(2))
    for u, val in potentials(g).items():
        assert 0 <= val <= g.deg[u]
