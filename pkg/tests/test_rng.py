import math
import random
from collections import Counter

import numpy as np
import pytest

from greedymatch.rng import SeededRng, binomial_from_normal


def init_genrand(seed):
    mt = [seed & 0xFFFFFFFF]
    for i in range(1, 624):
        mt.append((1812433253 * (mt[-1] ^ (mt[-1] >> 30)) + i) & 0xFFFFFFFF)
    return mt


def test_scalar_stream_is_mt19937():
    # reference output of MT19937 after init_genrand(5489)
    r = random.Random()
    r.setstate((3, tuple(init_genrand(5489)) + (624,), None))
    assert r.getrandbits(32) == 3499211612
    assert np.random.RandomState(5489).randint(0, 2**32, dtype=np.uint64) == 3499211612
    assert isinstance(SeededRng(1).numpy().bit_generator, np.random.MT19937)


def test_uniform_below_one_is_zero():
    rng = SeededRng(9)
    assert {rng.uniform_below(1) for _ in range(100)} == {0}


def test_uniform_below_zero_rejected():
    with pytest.raises(ValueError):
        SeededRng(1).uniform_below(0)


def test_uniform_below_six_is_flat():
    rng = SeededRng(123)
    counts = Counter(rng.uniform_below(6) for _ in range(60_000))
    sigma = math.sqrt(60_000 * (1 / 6) * (5 / 6))
    assert set(counts) == set(range(6))
    for v in range(6):
        assert abs(counts[v] - 10_000) <= 3 * sigma


def test_equal_seeds_equal_streams():
    a, b = SeededRng(77), SeededRng(77)
    assert [a.uniform_below(1000) for _ in range(1000)] == [b.uniform_below(1000) for _ in range(1000)]
    a, b = SeededRng(77), SeededRng(77)
    assert np.array_equal(a.numpy().random(50), b.numpy().random(50))


def test_seed_wraps_to_32_bits():
    assert SeededRng(2**32 + 5).seed == 5


@pytest.fixture(scope="module")
def normals():
    rng = SeededRng(2024)
    return np.array([rng.standard_normal() for _ in range(100_000)])


def test_normal_mean(normals):
    assert -0.02 <= normals.mean() <= 0.02


def test_normal_variance(normals):
    assert 0.97 <= normals.var(ddof=1) <= 1.03


def test_normal_tail_mass(normals):
    assert 0.045 <= np.mean(np.abs(normals) > 1.96) <= 0.055


def test_binomial_formula_at_fixed_normals():
    assert binomial_from_normal(100, 0.5, lambda: 0.0) == 50
    assert binomial_from_normal(100, 0.5, lambda: 1.0) == 55


def test_binomial_redraws_infeasible_values():
    ys = iter([-50.0, 80.0, 0.2])
    # sd = sqrt(10 * 0.5 * 0.5) ~ 1.58; -50 and 80 fall outside [0, 10]
    assert binomial_from_normal(10, 0.5, lambda: next(ys)) == 5


def test_binomial_rejects_bad_parameters():
    with pytest.raises(ValueError):
        binomial_from_normal(0, 0.5, lambda: 0.0)
    with pytest.raises(ValueError):
        binomial_from_normal(10, 1.0, lambda: 0.0)


def test_binomial_stays_in_range():
    rng = SeededRng(4)
    xs = [rng.binomial_via_normal(3, 0.5) for _ in range(5000)]
    assert min(xs) >= 0 and max(xs) <= 3


def test_binomial_mean_matches_np():
    rng = SeededRng(31)
    xs = [rng.binomial_via_normal(4950, 2 / 99) for _ in range(10_000)]
    assert abs(sum(xs) / len(xs) - 100) <= 1.0
