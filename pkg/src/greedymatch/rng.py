"""Seedable MT19937 randomness and the samplers used by the graph generators."""

from __future__ import annotations

import math
import random

import numpy as np

MASK32 = 0xFFFFFFFF


class SeededRng:
    """MT19937 stream owned by a single trial.

    Scalar draws come from :class:`random.Random` (CPython's MT19937).
    Bulk draws for edge generation use numpy's MT19937 bit generator, seeded
    from the scalar stream so the whole object stays a function of ``seed``.
    """

    def __init__(self, seed: int):
        self.seed = int(seed) & MASK32
        self._py = random.Random(self.seed)
        self._np: np.random.Generator | None = None
        self._spare: float | None = None

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection on raw bits."""
        return self._py._randbelow(k)

    def uniform_below(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"uniform_below needs k >= 1, got {k}")
        return self._py._randbelow(k)

    def choice(self, seq):
        return seq[self._py._randbelow(len(seq))]

    def bits32(self) -> int:
        return self._py.getrandbits(32)

    def unit(self) -> float:
        """Uniform real in [0, 1) built from one 32-bit draw."""
        return self._py.getrandbits(32) * (1.0 / 4294967296.0)

    def numpy(self) -> np.random.Generator:
        if self._np is None:
            self._np = np.random.Generator(np.random.MT19937(self.bits32()))
        return self._np

    def standard_normal(self) -> float:
        """Marsaglia polar method; the second deviate is cached."""
        if self._spare is not None:
            y, self._spare = self._spare, None
            return y
        while True:
            a = 2.0 * self.unit() - 1.0
            b = 2.0 * self.unit() - 1.0
            s = a * a + b * b
            if 0.0 < s < 1.0:
                break
        f = math.sqrt(-2.0 * math.log(s) / s)
        self._spare = b * f
        return a * f

    def binomial_via_normal(self, n_trials: int, p: float) -> int:
        """Normal approximation of Bin(n_trials, p), redrawn until in range."""
        return binomial_from_normal(n_trials, p, self.standard_normal)


def binomial_from_normal(n_trials: int, p: float, normal) -> int:
    if n_trials < 1 or not 0.0 < p < 1.0:
        raise ValueError(f"need N >= 1 and 0 < p < 1, got N={n_trials}, p={p}")
    mean = n_trials * p
    sd = math.sqrt(mean * (1.0 - p))
    while True:
        x = math.floor(normal() * sd + mean + 0.5)
        if 0 <= x <= n_trials:
            return x


def derive_seed(*parts: int) -> int:
    """Mix integers into a 32-bit seed (splitmix64 finaliser)."""
    h = 0x9E3779B97F4A7C15
    for p in parts:
        h = (h ^ (int(p) & 0xFFFFFFFFFFFFFFFF)) * 0xBF58476D1CE4E5B9 & 0xFFFFFFFFFFFFFFFF
        h ^= h >> 31
        h = h * 0x94D049BB133111EB & 0xFFFFFFFFFFFFFFFF
        h ^= h >> 29
    return h & MASK32
