"""Random sparse graphs G(n;c) and B(n/2,n/2;c).

Candidate edges are addressed by an integer index so both construction
methods can work on flat arrays:

* general: lexicographic index of the pair ``u < v``;
* bipartite: ``left * (n/2) + (right - n/2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import DynamicGraph, GraphInputError
from .rng import SeededRng

DIRECT_MAX_NODES = 10_000
_CHUNK = 1 << 22


@dataclass(frozen=True)
class GraphFamily:
    kind: str
    n: int
    c: float

    def __post_init__(self):
        if self.kind not in ("general", "bipartite"):
            raise GraphInputError(f"unknown graph family {self.kind!r}")
        if self.n < 0:
            raise GraphInputError("node count must be non-negative")
        if self.kind == "bipartite" and self.n % 2:
            raise GraphInputError(f"bipartite graphs need an even node count, got {self.n}")
        if not self.c > 0:
            raise GraphInputError(f"expected degree must be positive, got {self.c}")

    @property
    def candidates(self) -> int:
        n = self.n
        return n * (n - 1) // 2 if self.kind == "general" else (n // 2) ** 2

    @property
    def p(self) -> float:
        n = self.n
        if self.kind == "general":
            return self.c / (n - 1) if n > 1 else 0.0
        return 2.0 * self.c / n if n else 0.0

    @property
    def left_size(self) -> int | None:
        return self.n // 2 if self.kind == "bipartite" else None


def encode_pair(kind: str, n: int, u: int, v: int) -> int:
    if kind == "general":
        if u > v:
            u, v = v, u
        return u * (2 * n - u - 1) // 2 + (v - u - 1)
    half = n // 2
    if u > v:
        u, v = v, u
    return u * half + (v - half)


def decode_indices(kind: str, n: int, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised inverse of :func:`encode_pair`."""
    idx = np.asarray(idx, dtype=np.int64)
    if kind == "bipartite":
        half = n // 2
        return idx // half, idx % half + half
    b = 2 * n - 1
    u = np.floor((b - np.sqrt(float(b) * b - 8.0 * idx)) / 2.0).astype(np.int64)
    # float rounding can put u one row off in either direction
    start = u * (b - u) // 2
    low = start > idx
    u[low] -= 1
    nxt = (u + 1) * (b - u - 1) // 2
    high = nxt <= idx
    u[high] += 1
    start = u * (b - u) // 2
    v = idx - start + u + 1
    return u, v


def _from_indices(fam: GraphFamily, idx: np.ndarray) -> DynamicGraph:
    us, vs = decode_indices(fam.kind, fam.n, idx)
    return DynamicGraph.build(fam.n, zip(us.tolist(), vs.tolist()))


def generate_direct(fam: GraphFamily, rng: SeededRng) -> DynamicGraph:
    """Keep each candidate edge independently with probability p.

    Each candidate consumes one 32-bit draw ``r``; the edge is kept when
    ``r / 2**32 < p``, evaluated exactly as ``r < ceil(p * 2**32)``.
    """
    total = fam.candidates
    p = fam.p
    if p >= 1.0:
        return _from_indices(fam, np.arange(total, dtype=np.int64))
    threshold = math.ceil(p * 4294967296.0)
    gen = rng.numpy()
    picked = []
    for start in range(0, total, _CHUNK):
        size = min(_CHUNK, total - start)
        draws = gen.integers(0, 4294967296, size=size, dtype=np.uint32)
        if threshold > 0xFFFFFFFF:
            hits = np.arange(size)
        else:
            hits = np.flatnonzero(draws < np.uint32(threshold))
        if hits.size:
            picked.append(hits + start)
    idx = np.concatenate(picked) if picked else np.empty(0, dtype=np.int64)
    return _from_indices(fam, idx)


def sample_distinct(total: int, k: int, rng: SeededRng) -> np.ndarray:
    """``k`` distinct indices from ``range(total)``: first ``k`` distinct values
    of an i.i.d. uniform stream, i.e. sequential rejection of repeats."""
    if k > total:
        raise ValueError(f"cannot draw {k} distinct values from {total}")
    if k == 0:
        return np.empty(0, dtype=np.int64)
    if 2 * k > total:
        return np.sort(rng.numpy().permutation(total)[:k]).astype(np.int64)
    gen = rng.numpy()
    stream = np.empty(0, dtype=np.int64)
    while True:
        need = k - np.unique(stream).size if stream.size else k
        extra = gen.integers(0, total, size=int(need * 1.1) + 16, dtype=np.int64)
        stream = np.concatenate([stream, extra])
        uniq, first = np.unique(stream, return_index=True)
        if uniq.size >= k:
            order = np.sort(first)[:k]
            return stream[order]


def generate_counted(fam: GraphFamily, rng: SeededRng) -> DynamicGraph:
    """Draw the edge count from the normal-approximated binomial, then that
    many distinct candidate edges."""
    total = fam.candidates
    p = fam.p
    if total == 0 or p <= 0.0:
        x = 0
    elif p >= 1.0:
        x = total
    else:
        x = rng.binomial_via_normal(total, p)
    return _from_indices(fam, sample_distinct(total, x, rng))


def generate(fam: GraphFamily, rng: SeededRng, method: str | None = None,
             direct_max_nodes: int = DIRECT_MAX_NODES) -> DynamicGraph:
    if method is None:
        method = "direct" if fam.n <= direct_max_nodes else "counted"
    if method == "direct":
        return generate_direct(fam, rng)
    if method == "counted":
        return generate_counted(fam, rng)
    raise GraphInputError(f"unknown generation method {method!r}")
