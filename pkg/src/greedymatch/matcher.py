"""Greedy matching: optimal degree-1/degree-2 reductions plus a heuristic step.

The forward pass shrinks the graph and records an action log. Matching
edges are then recovered by replaying the log backwards; contractions are
resolved with the neighborhood snapshots stored at contraction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import ContractionRecord, DynamicGraph, GraphUsageError, Matching
from .potential import PotentialIndex
from .rng import SeededRng

OPT1 = "opt1"
OPT12 = "opt12"
RAND = "rand"
DEGDEG = "degdeg"
POTDEG = "potdeg"

_HEU_LABEL = {RAND: "rand", DEGDEG: "deg,deg", POTDEG: "pot,deg"}
_OPT_LABEL = {OPT1: "1", OPT12: "1,2"}


class UnwindError(RuntimeError):
    """The action log is inconsistent with its contraction records."""


@dataclass(frozen=True)
class AlgorithmSpec:
    opt: str
    heu: str

    def __post_init__(self):
        if self.opt not in _OPT_LABEL or self.heu not in _HEU_LABEL:
            raise ValueError(f"unknown algorithm {self.opt}:{self.heu}")

    @property
    def name(self) -> str:
        return f"{self.opt}-{self.heu}"

    @property
    def label(self) -> str:
        return f"OPT({_OPT_LABEL[self.opt]}):HEU({_HEU_LABEL[self.heu]})"

    def __str__(self) -> str:
        return self.name


ALGORITHMS = tuple(AlgorithmSpec(o, h) for o in (OPT1, OPT12) for h in (RAND, DEGDEG, POTDEG))
ALGORITHM_NAMES = tuple(a.name for a in ALGORITHMS)


def parse_algorithm(name: str) -> AlgorithmSpec:
    for a in ALGORITHMS:
        if name in (a.name, a.label):
            return a
    raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHM_NAMES)}")


@dataclass(frozen=True)
class MatchEdge:
    u: int
    v: int


@dataclass(frozen=True)
class Contract:
    record: ContractionRecord


Action = Union[MatchEdge, Contract]


@dataclass
class StepCounters:
    o1: int = 0
    o2: int = 0
    h: int = 0

    @property
    def total(self) -> int:
        return self.o1 + self.o2 + self.h

    def fractions(self) -> tuple[float, float, float]:
        t = self.total
        if not t:
            return (0.0, 0.0, 0.0)
        return (self.o1 / t, self.o2 / t, self.h / t)


# -- heuristic edge selectors ---------------------------------------------------


def _min_degree_neighbor(g: DynamicGraph, u: int, rng: SeededRng) -> int:
    deg = g.deg
    best = None
    ties = []
    for v in g.adj[u]:
        d = deg[v]
        if best is None or d < best:
            best = d
            ties = [v]
        elif d == best:
            ties.append(v)
    if len(ties) > 1:
        ties.sort()
    return ties[rng.below(len(ties))]


def select_rand(g: DynamicGraph, rng: SeededRng) -> tuple[int, int]:
    """Uniform edge: a degree-weighted node, then a uniform incident edge."""
    if g.m == 0:
        raise GraphUsageError("graph has no edges")
    r = rng.below(2 * g.m)
    buckets = g.buckets
    for d in range(1, len(buckets)):
        b = buckets[d]
        w = d * len(b)
        if r < w:
            u = b[r // d]
            nb = sorted(g.adj[u])
            return u, nb[r % d]
        r -= w
    raise AssertionError("edge count out of sync with degree buckets")


def select_degdeg(g: DynamicGraph, rng: SeededRng) -> tuple[int, int]:
    d = g.min_positive_degree()
    if d is None:
        raise GraphUsageError("graph has no edges")
    u = g.random_node_of_degree(d, rng)
    return u, _min_degree_neighbor(g, u, rng)


def select_potdeg(g: DynamicGraph, idx: PotentialIndex, rng: SeededRng) -> tuple[int, int]:
    if g.m == 0:
        raise GraphUsageError("graph has no edges")
    ties = idx.min_tie_set()
    u = ties[rng.below(len(ties))]
    return u, _min_degree_neighbor(g, u, rng)


# -- forward pass ---------------------------------------------------------------


class Matcher:
    """One forward pass of a greedy algorithm over ``g`` (which it consumes)."""

    def __init__(self, g: DynamicGraph, spec: AlgorithmSpec, rng: SeededRng):
        self.g = g
        self.spec = spec
        self.rng = rng
        self.log: list[Action] = []
        self.counters = StepCounters()
        self.index = PotentialIndex(g) if spec.heu == POTDEG else None

    def _remove(self, x: int) -> None:
        if self.index is not None:
            self.index.remove_node_update(x)
        self.g.delete_node(x)

    def _match(self, u: int, v: int) -> None:
        self.log.append(MatchEdge(u, v))
        self._remove(u)
        self._remove(v)

    def degree1_step(self) -> None:
        g = self.g
        if not g.bucket(1):
            raise GraphUsageError("no node of degree 1")
        u = g.random_node_of_degree(1, self.rng)
        (v,) = g.adj[u]
        self._match(u, v)
        self.counters.o1 += 1

    def degree2_step(self) -> ContractionRecord:
        g = self.g
        if not g.bucket(2):
            raise GraphUsageError("no node of degree 2")
        u = g.random_node_of_degree(2, self.rng)
        rec = self.contract_at(u)
        self.counters.o2 += 1
        return rec

    def contract_at(self, u: int) -> ContractionRecord:
        g = self.g
        v1, v2 = sorted(g.adj[u])
        if self.rng.below(2):
            v1, v2 = v2, v1
        idx = self.index
        if idx is None:
            _, rec = g.contract_triple(u, v1, v2)
        else:
            both = g.adj[v1] & g.adj[v2]
            _, rec = g.contract_triple(u, v1, v2)
            for x in (u, v1, v2):
                idx.drop(x)
            # neighbors of the merged node changed their neighbor sets; common
            # neighbors of v1 and v2 also lost a degree, which their own
            # neighbors see
            stale = {rec.merged} | rec.n1 | rec.n2
            for a in both:
                if a != u and g.alive[a]:
                    stale.update(g.adj[a])
            idx.refresh(stale)
        self.log.append(Contract(rec))
        return rec

    def heuristic_step(self) -> None:
        heu = self.spec.heu
        if heu == RAND:
            u, v = select_rand(self.g, self.rng)
        elif heu == DEGDEG:
            u, v = select_degdeg(self.g, self.rng)
        else:
            u, v = select_potdeg(self.g, self.index, self.rng)
        self._match(u, v)
        self.counters.h += 1

    def step(self) -> bool:
        """Apply one reduction or heuristic step; False once no edge is left."""
        d = self.g.min_positive_degree()
        if d is None:
            return False
        if d == 1:
            self.degree1_step()
        elif d == 2 and self.spec.opt == OPT12:
            self.degree2_step()
        else:
            self.heuristic_step()
        return True

    def forward(self) -> None:
        step = self.step
        while step():
            pass

    def matching(self) -> Matching:
        return unwind(self.log, self.g.n)


def unwind(log: list[Action], n: int | None = None) -> Matching:
    """Replay ``log`` backwards into a matching of the original graph."""
    mate: dict[int, int] = {}
    for action in reversed(log):
        if type(action) is MatchEdge:
            mate[action.u] = action.v
            mate[action.v] = action.u
            continue
        rec = action.record
        w = mate.pop(rec.merged, None)
        if w is None:
            mate[rec.u] = rec.v1
            mate[rec.v1] = rec.u
            continue
        if w in rec.n1:
            near, far = rec.v1, rec.v2
        elif w in rec.n2:
            near, far = rec.v2, rec.v1
        else:
            raise UnwindError(f"partner {w} of contracted node {rec.merged} was never its neighbor")
        mate[w] = near
        mate[near] = w
        mate[rec.u] = far
        mate[far] = rec.u
    pairs = [(a, b) for a, b in mate.items() if a < b]
    if n is not None and any(b >= n for _, b in pairs):
        raise UnwindError("unresolved contracted node left in the matching")
    return Matching.of(pairs)


def run(g: DynamicGraph, spec: AlgorithmSpec | str, rng: SeededRng | int) -> tuple[Matching, StepCounters]:
    """Run one greedy algorithm on ``g`` (consumed) and return its matching."""
    if isinstance(spec, str):
        spec = parse_algorithm(spec)
    if not isinstance(rng, SeededRng):
        rng = SeededRng(rng)
    m = Matcher(g, spec, rng)
    m.forward()
    return m.matching(), m.counters
