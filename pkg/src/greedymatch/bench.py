"""Sweep harness: failure rate, lost edges, running time and step fractions."""

from __future__ import annotations

import csv
import logging
import math
import re
import time
from dataclasses import dataclass, field, fields
from typing import Callable, Iterable, Optional, Sequence

from . import exact
from .generators import DIRECT_MAX_NODES, GraphFamily, generate
from .matcher import ALGORITHM_NAMES, ALGORITHMS, AlgorithmSpec, parse_algorithm, run
from .rng import MASK32, SeededRng, derive_seed

log = logging.getLogger(__name__)

ORACLE_MAX_NODES = 100_000


class ConfigError(ValueError):
    pass


def c_grid(start: float = 1.0, stop: float = 10.0, step: float = 0.1) -> list[float]:
    """``start + i*step`` up to ``stop`` inclusive, rounded to kill float noise."""
    if step <= 0:
        raise ConfigError("c step must be positive")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(max(count, 0))]


@dataclass
class ExperimentConfig:
    family: str = "general"
    n: int = 10_000
    c_values: Sequence[float] = field(default_factory=c_grid)
    algorithms: Sequence[AlgorithmSpec] = ALGORITHMS
    trials: int = 100
    master_seed: int = 1
    oracle: bool = True
    force_oracle: bool = False
    oracle_max_nodes: int = ORACLE_MAX_NODES
    method: Optional[str] = None
    direct_max_nodes: int = DIRECT_MAX_NODES

    def validate(self) -> None:
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if not self.c_values or any(not c > 0 for c in self.c_values):
            raise ConfigError("c values must be positive and non-empty")
        if not self.algorithms:
            raise ConfigError("no algorithm selected")
        if self.oracle and self.n > self.oracle_max_nodes and not self.force_oracle:
            raise ConfigError(
                f"exact oracle refused for n={self.n} > {self.oracle_max_nodes}; "
                "pass --force-oracle to override"
            )
        GraphFamily(self.family, self.n, self.c_values[0])


@dataclass
class TrialRecord:
    family: str
    n: int
    c: float
    algorithm: str
    trial_index: int
    seed: int
    m_edges: int
    matching_size: int
    oracle_size: Optional[int]
    o1: int
    o2: int
    h: int
    wall_time_seconds: float


@dataclass
class AggregateRecord:
    family: str
    n: int
    c: float
    algorithm: str
    lambda_: float
    rho: float
    t_bar: float
    t_var: float
    f_o1: float
    f_o2: float
    f_h: float


def graph_seed(master: int, trial: int, c_index: int) -> int:
    return (master + trial * 1_000_003 + derive_seed(c_index)) & MASK32


def algorithm_seed(gseed: int, alg: AlgorithmSpec) -> int:
    return derive_seed(gseed, ALGORITHM_NAMES.index(alg.name) + 1)


def run_sweep(cfg: ExperimentConfig, on_record: Callable[[TrialRecord], None] | None = None) -> list[TrialRecord]:
    cfg.validate()
    records: list[TrialRecord] = []
    for ci, c in enumerate(cfg.c_values):
        fam = GraphFamily(cfg.family, cfg.n, c)
        for t in range(cfg.trials):
            gseed = graph_seed(cfg.master_seed, t, ci)
            g = generate(fam, SeededRng(gseed), cfg.method, cfg.direct_max_nodes)
            oracle_size = None
            if cfg.oracle:
                oracle_size = exact.maximum_matching_size(g, fam.left_size)
            for alg in cfg.algorithms:
                work = g.copy()
                rng = SeededRng(algorithm_seed(gseed, alg))
                t0 = time.perf_counter()
                matching, steps = run(work, alg, rng)
                elapsed = time.perf_counter() - t0
                rec = TrialRecord(
                    cfg.family, cfg.n, c, alg.name, t, gseed, g.m, len(matching),
                    oracle_size, steps.o1, steps.o2, steps.h, elapsed,
                )
                records.append(rec)
                if on_record is not None:
                    on_record(rec)
        log.info("%s n=%d c=%g: %d trials done", cfg.family, cfg.n, c, cfg.trials)
    return records


def _group_key(rec) -> tuple:
    alg = rec.algorithm
    order = ALGORITHM_NAMES.index(alg) if alg in ALGORITHM_NAMES else len(ALGORITHM_NAMES)
    return (rec.family, rec.n, rec.c, order, alg)


def aggregate(records: Iterable[TrialRecord], require_oracle: bool = True) -> list[AggregateRecord]:
    groups: dict[tuple, list[TrialRecord]] = {}
    for rec in records:
        groups.setdefault(_group_key(rec), []).append(rec)
    if not groups:
        raise ConfigError("no trial records to aggregate")
    out = []
    for key in sorted(groups):
        rows = groups[key]
        family, n, c, _, alg = key
        if any(r.oracle_size is None for r in rows):
            if require_oracle:
                raise ConfigError(f"missing oracle sizes for {family} n={n} c={c} {alg}")
            lam = rho = math.nan
        else:
            lost = [r.oracle_size - r.matching_size for r in rows]
            failures = [x for x in lost if x > 0]
            lam = len(failures) / len(rows)
            rho = sum(failures) / len(failures) if failures else 0.0
        times = [r.wall_time_seconds for r in rows]
        t_bar = sum(times) / len(times)
        t_var = sum((x - t_bar) ** 2 for x in times) / (len(times) - 1) if len(times) > 1 else 0.0
        fracs = []
        for r in rows:
            total = r.o1 + r.o2 + r.h
            if total:
                fracs.append((r.o1 / total, r.o2 / total, r.h / total))
        if fracs:
            f_o1, f_o2, f_h = (sum(col) / len(fracs) for col in zip(*fracs))
        else:
            f_o1 = f_o2 = f_h = 0.0
        out.append(AggregateRecord(family, n, c, alg, lam, rho, t_bar, t_var, f_o1, f_o2, f_h))
    return out


# -- CSV -------------------------------------------------------------------------


def _columns(cls) -> list[str]:
    return [f.name.rstrip("_") for f in fields(cls)]


TRIAL_COLUMNS = _columns(TrialRecord)
AGGREGATE_COLUMNS = _columns(AggregateRecord)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def write_csv(rows: Sequence, path, kind: type | None = None) -> None:
    """Write trial or aggregate records; ``kind`` picks the header for empty input."""
    kind = kind or (type(rows[0]) if rows else TrialRecord)
    names = [f.name for f in fields(kind)]
    try:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(_columns(kind))
            for r in rows:
                w.writerow([_fmt(getattr(r, k)) for k in names])
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def read_trials_csv(path) -> list[TrialRecord]:
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames != TRIAL_COLUMNS:
                raise ConfigError(f"{path}: unexpected header {reader.fieldnames}")
            out = []
            for row in reader:
                out.append(TrialRecord(
                    family=row["family"],
                    n=int(row["n"]),
                    c=float(row["c"]),
                    algorithm=row["algorithm"],
                    trial_index=int(row["trial_index"]),
                    seed=int(row["seed"]),
                    m_edges=int(row["m_edges"]),
                    matching_size=int(row["matching_size"]),
                    oracle_size=int(row["oracle_size"]) if row["oracle_size"] else None,
                    o1=int(row["o1"]),
                    o2=int(row["o2"]),
                    h=int(row["h"]),
                    wall_time_seconds=float(row["wall_time_seconds"]),
                ))
            return out
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc}") from exc


def parse_algorithms(text: str) -> list[AlgorithmSpec]:
    if text.strip() == "all":
        return list(ALGORITHMS)
    # labels such as OPT(1,2):HEU(deg,deg) contain commas, so split only at depth 0
    parts = re.split(r",(?![^()]*\))", text)
    return [parse_algorithm(t.strip()) for t in parts if t.strip()]
