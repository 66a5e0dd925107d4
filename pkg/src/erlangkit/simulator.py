"""Discrete-event simulation of M/M/m (FIFO) and M/M/m/m (loss) systems.

Customers are generated in arrival order and matched against a departure
heap holding ``(end_time, server)`` for busy servers. Idle servers sit in a
second heap keyed by index so that the lowest-index idle server is always
chosen. Processing customers in arrival order against the earliest departure
is exactly FIFO service for a multi-server queue.

Each replication draws from its own stream spawned from one
``numpy.random.SeedSequence``, so results depend only on the seed.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from .erlang import InvalidArgumentError, QueueSpec, UnstableQueueError

Z95 = 1.959963984540054

DISCIPLINES = ("fifo", "loss")


@dataclass(frozen=True)
class SimConfig:
    spec: QueueSpec
    discipline: str = "fifo"
    n_customers: int = 100_000
    n_reps: int = 10
    warmup: int | None = None
    seed: int = 20170101

    def __post_init__(self) -> None:
        if self.discipline not in DISCIPLINES:
            raise InvalidArgumentError(f"discipline must be one of {DISCIPLINES}, got {self.discipline!r}")
        if self.n_customers < 1000:
            raise InvalidArgumentError("n_customers must be >= 1000")
        if self.n_reps < 5:
            raise InvalidArgumentError("n_reps must be >= 5")
        if self.warmup is None:
            object.__setattr__(self, "warmup", self.n_customers // 10)
        if not 0 <= self.warmup < self.n_customers:
            raise InvalidArgumentError("warmup must satisfy 0 <= warmup < n_customers")
        if not 0 <= self.seed < 2**64:
            raise InvalidArgumentError("seed must be a 64-bit unsigned integer")
        if self.discipline == "fifo" and not self.spec.stable:
            raise UnstableQueueError(self.spec.m, self.spec.a)


@dataclass(frozen=True)
class RepResult:
    mean_w: float
    mean_r: float
    mean_s: float
    loss_frac: float
    utilization: float
    all_busy_frac: float


@dataclass(frozen=True)
class SimEstimate:
    mean_w: float
    mean_r: float
    loss_frac: float
    ci_half_width: float
    reps: int
    mean_s: float = 0.0
    loss_se: float = 0.0
    utilization: float = 0.0
    utilization_ci: float = 0.0
    all_busy_frac: float = 0.0
    all_busy_ci: float = 0.0
    replications: tuple[RepResult, ...] = field(default=(), repr=False)

    def contains_w(self, value: float) -> bool:
        return abs(self.mean_w - value) <= self.ci_half_width


def _run_one(m: int, lam: float, s: float, loss: bool, n: int, warmup: int,
             rng: np.random.Generator) -> RepResult:
    arrivals = np.cumsum(rng.exponential(1.0 / lam, n)).tolist()
    services = rng.exponential(s, n).tolist()

    busy: list[tuple[float, int]] = []
    idle = list(range(m))
    push, pop, replace = heapq.heappush, heapq.heappop, heapq.heapreplace

    t0 = arrivals[warmup]
    t_end = arrivals[-1]
    sum_w = 0.0
    sum_s = 0.0
    served = 0
    lost = 0
    all_busy = 0.0

    for i in range(n):
        t = arrivals[i]
        svc = services[i]
        while busy and busy[0][0] <= t:
            push(idle, pop(busy)[1])
        counted = i >= warmup
        if idle:
            push(busy, (t + svc, pop(idle)))
            if counted:
                served += 1
                sum_s += svc
                if loss and not idle:
                    all_busy += min(busy[0][0], t_end) - t
        elif loss:
            if counted:
                lost += 1
        else:
            start, k = busy[0]
            replace(busy, (start + svc, k))
            if counted:
                served += 1
                sum_s += svc
                sum_w += start - t

    span = t_end - t0
    mean_w = sum_w / served if served else 0.0
    mean_s = sum_s / served if served else 0.0
    return RepResult(
        mean_w=mean_w,
        mean_r=mean_w + mean_s,
        mean_s=mean_s,
        loss_frac=lost / (n - warmup),
        utilization=sum_s / (m * span) if span > 0 else 0.0,
        all_busy_frac=all_busy / span if span > 0 else 0.0,
    )


def _half_width(x: np.ndarray) -> float:
    return Z95 * float(np.std(x, ddof=1)) / math.sqrt(len(x))


def simulate(config: SimConfig) -> SimEstimate:
    """Run independent replications and summarize them.

    In FIFO mode ``mean_w`` and ``mean_r`` estimate the M/M/m waiting and
    residence times. In loss mode ``loss_frac`` estimates Erlang B and
    nobody waits. Confidence half-widths use the normal approximation
    across replications.
    """
    spec = config.spec
    loss = config.discipline == "loss"
    if spec.lam == 0:
        zero = RepResult(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
        return SimEstimate(0.0, 0.0, 0.0, 0.0, config.n_reps,
                           replications=(zero,) * config.n_reps)

    streams = np.random.SeedSequence(config.seed).spawn(config.n_reps)
    reps = tuple(
        _run_one(spec.m, spec.lam, spec.s, loss, config.n_customers, config.warmup,
                 np.random.default_rng(ss))
        for ss in streams
    )
    w = np.array([r.mean_w for r in reps])
    lf = np.array([r.loss_frac for r in reps])
    util = np.array([r.utilization for r in reps])
    busy = np.array([r.all_busy_frac for r in reps])
    return SimEstimate(
        mean_w=float(w.mean()),
        mean_r=float(np.mean([r.mean_r for r in reps])),
        loss_frac=float(lf.mean()),
        ci_half_width=_half_width(w),
        reps=len(reps),
        mean_s=float(np.mean([r.mean_s for r in reps])),
        loss_se=float(np.std(lf, ddof=1)) / math.sqrt(len(reps)),
        utilization=float(util.mean()),
        utilization_ci=_half_width(util),
        all_busy_frac=float(busy.mean()),
        all_busy_ci=_half_width(busy),
        replications=reps,
    )


class UtilizationPoint(NamedTuple):
    a: float
    utilization: float
    ci_half_width: float


def utilization_sweep_empirical(
    m: int,
    a_values: Iterable[float],
    discipline: str = "loss",
    s: float = 1.0,
    n_customers: int = 20_000,
    n_reps: int = 5,
    seed: int = 20170101,
) -> list[UtilizationPoint]:
    """Measured per-server utilization for each offered load in ``a_values``."""
    a_values = list(a_values)
    if not a_values:
        raise InvalidArgumentError("a_values must be non-empty")
    out = []
    for a in a_values:
        cfg = SimConfig(QueueSpec.from_traffic(m, a, s), discipline, n_customers, n_reps, seed=seed)
        est = simulate(cfg)
        out.append(UtilizationPoint(a, est.utilization, est.utilization_ci))
    return out
