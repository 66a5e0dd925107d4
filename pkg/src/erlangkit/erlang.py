"""Exact M/M/1, M/M/m/m and M/M/m metrics.

Erlang B is evaluated either by the standard recurrence or as a ratio of
Poisson pmf and cdf. Erlang C is evaluated from its canonical form, with the
factorial terms rescaled by ``exp(-a)`` so that they become Poisson
probabilities. The ansatz ``phi_b`` builds the same quantity from Erlang B
alone, which gives two independent routes to the waiting probability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class InvalidArgumentError(ValueError):
    """Raised for arguments outside the domain of an operation."""


class UnstableQueueError(ValueError):
    """Raised when a delay-queue metric is requested with ``a >= m``."""

    def __init__(self, m: int, a: float) -> None:
        super().__init__(f"unstable: a >= m (m={m}, a={a:g})")
        self.m = m
        self.a = a


def _check_servers(m) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidArgumentError(f"server count must be an integer >= 1, got {m!r}")


def _check_traffic(a: float) -> None:
    if not a >= 0 or math.isinf(a):
        raise InvalidArgumentError(f"traffic intensity must be finite and >= 0, got {a!r}")


def _check_stable(m: int, a: float) -> None:
    _check_servers(m)
    _check_traffic(a)
    if a >= m:
        raise UnstableQueueError(m, a)


@dataclass(frozen=True)
class QueueSpec:
    """An M/M/m operating point.

    Parameters
    ----------
    m : int
        Number of servers.
    lam : float
        Mean arrival rate.
    s : float
        Mean service time.
    """

    m: int
    lam: float
    s: float = 1.0

    def __post_init__(self) -> None:
        _check_servers(self.m)
        if not self.lam >= 0 or math.isinf(self.lam):
            raise InvalidArgumentError(f"arrival rate must be finite and >= 0, got {self.lam!r}")
        if not self.s > 0 or math.isinf(self.s):
            raise InvalidArgumentError(f"service time must be finite and > 0, got {self.s!r}")

    @classmethod
    def from_traffic(cls, m: int, a: float, s: float = 1.0) -> "QueueSpec":
        """Build a spec from traffic intensity ``a`` instead of arrival rate."""
        _check_traffic(a)
        if not s > 0:
            raise InvalidArgumentError(f"service time must be > 0, got {s!r}")
        return cls(m=m, lam=a / s, s=s)

    @property
    def a(self) -> float:
        """Offered traffic in erlangs."""
        return self.lam * self.s

    @property
    def rho(self) -> float:
        """Per-server utilization of the delay queue."""
        return self.a / self.m

    @property
    def stable(self) -> bool:
        return self.rho < 1


@dataclass(frozen=True)
class ExactMetrics:
    b: float
    c: float
    phi_b: float
    w: float
    r: float
    q: float
    rho_loss: float


@dataclass(frozen=True)
class FastServerView:
    """Waiting time seen as a fraction of an m-times faster M/M/1."""

    r1_fast: float
    phi_b: float

    @property
    def w(self) -> float:
        return self.r1_fast * self.phi_b


# -- Poisson helpers ---------------------------------------------------------

def _log_poisson_pmf(k: int, a: float) -> float:
    return k * math.log(a) - a - math.lgamma(k + 1)


def poisson_pmf(k: int, a: float) -> float:
    """Poisson probability ``exp(-a) a**k / k!``, evaluated in log space."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise InvalidArgumentError(f"k must be an integer >= 0, got {k!r}")
    _check_traffic(a)
    if a == 0:
        return 1.0 if k == 0 else 0.0
    return math.exp(_log_poisson_pmf(k, a))


def poisson_cdf(k: int, a: float) -> float:
    """Poisson cumulative probability ``P(X <= k)``."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise InvalidArgumentError(f"k must be an integer >= 0, got {k!r}")
    _check_traffic(a)
    if a == 0:
        return 1.0
    return min(1.0, math.fsum(math.exp(_log_poisson_pmf(j, a)) for j in range(k + 1)))


# -- Erlang B ----------------------------------------------------------------

def erlang_b_recurrence(m: int, a: float) -> float:
    """Erlang B blocking probability by the forward recurrence.

    Starts from ``B(1, a) = a / (1 + a)`` and applies
    ``B(k, a) = a B(k-1, a) / (a B(k-1, a) + k)`` for ``k = 2..m``.
    """
    _check_servers(m)
    _check_traffic(a)
    eb = a / (1 + a)
    for k in range(2, m + 1):
        eb = eb * a / (a * eb + k)
    return eb


def erlang_b_poisson(m: int, a: float) -> float:
    """Erlang B blocking probability as ``pmf(m, a) / cdf(m, a)``."""
    _check_servers(m)
    _check_traffic(a)
    if a == 0:
        return 0.0
    return poisson_pmf(m, a) / poisson_cdf(m, a)


erlang_b = erlang_b_recurrence


# -- Erlang C and the ansatz -------------------------------------------------

def erlang_c(m: int, a: float) -> float:
    """Erlang C probability that an arrival has to wait.

    Uses ``A_m / ((1 - rho) S + A_m)`` where ``A_m = a**m / m!`` and
    ``S = sum_{k<m} a**k / k!``, both scaled by ``exp(-a)`` so they are
    Poisson probabilities and never overflow.
    """
    _check_stable(m, a)
    if a == 0:
        return 0.0
    rho = a / m
    top = poisson_pmf(m, a)
    below = poisson_cdf(m - 1, a)
    return top / ((1 - rho) * below + top)


def phi_b(m: int, a: float) -> float:
    """Ansatz ``B / (1 - (1 - B) rho)`` mapping Erlang B onto Erlang C."""
    _check_stable(m, a)
    rho = a / m
    b = erlang_b_recurrence(m, a)
    return b / (1 - (1 - b) * rho)


def utilization_loss(m: int, a: float) -> float:
    """Per-server utilization ``(1 - B) a / m`` of the M/M/m/m loss system.

    Unlike the delay queue, ``a`` may exceed ``m`` here.
    """
    _check_servers(m)
    _check_traffic(a)
    return (1 - erlang_b_recurrence(m, a)) * a / m


def utilization_delay(m: int, a: float) -> float:
    """Per-server utilization ``a / m`` of the stable M/M/m queue."""
    _check_stable(m, a)
    return a / m


# -- times -------------------------------------------------------------------

def fast_residence_time(spec: QueueSpec) -> float:
    """Residence time ``(S/m) / (1 - rho)`` of an m-times faster M/M/1."""
    _check_stable(spec.m, spec.a)
    return (spec.s / spec.m) / (1 - spec.rho)


def fast_server_view(spec: QueueSpec) -> FastServerView:
    return FastServerView(r1_fast=fast_residence_time(spec), phi_b=phi_b(spec.m, spec.a))


def waiting_time(spec: QueueSpec) -> float:
    """Mean M/M/m waiting time, ``R1_fast * phi_b``."""
    return fast_residence_time(spec) * phi_b(spec.m, spec.a)


def residence_time(spec: QueueSpec) -> float:
    """Mean M/M/m residence time ``S + W``."""
    return spec.s + waiting_time(spec)


def mm1_residence_time(rho: float, s: float = 1.0) -> float:
    """Canonical M/M/1 residence time ``S / (1 - rho)``."""
    _check_stable(1, rho)
    return s / (1 - rho)


def metrics(spec: QueueSpec) -> ExactMetrics:
    """All exact metrics for one stable operating point."""
    m, a = spec.m, spec.a
    _check_stable(m, a)
    w = waiting_time(spec)
    r = spec.s + w
    return ExactMetrics(
        b=erlang_b_recurrence(m, a),
        c=erlang_c(m, a),
        phi_b=phi_b(m, a),
        w=w,
        r=r,
        q=spec.lam * r,
        rho_loss=utilization_loss(m, a),
    )
