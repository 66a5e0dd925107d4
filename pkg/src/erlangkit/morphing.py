"""Morphing approximation to the M/M/m residence time and its exact correction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .erlang import InvalidArgumentError, QueueSpec, UnstableQueueError, residence_time


class DeflationDomainError(ValueError):
    """The deflated correction polynomial vanished at the requested utilization."""


# Integer correction polynomials for m = 1..8, ascending degree (c_0 .. c_m).
_TABLE = {
    1: (1, -1),
    2: (1, 0, -1),
    3: (-2, -2, 1, 3),
    4: (-3, -6, -3, 4, 8),
    5: (-24, -72, -84, -20, 75, 125),
    6: (5, 20, 35, 30, 0, -36, -54),
    7: (-720, -3600, -8280, -10920, -7350, 2058, 12005, 16807),
    8: (-315, -1890, -5355, -9240, -10080, -5376, 3584, 12288, 16384),
}

MAX_CORRECTION_ORDER = max(_TABLE)


def horner(coeffs: Sequence, x):
    """Evaluate an ascending-degree polynomial at ``x`` (real or complex)."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class CorrectionPolynomial:
    m: int
    coeffs: tuple[int, ...]

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def deflated_coeffs(self) -> tuple[int, ...]:
        # Deflation drops the degree-m term: P_{m-1} = P_m - c_m rho^m.
        return self.coeffs[:-1]

    def __call__(self, x):
        return horner(self.coeffs, x)

    def deflated(self, x):
        return horner(self.deflated_coeffs, x)


def correction_polynomial(m: int) -> CorrectionPolynomial:
    """Tabulated correction polynomial of order ``m`` (1 <= m <= 8)."""
    if m not in _TABLE:
        raise InvalidArgumentError(
            f"correction polynomials are tabulated for m = 1..{MAX_CORRECTION_ORDER} only, got {m!r}"
        )
    return CorrectionPolynomial(m=m, coeffs=_TABLE[m])


def correction_polynomials() -> list[CorrectionPolynomial]:
    return [correction_polynomial(m) for m in sorted(_TABLE)]


@dataclass(frozen=True)
class MorphMetrics:
    r_morph: float
    r_exact: float
    r_corrected: float
    rel_error: float
    bound: float


def _check(m: int, rho: float, s: float) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidArgumentError(f"server count must be an integer >= 1, got {m!r}")
    if not rho >= 0:
        raise InvalidArgumentError(f"utilization must be >= 0, got {rho!r}")
    if not s > 0:
        raise InvalidArgumentError(f"service time must be > 0, got {s!r}")
    if rho >= 1:
        raise UnstableQueueError(m, m * rho)


def morphing_residence(m: int, rho: float, s: float = 1.0) -> float:
    """Morphing residence time ``S / (1 - rho**m)``.

    Exact for m = 1 and m = 2, an underestimate beyond that.
    """
    _check(m, rho, s)
    return s / (1 - rho**m)


def morphing_error_bound(m: int) -> float:
    """Upper bound ``ln(m**0.25) / (1 + ln m)`` on the morphing relative error."""
    if isinstance(m, bool) or not isinstance(m, (int, float)) or m < 1:
        raise InvalidArgumentError(f"m must be >= 1, got {m!r}")
    lm = math.log(m)
    return lm / (4 * (1 + lm))


def corrected_residence(
    m: int, rho: float, s: float = 1.0, poly: CorrectionPolynomial | None = None
) -> float:
    """Residence time ``S / (1 - |c_m / P_{m-1}(rho)| rho**m)``.

    With the tabulated polynomials this reproduces the exact M/M/m value.
    """
    _check(m, rho, s)
    if poly is None:
        poly = correction_polynomial(m)
    elif poly.m != m:
        raise InvalidArgumentError(f"polynomial order {poly.m} does not match m={m}")
    d = poly.deflated(rho)
    if d == 0:
        raise DeflationDomainError(f"deflated polynomial of order {m} vanishes at rho={rho!r}")
    return s / (1 - abs(poly.leading / d) * rho**m)


def morph_metrics(m: int, rho: float, s: float = 1.0) -> MorphMetrics:
    """Morphing value, exact value and their relative error at one point.

    ``r_corrected`` is NaN when ``m`` is beyond the tabulated polynomials.
    """
    _check(m, rho, s)
    r_morph = morphing_residence(m, rho, s)
    r_exact = residence_time(QueueSpec.from_traffic(m, m * rho, s))
    r_corr = corrected_residence(m, rho, s) if m in _TABLE else math.nan
    return MorphMetrics(
        r_morph=r_morph,
        r_exact=r_exact,
        r_corrected=r_corr,
        rel_error=abs(r_morph - r_exact) / r_exact,
        bound=morphing_error_bound(m),
    )
