"""Complex zeros of the morphing and corrected denominators, and the Szego curve."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .erlang import InvalidArgumentError
from .morphing import CorrectionPolynomial, correction_polynomial, horner


class RootConvergenceError(RuntimeError):
    def __init__(self, m: int, residual: float) -> None:
        super().__init__(f"root polishing failed for order {m}: residual {residual:.3g}")
        self.m = m


@dataclass(frozen=True)
class RootLocus:
    m: int
    kind: str  # "morphing" or "corrected"
    roots: np.ndarray
    max_residual: float
    scaled_residual: float

    def interior(self) -> np.ndarray:
        """Roots other than the saturation point ``z = 1``."""
        return self.roots[self.roots != 1]


@dataclass(frozen=True)
class SzegoCurve:
    points: np.ndarray


def morphing_roots(m: int) -> RootLocus:
    """Zeros of ``1 - z**m``: the m-th roots of unity."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidArgumentError(f"m must be an integer >= 1, got {m!r}")
    theta = 2 * np.pi * np.arange(m) / m
    re, im = np.cos(theta), np.sin(theta)
    # exact zeros on the axes, so e.g. m=4 yields {1, i, -1, -i}
    re[np.abs(re) < 1e-15] = 0.0
    im[np.abs(im) < 1e-15] = 0.0
    roots = re + 1j * im
    res = np.abs(1 - roots**m)
    return RootLocus(m, "morphing", roots, float(res.max()), float(res.max() / 2))


def _polish(coeffs: np.ndarray, z: np.ndarray, iters: int = 8) -> np.ndarray:
    d = npoly.polyder(coeffs)
    for _ in range(iters):
        p = npoly.polyval(z, coeffs)
        dp = npoly.polyval(z, d)
        step = np.where(dp != 0, p / np.where(dp != 0, dp, 1), 0)
        z = z - step
        if np.all(np.abs(step) <= 1e-16 * np.maximum(1, np.abs(z))):
            break
    return z


def _pair_conjugates(z: np.ndarray) -> np.ndarray:
    # real coefficients: snap near-real roots onto the axis and pair the rest
    z = z.copy()
    near_real = np.abs(z.imag) < 1e-12 * np.maximum(1, np.abs(z))
    z[near_real] = z[near_real].real
    upper = z[z.imag > 0]
    return np.concatenate([z[near_real].real.astype(complex), upper, upper.conj()])


def corrected_roots(poly: CorrectionPolynomial | int) -> RootLocus:
    """All ``m`` zeros of a tabulated correction polynomial.

    Every tabulated polynomial vanishes at ``z = 1`` (its integer coefficients
    sum to zero). That factor is divided out exactly before the remaining
    zeros are found from the companion matrix and Newton-polished.
    """
    if not isinstance(poly, CorrectionPolynomial):
        poly = correction_polynomial(poly)
    c = np.array(poly.coeffs, dtype=float)
    m = poly.m
    if sum(poly.coeffs) == 0:
        # synthetic division by (z - 1), exact in integers
        q = [0] * m
        acc = 0
        for i in range(m, 0, -1):
            acc = acc + poly.coeffs[i]
            q[i - 1] = acc
        rest = np.array(q, dtype=float)
        found = npoly.polyroots(rest) if m > 1 else np.array([], dtype=complex)
        found = _polish(rest, found.astype(complex))
        roots = np.concatenate([[1.0 + 0j], _pair_conjugates(found)])
    else:
        found = _polish(c, npoly.polyroots(c).astype(complex))
        roots = _pair_conjugates(found)
    roots = roots[np.lexsort((roots.imag, -np.abs(roots)))]
    res = np.abs(np.array([horner(poly.coeffs, complex(z)) for z in roots]))
    max_res = float(res.max())
    scaled = max_res / (1 + np.abs(c).sum())
    if len(roots) != m or not scaled <= 1e-10:
        raise RootConvergenceError(m, scaled)
    return RootLocus(m, "corrected", roots, max_res, scaled)


def szego_curve(n_points: int = 256) -> SzegoCurve:
    """Sample the closed curve ``|z exp(1 - z)| = 1`` inside the unit disk.

    For each angle the radius solves ``ln r + 1 - r cos(theta) = 0`` on
    (0, 1]; the left side is increasing in ``r`` there, so bisection is exact
    to rounding. Samples start at ``z = 1`` and go counter-clockwise.
    """
    if isinstance(n_points, bool) or not isinstance(n_points, int) or n_points < 16:
        raise InvalidArgumentError(f"n_points must be an integer >= 16, got {n_points!r}")
    theta = 2 * np.pi * np.arange(n_points) / n_points
    cos_t = np.cos(theta)
    lo = np.full(n_points, 1e-300)
    hi = np.ones(n_points)
    for _ in range(1100):
        mid = 0.5 * (lo + hi)
        f = np.log(mid) + 1 - mid * cos_t
        neg = f < 0
        lo = np.where(neg, mid, lo)
        hi = np.where(neg, hi, mid)
        if np.all(hi - lo <= 1e-16 * hi):
            break
    r = hi
    r[0] = 1.0
    return SzegoCurve(points=r * np.exp(1j * theta))


def szego_residual(z) -> np.ndarray:
    """``| |z exp(1 - z)| - 1 |`` for each sample."""
    z = np.asarray(z, dtype=complex)
    return np.abs(np.abs(z * np.exp(1 - z)) - 1)
