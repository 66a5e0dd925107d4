import math

import pytest

from erlangkit.erlang import InvalidArgumentError, QueueSpec, UnstableQueueError, residence_time
from erlangkit.morphing import (
    corrected_residence,
    correction_polynomial,
    correction_polynomials,
    horner,
    morph_metrics,
    morphing_error_bound,
    morphing_residence,
)

from conftest import RHO_GRID, TABLE3

# Correction polynomials transcribed term by term, descending degree.
TABLE1_DESCENDING = {
    1: [-1, 1],
    2: [-1, 0, 1],
    3: [3, 1, -2, -2],
    4: [8, 4, -3, -6, -3],
    5: [125, 75, -20, -84, -72, -24],
    6: [-54, -36, 0, 30, 35, 20, 5],
    7: [16807, 12005, 2058, -7350, -10920, -8280, -3600, -720],
    8: [16384, 12288, 3584, -5376, -10080, -9240, -5355, -1890, -315],
}

CORRECTION_GRID = [k / 100 for k in range(5, 96)]


def exact_r(m, rho, s=1.0):
    return residence_time(QueueSpec.from_traffic(m, m * rho, s))


def test_table_coefficients_verbatim():
    for m, desc in TABLE1_DESCENDING.items():
        poly = correction_polynomial(m)
        assert poly.m == m
        assert list(poly.coeffs) == desc[::-1]
        assert len(poly.deflated_coeffs) == m
        assert poly.deflated_coeffs == poly.coeffs[:-1]
    assert [p.m for p in correction_polynomials()] == list(range(1, 9))


def test_deflated_p3():
    p3 = correction_polynomial(3)
    assert p3.deflated(0.75) == pytest.approx(0.75**2 - 2 * 0.75 - 2)
    assert abs(p3.deflated(0.75)) == pytest.approx(2.9375)


def test_correction_polynomial_out_of_range():
    for m in (0, 9, 256):
        with pytest.raises(InvalidArgumentError):
            correction_polynomial(m)


def test_horner_matches_power_sum():
    c = correction_polynomial(8).coeffs
    for x in (0.3, -0.7, 0.5 + 0.2j):
        assert horner(c, x) == pytest.approx(sum(ci * x**i for i, ci in enumerate(c)), rel=1e-12)


@pytest.mark.parametrize("row", TABLE3, ids=lambda r: f"m{r[0]}")
def test_morphing_residence_table(row):
    m, a, *_, r_morph = row
    assert morphing_residence(m, a / m) == pytest.approx(r_morph, abs=5e-7)


def test_morphing_reduces_to_mm1():
    for rho in (0.1, 0.5, 0.9):
        assert morphing_residence(1, rho, 2.0) == pytest.approx(2.0 / (1 - rho))


def test_morphing_validation():
    with pytest.raises(UnstableQueueError):
        morphing_residence(2, 1.0)
    with pytest.raises(InvalidArgumentError):
        morphing_residence(0, 0.5)
    with pytest.raises(InvalidArgumentError):
        morphing_residence(2, 0.5, 0.0)


def test_error_bound_values():
    assert morphing_error_bound(1) == 0
    assert morphing_error_bound(16) == pytest.approx(math.log(16) / (4 * (1 + math.log(16))), rel=1e-15)
    assert morphing_error_bound(16) == pytest.approx(0.18374, abs=1e-5)
    # slow approach to the 25% ceiling: 0.2385 at 1e9, past 0.24 only beyond ~2.6e10
    assert morphing_error_bound(10**9) == pytest.approx(math.log(1e9) / (4 * (1 + math.log(1e9))), rel=1e-15)
    assert 0.238 < morphing_error_bound(10**9) < 0.25
    assert 0.24 < morphing_error_bound(10**12) < 0.25
    assert morphing_error_bound(16) == pytest.approx(math.log(16**0.25) / (1 + math.log(16)), rel=1e-14)
    bounds = [morphing_error_bound(m) for m in range(1, 200)]
    assert all(x < y for x, y in zip(bounds, bounds[1:]))
    with pytest.raises(InvalidArgumentError):
        morphing_error_bound(0)


def test_corrected_examples():
    assert corrected_residence(3, 0.75, 1.0, correction_polynomial(3)) == pytest.approx(1.757009, abs=5e-7)
    # hand evaluation: 1 / (1 - 3 * 0.75**3 / 2.9375)
    assert corrected_residence(3, 0.75) == pytest.approx(1 / (1 - 3 * 0.75**3 / 2.9375), rel=1e-15)
    assert corrected_residence(2, 0.75) == pytest.approx(1 / (1 - 0.75**2), rel=1e-15)
    assert corrected_residence(1, 0.5) == pytest.approx(2.0, rel=1e-15)


def test_corrected_validation():
    with pytest.raises(InvalidArgumentError):
        corrected_residence(9, 0.5)
    with pytest.raises(InvalidArgumentError):
        corrected_residence(3, 0.5, 1.0, correction_polynomial(4))


@pytest.mark.parametrize("m", range(1, 9))
def test_corrected_matches_exact(m):
    for rho in CORRECTION_GRID:
        assert corrected_residence(m, rho, 2.5) == pytest.approx(exact_r(m, rho, 2.5), rel=1e-9)


@pytest.mark.parametrize("m", [1, 2])
def test_morphing_exact_for_small_m(m):
    for rho in RHO_GRID:
        assert morphing_residence(m, rho) == pytest.approx(exact_r(m, rho), rel=1e-12)


@pytest.mark.parametrize("m", range(1, 9))
def test_error_within_bound(m):
    bound = morphing_error_bound(m)
    for rho in RHO_GRID:
        mm = morph_metrics(m, rho)
        assert mm.rel_error <= bound + 1e-12
        assert mm.r_corrected == pytest.approx(mm.r_exact, rel=1e-9)


def test_typical_error_bracket():
    for m in range(4, 9):
        worst = max(morph_metrics(m, rho).rel_error for rho in RHO_GRID)
        assert 0.01 <= worst <= 0.15


def test_m3_error_at_075():
    assert morph_metrics(3, 0.75).rel_error == pytest.approx(abs(1.729730 - 1.757009) / 1.757009, abs=1e-4)


def test_morph_metrics_beyond_table():
    mm = morph_metrics(16, 0.75)
    assert math.isnan(mm.r_corrected)
    assert mm.r_exact == pytest.approx(1.051143, abs=5e-7)
