import mpmath
import numpy as np
import pytest

from erlangkit.erlang import InvalidArgumentError
from erlangkit.morphing import correction_polynomial, horner
from erlangkit.polyroots import (
    corrected_roots,
    morphing_roots,
    szego_curve,
    szego_residual,
)


def test_morphing_roots_small():
    assert morphing_roots(1).roots.tolist() == [1 + 0j]
    assert morphing_roots(4).roots.tolist() == [1, 1j, -1, -1j]
    loc = morphing_roots(3)
    assert np.all(np.abs(np.abs(loc.roots) - 1) <= 1e-12)
    assert np.all(np.abs(1 - loc.roots**3) <= 1e-12)
    with pytest.raises(InvalidArgumentError):
        morphing_roots(0)


@pytest.mark.parametrize("m", [5, 17, 256])
def test_morphing_roots_on_unit_circle(m):
    loc = morphing_roots(m)
    assert len(loc.roots) == m
    assert np.max(np.abs(np.abs(loc.roots) - 1)) <= 1e-9
    assert loc.max_residual <= 1e-9


def test_corrected_roots_low_order():
    assert corrected_roots(1).roots.tolist() == [1 + 0j]
    assert sorted(corrected_roots(2).roots.real.tolist()) == [-1.0, 1.0]


@pytest.mark.parametrize("m", range(1, 9))
def test_corrected_roots_properties(m):
    poly = correction_polynomial(m)
    loc = corrected_roots(poly)
    assert loc.kind == "corrected"
    assert len(loc.roots) == m
    c = np.abs(poly.coeffs).sum()
    res = np.array([abs(horner(poly.coeffs, complex(z))) for z in loc.roots])
    assert res.max() <= 1e-8
    assert res.max() / (1 + c) <= 1e-10
    # real coefficients: roots come in conjugate pairs
    assert np.allclose(np.sort_complex(loc.roots), np.sort_complex(loc.roots.conj()), atol=1e-12)
    # every tabulated polynomial vanishes at the saturation point z = 1
    assert sum(poly.coeffs) == 0
    assert 1 in loc.roots.tolist()


@pytest.mark.parametrize("m", range(3, 9))
def test_corrected_roots_inside_unit_disk(m):
    inner = corrected_roots(m).interior()
    assert len(inner) == m - 1
    assert np.all(np.abs(inner) < 1 - 1e-6)


def test_corrected_roots_match_companion_matrix():
    # independent check against numpy's dense eigenvalue solver
    for m in range(3, 9):
        c = np.array(correction_polynomial(m).coeffs, dtype=float)
        ref = np.roots(c[::-1])
        got = corrected_roots(m).roots
        assert np.allclose(np.sort_complex(got), np.sort_complex(ref), atol=1e-7)


def test_szego_curve():
    curve = szego_curve(256)
    pts = curve.points
    assert len(pts) == 256
    assert pts[0] == 1
    assert np.max(szego_residual(pts)) <= 1e-10
    assert np.all(np.abs(pts) <= 1 + 1e-15)
    steps = np.abs(np.diff(np.append(pts, pts[0])))
    assert steps.max() < 0.1
    # leftmost point: ln r + 1 + r = 0, i.e. r = W(1/e)
    assert np.min(pts.real) == pytest.approx(-float(mpmath.lambertw(mpmath.exp(-1)).real), abs=1e-12)


def test_szego_curve_small():
    assert np.max(szego_residual(szego_curve(16).points)) <= 1e-10
    with pytest.raises(InvalidArgumentError):
        szego_curve(15)
