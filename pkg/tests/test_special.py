import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given, strategies as st

from nrlphi4 import special

GRID = np.concatenate([np.geomspace(1e-6, 1, 40), np.linspace(1, 60, 300), np.geomspace(60, 1e4, 40)])


@pytest.mark.parametrize("fn, ref", [
    (special.j0, sc.j0), (special.j1, sc.j1), (special.y0, sc.y0), (special.y1, sc.y1),
])
def test_jy_against_scipy(fn, ref):
    for x in GRID:
        got, want = fn(x), ref(x)
        # absolute near zeros, relative elsewhere
        assert abs(got - want) <= 1e-12 * max(abs(want), 1.0 / np.sqrt(max(x, 1.0))) + 1e-13


@pytest.mark.parametrize("fn, ref", [(special.k0, sc.k0), (special.k1, sc.k1), (special.i0, sc.i0), (special.i1, sc.i1)])
def test_ik_against_scipy(fn, ref):
    for x in GRID[GRID < 600]:
        assert fn(x) == pytest.approx(ref(x), rel=1e-12)


def test_scaled_forms():
    for x in (0.1, 3.0, 50.0, 800.0):
        assert special.k01e(x)[0] == pytest.approx(sc.k0e(x), rel=1e-12)
        assert special.i01e(x)[1] == pytest.approx(sc.i1e(x), rel=1e-12)


@given(st.floats(1e-4, 1e3))
def test_wronskians(x):
    assert abs(special.wronskian_jy_defect(x)) < 1e-10
    assert abs(special.wronskian_ik_defect(x)) < 1e-10


def test_thresholds_continuous():
    for t in (special.SERIES_MAX, special.MILLER_MAX, special.K_SERIES_MAX, special.I_SERIES_MAX):
        lo, hi = special.jy01(t * (1 - 1e-12)), special.jy01(t * (1 + 1e-12))
        assert np.allclose(lo, hi, atol=1e-11)
