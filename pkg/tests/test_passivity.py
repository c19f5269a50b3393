import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nrlphi4 import passivity as pv
from nrlphi4.errors import SuperluminalBoostError


def test_examples():
    assert pv.boosted_min_rel(0, 1, 1) == 1.0
    assert pv.boosted_min_rel(0.6, 1, 1) == pytest.approx(0.8, abs=1e-15)
    assert pv.boosted_min_rel_numeric(0.6, 1, 1) == pytest.approx(0.8, abs=1e-8)
    assert pv.boosted_min_rel(1 - 1e-12, 1, 1) < 1e-5
    assert pv.boosted_min_nr(0.6, 1, 10) == -1.8
    assert pv.boosted_min_nr(0.0, 2.0, 3) == 0.0
    with pytest.raises(SuperluminalBoostError):
        pv.boosted_min_rel(1.0, 1, 1)


def test_grid_scan_oracle():
    p = np.linspace(-5, 5, 200001)
    scan = np.min(np.sqrt(p * p + 1) + 0.6 * p)
    assert pv.boosted_min_rel(0.6, 1, 1) == pytest.approx(scan, abs=1e-8)


@given(st.floats(-0.99, 0.99), st.floats(0.1, 10), st.floats(0.5, 5))
def test_rel_nonnegative(beta, m, c):
    u = beta * c
    assert pv.boosted_min_rel(u, m, c) >= 0
    assert pv.boosted_min_rel_numeric(u, m, c) == pytest.approx(pv.boosted_min_rel(u, m, c), rel=1e-7, abs=1e-9)


@given(st.floats(0.01, 10), st.floats(0.1, 10))
def test_subtracted_tends_to_nr(u, m):
    c = 1e3 * u
    assert pv.boosted_min_rel(u, m, c, True) == pytest.approx(-m * u * u / 2, rel=0.01)


def test_report():
    assert pv.contraction_report(0.1, 1, 1, 1).cone_half_angle == pytest.approx(math.pi / 4)
    assert pv.contraction_report(0.1, 1, 1e3, 1).cone_half_angle == pytest.approx(9.9999966667e-4, rel=1e-10)
    r = pv.contraction_report(0.5, 1, 1, 5)
    assert r.positivity["rel"] is True and r.positivity["nr"] is False
    assert r.min_nr == pytest.approx(-0.625)
