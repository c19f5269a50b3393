import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nrlphi4 import lattice as lt
from nrlphi4.errors import DomainError

# frozen: zone trapezoid at n = 2048 (and heat kernel), b = 1, eps = 1, sigma = 1
G_AT_ONE = 0.38402336968


def test_dispersion_examples():
    assert lt.lattice_dispersion([0.0, 0.0], 1.0) == 0.0
    eps = 0.3
    corner = lt.lattice_dispersion([math.pi / eps, math.pi / eps], eps)
    assert corner == pytest.approx(4 / eps**2, rel=1e-14)
    assert lt.lattice_dispersion([0.1, 0.0], 1.0) == pytest.approx(1 - math.cos(0.1), rel=1e-14)
    assert lt.lattice_dispersion([0.1, 0.0], 1.0) == pytest.approx(0.00499583, abs=1e-8)
    with pytest.raises(DomainError):
        lt.lattice_dispersion([4.0, 0.0], 1.0)


@given(st.floats(-math.pi, math.pi), st.floats(-math.pi, math.pi), st.sampled_from([1.0, 2.0]))
def test_dispersion_taylor_bound_and_parity(qx, qy, sigma):
    eps = 0.7
    k = np.array([qx, qy]) / eps
    e = lt.lattice_dispersion(k, eps, sigma)
    assert e == pytest.approx(lt.lattice_dispersion(-k, eps, sigma), abs=1e-14)
    assert abs(e - sigma * np.sum(k**2) / 2) <= sigma * eps**2 * np.sum(k**4) / 24 + 1e-12
    assert 0 <= e <= sigma * 4 / eps**2 + 1e-12


def test_green_two_quadratures():
    spec = lt.LatticeSpec(1.0)
    a = lt.bz_green_integral(1.0, spec, "trapezoid")
    b = lt.bz_green_integral(1.0, spec, "heat")
    assert a == pytest.approx(b, abs=1e-8)
    assert a == pytest.approx(G_AT_ONE, abs=1e-10)
    a = lt.bz_green_integral(0.02, spec, "trapezoid")
    b = lt.bz_green_integral(0.02, spec, "heat")
    assert a == pytest.approx(b, rel=1e-10)


def test_green_dim1_exact():
    spec = lt.LatticeSpec(1.0, dim=1)
    exact = lt.bz_green_integral(0.3, spec, "exact")
    assert exact == pytest.approx(1.2038585308576921, rel=1e-14)
    assert lt.bz_green_integral(0.3, spec, "trapezoid") == pytest.approx(exact, rel=1e-10)
    assert lt.bz_green_integral(0.3, spec, "heat") == pytest.approx(exact, rel=1e-10)


def test_green_limits():
    spec = lt.LatticeSpec(1.0)
    assert lt.bz_green_integral(1e6, spec) == pytest.approx(1e-6, rel=1e-5)
    for B in (0.1, 1.0, 10.0):
        assert lt.bz_green_integral(B, spec) <= 1.0 / B
    # log slope 1/(2 pi sigma) for dim 2 as B -> 0
    g1, g2 = lt.bz_green_integral(1e-6, spec), lt.bz_green_integral(1e-4, spec)
    assert (g1 - g2) / math.log(100) == pytest.approx(1 / (2 * math.pi), rel=1e-3)
    with pytest.raises(DomainError):
        lt.bz_green_integral(0.0, spec)


@settings(max_examples=20)
@given(st.floats(1e-5, 1e3))
def test_green_decreasing(B):
    spec = lt.LatticeSpec(1.0)
    assert lt.bz_green_integral(B, spec) > lt.bz_green_integral(1.1 * B, spec)


def test_bound_state_basics():
    spec = lt.LatticeSpec(1.0)
    assert lt.lattice_bound_state(0.5, spec) is None
    g0 = -1.0 / lt.bz_green_integral(1.0, spec)
    st_ = lt.lattice_bound_state(g0, spec)
    assert st_.B == pytest.approx(1.0, rel=1e-10)
    assert st_.residual < 1e-10
    Bs = [lt.lattice_bound_state(-a, spec).B for a in (0.2, 0.5, 1.0, 3.0)]
    assert all(x < y for x, y in zip(Bs[:-1], Bs[1:]))


def test_weak_coupling_slope():
    spec = lt.LatticeSpec(1.0)
    a = np.linspace(0.1, 0.5, 9)
    lnB = [math.log(lt.lattice_bound_state(-x, spec).B) for x in a]
    slope = np.polyfit(1 / a, lnB, 1)[0]
    assert slope == pytest.approx(-2 * math.pi, rel=0.05)


def test_offset_is_bounded():
    offs = [lt.lattice_vs_cutoff_offset(1.0, lt.LatticeSpec(e)) for e in (0.1, 0.01, 0.001)]
    assert abs(offs[2] - offs[1]) < 1e-3
    # limit constant (1/2 pi) ln(16/pi^2 e^{...}) is not needed; only boundedness and settling
    assert abs(offs[1] - offs[0]) < 1e-2


def test_continuum_limit():
    rows = lt.continuum_limit_check(1.0, 1.0, 1.0, [0.1 / 2**i for i in range(5)])
    ratios = [r["ratio_prev"] for r in rows[1:]]
    assert abs(ratios[-1] - 1) < 0.1
    assert all(abs(x - 1) > abs(y - 1) for x, y in zip(ratios[:-1], ratios[1:]))
    frozen = lt.continuum_limit_check(1.0, 1.0, 1.0, [0.1 / 2**i for i in range(5)], running=False)
    assert all(r["ratio_prev"] == pytest.approx(4.0, rel=1e-6) for r in frozen[1:])
    again = lt.continuum_limit_check(1.0, 1.0, 1.0, [0.1 / 2**i for i in range(5)])
    assert repr(again) == repr(rows)
    with pytest.raises(DomainError):
        lt.continuum_limit_check(1.0, 1.0, 1.0, [0.01, 0.1])


def test_calibration_factor_small_eps():
    # continuum limit of the lattice: B_lat = (32/pi^2) B_cut at kappa = pi/eps
    g0, eps = -0.3, 1e-3
    c = lt.lattice_calibration(g0, lt.LatticeSpec(eps))
    assert c**2 == pytest.approx(32 / math.pi**2, rel=1e-3)
