import math

import pytest
from hypothesis import given, strategies as st

from nrlphi4.errors import DegenerateMassError, DomainError
from nrlphi4.params import (
    Lattice, PhysParams, Renormalized, SharpCutoff, SquareWell, as_cutoff, bare_coupling,
    crossover_cutoff, dispersion_rel, nr_expansion_remainder, running_bare_mass,
)


@pytest.mark.parametrize("lam, m0sq, expected", [(1 / 3, 1, 1.0), (1, -1, -3.0), (2, 4, 1.5)])
def test_bare_coupling_examples(lam, m0sq, expected):
    assert bare_coupling(lam, m0sq) == pytest.approx(expected, rel=1e-15)


def test_bare_coupling_degenerate():
    with pytest.raises(DegenerateMassError):
        bare_coupling(1.0, 0.0)


@pytest.mark.parametrize("kappa, expected", [(math.e, 0.0), (math.e**2, -1.0), (1.0, 1.0)])
def test_running_bare_mass_examples(kappa, expected):
    assert running_bare_mass(1, 1, kappa, 1) == pytest.approx(expected, abs=1e-15)


def test_crossover_is_zero_of_running_mass():
    kc = crossover_cutoff(2.0, 0.5, 3.0)
    assert running_bare_mass(2.0, 0.5, kc, 3.0) == pytest.approx(0.0, abs=1e-13)


def test_dispersion_examples():
    assert dispersion_rel(0, 1, 1) == 1.0
    assert dispersion_rel(3, 4, 1) == pytest.approx(5.0, rel=1e-15)
    # direct: sqrt(100 + 10^4)
    assert dispersion_rel(1, 1, 10) == pytest.approx(math.sqrt(10100.0), rel=1e-15)
    assert dispersion_rel(1, 1, 10) == pytest.approx(100.49875621, rel=1e-9)


def test_remainder_examples():
    assert nr_expansion_remainder(0, 1, 10) == 0.0
    # oracle: plain subtraction in extended precision
    from mpmath import mp, mpf, sqrt
    mp.dps = 40
    ref = sqrt(mpf(1) * 100 + mpf(10) ** 4) - 100 - mpf(1) / 2
    assert nr_expansion_remainder(1, 1, 10) == pytest.approx(float(ref), rel=1e-13)
    assert nr_expansion_remainder(1, 1, 10) == pytest.approx(-0.00124379, rel=1e-5)
    ratio = nr_expansion_remainder(1, 1, 100) / (-1 / (8 * 100**2))
    assert abs(ratio - 1) < 1e-3


def test_remainder_degenerate_mass():
    with pytest.raises(DegenerateMassError):
        nr_expansion_remainder(1.0, 0.0, 1.0)


@given(st.floats(0.01, 10), st.floats(0.1, 10), st.floats(50, 1e4))
def test_remainder_nonpositive_and_quarter_scaling(p, m, c):
    r1 = nr_expansion_remainder(p, m, c)
    r2 = nr_expansion_remainder(p, m, 2 * c)
    assert r1 <= 0
    if p / (m * c) < 0.05:
        assert r2 / r1 == pytest.approx(0.25, rel=0.01)


@given(st.floats(0.1, 1e3), st.floats(0.1, 10))
def test_dispersion_approaches_massless(m, c):
    gaps = [dispersion_rel(p, m, c) - c * p for p in (10.0, 100.0, 1000.0)]
    assert gaps[0] > gaps[1] > gaps[2] > 0


def test_physparams_cases():
    p = PhysParams.case_i(1.0, 1 / 3)
    assert p.g0 == pytest.approx(1.0)
    q = PhysParams.case_ii(1.0, 1.0, 1.0, math.e**2, 1.0)
    assert q.m0_sq == pytest.approx(-1.0)
    assert q.g0 == pytest.approx(-3.0)
    moved = q.at_cutoff(math.e)
    assert moved.m0_sq == pytest.approx(0.0, abs=1e-15)


def test_scheme_conversions():
    assert as_cutoff(SquareWell(0.01)).kappa == pytest.approx(math.pi / 0.01)
    assert as_cutoff(Lattice(0.5)).kappa == pytest.approx(2 * math.pi)
    assert as_cutoff(SharpCutoff(7.0)).kappa == 7.0
    with pytest.raises(DomainError):
        SharpCutoff(-1.0)
    with pytest.raises((DomainError, TypeError)):
        as_cutoff(Renormalized(1.0, 1.0))
