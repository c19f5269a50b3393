"""Separable sharp-cutoff contact model in two dimensions.

For a rank-one (separable) contact interaction the Lippmann-Schwinger
equation is algebraic: the on-shell amplitude is

    T(k) = [1/g0 + 2m I(-k^2 - i0; kappa)]^(-1)

with the loop integral I(z) = int d^2p/(2pi)^2 1/(p^2 + z) over the cutoff
region. Absorbing the log of the cutoff into the coupling gives the
renormalized amplitude [1/g - ln(k/mu)/pi + i/2]^(-1), whose pole sits at
the bound state sqrt(2B) = mu exp(pi/g).

The ``+ i/2`` is the exact boundary value of Im 2I(-k^2 - i0), not a
regulator, so every on-shell amplitude here is unitary to rounding.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Union

from scipy import integrate, optimize

from .errors import DomainError, LogSingularityError, ResonancePoleError, SolverError, ToleranceError
from .params import Renormalized, SharpCutoff, SquareWell, Lattice

FOUR_PI = 4.0 * math.pi
GEOMETRIES = ("disk", "disk_asymptotic", "square")

# (ln 2)/(2 pi) - G/pi^2, G = Catalan's constant: kappa -> infinity limit of
# the square-minus-disk corner integral.
CATALAN = 0.915965594177219015054603514932384110774
CORNER_LIMIT = math.log(2.0) / (2.0 * math.pi) - CATALAN / math.pi**2


@dataclass(frozen=True)
class ComplexAmplitude:
    """On-shell T value at momentum ``k`` for reduced-problem mass ``m``."""

    value: complex
    k: float
    m: float = 1.0

    @property
    def unitarity_defect(self) -> float:
        # s-wave unitarity: Im T = -(m/2) |T|^2
        return self.value.imag + 0.5 * self.m * abs(self.value) ** 2

    def __complex__(self):
        return complex(self.value)


@dataclass(frozen=True)
class BoundState:
    B: float
    scheme: Union[SharpCutoff, SquareWell, Lattice, Renormalized, None] = None
    residual: float = 0.0
    warning: Optional[str] = None

    def __post_init__(self):
        if not self.B > 0:
            raise DomainError(f"binding energy must be positive, got {self.B}")


def _inv(g: float) -> float:
    return 0.0 if math.isinf(g) else 1.0 / g


def _corner_integral(z: complex, kappa: float, tol: float) -> complex:
    """Integral of 1/(p^2+z) over the square minus the inscribed disk.

    The radial part is done in closed form; the remaining angle integral
    over one eighth of the corner region is smooth.
    """
    k2 = kappa * kappa
    base = k2 + z

    def integrand(theta, part):
        w = cmath.log((k2 / math.cos(theta) ** 2 + z) / base)
        return w.real if part == 0 else w.imag

    total = 0j
    for part in (0, 1):
        if part == 1 and z.imag == 0 and (z.real > -k2):
            continue
        val, err = integrate.quad(integrand, 0.0, math.pi / 4, args=(part,),
                                  epsabs=0.0, epsrel=max(0.01 * tol, 5e-14), limit=200)
        if err > tol * max(abs(val), 1e-300) and err > 1e-15:
            raise ToleranceError("corner quadrature did not converge", estimate=val, error=err)
        total += val if part == 0 else 1j * val
    return total / math.pi**2


def loop_integral_I(z: complex, kappa: float, geometry: str = "disk",
                    boundary: bool = False, tol: float = 1e-9) -> complex:
    """Loop integral ``int d^2p/(2 pi)^2 1/(p^2 + z)`` over the cutoff region.

    Parameters
    ----------
    z : complex
        Energy-squared argument. With ``boundary=True`` it must be real and
        negative, and is read as the limit ``z - i0`` (on-shell scattering at
        ``k^2 = -z``).
    kappa : float
        Momentum cutoff.
    geometry : {"disk", "disk_asymptotic", "square"}
        ``disk`` is |p| <= kappa in closed form, ``disk_asymptotic`` the
        large-kappa form ln(kappa^2/z)/(4 pi), ``square`` the region
        |p_i| <= kappa (disk plus a quadrature corner term).
    """
    if not kappa > 0:
        raise DomainError("kappa must be positive")
    if geometry not in GEOMETRIES:
        raise DomainError(f"unknown geometry {geometry!r}")
    z = complex(z)
    if z == 0:
        raise LogSingularityError("loop integral diverges logarithmically at z = 0")
    if cmath.isinf(z):
        return 0j
    k2 = kappa * kappa
    if boundary:
        if z.imag != 0 or z.real >= 0:
            raise DomainError("boundary value needs real negative z (z = -k^2 - i0)")
        q2 = -z.real
        if geometry == "disk_asymptotic":
            return (2.0 * math.log(kappa) - math.log(q2) + 1j * math.pi) / FOUR_PI
        if q2 == k2:
            raise LogSingularityError("on-shell momentum equals the cutoff")
        # logs taken separately so kappa^2 may overflow
        log_k2 = 2.0 * math.log(kappa)
        if q2 > k2:
            disk = complex(math.log(q2 - k2) - math.log(q2))
        else:
            disk = log_k2 + math.log1p(-q2 / k2) - math.log(q2) + 1j * math.pi
        disk /= FOUR_PI
        if geometry == "disk":
            return disk
        if q2 >= k2:
            raise DomainError("square geometry on shell requires k < kappa")
        return disk + _corner_integral(complex(-q2), kappa, tol)
    if z.imag == 0 and -k2 <= z.real < 0:
        raise DomainError("z on the cut [-kappa^2, 0); pass boundary=True for the on-shell limit")
    if geometry == "disk_asymptotic":
        return cmath.log(k2 / z) / FOUR_PI
    disk = cmath.log((k2 + z) / z) / FOUR_PI
    if geometry == "disk":
        return disk
    if z.imag == 0 and -2 * k2 <= z.real < -k2:
        raise DomainError("z inside the corner cut of the square region")
    return disk + _corner_integral(z, kappa, tol)


def t_amplitude_bare(k: float, g0: float, kappa: float, m: float = 1.0,
                     geometry: str = "disk", pole_tol: float = 1e-14) -> ComplexAmplitude:
    """On-shell amplitude of the bare cutoff model, ``[1/g0 + 2m I(-k^2-i0)]^-1``.

    ``g0 = inf`` is the unitary limit.
    """
    if not 0 < k < kappa:
        raise DomainError(f"need 0 < k < kappa, got k={k}, kappa={kappa}")
    if not m > 0:
        raise DomainError("mass must be positive")
    denom = _inv(g0) + 2.0 * m * loop_integral_I(-k * k, kappa, geometry, boundary=True)
    if abs(denom) < pole_tol:
        raise ResonancePoleError(f"amplitude denominator vanishes at k={k}", k)
    return ComplexAmplitude(1.0 / denom, k, m)


def renormalized_coupling(g0: float, kappa: float, mu: float) -> float:
    """``1/g = 1/g0 + ln(kappa/mu)/pi``; returns ``inf`` when 1/g vanishes."""
    if not (kappa > 0 and mu > 0):
        raise DomainError("kappa and mu must be positive")
    inv = _inv(g0) + math.log(kappa / mu) / math.pi
    return math.inf if inv == 0 else 1.0 / inv


def bare_from_renormalized(g: float, kappa: float, mu: float) -> float:
    """Inverse of :func:`renormalized_coupling`."""
    if not (kappa > 0 and mu > 0):
        raise DomainError("kappa and mu must be positive")
    inv = _inv(g) - math.log(kappa / mu) / math.pi
    return math.inf if inv == 0 else 1.0 / inv


def shift_renormalization_point(g: float, mu: float, mu_new: float) -> float:
    """Coupling at ``mu_new`` giving the same amplitude as ``g`` at ``mu``."""
    inv = _inv(g) + math.log(mu / mu_new) / math.pi
    return math.inf if inv == 0 else 1.0 / inv


def renormalized_denominator(k: float, g: float, mu: float) -> complex:
    return _inv(g) - math.log(k / mu) / math.pi + 0.5j


def t_amplitude_renormalized(k: float, g: float, mu: float) -> ComplexAmplitude:
    """Cutoff-free amplitude ``[1/g - ln(k/mu)/pi + i/2]^-1``."""
    if not (k > 0 and mu > 0):
        raise DomainError("k and mu must be positive")
    return ComplexAmplitude(1.0 / renormalized_denominator(k, g, mu), k)


def s_wave_phase_shift(k: float, g: float, mu: float) -> float:
    """Phase shift in (0, pi) with ``cot d = (2/pi) ln(k/mu) - 2/g``."""
    if not (k > 0 and mu > 0):
        raise DomainError("k and mu must be positive")
    cot = 2.0 / math.pi * math.log(k / mu) - 2.0 * _inv(g)
    return math.atan2(1.0, cot)


def bound_state_energy(g: float, mu: float) -> BoundState:
    """Pole of the renormalized amplitude: ``sqrt(2B) = mu exp(pi/g)``."""
    if not mu > 0:
        raise DomainError("mu must be positive")
    if g == 0 or math.isnan(g):
        raise DomainError("g must be finite and nonzero")
    warning = None if g > 0 else "g <= 0: outside the positive-coupling branch"
    kb = mu * math.exp(math.pi * _inv(g))
    B = 0.5 * kb * kb
    residual = abs(_inv(g) - math.log(math.sqrt(2.0 * B) / mu) / math.pi)
    return BoundState(B, Renormalized(g, mu), residual, warning)


def bound_state_by_root(g: float, mu: float, rtol: float = 1e-15) -> BoundState:
    """Locate the pole by root finding on Re of the continued denominator.

    Independent of the closed form in :func:`bound_state_energy`; the
    unknown is ln(2B) so the bracket covers many decades.
    """
    inv = _inv(g)

    def f(s):
        return inv - 0.5 * s / math.pi + math.log(mu) / math.pi

    lo, hi = -1400.0, 1400.0
    if f(lo) * f(hi) > 0:
        raise SolverError("pole not bracketed")
    s = optimize.brentq(f, lo, hi, xtol=1e-300, rtol=rtol, maxiter=500)
    B = 0.5 * math.exp(s)
    return BoundState(B, Renormalized(g, mu), abs(f(s)))


def bound_state_bare(g0: float, kappa: float, m: float = 1.0, geometry: str = "disk") -> BoundState:
    """Bound state of the bare cutoff model: ``1/g0 + 2m I(2mB) = 0``, needs g0 < 0."""
    if not g0 < 0:
        raise DomainError("the bare cutoff model binds only for g0 < 0")
    if geometry == "disk":
        z = kappa * kappa / math.expm1(-2.0 * math.pi / (m * g0))
        if not z > 0:
            raise SolverError("binding momentum underflowed", best=z)
        B = z / (2.0 * m)
        res = abs(1.0 / g0 + 2.0 * m * loop_integral_I(z, kappa).real)
        return BoundState(B, SharpCutoff(kappa), res)

    def f(s):
        return 1.0 / g0 + 2.0 * m * loop_integral_I(math.exp(s), kappa, geometry).real

    lo, hi = -700.0, math.log(1e6 * kappa * kappa)
    if f(lo) * f(hi) > 0:
        raise SolverError("bound state not bracketed", best=None)
    s = optimize.brentq(f, lo, hi, xtol=1e-14, rtol=1e-14, maxiter=500)
    return BoundState(math.exp(s) / (2.0 * m), SharpCutoff(kappa), abs(f(s)))


def cutoff_for_binding(B: float, g0: float, m: float = 1.0) -> float:
    """Disk cutoff at which the bare model with coupling ``g0 < 0`` binds at ``B``."""
    if not (B > 0 and g0 < 0):
        raise DomainError("need B > 0 and g0 < 0")
    return math.sqrt(2.0 * m * B * math.expm1(-2.0 * math.pi / (m * g0)))


def angular_amplitude(k: float, T) -> complex:
    """2D scattering amplitude ``f = -T / sqrt(2 pi k)``; independent of angle."""
    if not k > 0:
        raise DomainError("k must be positive")
    return -complex(T) / math.sqrt(2.0 * math.pi * k)


def angular_amplitude_from_bound_state(k: float, B: float) -> complex:
    """Same amplitude parametrized by the binding energy instead of (g, mu)."""
    if not (k > 0 and B > 0):
        raise DomainError("k and B must be positive")
    return -1.0 / math.sqrt(2.0 * math.pi * k) / (math.log(2.0 * B / (k * k)) / (2.0 * math.pi) + 0.5j)
