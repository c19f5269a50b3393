"""Lattice regularization: dispersion, Brillouin-zone Green integral and the
rank-one two-body bound state.

Everything is done in zone-scaled variables q = eps k, where the Green
integral depends on B only through b = B eps^2:

    G(B) = eps^(2-dim) int_{[-pi,pi]^dim} d^dim q/(2 pi)^dim 1/(sigma E'(q) + b),
    E'(q) = sum_i (1 - cos q_i).

Two quadratures are provided. ``trapezoid`` is the periodic trapezoidal
rule with grid doubling (spectral, but needs a grid finer than sqrt(b)).
``heat`` uses the exact one-dimensional representation

    int d^dim q/(2 pi)^dim 1/(sigma E' + b)
        = int_0^inf dt exp(-b t) [exp(-sigma t) I0(sigma t)]^dim,

which stays cheap as b -> 0 where the zone integrand becomes sharply peaked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize

from . import special
from .cutoffmodel import BoundState, cutoff_for_binding, loop_integral_I
from .errors import DomainError, SolverError, ToleranceError
from .params import Lattice, bare_coupling, running_bare_mass

TRAPEZOID_MIN_B = 1e-2


@dataclass(frozen=True)
class LatticeSpec:
    """``sigma`` multiplies E_eps; sigma = 1 gives small-k kinetic energy |k|^2/2."""

    eps: float
    dim: int = 2
    sigma: float = 1.0

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("lattice spacing must be positive")
        if self.dim not in (1, 2):
            raise DomainError("dim must be 1 or 2")
        if self.sigma not in (1, 2, 1.0, 2.0):
            raise DomainError("sigma must be 1 or 2")

    @property
    def zone_edge(self) -> float:
        return math.pi / self.eps


def lattice_dispersion(k, eps: float, sigma: float = 1.0):
    """``sigma * eps^-2 * sum_i (1 - cos(eps k_i))``; components along the last axis."""
    if not eps > 0:
        raise DomainError("eps must be positive")
    k = np.asarray(k, dtype=float)
    edge = math.pi / eps
    if np.any(np.abs(k) > edge * (1 + 1e-12)):
        raise DomainError("momentum outside the Brillouin zone")
    # 1 - cos x = 2 sin^2(x/2), no cancellation at small x
    e = 2.0 * np.sin(0.5 * eps * k) ** 2 / eps**2
    return sigma * np.sum(e, axis=-1)


def _zone_trapezoid(b: float, dim: int, sigma: float, tol: float, n_max: int = 2048) -> float:
    n = 32
    prev = None
    while n <= n_max:
        q = 2.0 * math.pi * np.arange(n) / n
        e1 = 2.0 * np.sin(0.5 * q) ** 2
        if dim == 1:
            val = float(np.mean(1.0 / (sigma * e1 + b)))
        else:
            val = float(np.mean(1.0 / (sigma * (e1[:, None] + e1[None, :]) + b)))
        if prev is not None and abs(val - prev) <= tol * abs(val):
            return val
        prev = val
        n *= 2
    raise ToleranceError(f"zone trapezoid not converged at n={n_max}", estimate=prev)


def _zone_heat(b: float, dim: int, sigma: float, tol: float) -> float:
    def integrand(u):
        t = math.exp(u)
        w = special.i01e(sigma * t)[0] if t > 0 else 1.0
        return t * math.exp(-b * t) * w**dim

    upper = math.log(80.0 / b)
    lower = -40.0
    # the integrand is ~exp(u) below 0 and flat-ish up to ln(1/b)
    breaks = [lower, 0.0] + [x for x in np.arange(10.0, upper, 10.0)] + [upper]
    total = 0.0
    err = 0.0
    for a, c in zip(breaks[:-1], breaks[1:]):
        if c <= a:
            continue
        v, e = integrate.quad(integrand, a, c, epsabs=0.0, epsrel=1e-13, limit=400)
        total += v
        err += e
    if err > tol * abs(total):
        raise ToleranceError("heat-kernel quadrature not converged", estimate=total, error=err)
    return total


def bz_green_integral(B: float, spec: LatticeSpec, method: str = "auto", tol: float = 1e-10) -> float:
    """``int_{zone} d^dim k/(2 pi)^dim 1/(sigma E_eps(k) + B)`` for B > 0."""
    if not B > 0:
        raise DomainError("B must be positive")
    b = B * spec.eps**2
    pref = spec.eps ** (2 - spec.dim)
    if method == "auto":
        method = "trapezoid" if b >= TRAPEZOID_MIN_B else "heat"
    if method == "trapezoid":
        return pref * _zone_trapezoid(b, spec.dim, spec.sigma, tol)
    if method == "heat":
        return pref * _zone_heat(b, spec.dim, spec.sigma, tol)
    if method == "exact" and spec.dim == 1:
        return pref / math.sqrt(b * (b + 2.0 * spec.sigma))
    raise DomainError(f"unknown method {method!r}")


def lattice_bound_state(g0: float, spec: LatticeSpec) -> BoundState | None:
    """Rank-one bound state ``1 = |g0| G(B)``; ``None`` for g0 >= 0."""
    if g0 >= 0:
        return None
    a = abs(g0)
    pref = spec.eps ** (2 - spec.dim)

    def f(s):
        b = math.exp(s)
        return a * pref * (_zone_trapezoid(b, spec.dim, spec.sigma, 1e-12) if b >= TRAPEZOID_MIN_B
                           else _zone_heat(b, spec.dim, spec.sigma, 1e-10)) - 1.0

    lo, hi = 0.0, 0.0
    f_lo = f(lo)
    if f_lo > 0:
        while True:
            hi = lo + 5.0
            f_hi = f(hi)
            if f_hi < 0:
                break
            lo = hi
            if lo > 200:
                raise SolverError("bound state not bracketed at large B")
    else:
        hi = lo
        while True:
            lo = hi - 10.0
            f_lo = f(lo)
            if f_lo > 0:
                break
            hi = lo
            if hi < -690:
                raise SolverError("binding energy below representable range", best=math.exp(hi))
    s = optimize.brentq(f, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
    b = math.exp(s)
    B = b / spec.eps**2
    return BoundState(B, Lattice(spec.eps), abs(f(s)))


def lattice_vs_cutoff_offset(B: float, spec: LatticeSpec) -> float:
    """``G(B)`` minus the matching disk loop integral at kappa = pi/eps."""
    if spec.dim != 2:
        raise DomainError("offset defined for dim = 2")
    disk = loop_integral_I(2.0 * B / spec.sigma, spec.zone_edge).real
    return bz_green_integral(B, spec) - 2.0 / spec.sigma * disk


def lattice_calibration(g0: float, spec: LatticeSpec) -> float:
    """Factor c with the disk cutoff model at kappa = c pi/eps binding where the lattice does."""
    state = lattice_bound_state(g0, spec)
    if state is None:
        raise DomainError("calibration needs g0 < 0")
    return cutoff_for_binding(state.B, g0) * spec.eps / math.pi


def critical_lambda0(c_log: float) -> float:
    """Coupling for which the bare-mass running cancels the cutoff log exactly."""
    return math.pi * c_log / 3.0


def continuum_limit_check(m_sq: float, c_log: float, kappa_ref: float, eps_list,
                          lambda0: float | None = None, running: bool = True,
                          sigma: float = 1.0) -> list[dict]:
    """Lattice binding energy along a sequence of spacings.

    With ``running`` the bare coupling at each eps follows the case-ii bare
    mass at kappa = pi/eps; otherwise it is frozen at its value for the
    first (coarsest) eps. ``lambda0`` defaults to :func:`critical_lambda0`.
    """
    eps_list = [float(e) for e in eps_list]
    if not eps_list or any(e <= 0 for e in eps_list):
        raise DomainError("eps_list must be positive")
    if any(b >= a for a, b in zip(eps_list[:-1], eps_list[1:])):
        raise DomainError("eps_list must be strictly decreasing")
    if lambda0 is None:
        lambda0 = critical_lambda0(c_log)
    g_frozen = bare_coupling(lambda0, running_bare_mass(m_sq, c_log, math.pi / eps_list[0], kappa_ref))
    rows = []
    prev = None
    for eps in eps_list:
        kappa = math.pi / eps
        g0 = bare_coupling(lambda0, running_bare_mass(m_sq, c_log, kappa, kappa_ref)) if running else g_frozen
        state = lattice_bound_state(g0, LatticeSpec(eps, 2, sigma))
        B = state.B if state is not None else float("nan")
        rows.append({
            "eps": eps,
            "kappa": kappa,
            "g0": g0,
            "B": B,
            "ratio_prev": B / prev if prev else float("nan"),
        })
        prev = B
    return rows
