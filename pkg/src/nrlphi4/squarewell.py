"""Square-well regularization of the 2D contact interaction.

The well has radius ``eps`` and depth ``V0 = g0 * norm / eps^2``. With the
default normalization (``norm = 2``) the profile integrates to ``2 pi g0``;
``normalization="unit"`` uses ``norm = 1/pi`` so the profile integrates to
``g0`` like the momentum-space contact term of the cutoff model.

s-wave radial solutions are matched at r = eps:
interior J0(q r) (or I0 above the barrier top for repulsive wells),
exterior K0(kb r) for bound states and cos(d) J0(k r) - sin(d) Y0(k r)
for scattering.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from . import special
from .cutoffmodel import BoundState, cutoff_for_binding
from .errors import CalibrationError, DomainError, SolverError
from .params import SquareWell

NORMALIZATIONS = {"literal": 2.0, "unit": 1.0 / math.pi}


@dataclass(frozen=True)
class WellSpec:
    eps: float
    g0: float
    m: float = 1.0
    normalization: str = "literal"

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("well radius must be positive")
        if not self.m > 0:
            raise DomainError("mass must be positive")
        if self.normalization not in NORMALIZATIONS:
            raise DomainError(f"unknown normalization {self.normalization!r}")

    @classmethod
    def from_depth(cls, eps: float, depth: float, m: float = 1.0) -> "WellSpec":
        return cls(eps=eps, g0=depth * eps * eps / 2.0, m=m)

    @property
    def depth(self) -> float:
        return self.g0 * NORMALIZATIONS[self.normalization] / (self.eps * self.eps)


def matching_function(well: WellSpec, B: float) -> float:
    """Log-derivative mismatch at r = eps for a trial binding energy.

    ``q J1(q eps) K0(kb eps) - kb J0(q eps) K1(kb eps)`` (K scaled by
    exp(kb eps)); it has no poles, and its zeros in (0, |V0|) are the
    bound states.
    """
    v = -well.depth
    if not 0 < B < v:
        raise DomainError("trial binding energy outside (0, |V0|)")
    q = math.sqrt(2.0 * well.m * (v - B))
    kb = math.sqrt(2.0 * well.m * B)
    j0, j1, _, _ = special.jy01(q * well.eps)
    k0e, k1e = special.k01e(kb * well.eps)
    return q * j1 * k0e - kb * j0 * k1e


def _scan_grid(well: WellSpec, n_scan: int) -> np.ndarray:
    """Trial ln B values: uniform in interior wavenumber plus log-spaced near threshold."""
    v = -well.depth
    q0 = math.sqrt(2.0 * well.m * v)
    qs = np.linspace(0.0, q0, n_scan + 2)[1:-1]
    from_q = v - qs**2 / (2.0 * well.m)
    s_min = max(math.log(v) - 1380.0, -1380.0)
    from_log = np.exp(np.linspace(s_min, math.log(v), n_scan + 2)[1:-1])
    grid = np.unique(np.concatenate([from_q, from_log]))
    grid = grid[(grid > 0) & (grid < v)]
    return np.log(grid)


def bound_states(well: WellSpec, n_scan: int = 512, rtol: float = 1e-12) -> list[BoundState]:
    """All s-wave bound states, deepest first; empty for g0 >= 0."""
    if well.g0 >= 0:
        return []
    s_grid = _scan_grid(well, n_scan)

    def f(s):
        return matching_function(well, math.exp(s))

    values = [f(s) for s in s_grid]
    states = []
    for a, b, fa, fb in zip(s_grid[:-1], s_grid[1:], values[:-1], values[1:]):
        if fa == 0.0:
            s = a
        elif fa * fb < 0:
            try:
                s = optimize.brentq(f, a, b, xtol=rtol, rtol=4 * np.finfo(float).eps, maxiter=200)
            except (RuntimeError, ValueError) as exc:
                raise SolverError(f"bisection failed on bracket ln B in [{a}, {b}]: {exc}") from exc
        else:
            continue
        B = math.exp(s)
        states.append(BoundState(B, SquareWell(well.eps), abs(f(s))))
    if not states:
        raise SolverError(
            f"attractive 2D well must bind, but no sign change found on "
            f"ln B in [{s_grid[0]:.3g}, {s_grid[-1]:.3g}] with {len(s_grid)} points"
        )
    states.sort(key=lambda st: -st.B)
    return states


def count_sign_changes(well: WellSpec, n_scan: int = 4096) -> int:
    if well.g0 >= 0:
        return 0
    vals = np.array([matching_function(well, math.exp(s)) for s in _scan_grid(well, n_scan)])
    return int(np.sum(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0))


def _phase_principal(well: WellSpec, k: float) -> float:
    """Phase shift reduced to (-pi/2, pi/2]."""
    if well.g0 == 0:
        return 0.0
    eps = well.eps
    excess = k * k - 2.0 * well.m * well.depth
    if excess > 0:
        q = math.sqrt(excess)
        a, b, _, _ = special.jy01(q * eps)
        u, du = a, -q * b
    elif excess < 0:
        q = math.sqrt(-excess)
        a, b = special.i01e(q * eps)
        u, du = a, q * b
    else:
        u, du = 1.0, 0.0
    j0, j1, y0, y1 = special.jy01(k * eps)
    num = -k * j1 * u - du * j0
    den = -k * y1 * u - du * y0
    d = math.atan2(num, den)
    if d > math.pi / 2:
        d -= math.pi
    elif d <= -math.pi / 2:
        d += math.pi
    return d


def _anchor_momentum(well: WellSpec) -> float:
    return 1e3 * (well.m * abs(well.depth) * well.eps + 1.0 / well.eps)


def phase_shift_curve(well: WellSpec, ks, max_refine: int = 30) -> np.ndarray:
    """Phase shift continuous in k, fixed to zero at high momentum.

    The grid from ``ks`` up to a high-momentum anchor is refined until no
    step between neighbours exceeds 0.3 rad, then unwrapped with period pi.
    """
    ks = np.asarray(ks, dtype=float)
    if np.any(ks <= 0):
        raise DomainError("momenta must be positive")
    if well.g0 == 0:
        return np.zeros_like(ks)
    k_hi = max(_anchor_momentum(well), 10.0 * ks.max())
    grid = np.unique(np.concatenate([np.geomspace(ks.min(), k_hi, 600), ks]))
    for _ in range(max_refine):
        raw = np.array([_phase_principal(well, k) for k in grid])
        unwrapped = np.unwrap(raw[::-1], period=math.pi)[::-1]
        unwrapped -= math.pi * round(unwrapped[-1] / math.pi)
        jumps = np.abs(np.diff(unwrapped)) > 0.3
        if not jumps.any():
            break
        mids = np.sqrt(grid[:-1][jumps] * grid[1:][jumps])
        grid = np.unique(np.concatenate([grid, mids]))
    return np.interp(np.log(ks), np.log(grid), unwrapped)


def s_wave_phase_shift_well(well: WellSpec, k: float, branch: str = "principal") -> float:
    """s-wave phase shift of the well at momentum ``k``.

    ``branch="principal"`` returns the value in (-pi/2, pi/2];
    ``branch="levinson"`` the continuous branch with zero at high momentum,
    whose k -> 0 limit is pi times the number of bound states.
    """
    if not k > 0:
        raise DomainError("k must be positive")
    if branch == "principal":
        return _phase_principal(well, k)
    if branch == "levinson":
        if well.g0 == 0:
            return 0.0
        # interpolation on the refined grid only fixes the branch
        approx = float(phase_shift_curve(well, [k])[0])
        d = _phase_principal(well, k)
        return d + math.pi * round((approx - d) / math.pi)
    raise DomainError(f"unknown branch {branch!r}")


def ground_state(well: WellSpec) -> BoundState:
    states = bound_states(well)
    if not states:
        raise CalibrationError("well has no bound state")
    return states[0]


def effective_cutoff_calibration(well: WellSpec, target: BoundState | None = None) -> float:
    """Factor ``c`` such that the disk cutoff model at ``kappa = c pi / eps``
    with the well's bare coupling binds at the well's ground-state energy.

    ``target`` replaces the well's ground state as the binding energy to
    reproduce (e.g. a sharp-cutoff state, for self-calibration).
    """
    if well.g0 >= 0:
        raise CalibrationError("calibration needs an attractive well")
    B = target.B if target is not None else ground_state(well).B
    try:
        kappa = cutoff_for_binding(B, well.g0, well.m)
    except (OverflowError, DomainError) as exc:
        raise CalibrationError(f"no cutoff reproduces B={B}: {exc}") from exc
    if not (math.isfinite(kappa) and kappa > 0):
        raise CalibrationError(f"no finite cutoff reproduces B={B}")
    return kappa * well.eps / math.pi
