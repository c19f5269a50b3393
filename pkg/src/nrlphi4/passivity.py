"""Free-dispersion minima of the boosted generator H + u P.

Relativistically, min_p [omega(p) + u p] = m c^2 sqrt(1 - u^2/c^2) >= 0 for
|u| < c. Dropping the rest energy (the n m c^2 term) and taking c -> inf
leaves p^2/2m + u p, whose minimum -m u^2/2 per particle is negative for
any u != 0 and unbounded below in n.
"""
from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field

from scipy import optimize

from .errors import DomainError, SuperluminalBoostError
from .params import dispersion_rel


def _check_boost(u, m, c):
    if not (m > 0 and c > 0):
        raise DomainError("need m > 0 and c > 0")
    if abs(u) >= c:
        raise SuperluminalBoostError(f"|u| = {abs(u)} is not below c = {c}")


def boosted_min_rel(u: float, m: float, c: float, subtract_zitterbewegung: bool = False) -> float:
    """``min_p [omega_c(p) + u p]``, optionally minus the rest energy m c^2."""
    _check_boost(u, m, c)
    beta2 = (u / c) ** 2
    root = math.sqrt(1.0 - beta2)
    if subtract_zitterbewegung:
        # m c^2 (root - 1), written without cancellation
        return -m * u * u / (1.0 + root)
    return m * c * c * root


def boosted_min_rel_numeric(u: float, m: float, c: float, subtract_zitterbewegung: bool = False,
                            xtol: float = 1e-12) -> float:
    """Same minimum by bounded scalar minimization of the dispersion."""
    _check_boost(u, m, c)
    rest = m * c * c if subtract_zitterbewegung else 0.0

    def f(p):
        return dispersion_rel(p, m, c) + u * p - rest

    # minimizer is at p = -u m / sqrt(1 - u^2/c^2); bracket generously
    scale = m * abs(u) / math.sqrt(1.0 - (u / c) ** 2) + m * c + 1.0
    res = optimize.minimize_scalar(f, bounds=(-4.0 * scale, 4.0 * scale), method="bounded",
                                   options={"xatol": xtol * scale, "maxiter": 500})
    return float(res.fun)


def boosted_min_nr(u: float, m: float, n: int) -> float:
    """``n * min_p [p^2/2m + u p] = -n m u^2 / 2``.

    Evaluated exactly on the decimal values of the arguments and rounded
    once, so (0.6, 1, 10) gives -1.8 rather than the binary product.
    """
    if not m > 0 or n < 1:
        raise DomainError("need m > 0 and n >= 1")
    d = Fraction(repr(float(u)))
    return float(-Fraction(int(n)) * Fraction(repr(float(m))) * d * d / 2)


@dataclass(frozen=True)
class BoostReport:
    u: float
    m: float
    c: float
    n: int
    min_rel: float
    min_rel_subtracted: float
    min_nr: float
    cone_half_angle: float
    positivity: dict = field(default_factory=dict)


def contraction_report(u: float, m: float, c: float, n: int) -> BoostReport:
    """n-particle boosted minima and the light-cone half angle arctan(1/c)."""
    rel = n * boosted_min_rel(u, m, c)
    rel_sub = n * boosted_min_rel(u, m, c, subtract_zitterbewegung=True)
    nr = boosted_min_nr(u, m, n)
    return BoostReport(
        u=u, m=m, c=c, n=n,
        min_rel=rel,
        min_rel_subtracted=rel_sub,
        min_nr=nr,
        cone_half_angle=math.atan(1.0 / c),
        positivity={"rel": rel >= 0.0, "rel_subtracted": rel_sub >= 0.0, "nr": nr >= 0.0},
    )
