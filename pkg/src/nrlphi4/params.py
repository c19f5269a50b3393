"""Model constants, mass-counterterm running and the relativistic dispersion.

Units: hbar = 1, momenta and inverse lengths share units. The scattering
formulas elsewhere in the package reduce to the two-body problem at unit
bare mass, so ``m = 1`` is the default wherever a mass is optional.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Union

from .errors import DegenerateMassError, DomainError


def bare_coupling(lambda0: float, m0_sq: float) -> float:
    """Dimensionless contact coupling ``g0 = 3 * lambda0 / m0_sq``.

    The sign follows ``m0_sq``: a negative bare mass squared (which the
    running counterterm produces at large cutoff) gives an attractive
    contact term.
    """
    if not lambda0 > 0:
        raise DomainError(f"lambda0 must be positive, got {lambda0}")
    if m0_sq == 0:
        raise DegenerateMassError("bare mass squared is zero; coupling 3*lambda0/m0^2 is undefined")
    return 3.0 * lambda0 / m0_sq


def running_bare_mass(m_sq: float, c_log: float, kappa: float, kappa_ref: float) -> float:
    """Bare mass squared ``m_sq - c_log * ln(kappa / kappa_ref)`` at fixed renormalized mass."""
    if not m_sq > 0:
        raise DomainError(f"renormalized mass squared must be positive, got {m_sq}")
    if not (c_log > 0 and kappa > 0 and kappa_ref > 0):
        raise DomainError("c_log, kappa and kappa_ref must be positive")
    return m_sq - c_log * math.log(kappa / kappa_ref)


def crossover_cutoff(m_sq: float, c_log: float, kappa_ref: float) -> float:
    """Cutoff at which the running bare mass squared changes sign."""
    return kappa_ref * math.exp(m_sq / c_log)


def dispersion_rel(p, m: float, c: float):
    """Relativistic one-particle energy ``sqrt(p^2 c^2 + m^2 c^4)``.

    ``p`` may be a scalar or a numpy array (interpreted as |p|).
    """
    if m < 0 or not c > 0:
        raise DomainError("need m >= 0 and c > 0")
    return (p * p * c * c + (m * c * c) ** 2) ** 0.5


def nr_expansion_remainder(p, m: float, c: float):
    """``omega(p) - m c^2 - p^2/(2m)``, evaluated without cancellation.

    Uses the exact rewriting ``-p^4 c^2 / (2m (omega + m c^2)^2)``, which is
    accurate at large ``c`` where the naive difference loses all digits.
    """
    if m == 0:
        raise DegenerateMassError("non-relativistic expansion needs m > 0")
    if m < 0 or not c > 0:
        raise DomainError("need m > 0 and c > 0")
    omega = dispersion_rel(p, m, c)
    p2 = p * p
    return -(p2 * p2) * c * c / (2.0 * m * (omega + m * c * c) ** 2)


@dataclass(frozen=True)
class PhysParams:
    """Single source of model constants.

    ``mode`` is ``"i"`` (no mass counterterm, ``m0_sq == m_sq``) or ``"ii"``
    (renormalized mass held fixed, bare mass runs with the cutoff). Use
    :meth:`case_i` / :meth:`case_ii` to get a consistent instance.
    """

    m0_sq: float
    lambda0: float
    m_sq: float = 1.0
    c: float = 1.0
    kappa: float = 100.0
    mu: float = 1.0
    g: float = math.pi
    c_log: float = 1.0
    kappa_ref: float = 1.0
    mode: str = "ii"

    def __post_init__(self):
        if not self.lambda0 > 0:
            raise DomainError(f"lambda0 must be positive, got {self.lambda0}")
        for name in ("m_sq", "c", "kappa", "mu", "c_log", "kappa_ref"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")
        if self.g == 0 or math.isnan(self.g):
            raise DomainError("renormalized coupling must be finite and nonzero")
        if self.mode not in ("i", "ii"):
            raise DomainError(f"mode must be 'i' or 'ii', got {self.mode!r}")
        if self.mode == "ii":
            expected = running_bare_mass(self.m_sq, self.c_log, self.kappa, self.kappa_ref)
            if self.m0_sq != expected:
                raise DomainError(
                    f"case ii requires m0_sq = {expected!r} at kappa={self.kappa}, got {self.m0_sq!r}"
                )
        elif self.m0_sq != self.m_sq:
            raise DomainError("case i requires m0_sq == m_sq")

    @classmethod
    def case_i(cls, m_sq: float, lambda0: float, **kw) -> "PhysParams":
        return cls(m0_sq=m_sq, lambda0=lambda0, m_sq=m_sq, mode="i", **kw)

    @classmethod
    def case_ii(cls, m_sq: float, lambda0: float, c_log: float, kappa: float,
                kappa_ref: float = 1.0, **kw) -> "PhysParams":
        m0_sq = running_bare_mass(m_sq, c_log, kappa, kappa_ref)
        return cls(m0_sq=m0_sq, lambda0=lambda0, m_sq=m_sq, c_log=c_log,
                   kappa=kappa, kappa_ref=kappa_ref, mode="ii", **kw)

    @property
    def g0(self) -> float:
        return bare_coupling(self.lambda0, self.m0_sq)

    @property
    def mass(self) -> float:
        return math.sqrt(self.m_sq)

    def at_cutoff(self, kappa: float) -> "PhysParams":
        """Same physical constants, new cutoff (bare mass re-run in case ii)."""
        if self.mode == "i":
            return replace(self, kappa=kappa)
        m0_sq = running_bare_mass(self.m_sq, self.c_log, kappa, self.kappa_ref)
        return replace(self, kappa=kappa, m0_sq=m0_sq)


# Regularization schemes. kappa = pi / eps converts between the
# length-scale schemes and the sharp momentum cutoff.

@dataclass(frozen=True)
class SharpCutoff:
    kappa: float

    def __post_init__(self):
        if not self.kappa > 0:
            raise DomainError("kappa must be positive")

    @property
    def eps(self) -> float:
        return math.pi / self.kappa


@dataclass(frozen=True)
class SquareWell:
    eps: float

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("eps must be positive")

    @property
    def kappa(self) -> float:
        return math.pi / self.eps


@dataclass(frozen=True)
class Lattice:
    eps: float

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("eps must be positive")

    @property
    def kappa(self) -> float:
        return math.pi / self.eps


@dataclass(frozen=True)
class Renormalized:
    g: float
    mu: float


RegScheme = Union[SharpCutoff, SquareWell, Lattice]


def as_cutoff(scheme: RegScheme) -> SharpCutoff:
    if isinstance(scheme, SharpCutoff):
        return scheme
    if isinstance(scheme, (SquareWell, Lattice)):
        return SharpCutoff(scheme.kappa)
    raise DomainError(f"{type(scheme).__name__} has no cutoff scale")
