"""Few-boson exact diagonalization and the hard-core excitation branch.

The contact interaction on a lattice is on-site, so the n-boson problem is
the Bose-Hubbard sector Hamiltonian

    H = -t sum_<ij> (b_i^+ b_j + h.c.) + (U/2) sum_i n_i (n_i - 1).

Stability of matter asks for E_n >= -C n for all n; on a desk we can only
look at a range of n and report whether E_n/n keeps dropping.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np
import scipy.sparse as sps
from scipy.sparse import linalg as spla

from .errors import BasisSizeError, DomainError, SolverError

DEFAULT_CAP = 500_000
DENSE_MAX = 1000


@dataclass(frozen=True)
class LatticeGeometry:
    dim: int = 1
    L: int = 8
    periodic: bool = True

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise DomainError("dim must be 1 or 2")
        if self.L < 2:
            raise DomainError("need L >= 2")

    @property
    def sites(self) -> int:
        return self.L**self.dim

    def bonds(self) -> list[tuple[int, int]]:
        """Nearest-neighbour pairs (i < j), each listed once."""
        L = self.L
        out = set()
        for s in range(self.sites):
            coords = [(s // L**a) % L for a in range(self.dim)]
            for a in range(self.dim):
                c = coords[a] + 1
                if c == L:
                    if not self.periodic:
                        continue
                    c = 0
                nb = list(coords)
                nb[a] = c
                j = sum(x * L**b for b, x in enumerate(nb))
                if j != s:
                    out.add((min(s, j), max(s, j)))
        return sorted(out)


@dataclass
class FockBasis:
    n: int
    sites: int
    states: np.ndarray  # (dim_basis, sites) occupation numbers, lexicographic

    @property
    def dim_basis(self) -> int:
        return len(self.states)

    def index(self):
        return {tuple(row): i for i, row in enumerate(self.states.tolist())}


@dataclass(frozen=True)
class EDResult:
    E0: float
    residual: float
    iterations: int
    n: int
    sites: int
    U: float
    t: float
    vector: np.ndarray | None = None


def basis_size(n: int, sites: int) -> int:
    return math.comb(n + sites - 1, n)


def build_basis(n: int, sites: int, cap: int = DEFAULT_CAP) -> FockBasis:
    """All occupation vectors of ``n`` bosons on ``sites`` sites, in descending lexicographic order."""
    if n < 1 or sites < 2:
        raise DomainError("need n >= 1 and sites >= 2")
    size = basis_size(n, sites)
    if size > cap:
        raise BasisSizeError(f"basis dimension {size} exceeds cap {cap}", required=size)
    states = np.zeros((size, sites), dtype=np.int16)
    # multisets of occupied site labels, in lexicographic order
    for row, combo in enumerate(combinations_with_replacement(range(sites), n)):
        np.add.at(states[row], list(combo), 1)
    return FockBasis(n, sites, states)


def hamiltonian(basis: FockBasis, geom: LatticeGeometry, t: float, U: float) -> sps.csr_matrix:
    """Sparse sector Hamiltonian (never densified for large bases)."""
    if geom.sites != basis.sites:
        raise DomainError("basis and lattice disagree on the number of sites")
    states = basis.states.astype(np.int64)
    dim = basis.dim_basis
    # rank states by packed integer keys when they fit, else by a dict
    base = basis.n + 1
    powers = base ** np.arange(basis.sites - 1, -1, -1, dtype=np.int64) if base ** basis.sites < 2**62 else None
    if powers is not None:
        keys = states @ powers
        order = np.argsort(keys)
        sorted_keys = keys[order]

        def lookup(new_states):
            pos = np.searchsorted(sorted_keys, new_states @ powers)
            return order[pos]
    else:
        table = basis.index()

        def lookup(new_states):
            return np.array([table[tuple(r)] for r in new_states.tolist()])

    rows, cols, vals = [], [], []
    diag = 0.5 * U * np.sum(states * (states - 1), axis=1)
    rows.append(np.arange(dim))
    cols.append(np.arange(dim))
    vals.append(diag.astype(float))
    for i, j in geom.bonds():
        for src, dst in ((i, j), (j, i)):
            mask = states[:, src] > 0
            idx = np.nonzero(mask)[0]
            if idx.size == 0:
                continue
            new = states[idx].copy()
            amp = np.sqrt(new[:, src] * (new[:, dst] + 1.0))
            new[:, src] -= 1
            new[:, dst] += 1
            rows.append(lookup(new))
            cols.append(idx)
            vals.append(-t * amp)
    H = sps.csr_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=(dim, dim))
    H.sum_duplicates()
    return H


def ground_energy(n: int, geom: LatticeGeometry, t: float = 1.0, U: float = 0.0,
                  tol: float = 1e-8, seed: int = 0, cap: int = DEFAULT_CAP,
                  maxiter: int = 10_000) -> EDResult:
    """Lowest eigenvalue of the n-boson sector Hamiltonian."""
    if not t > 0:
        raise DomainError("hopping must be positive")
    basis = build_basis(n, geom.sites, cap)
    H = hamiltonian(basis, geom, t, U)
    dim = basis.dim_basis
    if dim <= DENSE_MAX:
        w, v = np.linalg.eigh(H.toarray())
        e0, vec, iters = float(w[0]), v[:, 0], 1
    else:
        rng = np.random.default_rng(seed)
        v0 = rng.standard_normal(dim)
        counter = {"n": 0}

        def matvec(x):
            counter["n"] += 1
            return H @ x

        op = spla.LinearOperator((dim, dim), matvec=matvec, dtype=float)
        try:
            w, v = spla.eigsh(op, k=1, which="SA", v0=v0, tol=1e-12, maxiter=maxiter)
        except spla.ArpackNoConvergence as exc:
            best = float(exc.eigenvalues[0]) if len(exc.eigenvalues) else None
            raise SolverError("Lanczos did not converge", best=best) from exc
        e0, vec, iters = float(w[0]), v[:, 0], counter["n"]
    vec = vec / np.linalg.norm(vec)
    residual = float(np.linalg.norm(H @ vec - e0 * vec))
    if residual >= tol:
        raise SolverError(f"eigen residual {residual:.3e} above tolerance {tol:.1e}", best=e0)
    return EDResult(e0, residual, iters, n, geom.sites, U, t, vec)


def uniform_rayleigh_quotient(n: int, geom: LatticeGeometry, t: float, U: float) -> float:
    basis = build_basis(n, geom.sites)
    H = hamiltonian(basis, geom, t, U)
    x = np.ones(basis.dim_basis)
    return float(x @ (H @ x) / (x @ x))


@dataclass(frozen=True)
class StabilityScan:
    rows: list  # (n, E_n, E_n / n)
    verdict: str
    C: float


def stability_scan(n_list, geom: LatticeGeometry, t: float = 1.0, U: float = 0.0,
                   seed: int = 0, strict_tol: float = 1e-10) -> StabilityScan:
    """Ground energies over ``n_list`` and a trend verdict.

    ``UNSTABLE-SIGNATURE`` when E_n/n is strictly decreasing over the whole
    scan (collapse trend); otherwise ``STABLE`` with the empirical constant
    ``C = max(0, -min E_n/n)``.
    """
    n_list = sorted(int(n) for n in n_list)
    rows = []
    for n in n_list:
        res = ground_energy(n, geom, t, U, seed=seed)
        rows.append((n, res.E0, res.E0 / n))
    per = [r[2] for r in rows]
    decreasing = len(per) >= 2 and all(b < a - strict_tol for a, b in zip(per[:-1], per[1:]))
    C = max(0.0, -min(per))
    return StabilityScan(rows, "UNSTABLE-SIGNATURE" if decreasing else "STABLE", C)


def _fermi_sea(N: int) -> list[int]:
    h = (N - 1) // 2
    return list(range(-h, h + 1))


def tg_excitation(N: int, L: float, j: int, max_j: int | None = None) -> float:
    """Particle-branch excitation energy at momentum p = 2 pi j / L (units 2m = 1).

    Hard-core bosons on a ring map to free fermions; for odd N the fermion
    momenta are 2 pi n / L with the Fermi sea n = -(N-1)/2 .. (N-1)/2. The
    excitation is found by enumerating all single particle-hole moves
    carrying momentum p and taking the highest-energy one (which promotes
    the fermion at the Fermi edge); energies are summed over the whole
    occupied set, in integer units of (2 pi / L)^2.
    """
    if N < 1 or N % 2 == 0:
        raise DomainError("need odd N >= 1")
    if max_j is None:
        max_j = 4 * N
    if not 1 <= j <= max_j:
        raise DomainError(f"j={j} outside enumeration window [1, {max_j}]")
    sea = _fermi_sea(N)
    occupied = set(sea)
    e_ground = sum(n * n for n in sea)
    best = None
    for hole in sea:
        particle = hole + j
        if particle in occupied:
            continue
        excited = [n for n in sea if n != hole] + [particle]
        de = sum(n * n for n in excited) - e_ground
        best = de if best is None else max(best, de)
    if best is None:
        raise DomainError("no particle-hole move with this momentum")
    return (2.0 * math.pi / L) ** 2 * best


def tg_excitation_spectrum(N: int, L: float, j: int) -> list[float]:
    """All single particle-hole excitation energies at momentum 2 pi j / L."""
    sea = _fermi_sea(N)
    occupied = set(sea)
    out = []
    for hole in sea:
        particle = hole + j
        if particle not in occupied:
            out.append((2.0 * math.pi / L) ** 2 * (particle * particle - hole * hole))
    return sorted(out)


def fermi_momentum(N: int, L: float) -> float:
    return math.pi * (N - 1) / L
