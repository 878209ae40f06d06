"""Gaussian random-matrix ensembles and Poisson reference spectra.

Samplers for the three classical universality classes (GOE, GUE, GSE) plus
uncorrelated Poisson level sequences. They serve as calibration oracles for
the spectral-statistics pipeline: a deduplicated, unfolded sample from each
ensemble must be recognised at its nominal repulsion exponent.

Variance convention: every ensemble uses off-diagonal variance
``1/(2*dim)`` (summed over the real components of one matrix entry), which
puts the limiting semicircle support at ``[-sqrt(2), +sqrt(2)]``. Spacing
statistics are scale invariant after unfolding, so the choice only matters
for density-level tests.

All samplers are pure functions of ``(dim, seed)`` using numpy's PCG64
generator, safe to evaluate in parallel.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgumentError

RNG_ALGORITHM = "pcg64"


class EnsembleKind(enum.Enum):
    POISSON = "poisson"
    GOE = "goe"
    GUE = "gue"
    GSE = "gse"

    @classmethod
    def parse(cls, name: str) -> "EnsembleKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise InvalidArgumentError(f"unknown ensemble kind {name!r}") from None


#: Nominal level-repulsion exponent of each class.
REPULSION_EXPONENT = {
    EnsembleKind.POISSON: 0.0,
    EnsembleKind.GOE: 1.0,
    EnsembleKind.GUE: 2.0,
    EnsembleKind.GSE: 4.0,
}

#: Semicircle radius implied by the variance convention above.
SEMICIRCLE_RADIUS = np.sqrt(2.0)


@dataclass(frozen=True)
class SampledMatrix:
    """One Hermitian realization of a Gaussian ensemble."""

    dim: int
    entries: np.ndarray
    kind: EnsembleKind
    seed: int
    rng_algorithm: str = field(default=RNG_ALGORITHM)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def sample_goe(dim: int, seed: int) -> SampledMatrix:
    """Real symmetric Gaussian matrix.

    Off-diagonal entries are i.i.d. normal with variance ``1/(2*dim)``,
    diagonal entries have twice that variance, which is the orthogonally
    invariant weighting.
    """
    if dim < 2:
        raise InvalidArgumentError(f"GOE needs dim >= 2, got {dim}")
    sd = np.sqrt(1.0 / (2.0 * dim))
    a = _rng(seed).normal(scale=sd, size=(dim, dim))
    h = (a + a.T) / np.sqrt(2.0)
    return SampledMatrix(dim=dim, entries=h, kind=EnsembleKind.GOE, seed=seed)


def sample_gue(dim: int, seed: int) -> SampledMatrix:
    """Complex Hermitian Gaussian matrix with independent re/im parts.

    ``E|H_ij|^2 = 1/(2*dim)`` off diagonal and on it, the unitarily
    invariant weighting.
    """
    if dim < 2:
        raise InvalidArgumentError(f"GUE needs dim >= 2, got {dim}")
    sd = np.sqrt(1.0 / (2.0 * dim))
    rng = _rng(seed)
    a = rng.normal(scale=sd, size=(dim, dim)) + 1j * rng.normal(scale=sd, size=(dim, dim))
    h = (a + a.conj().T) / 2.0
    return SampledMatrix(dim=dim, entries=h, kind=EnsembleKind.GUE, seed=seed)


# Pauli matrices for the quaternion embedding of the symplectic ensemble.
_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def sample_gse(half_dim: int, seed: int) -> SampledMatrix:
    """Self-dual quaternion-real Gaussian matrix, stored as 2N x 2N complex.

    Built as ``H0 (x) I + i H1 (x) sx + i H2 (x) sy + i H3 (x) sz`` with H0
    real symmetric and H1..H3 real antisymmetric; quaternion pairs are
    interleaved, so the symplectic unit is ``I_N (x) [[0,1],[-1,0]]``. Every
    eigenvalue is exactly twofold degenerate (Kramers pairs).
    """
    if half_dim < 2:
        raise InvalidArgumentError(f"GSE needs half_dim >= 2, got {half_dim}")
    dim = 2 * half_dim
    sd = np.sqrt(1.0 / (4.0 * dim))
    rng = _rng(seed)
    a = rng.normal(scale=sd, size=(half_dim, half_dim))
    h0 = (a + a.T) / np.sqrt(2.0)
    h = np.kron(h0, np.eye(2, dtype=complex))
    for pauli in (_SX, _SY, _SZ):
        b = rng.normal(scale=sd, size=(half_dim, half_dim))
        hk = (b - b.T) / np.sqrt(2.0)
        h += 1j * np.kron(hk, pauli)
    return SampledMatrix(dim=dim, entries=h, kind=EnsembleKind.GSE, seed=seed)


def symplectic_unit(half_dim: int) -> np.ndarray:
    """Block-diagonal symplectic unit matching the GSE storage layout."""
    eps = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.kron(np.eye(half_dim), eps)


def sample_poisson_spectrum(count: int, seed: int) -> np.ndarray:
    """Sorted levels with i.i.d. unit-mean exponential spacings."""
    if count < 2:
        raise InvalidArgumentError(f"Poisson spectrum needs count >= 2, got {count}")
    gaps = _rng(seed).exponential(scale=1.0, size=count)
    return np.cumsum(gaps)


def sample_spectrum(kind: EnsembleKind, dim: int, seed: int) -> np.ndarray:
    """Eigenvalues (or Poisson levels) for one realization of `kind`."""
    if kind is EnsembleKind.POISSON:
        return sample_poisson_spectrum(dim, seed)
    if kind is EnsembleKind.GOE:
        return sample_goe(dim, seed).eigenvalues()
    if kind is EnsembleKind.GUE:
        return sample_gue(dim, seed).eigenvalues()
    if kind is EnsembleKind.GSE:
        if dim % 2:
            raise InvalidArgumentError("GSE spectrum dim must be even")
        return sample_gse(dim // 2, seed).eigenvalues()
    raise InvalidArgumentError(f"unknown kind {kind}")


def wigner_reference_pdf(kind: EnsembleKind, s) -> np.ndarray:
    """Wigner-surmise nearest-neighbour spacing density, unit mean spacing.

    ``P(s) ~ s^beta * exp(-c s^2)`` with beta = 1, 2, 4 for GOE/GUE/GSE and
    ``exp(-s)`` for Poisson.
    """
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise InvalidArgumentError("spacing argument must be nonnegative")
    if kind is EnsembleKind.POISSON:
        return np.exp(-s)
    if kind is EnsembleKind.GOE:
        return (np.pi / 2.0) * s * np.exp(-np.pi * s**2 / 4.0)
    if kind is EnsembleKind.GUE:
        return (32.0 / np.pi**2) * s**2 * np.exp(-4.0 * s**2 / np.pi)
    if kind is EnsembleKind.GSE:
        return (2.0**18 / (3.0**6 * np.pi**3)) * s**4 * np.exp(-64.0 * s**2 / (9.0 * np.pi))
    raise InvalidArgumentError(f"unknown kind {kind}")


def semicircle_cdf(x, radius: float = SEMICIRCLE_RADIUS) -> np.ndarray:
    """CDF of the semicircle law on ``[-radius, radius]`` (density tests)."""
    x = np.clip(np.asarray(x, dtype=float), -radius, radius)
    u = x / radius
    return 0.5 + (u * np.sqrt(1.0 - u**2) + np.arcsin(u)) / np.pi
