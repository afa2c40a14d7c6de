"""Truncated Fock-basis linear algebra for one- and two-mode states.

Composite index convention: the two-mode basis ket ``|m, n>`` sits at flat
index ``m * n_max + n``.  Every module in this package shares this layout,
so a two-mode matrix reshaped to ``(n_max, n_max, n_max, n_max)`` has axes
``(m, n, m', n')``.

All entropies are in nats.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh

HERMITICITY_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10
# Dense two-mode matrices above this dimension would not fit desk-scale RAM.
MAX_TWO_MODE_DIM = 17_000

# Spectra are plain arrays of real eigenvalues, sorted descending.
Spectrum = np.ndarray


class InvalidSpectrumError(ValueError):
    """An eigenvalue or probability is negative beyond truncation noise."""


class NonHermitianError(ValueError):
    """A matrix that must be Hermitian is not, beyond tolerance."""


def _as_state_matrix(matrix, dim, tol=HERMITICITY_TOL):
    m = np.asarray(matrix)
    if m.dtype not in (np.float64, np.complex128):
        m = m.astype(complex)
    if m.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {m.shape}")
    dev = np.max(np.abs(m - m.conj().T)) if dim else 0.0
    if dev > tol:
        raise NonHermitianError(f"matrix deviates from Hermiticity by {dev:.3e}")
    if m.dtype == np.complex128 and np.max(np.abs(m.imag)) == 0.0:
        m = np.ascontiguousarray(m.real)
    m = np.ascontiguousarray(m)
    m.flags.writeable = False
    return m


@dataclass(frozen=True)
class OneModeState:
    """Single-mode density matrix on the first ``n_max`` Fock states."""

    n_max: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be positive")
        object.__setattr__(self, "matrix", _as_state_matrix(self.matrix, self.n_max))

    @property
    def dim(self) -> int:
        return self.n_max

    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    def validate(self, eps_tail=1e-10):
        _validate_state(self, eps_tail)
        return self


@dataclass(frozen=True)
class TwoModeState:
    """Two-mode density matrix on the |m, n>, m, n < n_max basis."""

    n_max: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.n_max < 2:
            raise ValueError("n_max must be at least 2")
        dim = self.n_max**2
        if dim > MAX_TWO_MODE_DIM:
            raise ValueError(
                f"two-mode dimension {dim} exceeds the dense-storage limit "
                f"{MAX_TWO_MODE_DIM}; pass a smaller cutoff"
            )
        object.__setattr__(self, "matrix", _as_state_matrix(self.matrix, dim))

    @property
    def dim(self) -> int:
        return self.n_max**2

    def index(self, m: int, n: int) -> int:
        """Flat index of the basis ket |m, n>."""
        return m * self.n_max + n

    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    def validate(self, eps_tail=1e-10):
        _validate_state(self, eps_tail)
        return self


def _validate_state(state, eps_tail):
    tr = state.trace()
    if abs(tr - 1.0) > eps_tail:
        raise ValueError(f"trace {tr!r} deviates from 1 by more than {eps_tail:g}")
    w = eig_spectrum(state)
    if w[-1] < EIGENVALUE_FLOOR:
        raise InvalidSpectrumError(f"eigenvalue {w[-1]:.3e} below {EIGENVALUE_FLOOR:g}")


def von_neumann_entropy(spectrum, floor=EIGENVALUE_FLOOR) -> float:
    """-sum(v ln v) over the spectrum, with 0 ln 0 = 0.

    Entries in ``[floor, 0)`` are treated as truncation noise and clipped to
    zero; anything below ``floor`` raises ``InvalidSpectrumError``.
    """
    v = np.asarray(spectrum, dtype=float).ravel()
    if v.size and float(v.min()) < floor:
        raise InvalidSpectrumError(
            f"spectrum entry {v.min():.6e} below the tolerated floor {floor:g}"
        )
    v = v[v > 0.0]
    if not v.size:
        return 0.0
    return float(-(v * np.log(v)).sum()) + 0.0


def shannon_entropy(probabilities, floor=-1e-12) -> float:
    """Shannon entropy -sum(p ln p) of a probability table, in nats."""
    p = np.asarray(probabilities, dtype=float).ravel()
    if p.size and float(p.min()) < floor:
        raise InvalidSpectrumError(f"negative probability {p.min():.6e}")
    p = p[p > 0.0]
    if not p.size:
        return 0.0
    return float(-(p * np.log(p)).sum()) + 0.0


def partial_trace(state: TwoModeState, mode: str = "A") -> OneModeState:
    """Trace out the named mode, returning the state of the other one."""
    n = state.n_max
    r = state.matrix.reshape(n, n, n, n)
    if mode == "A":
        reduced = np.einsum("anam->nm", r)
    elif mode == "B":
        reduced = np.einsum("nama->nm", r)
    else:
        raise ValueError("mode must be 'A' or 'B'")
    return OneModeState(n, reduced)


def partial_transpose(state: TwoModeState, mode: str = "A") -> TwoModeState:
    """Transpose the indices of one mode; the result may be non-positive."""
    n = state.n_max
    r = state.matrix.reshape(n, n, n, n)
    if mode == "A":
        out = r.transpose(2, 1, 0, 3)
    elif mode == "B":
        out = r.transpose(0, 3, 2, 1)
    else:
        raise ValueError("mode must be 'A' or 'B'")
    return TwoModeState(n, out.reshape(n * n, n * n))


def two_component_mixture_spectrum(zeta1, zeta2, overlap_sq):
    """Eigenvalue pair of ``z1 |a><a| + z2 |b><b|`` with ``|<a|b>|^2`` given.

    The support is at most two-dimensional, with eigenvalues
    ``(1 +- sqrt(1 - 4 z1 z2 (1 - overlap_sq))) / 2``.
    """
    if zeta1 < 0 or zeta2 < 0 or abs(zeta1 + zeta2 - 1.0) > 1e-12:
        raise ValueError(f"weights ({zeta1}, {zeta2}) are not a probability pair")
    if not 0.0 <= overlap_sq <= 1.0 + 1e-12:
        raise ValueError(f"overlap_sq {overlap_sq} outside [0, 1]")
    disc = np.sqrt(max(0.0, 1.0 - 4.0 * zeta1 * zeta2 * (1.0 - min(overlap_sq, 1.0))))
    return (1.0 + disc) / 2.0, (1.0 - disc) / 2.0


def is_more_mixed(a, b, tol=1e-12) -> bool:
    """True iff spectrum ``a`` is majorized by ``b`` (a is more mixed).

    Both spectra are sorted descending and zero-padded to a common length;
    the test is ``cumsum(a)_k <= cumsum(b)_k`` for every k.
    """
    a = np.sort(np.asarray(a, dtype=float).ravel())[::-1]
    b = np.sort(np.asarray(b, dtype=float).ravel())[::-1]
    k = max(a.size, b.size)
    a = np.pad(a, (0, k - a.size))
    b = np.pad(b, (0, k - b.size))
    return bool(np.all(np.cumsum(a) <= np.cumsum(b) + tol))


def eig_spectrum(rho, residual_probes=4, seed=0) -> np.ndarray:
    """Descending real eigenvalues of a Hermitian state or matrix.

    The decomposition is verified by applying it to a few random probe
    vectors; the residual must stay below ``1e-9 * dim``.
    """
    m = getattr(rho, "matrix", None)
    if m is None:
        m = _as_state_matrix(rho, np.asarray(rho).shape[0])
    dim = m.shape[0]
    w, v = eigh(m, check_finite=False)
    if residual_probes:
        rng = np.random.default_rng(seed)
        x = rng.standard_normal((dim, residual_probes))
        resid = np.max(np.abs(m @ x - v @ (w[:, None] * (v.conj().T @ x))))
        if resid > 1e-9 * dim:
            raise ValueError(f"eigendecomposition residual {resid:.3e} > {1e-9 * dim:.1e}")
    return w[::-1].copy()
