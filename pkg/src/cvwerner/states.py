"""Constructors for the two-mode state families and truncation control.

The central family is the continuous-variable Werner state

    rho = p |psi(lam)><psi(lam)| + (1 - p) th(mu) (x) th(mu),

a two-mode squeezed vacuum (squeezing factor ``lam = tanh r``) mixed with a
product of thermal states.  Cutoffs are picked from closed-form geometric
tail bounds rather than trial and error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import OneModeState, TwoModeState

DEFAULT_EPS_TAIL = 1e-12


@dataclass(frozen=True)
class WernerParams:
    """Mixing probability ``p``, squeezing factor ``lam``, thermal factor ``mu``."""

    p: float
    lam: float
    mu: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p} outside [0, 1]")
        if not 0.0 <= self.lam < 1.0:
            raise ValueError(f"lam={self.lam} outside [0, 1)")
        if not 0.0 <= self.mu < 1.0:
            raise ValueError(f"mu={self.mu} outside [0, 1)")

    @property
    def r(self) -> float:
        """Squeezing parameter, lam = tanh(r)."""
        return float(np.arctanh(self.lam))


def _tail_bound(lam2: float, mu2: float, n: int) -> float:
    # Worst case over p of the truncated-trace deficit:
    # the squeezed component loses lam^(2n), the thermal product
    # 2 mu^(2n) - mu^(4n).
    return max(lam2**n, 2.0 * mu2**n - mu2 ** (2 * n))


def choose_cutoff(params: WernerParams, eps_tail: float = DEFAULT_EPS_TAIL) -> int:
    """Smallest ``n_max >= 2`` whose geometric tail bound is below ``eps_tail``.

    The bound covers every mixing probability, so states built at this
    cutoff have truncated-trace deficit below ``eps_tail``.
    """
    if eps_tail <= 0:
        raise ValueError("eps_tail must be positive")
    lam2, mu2 = params.lam**2, params.mu**2
    q = max(lam2, mu2)
    if q == 0.0:
        return 2
    n = max(2, math.ceil(math.log(eps_tail) / math.log(q)))
    while _tail_bound(lam2, mu2, n) >= eps_tail:
        n += 1
    while n > 2 and _tail_bound(lam2, mu2, n - 1) < eps_tail:
        n -= 1
    return n


def tmsv_vector(lam: float, n_max: int) -> np.ndarray:
    """Schmidt coefficients sqrt(1 - lam^2) lam^n of the two-mode squeezed vacuum."""
    if not 0.0 <= lam < 1.0:
        raise ValueError(f"lam={lam} outside [0, 1)")
    return np.sqrt(1.0 - lam**2) * lam ** np.arange(n_max, dtype=float)


def tmsv(lam: float, n_max: int, renormalize: bool = False) -> TwoModeState:
    """Projector onto the two-mode squeezed vacuum, truncated at ``n_max``."""
    amps = tmsv_vector(lam, n_max)
    vec = np.zeros(n_max * n_max)
    vec[np.arange(n_max) * n_max + np.arange(n_max)] = amps
    if renormalize:
        vec /= np.linalg.norm(vec)
    return TwoModeState(n_max, np.outer(vec, vec))


def thermal(mu: float, n_max: int, renormalize: bool = False) -> OneModeState:
    """Thermal state diag((1 - mu^2) mu^(2n)); mean photon number mu^2/(1-mu^2)."""
    if not 0.0 <= mu < 1.0:
        raise ValueError(f"mu={mu} outside [0, 1)")
    diag = (1.0 - mu**2) * mu ** (2 * np.arange(n_max, dtype=float))
    if renormalize:
        diag /= diag.sum()
    return OneModeState(n_max, np.diag(diag))


def thermal_entropy(mu: float) -> float:
    """Closed-form entropy of the thermal state, -ln(1-mu^2) - 2 mu^2 ln(mu)/(1-mu^2)."""
    if not 0.0 <= mu < 1.0:
        raise ValueError(f"mu={mu} outside [0, 1)")
    if mu == 0.0:
        return 0.0
    return float(-np.log(1.0 - mu**2) - 2.0 * mu**2 * np.log(mu) / (1.0 - mu**2))


def werner(
    params: WernerParams,
    n_max: int | None = None,
    eps_tail: float = DEFAULT_EPS_TAIL,
    renormalize: bool = False,
) -> TwoModeState:
    """Two-mode Werner state at the given cutoff (auto-chosen when omitted).

    By default the raw truncation is kept so tail-mass diagnostics stay
    meaningful; ``renormalize=True`` rescales the trace to 1.
    """
    if n_max is None:
        n_max = choose_cutoff(params, eps_tail)
    proj = tmsv(params.lam, n_max).matrix
    th = thermal(params.mu, n_max).matrix
    rho = params.p * proj + (1.0 - params.p) * np.kron(th, th)
    if renormalize:
        rho = rho / np.trace(rho).real
    return TwoModeState(n_max, rho)


def maximally_correlated(q: np.ndarray, renormalize: bool = False) -> TwoModeState:
    """State sum_{m,n} q[m, n] |m, m><n, n| from a coefficient matrix.

    ``q`` must be Hermitian with unit trace, and positive semidefinite: a
    photon-count on either mode then projects the other onto the same Fock
    state, which makes every measure in this package analytic for the family.
    """
    q = np.asarray(q, dtype=complex)
    if q.ndim != 2 or q.shape[0] != q.shape[1]:
        raise ValueError("q must be a square matrix")
    n_max = q.shape[0]
    if np.max(np.abs(q - q.conj().T)) > 1e-12:
        raise ValueError("q must be Hermitian")
    w = np.linalg.eigvalsh(q)
    if w[0] < -1e-10:
        raise ValueError(f"coefficient matrix not positive semidefinite (min eig {w[0]:.3e})")
    rho = np.zeros((n_max**2, n_max**2), dtype=q.dtype)
    diag_idx = np.arange(n_max) * n_max + np.arange(n_max)
    rho[np.ix_(diag_idx, diag_idx)] = q
    if np.max(np.abs(rho.imag)) == 0.0:
        rho = rho.real
    if renormalize:
        rho = rho / np.trace(rho).real
    return TwoModeState(n_max, rho)


def ppt_werner(
    lam: float, n_max: int | None = None, eps_tail: float = DEFAULT_EPS_TAIL
) -> TwoModeState:
    """Partially transposed Werner state that is itself a valid state.

    For squeezing factor ``mu^2 = lam`` and mixing probability
    ``p = (1 - lam) / 2`` the partial transpose of the Werner state is
    positive; its matrix is ``N sum lam^(m+n) (|n,m><m,n| + |m,n><m,n|)``
    with ``N = (1 - lam^2)(1 - lam)/2``.
    """
    if not 0.0 <= lam < 1.0:
        raise ValueError(f"lam={lam} outside [0, 1)")
    if n_max is None:
        n_max = choose_cutoff(WernerParams((1.0 - lam) / 2.0, lam, math.sqrt(lam)), eps_tail)
    norm = (1.0 - lam**2) * (1.0 - lam) / 2.0
    powers = lam ** np.arange(n_max, dtype=float)
    weights = norm * np.outer(powers, powers)  # N lam^(m+n)
    dim = n_max * n_max
    rho = np.zeros((dim, dim))
    flat = np.arange(dim)
    rho[flat, flat] = weights.ravel()
    mm, nn = np.meshgrid(np.arange(n_max), np.arange(n_max), indexing="ij")
    rows = (nn * n_max + mm).ravel()
    cols = (mm * n_max + nn).ravel()
    rho[rows, cols] += weights.ravel()
    return TwoModeState(n_max, rho)


def save_state(state: TwoModeState, path) -> None:
    """Write a two-mode state as plain text: header ``n_max``, then one
    ``row col re im`` line per nonzero entry."""
    m = state.matrix
    rows, cols = np.nonzero(m)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{state.n_max}\n")
        for i, j in zip(rows, cols):
            z = complex(m[i, j])
            fh.write(f"{i} {j} {z.real!r} {z.imag!r}\n")


def load_state(path) -> TwoModeState:
    """Read a two-mode state written by :func:`save_state`."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 1:
            raise ValueError("malformed header: expected a single integer n_max")
        n_max = int(header[0])
        mat = np.zeros((n_max**2, n_max**2), dtype=complex)
        for line in fh:
            if not line.strip():
                continue
            i, j, re, im = line.split()
            mat[int(i), int(j)] = complex(float(re), float(im))
    if np.max(np.abs(mat.imag)) == 0.0:
        mat = mat.real
    return TwoModeState(n_max, mat)
