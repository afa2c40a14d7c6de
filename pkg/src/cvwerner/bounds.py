"""Upper and lower bounds on discord for general two-mode Werner states.

Photon counting in the local eigenbasis gives a nonoptimized upper bound

    U = S(rho_B) - S(rho) + H_eig(A|B),

which coincides with the measurement-induced disturbance; a concavity
argument gives the lower bound L = S(rho_B) - S(rho) + (1-p) S_th(mu).
Whether U is tight away from mu = 0 is open, so nothing here labels U as
the discord itself.

The global entropy never needs the full two-mode matrix: the state splits
into an analytic branch of product-basis eigenvalues and a correlated
block whose n_max x n_max matrix is diagonalized numerically.  Dense
matrix-based twins of U and MID (``*_dense``) serve as oracles for
arbitrary states with diagonal marginals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import (
    TwoModeState,
    eig_spectrum,
    partial_trace,
    shannon_entropy,
    von_neumann_entropy,
)
from .states import WernerParams, choose_cutoff, thermal_entropy


class TruncationError(ValueError):
    """An internal identity failed, signaling an inconsistent truncation."""


def reduced_spectrum(p: float, lam: float, mu: float, n_max: int) -> np.ndarray:
    """Eigenvalues g_m = p(1-lam^2)lam^(2m) + (1-p)(1-mu^2)mu^(2m) of either
    reduced state (diagonal in the Fock basis)."""
    m = np.arange(n_max, dtype=float)
    return p * (1.0 - lam**2) * lam ** (2 * m) + (1.0 - p) * (1.0 - mu**2) * mu ** (2 * m)


def marginal_entropy(p: float, lam: float, mu: float, n_max: int) -> float:
    """Entropy of the reduced state from its truncated spectrum."""
    return von_neumann_entropy(reduced_spectrum(p, lam, mu, n_max))


def conditional_spectrum(p: float, lam: float, mu: float, m: int, n_max: int) -> np.ndarray:
    """Spectrum of the post-measurement state after counting m photons."""
    g_m = float(reduced_spectrum(p, lam, mu, m + 1)[m])
    n = np.arange(n_max, dtype=float)
    eta = (1.0 - p) * (1.0 - mu**2) ** 2 * mu ** (2 * (m + n))
    eta[m] += p * (1.0 - lam**2) * lam ** (2 * m)
    return eta / g_m


def _conditional_entropy_direct(p, lam, mu, n_max, weight_floor=1e-16):
    g = reduced_spectrum(p, lam, mu, n_max)
    m = np.arange(n_max, dtype=float)
    eta = (1.0 - p) * (1.0 - mu**2) ** 2 * mu ** (2.0 * np.add.outer(m, m))
    eta[np.diag_indices(n_max)] += p * (1.0 - lam**2) * lam ** (2 * m)
    keep = g > weight_floor
    eta = eta[keep] / g[keep, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        xlogx = np.where(eta > 0.0, eta * np.log(np.where(eta > 0.0, eta, 1.0)), 0.0)
    return float((g[keep] * -(xlogx.sum(axis=1))).sum())


def _conditional_entropy_closed(p, lam, mu, n_max, weight_floor=1e-16):
    # Per-m entropy in closed form: the off-diagonal thermal tail is summed
    # analytically, only the count-m term is left explicit.
    g = reduced_spectrum(p, lam, mu, n_max)
    m = np.arange(n_max, dtype=float)
    one = 1.0 - mu**2
    k = (1.0 - p) * one**2 * mu ** (2 * m) / g
    eta_mm = (p * (1.0 - lam**2) * lam ** (2 * m) + (1.0 - p) * one**2 * mu ** (4 * m)) / g
    log_c = np.log((1.0 - p) * one**2 / g)
    tail = log_c * (1.0 / one - mu ** (2 * m)) + np.log(mu**2) * (
        m / one + mu**2 / one**2 - 2.0 * m * mu ** (2 * m)
    )
    with np.errstate(divide="ignore", invalid="ignore"):
        diag_term = np.where(eta_mm > 0.0, eta_mm * np.log(np.where(eta_mm > 0.0, eta_mm, 1.0)), 0.0)
    per_m = -k * tail - diag_term
    keep = g > weight_floor
    return float((g[keep] * per_m[keep]).sum())


def _conditional_tail_bound(p, lam, mu, n_max):
    # S(rho_A|m) <= ln 2 + S_th(mu) for every m, and the missing weight is
    # the geometric tail of g.
    weight_tail = p * lam ** (2 * n_max) + (1.0 - p) * mu ** (2 * n_max)
    return (np.log(2.0) + thermal_entropy(mu)) * weight_tail


def conditional_entropy_photon_counting(
    p: float, lam: float, mu: float, n_max: int, check_tol: float = 1e-8
) -> float:
    """Conditional entropy after photon counting on one mode,
    ``sum_m p_B(m) S(rho_A|m)``.

    Evaluated twice, from the closed per-m expression and from the raw
    conditional spectra; a mismatch beyond ``check_tol`` raises
    ``TruncationError``.  At ``mu = 0`` or ``p = 1`` every conditional
    state is pure and the result is exactly zero.
    """
    if mu == 0.0 or p == 1.0:
        return 0.0
    closed = _conditional_entropy_closed(p, lam, mu, n_max)
    direct = _conditional_entropy_direct(p, lam, mu, n_max)
    if abs(closed - direct) > check_tol:
        raise TruncationError(
            f"closed-form vs direct conditional entropy differ by "
            f"{abs(closed - direct):.3e} (> {check_tol:g}) at n_max={n_max}"
        )
    return closed


def correlated_block(p: float, lam: float, mu: float, n_max: int) -> np.ndarray:
    """The n_max x n_max matrix whose eigenvalues are the non-analytic part
    of the global spectrum."""
    powers = lam ** np.arange(n_max, dtype=float)
    block = p * (1.0 - lam**2) * np.outer(powers, powers)
    idx = np.diag_indices(n_max)
    block[idx] += (1.0 - p) * (1.0 - mu**2) ** 2 * mu ** (4 * np.arange(n_max, dtype=float))
    return block


def global_entropy(
    p: float, lam: float, mu: float, n_max: int, trace_tol: float = 1e-8
) -> float:
    """Global entropy from the analytic product-basis branch plus the
    numerically diagonalized correlated block.

    Raises ``TruncationError`` when the two eigenvalue branches fail to sum
    to 1 within ``trace_tol``.
    """
    if mu == 0.0 or p == 1.0:
        branch_sum = 0.0
        branch_entropy = 0.0
    else:
        branch_sum = 2.0 * mu**2 * (1.0 - p) / (1.0 + mu**2)
        branch_entropy = -branch_sum * (
            np.log((1.0 - p) * (1.0 - mu**2) ** 2)
            + 2.0 * np.log(mu) * (1.0 + mu**2 + 2.0 * mu**4) / (1.0 - mu**4)
        )
    block = correlated_block(p, lam, mu, n_max)
    f = np.linalg.eigvalsh(block)
    total = branch_sum + float(f.sum())
    if abs(total - 1.0) > trace_tol:
        raise TruncationError(
            f"eigenvalue branches sum to {total!r} (off by {total - 1.0:.3e} "
            f"> {trace_tol:g}); increase n_max={n_max}"
        )
    return float(branch_entropy) + von_neumann_entropy(f)


def joint_photon_distribution(p: float, lam: float, mu: float, n_max: int) -> np.ndarray:
    """Photon-count statistics p(m, n) of the Werner state, in closed form."""
    m = np.arange(n_max, dtype=float)
    table = (1.0 - p) * (1.0 - mu**2) ** 2 * mu ** (2.0 * np.add.outer(m, m))
    table[np.diag_indices(n_max)] += p * (1.0 - lam**2) * lam ** (2 * m)
    return table


def upper_bound(p: float, lam: float, mu: float, n_max: int) -> float:
    """Photon-counting upper bound U = S(rho_B) - S(rho) + H_eig(A|B)."""
    return (
        marginal_entropy(p, lam, mu, n_max)
        - global_entropy(p, lam, mu, n_max)
        + conditional_entropy_photon_counting(p, lam, mu, n_max)
    )


def lower_bound(p: float, lam: float, mu: float, n_max: int) -> float:
    """Concavity lower bound L = S(rho_B) - S(rho) + (1-p) S_th(mu).

    Reported signed; it may be negative (clip for plotting)."""
    return (
        marginal_entropy(p, lam, mu, n_max)
        - global_entropy(p, lam, mu, n_max)
        + (1.0 - p) * thermal_entropy(mu)
    )


def mid(p: float, lam: float, mu: float, n_max: int, check_tol: float = 1e-8) -> float:
    """Measurement-induced disturbance M = H(p_AB) - S(rho).

    The identity M = U holds exactly for this family; a violation beyond
    ``check_tol`` raises ``TruncationError``.
    """
    value = shannon_entropy(joint_photon_distribution(p, lam, mu, n_max)) - global_entropy(
        p, lam, mu, n_max
    )
    u = upper_bound(p, lam, mu, n_max)
    if abs(value - u) > check_tol:
        raise TruncationError(
            f"MID {value!r} and upper bound {u!r} differ by {abs(value - u):.3e} "
            f"(> {check_tol:g}) at n_max={n_max}"
        )
    return value


def discord_is_positive(p: float, lam: float) -> bool:
    """Commutator witness: the off-diagonal blocks <i|rho|j> are non-normal
    exactly when p > 0 and 0 < lam < 1, certifying positive discord."""
    return p > 0.0 and 0.0 < lam < 1.0


def p_separable(mu: float) -> float:
    """Separability threshold of the lam = mu^4 family."""
    return (1.0 - mu**2) ** 2 / (2.0 * (1.0 - mu**2 + mu**4))


def p_ppt(mu: float) -> float:
    """Positive-partial-transpose threshold of the lam = mu^4 family."""
    return (1.0 - mu**2) ** 2 / ((1.0 - mu**2) ** 2 + (1.0 - mu**8) * mu**2)


def separability_region(p: float, mu: float) -> str:
    """Classify a lam = mu^4 Werner state: below ``p_separable`` the state
    is separable, up to ``p_ppt`` it is PPT with unknown separability,
    above it is entangled."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if not 0.0 <= mu < 1.0:
        raise ValueError(f"mu={mu} outside [0, 1)")
    if p <= p_separable(mu):
        return "separable"
    if p <= p_ppt(mu):
        return "PPT-unknown"
    return "entangled-nonPPT"


@dataclass(frozen=True)
class BoundsReport:
    """All photon-counting bound quantities at one parameter point."""

    p: float
    lam: float
    mu: float
    n_max: int
    marginal_entropy: float
    global_entropy: float
    conditional_entropy: float
    upper: float
    lower: float
    mid: float
    region: str
    tail_bound: float


def bounds_report(
    params: WernerParams, n_max: int | None = None, eps_tail: float = 1e-12
) -> BoundsReport:
    p, lam, mu = params.p, params.lam, params.mu
    if n_max is None:
        n_max = choose_cutoff(params, eps_tail)
    s_b = marginal_entropy(p, lam, mu, n_max)
    s_g = global_entropy(p, lam, mu, n_max)
    h_eig = conditional_entropy_photon_counting(p, lam, mu, n_max)
    u = s_b - s_g + h_eig
    low = s_b - s_g + (1.0 - p) * thermal_entropy(mu)
    m = mid(p, lam, mu, n_max)
    if abs(lam - mu**4) < 1e-12:
        region = separability_region(p, mu)
    else:
        region = "not-classified"
    return BoundsReport(
        p=p,
        lam=lam,
        mu=mu,
        n_max=n_max,
        marginal_entropy=s_b,
        global_entropy=s_g,
        conditional_entropy=h_eig,
        upper=u,
        lower=low,
        mid=m,
        region=region,
        tail_bound=_conditional_tail_bound(p, lam, mu, n_max),
    )


def _diagonal_marginal(state: TwoModeState, tol=1e-10):
    reduced = partial_trace(state, "A").matrix
    off = reduced - np.diag(np.diag(reduced))
    if np.max(np.abs(off)) > tol:
        raise ValueError(
            "reduced state is not diagonal in the Fock basis; the photon-counting "
            "bound machinery measures in the local eigenbasis, which must be Fock here"
        )
    return np.real(np.diag(reduced))


def conditional_entropy_dense(state: TwoModeState, weight_floor: float = 1e-16) -> float:
    """Photon-counting conditional entropy of an explicit matrix.

    Requires a Fock-diagonal marginal, so that counting is measurement in
    the local eigenbasis.
    """
    n = state.n_max
    p_b = _diagonal_marginal(state)
    blocks = np.einsum("imjm->mij", state.matrix.reshape(n, n, n, n))
    keep = p_b > weight_floor
    spectra = np.linalg.eigvalsh(blocks[keep]) / p_b[keep, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        xlogx = np.where(spectra > 0.0, spectra * np.log(np.where(spectra > 0.0, spectra, 1.0)), 0.0)
    return float((p_b[keep] * -(xlogx.sum(axis=1))).sum())


def upper_bound_dense(state: TwoModeState) -> float:
    """Matrix-based U = S(rho_B) - S(rho) + H_eig for an explicit state."""
    s_b = von_neumann_entropy(_diagonal_marginal(state))
    s_g = von_neumann_entropy(eig_spectrum(state))
    return s_b - s_g + conditional_entropy_dense(state)


def mid_dense(state: TwoModeState) -> float:
    """Matrix-based measurement-induced disturbance H(p_AB) - S(rho)."""
    joint = np.real(np.diag(state.matrix))
    return shannon_entropy(joint) - von_neumann_entropy(eig_spectrum(state))
