"""Closed-form correlation measures for the vacuum Werner state.

The vacuum Werner state is the ``mu = 0`` member of the family: a two-mode
squeezed vacuum mixed with the two-mode vacuum,

    rho = p |psi(lam)><psi(lam)| + (1 - p) |00><00|.

Its global spectrum has two-dimensional support, the reduced state is
diagonal, and photon counting on one mode leaves the other in a pure Fock
state, so the conditional entropy vanishes and the discord is the entropy
difference S(rho_B) - S(rho).  The ameliorated measurement-induced
disturbance and the relative entropy of quantumness coincide with it.

Every closed form here has a truncated-matrix twin (``*_numeric``) used as
an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import states
from .fock import (
    TwoModeState,
    eig_spectrum,
    partial_trace,
    shannon_entropy,
    von_neumann_entropy,
)


@dataclass(frozen=True)
class DiscordReport:
    """Scalar results for one (p, lam) point of the vacuum Werner family."""

    p: float
    lam: float
    eig_large: float
    eig_small: float
    entropy_global: float
    entropy_reduced: float
    discord: float


def _check_domain(p: float, lam: float):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if not 0.0 <= lam < 1.0:
        raise ValueError(f"lam={lam} outside [0, 1)")


def eigenvalue_pair(p: float, lam: float):
    """The two nonzero global eigenvalues (1 +- sqrt(1 - 4p(1-p)lam^2))/2."""
    _check_domain(p, lam)
    disc = np.sqrt(1.0 - 4.0 * p * (1.0 - p) * lam**2)
    return (1.0 + disc) / 2.0, (1.0 - disc) / 2.0


def global_entropy(p: float, lam: float) -> float:
    """Entropy of the full state: binary entropy of the eigenvalue pair."""
    return von_neumann_entropy(eigenvalue_pair(p, lam))


def reduced_spectrum(p: float, lam: float, n_max: int) -> np.ndarray:
    """Eigenvalues of the reduced state: 1 - p lam^2, then p(1-lam^2)lam^(2n)."""
    n = np.arange(1, n_max, dtype=float)
    return np.concatenate([[1.0 - p * lam**2], p * (1.0 - lam**2) * lam ** (2 * n)])


def reduced_entropy(p: float, lam: float) -> float:
    """Closed-form entropy of the reduced state of either mode."""
    _check_domain(p, lam)
    if lam == 0.0 or p == 0.0:
        return 0.0
    pl2 = p * lam**2
    return -(
        np.log(1.0 - pl2)
        + pl2 * np.log(p * (1.0 - lam**2) / (1.0 - pl2))
        + 2.0 * pl2 * np.log(lam) / (1.0 - lam**2)
    )


def discord(p: float, lam: float) -> float:
    """Quantum discord of the vacuum Werner state, exactly
    S(rho_B) - S(rho): photon counting yields zero conditional entropy and
    no measurement can do better."""
    return reduced_entropy(p, lam) - global_entropy(p, lam)


def discord_report(p: float, lam: float) -> DiscordReport:
    nu1, nu2 = eigenvalue_pair(p, lam)
    s_global = global_entropy(p, lam)
    s_reduced = reduced_entropy(p, lam)
    return DiscordReport(p, lam, nu1, nu2, s_global, s_reduced, s_reduced - s_global)


def vacuum_werner(p: float, lam: float, n_max=None, eps_tail=1e-12) -> TwoModeState:
    """The truncated matrix itself (mu = 0 Werner state)."""
    return states.werner(states.WernerParams(p, lam, 0.0), n_max, eps_tail)


def global_entropy_numeric(p, lam, n_max=None, eps_tail=1e-12) -> float:
    """Truncated-matrix oracle for :func:`global_entropy`."""
    rho = vacuum_werner(p, lam, n_max, eps_tail)
    return von_neumann_entropy(eig_spectrum(rho))


def reduced_entropy_numeric(p, lam, n_max=None, eps_tail=1e-12) -> float:
    """Truncated-matrix oracle for :func:`reduced_entropy`."""
    rho = vacuum_werner(p, lam, n_max, eps_tail)
    return von_neumann_entropy(eig_spectrum(partial_trace(rho, "A")))


def discord_numeric(p, lam, n_max=None, eps_tail=1e-12) -> float:
    """Truncated-matrix oracle for :func:`discord` (one state build)."""
    rho = vacuum_werner(p, lam, n_max, eps_tail)
    s_b = von_neumann_entropy(eig_spectrum(partial_trace(rho, "A")))
    return s_b - von_neumann_entropy(eig_spectrum(rho))


def joint_photon_distribution(state: TwoModeState) -> np.ndarray:
    """p(m, n) = <mn| rho |mn> as an (n_max, n_max) table."""
    n = state.n_max
    return np.real(np.diag(state.matrix)).reshape(n, n)


def classical_mutual_information(state: TwoModeState) -> float:
    """Classical mutual information of the photon-count statistics,
    H(p_A) + H(p_B) - H(p_AB)."""
    p_ab = joint_photon_distribution(state)
    h_a = shannon_entropy(p_ab.sum(axis=1))
    h_b = shannon_entropy(p_ab.sum(axis=0))
    return h_a + h_b - shannon_entropy(p_ab)


def quantumness_indicators(p: float, lam: float, n_max=None, eps_tail=1e-12):
    """(discord, amid, req) computed along three distinct routes.

    discord comes from the closed forms; the ameliorated
    measurement-induced disturbance from matrix spectra and the
    photon-count statistics (which saturate the classical mutual
    information); the relative entropy of quantumness from the joint
    Shannon entropy minus the global entropy.  For this family all three
    coincide.
    """
    rho = vacuum_werner(p, lam, n_max, eps_tail)
    s_global = von_neumann_entropy(eig_spectrum(rho))
    s_a = von_neumann_entropy(eig_spectrum(partial_trace(rho, "B")))
    s_b = von_neumann_entropy(eig_spectrum(partial_trace(rho, "A")))
    mutual_q = s_a + s_b - s_global
    mutual_c = classical_mutual_information(rho)
    amid = mutual_q - mutual_c
    req = shannon_entropy(joint_photon_distribution(rho)) - s_global
    return discord(p, lam), amid, req
