"""Closed-form evolution of momentum families.

Each family ``j`` couples the ground amplitude at ``p_j`` to the excited
amplitude at ``p_j + 1``. In the frame rotating with the field its
Hamiltonian (recoil units) is

    H = [[p**2 - detuning/2,  -rabi/2                  ],
         [-rabi/2,            (p+1)**2 + detuning/2    ]]
      = mean * I - (alpha/2) sigma_z - (rabi/2) sigma_x

with ``mean = (p**2 + (p+1)**2) / 2`` and ``alpha = detuning + 2p + 1``,
so ``exp(-i H t)`` is the 2x2 matrix built by :func:`family_matrix`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidParameterError
from .grid import MomentumGrid
from .states import TwoLevelState
from .units import SimParams

__all__ = [
    "DressedSpectrum",
    "dressed_spectrum",
    "evolve",
    "exponential_form_matrix",
    "family_matrices",
    "family_matrix",
    "generalized_detuning",
    "generalized_rabi",
]


def generalized_detuning(p, params: SimParams):
    """Detuning seen by the family at ``p``: field detuning plus Doppler and recoil shifts."""
    return params.detuning + 2.0 * np.asarray(p, dtype=float) + 1.0


def generalized_rabi(alpha, params: SimParams):
    return np.hypot(alpha, params.rabi)


def kinetic_mean(p):
    p = np.asarray(p, dtype=float)
    return 0.5 * (p * p + (p + 1.0) ** 2)


@dataclass(frozen=True, eq=False)
class DressedSpectrum:
    """Per-family generalized detuning, generalized Rabi frequency and
    the centres of the two quasistationary doublets.

    The optical frequencies are dropped from ``mean_g`` and ``mean_e``;
    they only add a per-level phase that no observable sees. Both levels
    then share the kinetic mean.
    """

    alpha: np.ndarray
    beta: np.ndarray
    mean_g: np.ndarray
    mean_e: np.ndarray

    @property
    def omega_g(self):
        return self.mean_g + 0.5 * self.beta

    @property
    def omega_g_prime(self):
        return self.mean_g - 0.5 * self.beta

    @property
    def omega_e(self):
        return self.mean_e + 0.5 * self.beta

    @property
    def omega_e_prime(self):
        return self.mean_e - 0.5 * self.beta


def dressed_spectrum(grid: MomentumGrid, params: SimParams) -> DressedSpectrum:
    p = grid.points
    alpha = generalized_detuning(p, params)
    mean = kinetic_mean(p)
    return DressedSpectrum(
        alpha=alpha,
        beta=generalized_rabi(alpha, params),
        mean_g=mean,
        mean_e=mean.copy(),
    )


def _check_dtau(dtau):
    if not np.isfinite(dtau) or dtau < 0:
        raise InvalidParameterError(f"dtau must be finite and >= 0, got {dtau!r}")


def family_matrices(p, dtau: float, params: SimParams) -> np.ndarray:
    """Propagators for an array of family momenta, shape ``p.shape + (2, 2)``.

    Trigonometric form of the dressed-state solution: manifestly unitary
    and free of cancellation when ``beta * dtau`` is small.
    """
    _check_dtau(dtau)
    p = np.asarray(p, dtype=float)
    alpha = generalized_detuning(p, params)
    beta = generalized_rabi(alpha, params)
    half = 0.5 * beta * dtau
    c = np.cos(half)
    s = np.sin(half)
    # beta == 0 only when rabi == 0 and alpha == 0; the matrix is then the identity
    safe = np.where(beta > 0, beta, 1.0)
    ratio_alpha = np.where(beta > 0, alpha / safe, 0.0)
    ratio_rabi = np.where(beta > 0, params.rabi / safe, 0.0)
    phase = np.exp(-1j * kinetic_mean(p) * dtau)

    u = np.empty(p.shape + (2, 2), dtype=complex)
    off = phase * (1j * ratio_rabi * s)
    u[..., 0, 0] = phase * (c + 1j * ratio_alpha * s)
    u[..., 0, 1] = off
    u[..., 1, 0] = off
    u[..., 1, 1] = phase * (c - 1j * ratio_alpha * s)
    return u


def family_matrix(p: float, dtau: float, params: SimParams) -> np.ndarray:
    """2x2 map ``(a(p), b(p+1)) -> (a(p), b(p+1))`` after ``dtau``."""
    return family_matrices(float(p), dtau, params)


def exponential_form_matrix(p: float, dtau: float, params: SimParams) -> np.ndarray:
    """The same map written as the four-exponential dressed-state sum.

    Each amplitude is a superposition of two quasistationary components
    oscillating at ``omega`` and ``omega'`` with coefficient combinations
    ``(alpha -+ beta) / (2 beta)`` and ``rabi / (2 beta)``. Kept for
    cross-checking :func:`family_matrix`; requires ``beta > 0``.
    """
    _check_dtau(dtau)
    alpha = float(generalized_detuning(p, params))
    beta = float(generalized_rabi(alpha, params))
    if beta == 0:
        raise InvalidParameterError("the exponential form is singular at beta = 0")
    # exp(-i omega dtau) with omega = mean +- beta/2, split so that the large
    # argument mean * dtau is rounded once instead of once per frequency
    common = np.exp(-1j * float(kinetic_mean(p)) * dtau)
    up, down = np.exp(-0.5j * beta * dtau), np.exp(0.5j * beta * dtau)
    e_g, e_gp = common * up, common * down
    e_e, e_ep = common * up, common * down
    minus = (alpha - beta) / (2.0 * beta)
    plus = (alpha + beta) / (2.0 * beta)
    cross = params.rabi / (2.0 * beta)
    return np.array(
        [
            [-minus * e_g + plus * e_gp, -cross * e_g + cross * e_gp],
            [-cross * e_e + cross * e_ep, plus * e_e - minus * e_ep],
        ]
    )


def _apply(p, a, b, dtau, params):
    u = family_matrices(p, dtau, params)
    return u[:, 0, 0] * a + u[:, 0, 1] * b, u[:, 1, 0] * a + u[:, 1, 1] * b


def evolve(state: TwoLevelState, dtau: float, params: SimParams, workers: int = 1) -> TwoLevelState:
    """Advance every family by ``dtau``.

    Families are independent, so ``workers > 1`` splits the grid into
    contiguous chunks evaluated on a thread pool. The arithmetic per
    element is the same either way and results do not depend on
    ``workers``.
    """
    _check_dtau(dtau)
    if workers < 1:
        raise InvalidParameterError(f"workers must be >= 1, got {workers}")
    p = state.grid.points
    if workers == 1 or p.size < 2 * workers:
        a, b = _apply(p, state.a, state.b, dtau, params)
    else:
        bounds = np.linspace(0, p.size, workers + 1).astype(int)
        slices = [slice(lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:])]
        a = np.empty_like(state.a, dtype=complex)
        b = np.empty_like(state.b, dtype=complex)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(lambda sl: (sl, _apply(p[sl], state.a[sl], state.b[sl], dtau, params)), slices)
            for sl, (pa, pb) in parts:
                a[sl] = pa
                b[sl] = pb
    return replace(state, a=a, b=b, tau=state.tau + dtau)
