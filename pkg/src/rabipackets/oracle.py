"""Reference integrator for the coupled amplitude equations.

Brute-force 4th-order Runge-Kutta integration of one family at a time,
independent of the closed-form propagator. It works in the interaction
picture with respect to the free level energies

    E_g = p**2 - detuning/2,    E_e = (p+1)**2 + detuning/2,

where the equations read

    d(abar)/dtau = (i rabi/2) exp(-i alpha tau) bbar
    d(bbar)/dtau = (i rabi/2) exp(+i alpha tau) abar

with ``alpha = E_e - E_g``. :func:`to_rotating_frame` maps the result
back to the frame used by :mod:`rabipackets.propagator`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numba
import numpy as np

from .errors import AccuracyError, InvalidParameterError
from .propagator import evolve
from .states import TwoLevelState
from .units import SimParams

__all__ = [
    "OdeSettings",
    "compare_propagators",
    "integrate_families",
    "integrate_family",
    "step_for_tolerance",
    "to_rotating_frame",
]

DRIFT_LIMIT = 1e-6
MAX_STEP = 1e-3


@dataclass(frozen=True)
class OdeSettings:
    """Either one fixed ``step`` for every family, or a ``tolerance``.

    In tolerance mode each family gets its own fixed step, sized so the
    accumulated error per amplitude over the whole span stays below
    ``tolerance`` (see :func:`step_for_tolerance`). With neither given the
    integrator runs in tolerance mode at 1e-10.
    """

    step: float | None = None
    tolerance: float | None = None

    def __post_init__(self):
        if self.step is not None and self.tolerance is not None:
            raise InvalidParameterError("give either step or tolerance, not both")
        if self.step is not None and not (math.isfinite(self.step) and self.step > 0):
            raise InvalidParameterError(f"step must be positive, got {self.step!r}")
        if self.tolerance is not None and not (0 < self.tolerance <= 1e-6):
            raise InvalidParameterError(f"tolerance must lie in (0, 1e-6], got {self.tolerance!r}")

    @property
    def adaptive(self) -> bool:
        return self.step is None

    @property
    def effective_tolerance(self) -> float:
        return 1e-10 if self.tolerance is None else self.tolerance


@numba.njit(cache=True)
def _rk4_step(a, b, g, alpha, t, h):
    # the coupling phase is needed at t, t + h/2 and t + h
    z0 = cmath.exp(1j * alpha * t)
    q = cmath.exp(0.5j * alpha * h)
    zm = z0 * q
    z1 = zm * q
    ig = 1j * g
    k1a = ig * z0.conjugate() * b
    k1b = ig * z0 * a
    k2a = ig * zm.conjugate() * (b + 0.5 * h * k1b)
    k2b = ig * zm * (a + 0.5 * h * k1a)
    k3a = ig * zm.conjugate() * (b + 0.5 * h * k2b)
    k3b = ig * zm * (a + 0.5 * h * k2a)
    k4a = ig * z1.conjugate() * (b + h * k3b)
    k4b = ig * z1 * (a + h * k3a)
    sixth = h / 6.0
    return (
        a + sixth * (k1a + 2.0 * k2a + 2.0 * k3a + k4a),
        b + sixth * (k1b + 2.0 * k2b + 2.0 * k3b + k4b),
    )


@numba.njit(cache=True)
def _fixed(a, b, g, alpha, checkpoints, step, out_a, out_b):
    t = 0.0
    for k in range(checkpoints.size):
        span = checkpoints[k] - t
        if span > 0.0:
            n = int(math.ceil(span / step))
            h = span / n
            t0 = t
            for i in range(n):
                a, b = _rk4_step(a, b, g, alpha, t0 + i * h, h)
            t = checkpoints[k]
        out_a[k] = a
        out_b[k] = b


def step_for_tolerance(beta: float, span: float, tolerance: float, amplitude: float = 1.0) -> float:
    """Largest step keeping a family's RK4 error below ``tolerance``.

    For an oscillation at angular frequency ``w`` the RK4 phase error after
    time ``T`` is about ``(w T) (w h)**4 / 120``; the interaction-picture
    amplitudes oscillate at most at ``w = beta / 2``. The absolute error
    scales with the family's ``amplitude``, so weak families get longer
    steps (never longer than ``1 / beta`` or ``MAX_STEP``).
    """
    if beta <= 0 or span <= 0 or amplitude <= 0:
        return MAX_STEP
    phase_tol = tolerance / amplitude
    h = (2.0 / beta) * (240.0 * phase_tol / (beta * span)) ** 0.25
    return min(h, 1.0 / beta, MAX_STEP)


@numba.njit(cache=True)
def _integrate_many(a0, b0, alphas, g, checkpoints, steps, out_a, out_b):
    for j in range(a0.size):
        _fixed(a0[j], b0[j], g, alphas[j], checkpoints, steps[j], out_a[:, j], out_b[:, j])


def integrate_families(a0, b0, p, checkpoints, params: SimParams, settings: OdeSettings | None = None):
    """Interaction-picture amplitudes of many families at several times.

    Returns two complex arrays of shape ``(len(checkpoints), len(p))``.
    Raises :class:`AccuracyError` if any family's population drifts by more
    than 1e-6, which signals a step too large for its oscillation frequency.
    """
    settings = settings or OdeSettings()
    a0 = np.ascontiguousarray(np.atleast_1d(a0), dtype=complex)
    b0 = np.ascontiguousarray(np.atleast_1d(b0), dtype=complex)
    p = np.ascontiguousarray(np.atleast_1d(p), dtype=float)
    checkpoints = np.ascontiguousarray(np.atleast_1d(checkpoints), dtype=float)
    if not (a0.shape == b0.shape == p.shape):
        raise InvalidParameterError("a0, b0 and p must have the same shape")
    if checkpoints.size == 0 or np.any(checkpoints < 0) or np.any(np.diff(checkpoints) < 0):
        raise InvalidParameterError("checkpoints must be non-negative and non-decreasing")
    alphas = params.detuning + 2.0 * p + 1.0
    out_a = np.empty((checkpoints.size, p.size), dtype=complex)
    out_b = np.empty_like(out_a)
    if settings.adaptive:
        span = float(checkpoints[-1])
        tol = settings.effective_tolerance
        betas = np.hypot(alphas, params.rabi)
        amps = np.sqrt(np.abs(a0) ** 2 + np.abs(b0) ** 2)
        steps = np.array([step_for_tolerance(bt, span, tol, am) for bt, am in zip(betas, amps)])
    else:
        steps = np.full(p.size, float(settings.step))
    _integrate_many(a0, b0, alphas, 0.5 * params.rabi, checkpoints, steps, out_a, out_b)

    start = np.abs(a0) ** 2 + np.abs(b0) ** 2
    drift = np.abs(np.abs(out_a) ** 2 + np.abs(out_b) ** 2 - start)
    worst = float(np.max(drift)) if drift.size else 0.0
    if not np.isfinite(worst) or worst > DRIFT_LIMIT:
        raise AccuracyError(
            f"population drifted by {worst:.3g} (limit {DRIFT_LIMIT:g}); use a smaller step or tolerance"
        )
    return out_a, out_b


def integrate_family(a0: complex, b0: complex, p: float, tau_end: float, params: SimParams,
                     settings: OdeSettings | None = None) -> tuple[complex, complex]:
    if not (math.isfinite(tau_end) and tau_end >= 0):
        raise InvalidParameterError(f"tau_end must be >= 0, got {tau_end!r}")
    out_a, out_b = integrate_families([a0], [b0], [p], [tau_end], params, settings)
    return complex(out_a[0, 0]), complex(out_b[0, 0])


def to_rotating_frame(abar, bbar, p, tau, params: SimParams):
    """Restore the free phases stripped by the interaction picture."""
    p = np.asarray(p, dtype=float)
    e_g = p * p - 0.5 * params.detuning
    e_e = (p + 1.0) ** 2 + 0.5 * params.detuning
    return abar * np.exp(-1j * e_g * tau), bbar * np.exp(-1j * e_e * tau)


def compare_propagators(state0: TwoLevelState, tau_end, params: SimParams,
                        settings: OdeSettings | None = None) -> float:
    """Largest ``|closed form - oracle|`` over all families and both levels.

    ``tau_end`` may be a single time or an increasing sequence of times;
    the oracle integrates through all of them in one pass.
    """
    taus = np.atleast_1d(np.asarray(tau_end, dtype=float))
    p = state0.grid.points
    out_a, out_b = integrate_families(state0.a, state0.b, p, taus, params, settings)
    worst = 0.0
    for k, tau in enumerate(taus):
        ref_a, ref_b = to_rotating_frame(out_a[k], out_b[k], p, tau, params)
        exact = evolve(state0, float(tau), params)
        worst = max(worst, float(np.max(np.abs(exact.a - ref_a))), float(np.max(np.abs(exact.b - ref_b))))
    return worst
