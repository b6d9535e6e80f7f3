"""Per-level populations, momenta and kinetic energies.

Momenta are in photon momenta, energies in recoil energies, so the kinetic
energy of momentum ``p`` is ``p**2``. Excited-level moments are taken at
the physical momenta ``p_j + 1``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import InvalidParameterError
from .grid import integrate
from .states import EXCITED, GROUND, TwoLevelState, level_momenta_axis, norm

__all__ = [
    "EXCITED",
    "GROUND",
    "DistributionSnapshot",
    "ObservableRecord",
    "POPULATION_FLOOR",
    "conservation_residuals",
    "distribution",
    "level_kinetic",
    "level_momenta",
    "normalized_kinetic",
    "normalized_momenta",
    "populations",
    "record",
]

# below this population a per-level ratio is reported as undefined
POPULATION_FLOOR = 1e-9


@dataclass(frozen=True)
class ObservableRecord:
    """All scalar observables at one time. ``None`` marks an undefined ratio."""

    tau: float
    n_g: float
    n_e: float
    p_mean_g: float
    p_mean_e: float
    p_norm_g: float | None
    p_norm_e: float | None
    e_kin_g: float
    e_kin_e: float
    e_kin_total: float
    e_norm_g: float | None
    e_norm_e: float | None

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class DistributionSnapshot:
    tau: float
    level: str
    momenta: np.ndarray
    density: np.ndarray


def _densities(state: TwoLevelState):
    return np.abs(state.a) ** 2, np.abs(state.b) ** 2


def populations(state: TwoLevelState) -> tuple[float, float]:
    rho_g, rho_e = _densities(state)
    return integrate(rho_g, state.grid), integrate(rho_e, state.grid)


def level_momenta(state: TwoLevelState) -> tuple[float, float]:
    """First moments of each level's momentum density (not divided by population)."""
    rho_g, rho_e = _densities(state)
    p = state.grid.points
    return integrate(rho_g * p, state.grid), integrate(rho_e * (p + 1.0), state.grid)


def level_kinetic(state: TwoLevelState) -> tuple[float, float, float]:
    rho_g, rho_e = _densities(state)
    p = state.grid.points
    e_g = integrate(rho_g * p * p, state.grid)
    e_e = integrate(rho_e * (p + 1.0) ** 2, state.grid)
    return e_g, e_e, e_g + e_e


def _ratio(value: float, population: float) -> float | None:
    return value / population if population >= POPULATION_FLOOR else None


def normalized_momenta(state: TwoLevelState) -> tuple[float | None, float | None]:
    """Mean momentum of each level's own normalized distribution."""
    n_g, n_e = populations(state)
    m_g, m_e = level_momenta(state)
    return _ratio(m_g, n_g), _ratio(m_e, n_e)


def normalized_kinetic(state: TwoLevelState) -> tuple[float | None, float | None]:
    n_g, n_e = populations(state)
    e_g, e_e, _ = level_kinetic(state)
    return _ratio(e_g, n_g), _ratio(e_e, n_e)


def record(state: TwoLevelState) -> ObservableRecord:
    """Evaluate every observable once, sharing the density arrays."""
    n_g, n_e = populations(state)
    m_g, m_e = level_momenta(state)
    e_g, e_e, e_total = level_kinetic(state)
    return ObservableRecord(
        tau=float(state.tau),
        n_g=n_g,
        n_e=n_e,
        p_mean_g=m_g,
        p_mean_e=m_e,
        p_norm_g=_ratio(m_g, n_g),
        p_norm_e=_ratio(m_e, n_e),
        e_kin_g=e_g,
        e_kin_e=e_e,
        e_kin_total=e_total,
        e_norm_g=_ratio(e_g, n_g),
        e_norm_e=_ratio(e_e, n_e),
    )


def distribution(state: TwoLevelState, level: str) -> DistributionSnapshot:
    """Momentum density of one level on its physical momentum axis."""
    momenta = level_momenta_axis(state.grid, level)
    amp = state.a if level == GROUND else state.b
    return DistributionSnapshot(
        tau=float(state.tau),
        level=level,
        momenta=momenta.copy(),
        density=np.abs(amp) ** 2,
    )


def _family_momentum(state: TwoLevelState) -> float:
    # <p>_g + <p>_e - n_e: each family's population times its ground momentum
    m_g, m_e = level_momenta(state)
    _, n_e = populations(state)
    return m_g + m_e - n_e


def conservation_residuals(state: TwoLevelState, initial: TwoLevelState) -> tuple[float, float]:
    """Drift of the norm and of ``<p>_g + <p>_e - n_e`` since ``initial``."""
    if state.grid != initial.grid:
        raise InvalidParameterError("states live on different grids")
    norm_drift = abs(norm(state) - norm(initial))
    momentum_drift = abs(_family_momentum(state) - _family_momentum(initial))
    return norm_drift, momentum_drift

