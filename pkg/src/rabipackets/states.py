"""Two-level momentum-space states.

The ground amplitude ``a[j]`` lives at momentum ``p_j``; the excited
amplitude ``b[j]`` lives one photon momentum higher, at ``p_j + 1``. Each
index ``j`` is therefore a closed family under absorption and stimulated
emission.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .errors import InvalidParameterError, InvalidStateError
from .grid import MomentumGrid, integrate

__all__ = [
    "TwoLevelState",
    "assemble_state",
    "gaussian_amplitudes",
    "level_momenta_axis",
    "load_tabulated",
    "norm",
    "normalize",
    "tabulated_amplitudes",
]

GROUND = "ground"
EXCITED = "excited"


@dataclass(frozen=True, eq=False)
class TwoLevelState:
    grid: MomentumGrid
    a: np.ndarray
    b: np.ndarray
    tau: float = 0.0

    def __post_init__(self):
        n = self.grid.n_points
        if np.shape(self.a) != (n,) or np.shape(self.b) != (n,):
            raise InvalidStateError(
                f"amplitude arrays must have shape ({n},), got {np.shape(self.a)} and {np.shape(self.b)}"
            )


def level_momenta_axis(grid: MomentumGrid, level: str) -> np.ndarray:
    """Physical momenta of the samples stored for ``level``."""
    if level == GROUND:
        return grid.points
    if level == EXCITED:
        return grid.points + 1.0
    raise InvalidParameterError(f"level must be 'ground' or 'excited', got {level!r}")


def gaussian_amplitudes(
    grid: MomentumGrid,
    center: float,
    sigma: float,
    phase_slope: float = 0.0,
    level: str = GROUND,
) -> np.ndarray:
    """Unnormalized Gaussian packet ``exp(-(p - c)**2 / (4 sigma**2) + i s p)``.

    ``sigma`` is the standard deviation of the momentum density ``|amp|**2``.
    The packet is sampled on the physical momentum axis of ``level``, so an
    excited packet centred at ``c`` peaks at grid index nearest ``c - 1``.
    """
    if not sigma > 0:
        raise InvalidParameterError(f"sigma must be positive, got {sigma!r}")
    p = level_momenta_axis(grid, level)
    envelope = np.exp(-((p - center) ** 2) / (4.0 * sigma * sigma))
    return envelope * np.exp(1j * phase_slope * p)


def load_tabulated(path) -> np.ndarray:
    """Read a three-column ``p Re Im`` table (``#`` comments allowed)."""
    try:
        table = np.loadtxt(Path(path), comments="#", ndmin=2)
    except (OSError, ValueError) as exc:
        raise InvalidParameterError(f"cannot read amplitude table {path}: {exc}") from exc
    if table.shape[1] != 3:
        raise InvalidParameterError(f"{path}: expected 3 columns, found {table.shape[1]}")
    if table.shape[0] > 1 and np.any(np.diff(table[:, 0]) <= 0):
        raise InvalidParameterError(f"{path}: momentum column must be strictly increasing")
    return table


def tabulated_amplitudes(grid: MomentumGrid, table, level: str = GROUND) -> np.ndarray:
    """Resample a ``(p, Re, Im)`` table onto the grid by linear interpolation.

    Points outside the tabulated range get zero amplitude.
    """
    table = np.asarray(table, dtype=float)
    p = level_momenta_axis(grid, level)
    re = np.interp(p, table[:, 0], table[:, 1], left=0.0, right=0.0)
    im = np.interp(p, table[:, 0], table[:, 2], left=0.0, right=0.0)
    return re + 1j * im


def norm(state: TwoLevelState) -> float:
    return integrate(np.abs(state.a) ** 2, state.grid) + integrate(np.abs(state.b) ** 2, state.grid)


def normalize(state: TwoLevelState) -> TwoLevelState:
    total = norm(state)
    if not (np.isfinite(total) and total > 0):
        raise InvalidStateError(f"cannot normalize a state with norm {total!r}")
    scale = 1.0 / np.sqrt(total)
    return replace(state, a=state.a * scale, b=state.b * scale)


def assemble_state(
    grid: MomentumGrid,
    ground=None,
    excited=None,
    weight_g: complex = 1.0,
    weight_e: complex = 1.0,
) -> TwoLevelState:
    """Weighted superposition of level amplitudes, normalized, at ``tau = 0``.

    ``excited`` must already be sampled on the shifted axis ``p_j + 1``
    (as produced by the helpers above with ``level="excited"``). A missing
    level is empty.
    """
    if ground is None and excited is None:
        raise InvalidStateError("at least one level must be populated")
    zeros = np.zeros(grid.n_points, dtype=complex)
    a = zeros if ground is None else weight_g * np.asarray(ground, dtype=complex)
    b = zeros.copy() if excited is None else weight_e * np.asarray(excited, dtype=complex)
    return normalize(TwoLevelState(grid=grid, a=a, b=b, tau=0.0))
