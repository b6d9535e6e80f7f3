"""Uniform one-dimensional momentum grid with trapezoidal quadrature."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidParameterError

__all__ = ["MomentumGrid", "build_grid", "integrate"]


@dataclass(frozen=True)
class MomentumGrid:
    """Family momenta ``p_min + j * dp`` for ``j = 0 .. n_points - 1``.

    A grid with a single point represents a definite-momentum state: its
    only quadrature weight is 1, so "integrals" become plain values and
    populations are probabilities in ``[0, 1]``.
    """

    p_min: float
    dp: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 1:
            raise InvalidParameterError(f"n_points must be >= 1, got {self.n_points}")
        if not self.dp > 0:
            raise InvalidParameterError(f"dp must be positive, got {self.dp!r}")

    @property
    def is_definite(self) -> bool:
        return self.n_points == 1

    @cached_property
    def points(self) -> np.ndarray:
        p = self.p_min + self.dp * np.arange(self.n_points, dtype=float)
        p.flags.writeable = False
        return p

    @cached_property
    def weights(self) -> np.ndarray:
        if self.is_definite:
            w = np.ones(1)
        else:
            w = np.full(self.n_points, self.dp)
            w[0] = w[-1] = 0.5 * self.dp
        w.flags.writeable = False
        return w

    @property
    def p_max(self) -> float:
        return float(self.points[-1])

    @property
    def center(self) -> float:
        return 0.5 * (self.p_min + self.p_max)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.p_max - self.p_min)


def build_grid(center: float, half_width: float, n_points: int) -> MomentumGrid:
    """Symmetric grid on ``[center - half_width, center + half_width]``.

    ``n_points = 1`` requires ``half_width = 0`` and yields a single point
    at ``center``.
    """
    if int(n_points) != n_points or n_points < 1:
        raise InvalidParameterError(f"n_points must be a positive integer, got {n_points!r}")
    n_points = int(n_points)
    if not half_width >= 0:
        raise InvalidParameterError(f"half_width must be >= 0, got {half_width!r}")
    if n_points == 1:
        if half_width != 0:
            raise InvalidParameterError("a single-point grid requires half_width = 0")
        return MomentumGrid(p_min=float(center), dp=1.0, n_points=1)
    if half_width == 0:
        raise InvalidParameterError("half_width must be positive when n_points > 1")
    dp = 2.0 * half_width / (n_points - 1)
    return MomentumGrid(p_min=float(center - half_width), dp=dp, n_points=n_points)


def integrate(samples, grid: MomentumGrid) -> float:
    """Trapezoidal integral of real ``samples`` over the grid.

    Uses numpy's pairwise summation, so the reduction order is fixed for a
    given length and results are reproducible bit for bit.
    """
    samples = np.asarray(samples)
    if samples.shape != (grid.n_points,):
        raise InvalidParameterError(
            f"expected {grid.n_points} samples, got array of shape {samples.shape}"
        )
    return float(np.sum(grid.weights * samples))
