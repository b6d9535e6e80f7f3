"""Recoil units.

Every quantity past the input boundary is dimensionless:

* momentum in photon momenta ``hbar k``,
* frequency in the recoil frequency ``omega_r = hbar k**2 / (2 M)``,
* time in ``1 / omega_r``,
* energy in the recoil energy ``E_r = hbar * omega_r``.

In these units the free-particle kinetic frequency of momentum ``p`` is
``p**2`` and the detuning seen by a family is ``detuning + 2 p + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import constants

from .errors import InvalidParameterError

__all__ = [
    "PhysicalParams",
    "SimParams",
    "RecoilScales",
    "recoil_scales",
    "to_dimensionless",
]


@dataclass(frozen=True)
class PhysicalParams:
    """Atom and field parameters in SI units.

    Frequencies are angular (rad/s). ``rabi_frequency`` may be zero.
    """

    atomic_mass: float
    wavenumber: float
    transition_frequency: float
    field_frequency: float
    rabi_frequency: float

    @classmethod
    def from_field(
        cls,
        atomic_mass: float,
        transition_frequency: float,
        field_frequency: float,
        rabi_frequency: float,
    ) -> "PhysicalParams":
        """Build parameters with the vacuum wavenumber ``k = omega / c``."""
        return cls(
            atomic_mass=atomic_mass,
            wavenumber=field_frequency / constants.c,
            transition_frequency=transition_frequency,
            field_frequency=field_frequency,
            rabi_frequency=rabi_frequency,
        )

    @classmethod
    def from_wavelength(
        cls,
        atomic_mass: float,
        wavelength: float,
        rabi_frequency: float,
        detuning: float = 0.0,
    ) -> "PhysicalParams":
        """Build parameters from the field wavelength and an angular detuning.

        ``detuning`` is ``transition_frequency - field_frequency``.
        """
        if not wavelength > 0:
            raise InvalidParameterError(f"wavelength must be positive, got {wavelength!r}")
        field_frequency = 2.0 * math.pi * constants.c / wavelength
        return cls.from_field(
            atomic_mass,
            field_frequency + detuning,
            field_frequency,
            rabi_frequency,
        )

    @property
    def detuning(self) -> float:
        return self.transition_frequency - self.field_frequency

    def validate(self) -> None:
        for name in ("atomic_mass", "wavenumber"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(f"{name} must be positive and finite, got {value!r}")
        for name in ("transition_frequency", "field_frequency"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(f"{name} must be positive and finite, got {value!r}")
        if not (math.isfinite(self.rabi_frequency) and self.rabi_frequency >= 0):
            raise InvalidParameterError(
                f"rabi_frequency must be non-negative and finite, got {self.rabi_frequency!r}"
            )


@dataclass(frozen=True)
class SimParams:
    """Interaction parameters in recoil units.

    Attributes
    ----------
    rabi : float
        Rabi frequency divided by the recoil frequency. Non-negative.
    detuning : float
        ``(transition - field) / omega_r``. Any finite sign.
    """

    rabi: float
    detuning: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.rabi) and self.rabi >= 0):
            raise InvalidParameterError(f"rabi must be non-negative and finite, got {self.rabi!r}")
        if not math.isfinite(self.detuning):
            raise InvalidParameterError(f"detuning must be finite, got {self.detuning!r}")


@dataclass(frozen=True)
class RecoilScales:
    """SI values of the recoil unit system."""

    omega_r: float
    p_photon: float
    e_recoil: float

    def time(self, tau: float) -> float:
        """Convert dimensionless time to seconds."""
        return tau / self.omega_r


def recoil_scales(params: PhysicalParams) -> RecoilScales:
    params.validate()
    k = params.wavenumber
    omega_r = constants.hbar * k * k / (2.0 * params.atomic_mass)
    return RecoilScales(
        omega_r=omega_r,
        p_photon=constants.hbar * k,
        e_recoil=constants.hbar * omega_r,
    )


def to_dimensionless(params: PhysicalParams) -> SimParams:
    """Express the Rabi frequency and detuning in units of ``omega_r``."""
    omega_r = recoil_scales(params).omega_r
    return SimParams(
        rabi=params.rabi_frequency / omega_r,
        detuning=params.detuning / omega_r,
    )
