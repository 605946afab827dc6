"""Microwave readout of the acoustic mode through the TE₀₁₁ cavity."""

import logging
import math
from dataclasses import dataclass

from pydantic import Field

from helium_resonator.exceptions import DomainError
from helium_resonator.materials.constants import CONSTANTS, FrozenModel

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class MicrowaveCavity(FrozenModel):
    """Angular frequencies and loss rates, all in rad/s."""

    omega_c: float = Field(default=TWO_PI * 10.6e9, gt=0)
    kappa_int: float = Field(default=TWO_PI * 31.0, gt=0)
    kappa_in: float = Field(default=TWO_PI * 230.0, gt=0)
    kappa_out: float = Field(default=TWO_PI * 230.0, gt=0)

    @property
    def kappa_tot(self) -> float:
        return self.kappa_int + self.kappa_in + self.kappa_out


class NoiseBudgetCalibration(FrozenModel):
    """Reference point of the phase-noise requirement."""

    t_ref: float = Field(default=0.014, gt=0, description="K")
    q_ref: float = Field(default=1e10, gt=0)
    l_ref: float = Field(default=-143.0, description="dBc/Hz")
    offset_hz: float = Field(default=8000.0, gt=0)


@dataclass(frozen=True)
class FrequencyPlan:
    pump: float
    sideband: float
    degenerate: bool

    @property
    def detuning(self) -> float:
        """Pump minus sideband (cavity), rad/s."""
        return self.pump - self.sideband


def frequency_plan(cavity: MicrowaveCavity, f_he: float) -> FrequencyPlan:
    """Red-detuned pump at ω_C − ω_He; the upconverted sideband lands on the cavity."""
    if f_he < 0:
        raise DomainError(f"Acoustic frequency must be non-negative, got {f_he!r} Hz")
    if f_he == 0:
        logger.warning("frequency_plan: zero acoustic frequency, pump sits on the cavity resonance")

    return FrequencyPlan(
        pump=cavity.omega_c - TWO_PI * f_he,
        sideband=cavity.omega_c,
        degenerate=f_he == 0,
    )


def intracavity_photons(power_in: float, detuning: float, cavity: MicrowaveCavity = MicrowaveCavity()) -> float:
    """
    Mean photon number driven through the input port.

    n = P/(ħω_p) · 4κ_in / (κ_tot² + 4Δ²), with ω_p = ω_C + Δ.
    """
    if power_in < 0:
        raise DomainError(f"Input power must be non-negative, got {power_in!r} W")

    omega_p = cavity.omega_c + detuning
    if omega_p <= 0:
        raise DomainError(f"Detuning {detuning:g} rad/s puts the pump at a non-positive frequency")
    flux = power_in / (CONSTANTS.hbar * omega_p)
    return flux * 4.0 * cavity.kappa_in / (cavity.kappa_tot ** 2 + 4.0 * detuning ** 2)


def phase_noise_requirement(
        temperature: float,
        q_m: float,
        cal: NoiseBudgetCalibration = NoiseBudgetCalibration()
) -> float:
    """
    Allowed source phase noise (dBc/Hz at the calibration offset) for resolving thermal motion.

    The thermal sideband peak scales with T·Q_m, so the floor moves by 10 dB per decade
    of T·Q_m from the calibration point.
    """
    if not temperature > 0:
        raise DomainError(f"Temperature must be positive, got {temperature!r} K")
    if not q_m > 0:
        raise DomainError(f"Mechanical Q must be positive, got {q_m!r}")
    return cal.l_ref + 10.0 * math.log10((temperature * q_m) / (cal.t_ref * cal.q_ref))
