"""Acoustic attenuation of first sound in superfluid ⁴He.

Two loss channels are modelled: the three-phonon process (3PP), which gives the
(k_B T)⁴ law, and viscous scattering off dilute ³He impurities. Attenuations are
energy attenuation coefficients, so Q = ω / (c₄ α).
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from helium_resonator.conf import model_setting
from helium_resonator.exceptions import DomainError, ValidityError
from helium_resonator.materials.constants import CONSTANTS, He3Properties, HeliumProperties, UniversalConstants

HELIUM4 = HeliumProperties()


class Mechanism(str, Enum):
    THREE_PHONON = "ThreePhonon"
    HE3_VISCOUS = "He3Viscous"
    COMBINED = "Combined"


class Regime(str, Enum):
    HYDRODYNAMIC = "Hydrodynamic"
    BALLISTIC = "Ballistic"


@dataclass(frozen=True)
class ModePoint:
    """An acoustic mode frequency evaluated at a helium temperature."""

    frequency_hz: float
    temperature: float

    def __post_init__(self):
        if not self.frequency_hz > 0:
            raise DomainError(f"Mode frequency must be positive, got {self.frequency_hz!r} Hz")
        if not self.temperature > 0:
            raise DomainError(f"Temperature must be positive, got {self.temperature!r} K")

    @property
    def omega(self) -> float:
        return 2.0 * math.pi * self.frequency_hz

    @property
    def validity(self) -> str:
        """'ok' in the phonon-dominated range, 'warn' where rotons start to matter."""
        return "warn" if self.temperature > model_setting('VALIDITY_WARN_K') else "ok"

    def check_validity(self) -> None:
        t_max = model_setting('VALIDITY_MAX_K')
        if self.temperature > t_max:
            raise ValidityError(
                f"T={self.temperature:g} K is above the {t_max:g} K limit of the phonon model"
            )


@dataclass(frozen=True)
class AttenuationBreakdown:
    alpha: float
    q: float
    mechanism: Mechanism
    intermediates: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CombinedAttenuation:
    mechanisms: Tuple[AttenuationBreakdown, ...]
    total: AttenuationBreakdown


def quality_factor(alpha: float, omega: float, c4: float) -> float:
    """Q = ω / (c₄ α); infinite for a lossless channel."""
    if alpha == 0:
        return math.inf
    return omega / (c4 * alpha)


def phonon_lifetime(temperature: float, helium: HeliumProperties = HELIUM4) -> float:
    """Thermal phonon lifetime τ = 1 / (tau_coeff · T⁵) in seconds."""
    if not temperature > 0:
        raise DomainError(f"Temperature must be positive, got {temperature!r} K")
    return 1.0 / (helium.tau_coeff * temperature ** 5)


def three_phonon(
        point: ModePoint,
        helium: HeliumProperties = HELIUM4,
        constants: UniversalConstants = CONSTANTS
) -> AttenuationBreakdown:
    """
    Attenuation from the three-phonon process.

    α = (π²/60)·(G+1)²/(ρ₄ħ³c₄⁶)·(k_B T)⁴·ω·[arctan(2ωτ) − arctan(ΔE τ)]

    Args:
        point: Mode frequency and helium temperature
        helium: ⁴He parameters
        constants: Universal constants

    Returns:
        Breakdown with τ, ΔE, ρ̄ and the arctan bracket as intermediates

    Raises:
        ValidityError: Above the roton clamp temperature
    """
    point.check_validity()

    omega = point.omega
    k_t = constants.k_B * point.temperature
    tau = phonon_lifetime(point.temperature, helium)
    rho_bar = 3.0 * k_t / helium.c4
    delta_e = 3.0 * helium.gamma_dispersion * rho_bar ** 2 * omega
    bracket = math.atan(2.0 * omega * tau) - math.atan(delta_e * tau)

    prefactor = (math.pi ** 2 / 60.0) * (helium.gruneisen_G + 1.0) ** 2 / (
        helium.rho4 * constants.hbar ** 3 * helium.c4 ** 6
    )
    alpha = prefactor * k_t ** 4 * omega * bracket

    return AttenuationBreakdown(
        alpha=alpha,
        q=quality_factor(alpha, omega, helium.c4),
        mechanism=Mechanism.THREE_PHONON,
        intermediates={
            "tau_ph": tau,
            "delta_E": delta_e,
            "rho_bar": rho_bar,
            "bracket": bracket,
            "validity": point.validity,
        },
    )


def crossover_concentration(
        container_size: float,
        he3: He3Properties,
        helium: HeliumProperties = HELIUM4
) -> float:
    """Concentration x_c at which the ³He mean free path equals the container size."""
    if not container_size > 0:
        raise DomainError(f"Container size must be positive, got {container_size!r} m")
    return 1.0 / (he3.sigma * container_size * helium.number_density)


def he3_mean_free_path(he3: He3Properties, helium: HeliumProperties = HELIUM4) -> float:
    """λ = 1 / (n₃ σ) with n₃ = x ρ₄ / m₄."""
    if not he3.concentration_x > 0:
        raise DomainError(f"³He concentration must be positive, got {he3.concentration_x!r}")
    n3 = he3.concentration_x * helium.number_density
    return 1.0 / (n3 * he3.sigma)


def he3_regime(mean_free_path: float, container_size: float) -> Regime:
    if not container_size > 0:
        raise DomainError(f"Container size must be positive, got {container_size!r} m")
    return Regime.BALLISTIC if mean_free_path > container_size else Regime.HYDRODYNAMIC


def he3_hydrodynamic_alpha(
        point: ModePoint,
        he3: He3Properties,
        helium: HeliumProperties = HELIUM4,
        constants: UniversalConstants = CONSTANTS
) -> float:
    """Concentration-independent viscous ³He attenuation."""
    return (
        (7.0 / 3.0) * math.sqrt(constants.k_B * he3.effective_mass / math.pi) / he3.sigma
        / (helium.rho4 * helium.c4 ** 3)
        * math.sqrt(point.temperature) * point.omega ** 2
    )


def he3_attenuation(
        point: ModePoint,
        he3: He3Properties,
        container_size: float,
        helium: HeliumProperties = HELIUM4,
        constants: UniversalConstants = CONSTANTS
) -> AttenuationBreakdown:
    """
    Attenuation from dilute ³He behaving as a classical viscous gas.

    In the hydrodynamic regime the loss does not depend on concentration. Once the
    mean free path exceeds the container, the gas is collisionless and the loss is
    scaled by x / x_c, linear in the number of scatterers.
    """
    mean_free_path = he3_mean_free_path(he3, helium)
    regime = he3_regime(mean_free_path, container_size)
    x_c = crossover_concentration(container_size, he3, helium)

    alpha = he3_hydrodynamic_alpha(point, he3, helium, constants)
    scale = 1.0
    if regime is Regime.BALLISTIC:
        scale = he3.concentration_x / x_c
        alpha *= scale

    return AttenuationBreakdown(
        alpha=alpha,
        q=quality_factor(alpha, point.omega, helium.c4),
        mechanism=Mechanism.HE3_VISCOUS,
        intermediates={
            "regime": regime,
            "mean_free_path": mean_free_path,
            "x_crossover": x_c,
            "ballistic_scale": scale,
        },
    )


def combined_q(
        point: ModePoint,
        he3: Optional[He3Properties],
        container_size: float,
        helium: HeliumProperties = HELIUM4,
        constants: UniversalConstants = CONSTANTS
) -> CombinedAttenuation:
    """Add the loss channels: 1/Q_total = Σ 1/Q_i, i.e. α_total = Σ α_i."""
    mechanisms = [three_phonon(point, helium, constants)]
    if he3 is not None:
        mechanisms.append(he3_attenuation(point, he3, container_size, helium, constants))

    alpha = sum(m.alpha for m in mechanisms)
    intermediates = {"validity": point.validity}
    if he3 is not None:
        intermediates["regime"] = mechanisms[1].intermediates["regime"]

    total = AttenuationBreakdown(
        alpha=alpha,
        q=quality_factor(alpha, point.omega, helium.c4),
        mechanism=Mechanism.COMBINED,
        intermediates=intermediates,
    )
    return CombinedAttenuation(mechanisms=tuple(mechanisms), total=total)


def required_he3_concentration(
        q_target: float,
        point: ModePoint,
        container_size: float,
        he3: He3Properties = He3Properties(),
        helium: HeliumProperties = HELIUM4,
        constants: UniversalConstants = CONSTANTS
) -> float:
    """
    Largest ³He concentration for which the ³He loss alone still allows ``q_target``.

    Returns 1.0 when the hydrodynamic (concentration independent) Q already exceeds
    the target.
    """
    if not q_target > 0:
        raise DomainError(f"Target Q must be positive, got {q_target!r}")

    q_hydro = quality_factor(he3_hydrodynamic_alpha(point, he3, helium, constants), point.omega, helium.c4)
    if q_hydro >= q_target:
        return 1.0
    return crossover_concentration(container_size, he3, helium) * q_hydro / q_target
