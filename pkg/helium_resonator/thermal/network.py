"""Thermal budget of the helium cell.

The helium is linked to the mixing-chamber plate through a series network:
base -- suspension wire -- cell wall -- Kapitza boundary -- helium.
Resistances are evaluated at the mean temperature of their segment.
"""

import logging
import math
from dataclasses import dataclass

from pydantic import Field

from helium_resonator.cavity.geometry import CylinderGeometry
from helium_resonator.conf import model_setting
from helium_resonator.exceptions import ConfigurationError, DomainError
from helium_resonator.materials.constants import (
    CONSTANTS,
    FrozenModel,
    HeliumProperties,
    MaterialProperties,
    UniversalConstants,
)
from helium_resonator.materials.registry import lookup_material
from helium_resonator.numerics import fixed_point

logger = logging.getLogger(__name__)


class WireGeometry(FrozenModel):
    """Suspension wire between the cell and the mixing-chamber plate."""

    diameter: float = Field(default=0.0013, gt=0, description="m")
    length: float = Field(default=0.067, gt=0, description="m")
    material: MaterialProperties = Field(default_factory=lambda: lookup_material("copper"))

    @property
    def cross_section(self) -> float:
        return math.pi * (self.diameter / 2.0) ** 2


class ThermalNetwork(FrozenModel):
    geometry: CylinderGeometry = Field(default_factory=CylinderGeometry)
    wire: WireGeometry = Field(default_factory=WireGeometry)
    solid: MaterialProperties = Field(default_factory=lambda: lookup_material("niobium"))
    fluid: HeliumProperties = Field(default_factory=lambda: lookup_material("helium4"))


@dataclass(frozen=True)
class ThermalReport:
    temperature: float
    r_kapitza: float
    r_wire: float
    heat_capacity: float
    time_constant: float
    t_helium: float
    q_dot: float
    t_base: float

    @property
    def resistance_ratio(self) -> float:
        return self.r_kapitza / self.r_wire

    @property
    def kapitza_dominated(self) -> bool:
        return self.r_kapitza > self.r_wire


def _require_positive(name: str, value: float, unit: str) -> None:
    if not value > 0:
        raise DomainError(f"{name} must be positive, got {value!r} {unit}")


def kapitza_resistance(
        temperature: float,
        area: float,
        solid: MaterialProperties,
        fluid: HeliumProperties,
        constants: UniversalConstants = CONSTANTS
) -> float:
    """R_k = 15 ħ³ ρ_s c_s³ / (2π² k_B⁴ T³ ρ₄ c₄ A), in K/W."""
    _require_positive("Temperature", temperature, "K")
    _require_positive("Area", area, "m²")
    return (15.0 * constants.hbar ** 3 * solid.rho * solid.c_sound ** 3) / (
        2.0 * math.pi ** 2 * constants.k_B ** 4 * temperature ** 3 * fluid.rho4 * fluid.c4 * area
    )


def helium_heat_capacity(
        temperature: float,
        volume: float,
        fluid: HeliumProperties,
        constants: UniversalConstants = CONSTANTS
) -> float:
    """Phonon-gas heat capacity C = (2π²/15)·k_B·(k_B T/ħc₄)³·V, in J/K."""
    _require_positive("Temperature", temperature, "K")
    _require_positive("Volume", volume, "m³")
    return (2.0 * math.pi ** 2 / 15.0) * constants.k_B * (
        constants.k_B * temperature / (constants.hbar * fluid.c4)
    ) ** 3 * volume


def wire_thermal_resistance(
        temperature: float,
        wire: WireGeometry,
        constants: UniversalConstants = CONSTANTS
) -> float:
    """Wiedemann-Franz resistance l / (κ A) of a metal wire, κ = L₀ T RRR / ρ₃₀₀."""
    _require_positive("Temperature", temperature, "K")
    material = wire.material
    if material.rrr is None or material.resistivity_300k is None:
        raise ConfigurationError(f"Material '{material.name}' needs rrr and resistivity_300k for a wire")

    residual_resistivity = material.resistivity_300k / material.rrr
    conductivity = constants.lorenz_number * temperature / residual_resistivity
    return wire.length / (conductivity * wire.cross_section)


def thermal_time_constant(
        temperature: float,
        geom: CylinderGeometry,
        solid: MaterialProperties,
        fluid: HeliumProperties
) -> float:
    """τ = R_k C, independent of temperature as long as both follow their power laws."""
    return (
        kapitza_resistance(temperature, geom.wetted_area, solid, fluid)
        * helium_heat_capacity(temperature, geom.volume, fluid)
    )


def _r_wire(network: ThermalNetwork, t_low: float, t_high: float) -> float:
    return wire_thermal_resistance(0.5 * (t_low + t_high), network.wire)


def _r_kapitza(network: ThermalNetwork, t_low: float, t_high: float) -> float:
    return kapitza_resistance(0.5 * (t_low + t_high), network.geometry.wetted_area, network.solid, network.fluid)


def steady_state_temperature(base_t: float, q_dot: float, network: ThermalNetwork = ThermalNetwork()) -> float:
    """
    Helium temperature when ``q_dot`` flows from the helium to the base plate.

    Args:
        base_t: Mixing-chamber plate temperature in K
        q_dot: Heat leak into the helium in W
        network: Cell, wire and materials

    Raises:
        ConvergenceError: If a segment's fixed-point iteration hits its cap
    """
    _require_positive("Base temperature", base_t, "K")
    if q_dot < 0:
        raise DomainError(f"Heat leak must be non-negative, got {q_dot!r} W")
    if q_dot == 0:
        return base_t

    options = dict(
        rtol=model_setting('FIXED_POINT_RTOL'),
        max_iter=model_setting('FIXED_POINT_MAX_ITER'),
        relaxation=model_setting('FIXED_POINT_RELAXATION'),
    )
    t_wall = fixed_point(lambda t: base_t + q_dot * _r_wire(network, base_t, t), base_t, **options)
    t_helium = fixed_point(lambda t: t_wall + q_dot * _r_kapitza(network, t_wall, t), t_wall, **options)

    logger.debug(f"steady_state_temperature: base={base_t:g} K q={q_dot:g} W wall={t_wall:.6g} K helium={t_helium:.6g} K")
    return t_helium


def required_heat_leak(target_t: float, base_t: float, network: ThermalNetwork = ThermalNetwork()) -> float:
    """
    Heat leak that holds the helium at ``target_t`` above a base plate at ``base_t``.

    The inverse of ``steady_state_temperature``.
    """
    _require_positive("Base temperature", base_t, "K")
    if not target_t > base_t:
        raise DomainError(f"Target {target_t!r} K must be above base {base_t!r} K")

    def wall_update(t_wall: float) -> float:
        r_w = _r_wire(network, base_t, t_wall)
        r_k = _r_kapitza(network, t_wall, target_t)
        return base_t + (target_t - base_t) * r_w / (r_w + r_k)

    t_wall = fixed_point(
        wall_update,
        base_t,
        rtol=model_setting('FIXED_POINT_RTOL'),
        max_iter=model_setting('FIXED_POINT_MAX_ITER'),
    )
    q_dot = (target_t - t_wall) / _r_kapitza(network, t_wall, target_t)

    logger.debug(f"required_heat_leak: {target_t:g} K from {base_t:g} K -> {q_dot:.6g} W (wall {t_wall:.6g} K)")
    return q_dot


def thermal_report(temperature: float, base_t: float, network: ThermalNetwork = ThermalNetwork()) -> ThermalReport:
    """Resistances, capacity and time constant at ``temperature``, plus the heat leak that holds it."""
    geom = network.geometry
    return ThermalReport(
        temperature=temperature,
        r_kapitza=kapitza_resistance(temperature, geom.wetted_area, network.solid, network.fluid),
        r_wire=wire_thermal_resistance(temperature, network.wire),
        heat_capacity=helium_heat_capacity(temperature, geom.volume, network.fluid),
        time_constant=thermal_time_constant(temperature, geom, network.solid, network.fluid),
        t_helium=temperature,
        q_dot=required_heat_leak(temperature, base_t, network),
        t_base=base_t,
    )
