"""Universal constants and per-material parameter types.

Every symbol of the attenuation, ³He and Kapitza formulas has exactly one home
here (or in ``helium_resonator.cavity.geometry`` for lengths and areas).
All values are SI.
"""

from typing import Optional

import scipy.constants as sc
from pydantic import BaseModel, ConfigDict, Field


class FrozenModel(BaseModel):
    """Immutable value type that rejects unknown fields."""

    model_config = ConfigDict(frozen=True, extra='forbid')


class UniversalConstants(FrozenModel):
    hbar: float = Field(default=sc.hbar, gt=0, description="J·s")
    k_B: float = Field(default=sc.k, gt=0, description="J/K")
    c_light: float = Field(default=sc.c, gt=0, description="m/s")
    atomic_mass_unit: float = Field(default=sc.atomic_mass, gt=0, description="kg")
    lorenz_number: float = Field(default=2.44e-8, gt=0, description="W·Ω/K²")


CONSTANTS = UniversalConstants()


class HeliumProperties(FrozenModel):
    """Superfluid ⁴He at saturated vapour pressure, treated as temperature independent."""

    rho4: float = Field(default=145.0, gt=0, description="kg/m³")
    c4: float = Field(default=238.0, gt=0, description="m/s")
    gruneisen_G: float = Field(default=2.84, gt=0)
    # Dispersion non-linearity, (s/kg·m)²
    gamma_dispersion: float = Field(default=-1e48, lt=0)
    # τ = 1 / (tau_coeff · T⁵)
    tau_coeff: float = Field(default=0.9e7, gt=0, description="s⁻¹K⁻⁵")
    eps_r: float = Field(default=1.0565, ge=1.0)
    m4: float = Field(default=4.0026 * sc.atomic_mass, gt=0, description="kg")

    @property
    def number_density(self) -> float:
        """n₄ in m⁻³."""
        return self.rho4 / self.m4


class He3Properties(FrozenModel):
    """Dilute ³He impurities in the superfluid."""

    sigma: float = Field(default=6e-20, gt=0, description="m²")
    mass_ratio_effective: float = Field(default=2.34, gt=0)
    m3: float = Field(default=3.016 * sc.atomic_mass, gt=0, description="kg")
    concentration_x: float = Field(default=1e-6, ge=0, le=1)

    @property
    def effective_mass(self) -> float:
        return self.mass_ratio_effective * self.m3


class MaterialProperties(FrozenModel):
    """Solid used for the cell walls or the suspension wire."""

    name: str
    rho: float = Field(gt=0, description="kg/m³")
    c_sound: float = Field(gt=0, description="m/s")
    rrr: Optional[float] = Field(default=None, gt=0)
    resistivity_300k: Optional[float] = Field(default=None, gt=0, description="Ω·m")
