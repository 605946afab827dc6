"""Geometry of the right cylindrical cell."""

import math

from pydantic import Field

from helium_resonator.materials.constants import FrozenModel


class CylinderGeometry(FrozenModel):
    """Inner radius and length of the helium-filled niobium cell."""

    radius: float = Field(default=0.018, gt=0, description="m")
    length: float = Field(default=0.040, gt=0, description="m")

    @property
    def diameter(self) -> float:
        return 2.0 * self.radius

    @property
    def wetted_area(self) -> float:
        """Side wall plus both end caps, m²."""
        return 2.0 * math.pi * self.radius * self.length + 2.0 * math.pi * self.radius ** 2

    @property
    def volume(self) -> float:
        return math.pi * self.radius ** 2 * self.length
