"""Analytic eigenmodes of the rigid helium-filled cylinder.

Acoustic pressure modes satisfy Neumann conditions on every wall, so
p ∝ J_m(j'_{m,n} r/R)·cos(mφ)·cos(πlz/L). Radial index n = 0 (m = 0 only) stands
for the trivial root and gives the pure longitudinal modes.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

from helium_resonator.cavity.bessel import MAX_ORDER, MAX_ROOT, bessel_prime_zero, bessel_zeros_below, check_indices
from helium_resonator.cavity.geometry import CylinderGeometry
from helium_resonator.exceptions import DomainError, RangeError
from helium_resonator.materials.constants import CONSTANTS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AcousticMode:
    m: int
    n: int
    l: int
    frequency_hz: float
    radial_node_radii: Tuple[float, ...]

    @property
    def indices(self) -> Tuple[int, int, int]:
        return self.m, self.n, self.l


def _radial_root(m: int, n: int) -> float:
    if n == 0:
        if m != 0:
            raise RangeError(f"Radial index n=0 is only defined for m=0, got m={m}")
        return 0.0
    return bessel_prime_zero(m, n)


def acoustic_mode_frequency(geom: CylinderGeometry, c: float, m: int, n: int, l: int) -> float:
    """
    f = (c/2π)·√((j'_{m,n}/R)² + (πl/L)²)

    Raises:
        RangeError: Unsupported indices, or the (0, 0, 0) mode with no wavenumber
    """
    if l < 0:
        raise RangeError(f"Longitudinal index must be >= 0, got l={l}")
    if not c > 0:
        raise DomainError(f"Sound speed must be positive, got {c!r}")

    radial = _radial_root(m, n) / geom.radius
    longitudinal = math.pi * l / geom.length
    if radial == 0 and longitudinal == 0:
        raise RangeError("Mode (0, 0, 0) has zero wavenumber")
    return c / (2.0 * math.pi) * math.hypot(radial, longitudinal)


def radial_pressure_nodes(geom: CylinderGeometry, m: int, n: int) -> List[float]:
    """Radii in (0, R) where the pressure of radial family (m, n) vanishes."""
    if n == 0 and m == 0:
        return []
    check_indices(m, n)
    root = bessel_prime_zero(m, n)
    return [geom.radius * z / root for z in bessel_zeros_below(m, root)]


def acoustic_mode_table(geom: CylinderGeometry, c: float, f_max: float) -> List[AcousticMode]:
    """Every supported mode with f <= f_max, sorted by frequency."""
    if not f_max > 0:
        raise DomainError(f"f_max must be positive, got {f_max!r}")

    l_max = int(math.floor(2.0 * geom.length * f_max / c))
    families = [(0, 0)] + [(m, n) for m in range(MAX_ORDER + 1) for n in range(1, MAX_ROOT + 1)]

    modes = []
    for m, n in families:
        nodes = tuple(radial_pressure_nodes(geom, m, n))
        for l in range(l_max + 1):
            if m == 0 and n == 0 and l == 0:
                continue
            f = acoustic_mode_frequency(geom, c, m, n, l)
            if f > f_max:
                break
            modes.append(AcousticMode(m, n, l, f, nodes))

    modes.sort(key=lambda mode: (mode.frequency_hz, mode.indices))
    logger.debug(f"acoustic_mode_table: {len(modes)} modes below {f_max:g} Hz")
    return modes


def te011_frequency(geom: CylinderGeometry, eps_r: float) -> float:
    """TE₀₁₁ resonance of the cylinder filled with a dielectric of permittivity eps_r."""
    if not eps_r >= 1:
        raise DomainError(f"Relative permittivity must be >= 1, got {eps_r!r}")
    k = math.hypot(bessel_prime_zero(0, 1) / geom.radius, math.pi / geom.length)
    return CONSTANTS.c_light / (2.0 * math.pi * math.sqrt(eps_r)) * k
