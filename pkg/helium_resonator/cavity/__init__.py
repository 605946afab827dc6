from .bessel import bessel_j, bessel_j_prime, bessel_prime_zero, bessel_zeros_below
from .geometry import CylinderGeometry
from .modes import AcousticMode, acoustic_mode_frequency, acoustic_mode_table, radial_pressure_nodes, te011_frequency
