# Package for constants and material parameters

from .constants import CONSTANTS, He3Properties, HeliumProperties, MaterialProperties, UniversalConstants
from .registry import DEFAULT_REGISTRY, MaterialRegistry, lookup_material
