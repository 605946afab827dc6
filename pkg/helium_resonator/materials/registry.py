"""Registry of material parameters, preloaded with the cell's materials."""

import logging
from types import MappingProxyType
from typing import Any, Dict, Mapping, Union

from pydantic import ValidationError

from helium_resonator.exceptions import ConfigurationError
from helium_resonator.materials.constants import He3Properties, HeliumProperties, MaterialProperties

logger = logging.getLogger(__name__)

RegistryEntry = Union[HeliumProperties, He3Properties, MaterialProperties]


DEFAULT_ENTRIES: Dict[str, RegistryEntry] = {
    "helium4": HeliumProperties(),
    "helium3": He3Properties(),
    "niobium": MaterialProperties(name="niobium", rho=8570.0, c_sound=3480.0),
    # RRR 90 reproduces the ~1e4 K/W suspension wire at 40 mK
    "copper": MaterialProperties(name="copper", rho=8960.0, c_sound=3570.0, rrr=90.0, resistivity_300k=1.68e-8),
    # 5N annealed silver, proposed replacement for the suspension wire
    "silver": MaterialProperties(name="silver", rho=10490.0, c_sound=2680.0, rrr=1000.0, resistivity_300k=1.59e-8),
}


class MaterialRegistry:
    """Immutable name -> parameters mapping."""

    def __init__(self, entries: Mapping[str, RegistryEntry]):
        self._entries = MappingProxyType(dict(entries))

    def names(self):
        return sorted(self._entries)

    def lookup(self, name: str) -> RegistryEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise ConfigurationError(
                f"Unknown material '{name}'; known materials: {', '.join(self.names())}"
            ) from None

    def with_overrides(self, overrides: Mapping[str, Mapping[str, Any]]) -> "MaterialRegistry":
        """Return a new registry with field overrides applied and re-validated."""
        entries = dict(self._entries)
        for name, fields in overrides.items():
            current = self.lookup(name)
            try:
                entries[name] = type(current).model_validate({**current.model_dump(), **fields})
            except ValidationError as e:
                raise ConfigurationError(f"Invalid override for '{name}': {e}") from e
            logger.debug(f"Registry override applied: {name} <- {dict(fields)}")
        return MaterialRegistry(entries)


DEFAULT_REGISTRY = MaterialRegistry(DEFAULT_ENTRIES)


def lookup_material(name: str) -> RegistryEntry:
    """Return the default registry entry for ``name``."""
    return DEFAULT_REGISTRY.lookup(name)
