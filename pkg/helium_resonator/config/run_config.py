"""JSON run configuration shared by every command.

Precedence: command-line flags > config file > registry and settings defaults.
"""

import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pydantic import Field, ValidationError, model_validator

from helium_resonator.cavity.geometry import CylinderGeometry
from helium_resonator.conf import model_setting
from helium_resonator.exceptions import ConfigurationError
from helium_resonator.materials.constants import FrozenModel, He3Properties, HeliumProperties
from helium_resonator.materials.registry import DEFAULT_REGISTRY, MaterialRegistry
from helium_resonator.microwave.chain import MicrowaveCavity, NoiseBudgetCalibration
from helium_resonator.thermal.network import ThermalNetwork, WireGeometry

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    TEXT = "text"


class HeatLeakBases(FrozenModel):
    """Fridge base temperatures assumed behind the two quoted heat-leak budgets."""

    heatleak_base_40mk: float = Field(default_factory=lambda: model_setting('HEATLEAK_BASE_40MK'), gt=0)
    heatleak_base_10mk: float = Field(default_factory=lambda: model_setting('HEATLEAK_BASE_10MK'), gt=0)


class WireConfig(FrozenModel):
    diameter: float = Field(default=0.0013, gt=0)
    length: float = Field(default=0.067, gt=0)
    material: str = "copper"


class RunConfig(FrozenModel):
    # registry name -> {field: value}
    materials: Dict[str, Dict[str, Any]] = Field(default_factory=dict)
    geometry: CylinderGeometry = Field(default_factory=CylinderGeometry)
    cell_material: str = "niobium"
    wire: WireConfig = Field(default_factory=WireConfig)
    cavity: MicrowaveCavity = Field(default_factory=MicrowaveCavity)
    noise_calibration: NoiseBudgetCalibration = Field(default_factory=NoiseBudgetCalibration)
    # None means the registry's helium3 entry
    he3: Optional[He3Properties] = None
    bases: HeatLeakBases = Field(default_factory=HeatLeakBases)
    output: OutputFormat = OutputFormat.CSV

    @model_validator(mode='after')
    def _check_references(self) -> "RunConfig":
        registry = self.registry()
        registry.lookup(self.cell_material)
        registry.lookup(self.wire.material)
        return self

    def registry(self) -> MaterialRegistry:
        return DEFAULT_REGISTRY.with_overrides(self.materials)

    def helium(self) -> HeliumProperties:
        return self.registry().lookup("helium4")

    def effective_he3(self) -> He3Properties:
        return self.he3 if self.he3 is not None else self.registry().lookup("helium3")

    def thermal_network(self) -> ThermalNetwork:
        registry = self.registry()
        try:
            return ThermalNetwork(
                geometry=self.geometry,
                wire=WireGeometry(
                    diameter=self.wire.diameter,
                    length=self.wire.length,
                    material=registry.lookup(self.wire.material),
                ),
                solid=registry.lookup(self.cell_material),
                fluid=registry.lookup("helium4"),
            )
        except ValidationError as e:
            raise ConfigurationError(f"Invalid thermal network materials: {e}") from e

    def effective(self) -> "RunConfig":
        """Copy with every implicit default made explicit, as written by ``config dump``."""
        return self.model_copy(update={"he3": self.effective_he3()})


def parse_run_config(text: str, source: str = "<config>") -> RunConfig:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"{source}: not valid JSON: {e}") from e
    if not isinstance(document, dict):
        raise ConfigurationError(f"{source}: the config must be a JSON object")

    try:
        return RunConfig.model_validate(document)
    except ValidationError as e:
        raise ConfigurationError(f"{source}: {e}") from e


def load_run_config(path: Union[str, Path, None]) -> RunConfig:
    """
    Read a JSON config file; no path gives the defaults.

    Raises:
        OSError: If the file cannot be read
        ConfigurationError: If the document is malformed or violates a field constraint
    """
    if path is None:
        return RunConfig()
    config = parse_run_config(Path(path).read_text(encoding="utf-8"), source=str(path))
    logger.debug(f"Loaded run config from {path}")
    return config


def dump_run_config(config: RunConfig) -> str:
    """Effective config as JSON that re-ingests to the same outputs."""
    return json.dumps(config.effective().model_dump(mode="json"), indent=2, sort_keys=True) + "\n"
