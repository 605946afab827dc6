from .network import (
    ThermalNetwork,
    ThermalReport,
    WireGeometry,
    helium_heat_capacity,
    kapitza_resistance,
    required_heat_leak,
    steady_state_temperature,
    thermal_report,
    thermal_time_constant,
    wire_thermal_resistance,
)
