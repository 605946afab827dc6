from .run_config import (
    HeatLeakBases,
    OutputFormat,
    RunConfig,
    WireConfig,
    dump_run_config,
    load_run_config,
    parse_run_config,
)
