"""Base class for the model commands with shared config, output and error handling."""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from django.core.management.base import BaseCommand, CommandError
from pydantic import ValidationError

from helium_resonator.cavity.geometry import CylinderGeometry
from helium_resonator.config import OutputFormat, RunConfig, load_run_config
from helium_resonator.exceptions import ConvergenceError, ResonatorModelError
from helium_resonator.formatting import format_cell, format_float, rows_to_csv

logger = logging.getLogger(__name__)

EXIT_INVALID = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4


class Table:
    """Named columns plus rows keyed by column name."""

    def __init__(self, columns: Sequence[str], rows: Sequence[Mapping[str, Any]]):
        self.columns = list(columns)
        self.rows = [dict(row) for row in rows]

    @classmethod
    def single(cls, **values: Any) -> "Table":
        return cls(list(values), [values])


def _json_value(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    value = float(value)
    # JSON has no inf/nan literals
    return value if math.isfinite(value) else format_float(value)


def render_table(table: Table, output: OutputFormat) -> str:
    if output is OutputFormat.CSV:
        return rows_to_csv(table.columns, table.rows)
    if output is OutputFormat.JSON:
        payload = [{column: _json_value(row[column]) for column in table.columns} for row in table.rows]
        return json.dumps(payload, indent=2) + "\n"
    lines = [" ".join(f"{column}={format_cell(row[column])}" for column in table.columns) for row in table.rows]
    return "".join(line + "\n" for line in lines)


class BaseModelCommand(BaseCommand):
    """
    Shared plumbing for the model commands.

    Subclasses implement ``add_model_arguments`` and ``run_model``; the latter returns a
    ``Table`` (rendered with ``--format``) or ready-made text.
    """

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--config', type=str, default=None, help='JSON run configuration')
        parser.add_argument('--out', type=str, default=None, help='Write results to this path instead of stdout')
        parser.add_argument(
            '--format', dest='output_format', choices=[f.value for f in OutputFormat], default=None,
            help='Output format (default: from config, csv)'
        )
        self.add_model_arguments(parser)

    def add_model_arguments(self, parser):
        pass

    def run_model(self, config: RunConfig, options: Dict[str, Any]):
        raise NotImplementedError

    # ========== OPTION RESOLUTION ==========

    @staticmethod
    def option(options: Dict[str, Any], name: str, fallback: Any) -> Any:
        """Flag value when given, else ``fallback`` (config or default)."""
        value = options.get(name)
        return fallback if value is None else value

    def output_format(self, config: RunConfig, options: Dict[str, Any]) -> OutputFormat:
        return OutputFormat(self.option(options, 'output_format', config.output))

    # ========== OUTPUT ==========

    def _emit(self, text: str, out_path: Optional[str]) -> None:
        if out_path:
            Path(out_path).write_text(text, encoding="utf-8")
            self.stderr.write(self.style.SUCCESS(f"Wrote {out_path}"))
        else:
            self.stdout.write(text, ending='')

    # ========== EXECUTION ==========

    def handle(self, *args, **options):
        try:
            config = load_run_config(options.get('config'))
            logger.debug(f"{type(self).__module__}: config from {options.get('config') or 'defaults'}")
            result = self.run_model(config, options)
            if isinstance(result, Table):
                result = render_table(result, self.output_format(config, options))
            self._emit(result, options.get('out'))
        except ConvergenceError as e:
            raise CommandError(f"Did not converge: {e}", returncode=EXIT_CONVERGENCE) from e
        except (ResonatorModelError, ValidationError) as e:
            raise CommandError(str(e), returncode=EXIT_INVALID) from e
        except OSError as e:
            raise CommandError(f"I/O error: {e}", returncode=EXIT_IO) from e


def table_from_records(columns: List[str], records) -> Table:
    """Table from objects exposing one attribute per column."""
    return Table(columns, [{column: getattr(record, column) for column in columns} for record in records])


# ========== SHARED ARGUMENTS ==========

def add_geometry_arguments(parser):
    parser.add_argument('--radius', type=float, default=None, help='Cell inner radius, m')
    parser.add_argument('--length', type=float, default=None, help='Cell inner length, m')


def geometry_from_options(config: RunConfig, options: Dict[str, Any]) -> CylinderGeometry:
    """Config geometry with --radius / --length applied on top."""
    updates = {key: options[key] for key in ('radius', 'length') if options.get(key) is not None}
    if not updates:
        return config.geometry
    return CylinderGeometry.model_validate({**config.geometry.model_dump(), **updates})
