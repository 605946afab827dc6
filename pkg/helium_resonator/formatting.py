"""Locale-independent number formatting for CSV and text output."""

import csv
import io
import math

from helium_resonator.conf import model_setting


def format_float(value: float) -> str:
    """Scientific notation with the configured number of significant digits."""
    value = float(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if math.isnan(value):
        return "nan"
    digits = model_setting('CSV_SIGNIFICANT_DIGITS')
    return f"{value:.{digits - 1}e}"


def format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    return format_float(value)


def rows_to_csv(columns, rows) -> str:
    """Header row plus one comma-separated, newline-terminated line per row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows([format_cell(row[column]) for column in columns] for row in rows)
    return buffer.getvalue()
