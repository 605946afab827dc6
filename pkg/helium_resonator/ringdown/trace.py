"""Sampled ringdown traces and their CSV file format."""

import io
import logging
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np

from helium_resonator.conf import model_setting
from helium_resonator.exceptions import DataError, DomainError

logger = logging.getLogger(__name__)

MIN_SAMPLES = 16
CSV_HEADER = "time_s,amplitude"


@dataclass(frozen=True)
class RingdownTrace:
    """Uniformly sampled signal or envelope; sample i is at start_time + i / sample_rate."""

    sample_rate: float
    samples: np.ndarray = field(repr=False)
    start_time: float = 0.0

    def __post_init__(self):
        if not self.sample_rate > 0:
            raise DomainError(f"Sample rate must be positive, got {self.sample_rate!r} Hz")
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.size < MIN_SAMPLES:
            raise DomainError(f"A trace needs at least {MIN_SAMPLES} samples, got {samples.size}")
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.start_time + np.arange(self.samples.size) / self.sample_rate


def trace_to_csv(trace: RingdownTrace) -> str:
    digits = model_setting('CSV_SIGNIFICANT_DIGITS')
    buffer = io.StringIO()
    np.savetxt(
        buffer,
        np.column_stack((trace.times, trace.samples)),
        fmt=f"%.{digits - 1}e",
        delimiter=",",
        header=CSV_HEADER,
        comments="",
    )
    return buffer.getvalue()


def write_trace(trace: RingdownTrace, path: Union[str, Path]) -> None:
    Path(path).write_text(trace_to_csv(trace), encoding="utf-8")


def read_trace(path: Union[str, Path]) -> RingdownTrace:
    """
    Load a trace written as ``time_s,amplitude`` rows.

    Raises:
        OSError: If the file cannot be read
        DataError: On a wrong header, too few rows or non-uniform sampling
    """
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().strip()
        if header != CSV_HEADER:
            raise DataError(f"{path}: expected header '{CSV_HEADER}'")
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", UserWarning)
                data = np.loadtxt(handle, delimiter=",", ndmin=2)
        except ValueError as e:
            raise DataError(f"{path}: unparsable row: {e}") from e

    if data.shape[1:] != (2,) or data.shape[0] < MIN_SAMPLES:
        raise DataError(f"{path}: need at least {MIN_SAMPLES} rows of two columns")

    times, samples = data[:, 0], data[:, 1]
    steps = np.diff(times)
    if np.any(steps <= 0):
        raise DataError(f"{path}: time column is not strictly increasing")
    dt = (times[-1] - times[0]) / (times.size - 1)
    # times are written with finite precision; only reject real gaps or jitter
    if np.max(np.abs(steps - dt)) > 1e-2 * dt:
        raise DataError(f"{path}: time column is not uniformly sampled")

    logger.debug(f"read_trace: {times.size} samples at {1.0 / dt:.9g} Hz from {path}")
    return RingdownTrace(sample_rate=1.0 / dt, samples=samples, start_time=float(times[0]))
