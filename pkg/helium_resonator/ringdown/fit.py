"""Exponential decay fits on ringdown envelopes."""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from helium_resonator.exceptions import DataError, FitError
from helium_resonator.ringdown.trace import MIN_SAMPLES, RingdownTrace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecayFit:
    tau_amp: float
    q: float
    amplitude0: float
    sigma_tau: float
    rms_residual: float
    frequency_hz: float
    n_points: int

    @property
    def sigma_q(self) -> float:
        return math.pi * self.frequency_hz * self.sigma_tau


def fit_log_linear(t: np.ndarray, y: np.ndarray) -> Tuple[float, float, float]:
    """
    Weighted least squares of ln(y) = c + s·t with weights y².

    The y² weights undo the 1/y noise amplification of the log transform.

    Returns:
        (slope, intercept at t = 0, standard error of the slope); the error is nan
        when there are no residual degrees of freedom
    """
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if t.size < 2:
        raise FitError(f"Need at least two points, got {t.size}")

    t_mid = t.mean()
    design = np.column_stack([np.ones_like(t), t - t_mid]) * y[:, None]
    target = np.log(y) * y
    coef, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    if rank < 2:
        raise FitError("Degenerate fit: all points at the same time")

    c_mid, slope = coef
    dof = t.size - 2
    if dof > 0:
        residuals = target - design @ coef
        scale = residuals @ residuals / dof
        cov = scale * np.linalg.inv(design.T @ design)
        sigma_slope = math.sqrt(cov[1, 1])
    else:
        sigma_slope = math.nan

    return float(slope), float(c_mid - slope * t_mid), sigma_slope


def fit_decay(
        envelope: RingdownTrace,
        f_mode: float,
        t_min: Optional[float] = None,
        t_max: Optional[float] = None
) -> DecayFit:
    """
    Fit a0·e^(−t/τ) to an envelope and report Q = π f τ.

    Args:
        envelope: Positive envelope samples
        f_mode: Mode frequency used for Q
        t_min, t_max: Optional fit window, e.g. to skip a filter or drive transient

    Raises:
        DataError: If the envelope is non-positive at the start of the window
        FitError: If fewer than 16 usable points remain or the decay is not a decay
    """
    t = envelope.times
    y = envelope.samples
    window = np.ones(t.size, dtype=bool)
    if t_min is not None:
        window &= t >= t_min
    if t_max is not None:
        window &= t <= t_max
    t, y = t[window], y[window]

    if y.size == 0 or y[0] <= 0:
        raise DataError("Envelope is not positive at the start of the fit window")

    non_positive = np.flatnonzero(y <= 0)
    if non_positive.size:
        cut = int(non_positive[0])
        logger.warning(f"fit_decay: envelope truncated at sample {cut} of {y.size} (non-positive value)")
        t, y = t[:cut], y[:cut]

    if y.size < MIN_SAMPLES:
        raise FitError(f"Only {y.size} usable points, need {MIN_SAMPLES}")

    slope, intercept, sigma_slope = fit_log_linear(t, y)
    if not slope < 0:
        raise FitError(f"Envelope does not decay (slope {slope:g} 1/s)")

    tau = -1.0 / slope
    amplitude0 = math.exp(intercept)
    model = amplitude0 * np.exp(slope * t)
    rms = float(np.sqrt(np.mean((y - model) ** 2)))

    logger.debug(f"fit_decay: {y.size} points, tau={tau:.6g} s")
    return DecayFit(
        tau_amp=tau,
        q=math.pi * f_mode * tau,
        amplitude0=amplitude0,
        sigma_tau=sigma_slope * tau ** 2,
        rms_residual=rms,
        frequency_hz=f_mode,
        n_points=int(y.size),
    )
