"""Helium temperature from a measured Q, assuming a 3PP-limited mode."""

import logging
import math
from typing import Tuple

from helium_resonator.attenuation.model import HELIUM4, ModePoint, three_phonon
from helium_resonator.conf import model_setting
from helium_resonator.exceptions import DomainError, RangeError
from helium_resonator.materials.constants import HeliumProperties
from helium_resonator.numerics import bisect_root

logger = logging.getLogger(__name__)


def achievable_q_range(frequency_hz: float, helium: HeliumProperties = HELIUM4) -> Tuple[float, float]:
    """(Q_min, Q_max) of the 3PP model over the inversion bracket."""
    t_min = model_setting('INVERSION_T_MIN_K')
    t_max = model_setting('INVERSION_T_MAX_K')
    q_min = three_phonon(ModePoint(frequency_hz, t_max), helium).q
    q_max = three_phonon(ModePoint(frequency_hz, t_min), helium).q
    return q_min, q_max


def temperature_from_q(q: float, frequency_hz: float, helium: HeliumProperties = HELIUM4) -> float:
    """
    Invert the 3PP model: the temperature at which the mode has quality factor ``q``.

    Args:
        q: Measured (or targeted) quality factor
        frequency_hz: Mode frequency
        helium: ⁴He parameters

    Returns:
        Temperature in K on the monotonic branch of the model

    Raises:
        RangeError: If ``q`` is outside what the model reaches on the bracket
        ConvergenceError: If bisection hits its iteration cap
    """
    if not q > 0:
        raise DomainError(f"Q must be positive, got {q!r}")

    q_min, q_max = achievable_q_range(frequency_hz, helium)
    if not q_min <= q <= q_max:
        raise RangeError(
            f"Q={q:g} is outside the invertible range [{q_min:.4g}, {q_max:.4g}] at {frequency_hz:g} Hz",
            q_min=q_min,
            q_max=q_max,
        )

    log_q = math.log(q)

    def residual(temperature: float) -> float:
        return math.log(three_phonon(ModePoint(frequency_hz, temperature), helium).q) - log_q

    temperature = bisect_root(
        residual,
        model_setting('INVERSION_T_MIN_K'),
        model_setting('INVERSION_T_MAX_K'),
        rtol=model_setting('BISECTION_RTOL'),
        max_iter=model_setting('BISECTION_MAX_ITER'),
    )
    logger.debug(f"temperature_from_q: Q={q:g} at {frequency_hz:g} Hz -> T={temperature:.6g} K")
    return temperature
