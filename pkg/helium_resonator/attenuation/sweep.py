"""Temperature sweeps of the loss model (the Q versus T curves)."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from helium_resonator.attenuation.model import HELIUM4, ModePoint, combined_q, three_phonon
from helium_resonator.exceptions import DomainError
from helium_resonator.materials.constants import He3Properties, HeliumProperties

logger = logging.getLogger(__name__)

QCURVE_COLUMNS = ["T_K", "alpha_3pp", "alpha_he3", "Q_3pp", "Q_he3", "Q_total", "validity"]


@dataclass(frozen=True)
class QCurveRow:
    T_K: float
    alpha_3pp: float
    alpha_he3: float
    Q_3pp: float
    Q_he3: float
    Q_total: float
    validity: str


def log_temperatures(t_min: float, t_max: float, points: int) -> np.ndarray:
    if not 0 < t_min < t_max:
        raise DomainError(f"Need 0 < tmin < tmax, got tmin={t_min!r}, tmax={t_max!r}")
    if points < 2:
        raise DomainError(f"Need at least 2 points, got {points}")
    return np.geomspace(t_min, t_max, points)


def _qcurve_row(args) -> QCurveRow:
    frequency_hz, temperature, he3, container_size, helium = args
    point = ModePoint(frequency_hz, float(temperature))
    if he3 is None:
        breakdown = three_phonon(point, helium)
        return QCurveRow(point.temperature, breakdown.alpha, 0.0, breakdown.q, float("inf"), breakdown.q, point.validity)

    combined = combined_q(point, he3, container_size, helium)
    ppp, viscous = combined.mechanisms
    return QCurveRow(
        T_K=point.temperature,
        alpha_3pp=ppp.alpha,
        alpha_he3=viscous.alpha,
        Q_3pp=ppp.q,
        Q_he3=viscous.q,
        Q_total=combined.total.q,
        validity=point.validity,
    )


def qcurve(
        frequency_hz: float,
        t_min: float,
        t_max: float,
        points: int,
        he3: Optional[He3Properties],
        container_size: float,
        helium: HeliumProperties = HELIUM4,
        workers: int = 1
) -> List[QCurveRow]:
    """
    Evaluate every loss channel on a log-spaced temperature grid.

    Rows come back in grid order whatever the number of workers.
    """
    temperatures = log_temperatures(t_min, t_max, points)
    tasks = [(frequency_hz, t, he3, container_size, helium) for t in temperatures]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_qcurve_row, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        rows = [_qcurve_row(task) for task in tasks]

    flagged = sum(1 for row in rows if row.validity != "ok")
    if flagged:
        logger.warning(f"qcurve: {flagged} of {len(rows)} rows lie where roton scattering is not modelled")
    return rows
