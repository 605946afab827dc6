from .model import (
    AttenuationBreakdown,
    CombinedAttenuation,
    Mechanism,
    ModePoint,
    Regime,
    combined_q,
    crossover_concentration,
    he3_attenuation,
    he3_mean_free_path,
    he3_regime,
    phonon_lifetime,
    required_he3_concentration,
    three_phonon,
)
from .inversion import achievable_q_range, temperature_from_q
from .sweep import QCURVE_COLUMNS, QCurveRow, qcurve
