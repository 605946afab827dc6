from .chain import (
    FrequencyPlan,
    MicrowaveCavity,
    NoiseBudgetCalibration,
    frequency_plan,
    intracavity_photons,
    phase_noise_requirement,
)
