"""Synthetic free decays and lock-in style envelope extraction."""

import logging
import math

import numpy as np
from scipy import signal

from helium_resonator.exceptions import ConfigurationError
from helium_resonator.ringdown.trace import MIN_SAMPLES, RingdownTrace

logger = logging.getLogger(__name__)


def amplitude_decay_time(frequency_hz: float, q: float) -> float:
    """τ_amp = Q / (π f)."""
    return q / (math.pi * frequency_hz)


def synthesize(
        frequency_hz: float,
        q: float,
        a0: float,
        sample_rate: float,
        duration: float,
        noise_rms: float = 0.0,
        seed: int = 0,
        envelope_mode: bool = False,
        start_time: float = 0.0
) -> RingdownTrace:
    """
    Free decay a0·e^(−t/τ)·sin(2πft) plus seeded gaussian noise.

    Args:
        frequency_hz: Mode frequency
        q: Quality factor, τ = q / (π f)
        a0: Amplitude at t = 0
        sample_rate: Samples per second
        duration: Trace length in seconds
        noise_rms: Standard deviation of the additive noise
        seed: Seed of the noise generator
        envelope_mode: Emit a0·e^(−t/τ) directly, for sampling far below the carrier
        start_time: Time of the first sample

    Raises:
        ConfigurationError: If the sampling cannot represent the requested signal
    """
    if not frequency_hz > 0 or not q > 0:
        raise ConfigurationError(f"Need positive frequency and Q, got f={frequency_hz!r}, q={q!r}")
    if not duration > 0 or not sample_rate > 0:
        raise ConfigurationError(f"Need positive duration and sample rate, got {duration!r} s, {sample_rate!r} Hz")
    if not envelope_mode and not sample_rate > 2.0 * frequency_hz:
        raise ConfigurationError(
            f"Sample rate {sample_rate:g} Hz does not resolve a {frequency_hz:g} Hz carrier; use envelope mode"
        )
    if noise_rms < 0:
        raise ConfigurationError(f"Noise rms must be non-negative, got {noise_rms!r}")

    n_samples = int(round(duration * sample_rate))
    if n_samples < MIN_SAMPLES:
        raise ConfigurationError(f"{duration:g} s at {sample_rate:g} Hz gives fewer than {MIN_SAMPLES} samples")

    tau = amplitude_decay_time(frequency_hz, q)
    t = start_time + np.arange(n_samples) / sample_rate
    samples = a0 * np.exp(-t / tau)
    if not envelope_mode:
        samples = samples * np.sin(2.0 * np.pi * frequency_hz * t)

    if noise_rms > 0:
        rng = np.random.default_rng(seed)
        samples = samples + rng.normal(0.0, noise_rms, n_samples)

    logger.debug(f"synthesize: {n_samples} samples, tau={tau:.6g} s, envelope_mode={envelope_mode}")
    return RingdownTrace(sample_rate=sample_rate, samples=samples, start_time=start_time)


def single_pole_lowpass(x: np.ndarray, bandwidth: float, sample_rate: float) -> np.ndarray:
    """First-order IIR low-pass with -3 dB point at ``bandwidth``, zero initial state."""
    a = 1.0 - math.exp(-2.0 * math.pi * bandwidth / sample_rate)
    return signal.lfilter([a], [1.0, a - 1.0], x)


def envelope(trace: RingdownTrace, f_ref: float, bandwidth: float) -> RingdownTrace:
    """
    Demodulate at ``f_ref`` and return the magnitude of the filtered quadratures.

    The output is decimated to at least 8 samples per filter time constant. The first
    few filter time constants carry the filter's start-up transient.

    Raises:
        ConfigurationError: If ``bandwidth >= f_ref / 4`` or the carrier is above Nyquist
    """
    if not f_ref > 0 or not bandwidth > 0:
        raise ConfigurationError(f"Need positive reference and bandwidth, got {f_ref!r} Hz, {bandwidth!r} Hz")
    if not bandwidth < f_ref / 4.0:
        raise ConfigurationError(f"Bandwidth {bandwidth:g} Hz must be below f_ref/4 = {f_ref / 4.0:g} Hz")
    if not f_ref < trace.sample_rate / 2.0:
        raise ConfigurationError(f"Reference {f_ref:g} Hz is above Nyquist for {trace.sample_rate:g} Hz sampling")

    phase = 2.0 * np.pi * f_ref * trace.times
    in_phase = 2.0 * single_pole_lowpass(trace.samples * np.sin(phase), bandwidth, trace.sample_rate)
    quadrature = 2.0 * single_pole_lowpass(trace.samples * np.cos(phase), bandwidth, trace.sample_rate)
    magnitude = np.hypot(in_phase, quadrature)

    filter_time = 1.0 / (2.0 * math.pi * bandwidth)
    step = max(1, int(filter_time * trace.sample_rate / 8.0))
    decimated = magnitude[::step]
    if decimated.size < MIN_SAMPLES:
        raise ConfigurationError(
            f"Trace too short for a {bandwidth:g} Hz envelope: {decimated.size} samples after decimation"
        )

    logger.debug(f"envelope: f_ref={f_ref:g} Hz bw={bandwidth:g} Hz decimation={step}")
    return RingdownTrace(sample_rate=trace.sample_rate / step, samples=decimated, start_time=trace.start_time)
