import math
import tempfile
from pathlib import Path

import numpy as np
from django.test import SimpleTestCase

from helium_resonator.exceptions import ConfigurationError, DataError, DomainError, FitError
from helium_resonator.ringdown import (
    CSV_HEADER,
    RingdownTrace,
    amplitude_decay_time,
    envelope,
    fit_decay,
    fit_log_linear,
    read_trace,
    synthesize,
    trace_to_csv,
    write_trace,
)

F_MODE = 8112.0
Q_MEASURED = 1.35e8


def measured_decay(noise_rms=0.0, seed=0):
    """Envelope-mode trace of the measured 8112 Hz mode: one decay time at 0.5 Hz sampling."""
    tau = amplitude_decay_time(F_MODE, Q_MEASURED)
    return synthesize(F_MODE, Q_MEASURED, 1.0, 0.5, tau, noise_rms=noise_rms, seed=seed, envelope_mode=True)


class SynthesizeTests(SimpleTestCase):

    def test_decay_time_of_measured_mode(self):
        self.assertAlmostEqual(amplitude_decay_time(F_MODE, Q_MEASURED), 5297.3, delta=0.1)

    def test_noise_free_matches_closed_form(self):
        trace = synthesize(1000.0, 1e4, 2.0, 20000.0, 0.5)
        tau = 1e4 / (math.pi * 1000.0)
        t = np.arange(10000) / 20000.0
        expected = 2.0 * np.exp(-t / tau) * np.sin(2 * np.pi * 1000.0 * t)
        np.testing.assert_allclose(trace.samples, expected, rtol=1e-12, atol=1e-15)

    def test_seeded_noise_is_reproducible(self):
        a = synthesize(1000.0, 1e4, 1.0, 20000.0, 0.1, noise_rms=0.1, seed=7)
        b = synthesize(1000.0, 1e4, 1.0, 20000.0, 0.1, noise_rms=0.1, seed=7)
        c = synthesize(1000.0, 1e4, 1.0, 20000.0, 0.1, noise_rms=0.1, seed=8)
        np.testing.assert_array_equal(a.samples, b.samples)
        self.assertFalse(np.array_equal(a.samples, c.samples))

    def test_envelope_mode_uses_absolute_time(self):
        trace = synthesize(F_MODE, Q_MEASURED, 1.0, 0.5, 100.0, envelope_mode=True, start_time=1000.0)
        tau = amplitude_decay_time(F_MODE, Q_MEASURED)
        self.assertAlmostEqual(trace.samples[0], math.exp(-1000.0 / tau), delta=1e-15)
        self.assertEqual(trace.times[0], 1000.0)

    def test_sampling_preconditions(self):
        with self.assertRaises(ConfigurationError):
            synthesize(F_MODE, Q_MEASURED, 1.0, 10000.0, 1.0)
        with self.assertRaises(ConfigurationError):
            synthesize(1000.0, 1e4, 1.0, 20000.0, 0.0)
        with self.assertRaises(ConfigurationError):
            synthesize(1000.0, 1e4, 1.0, 20000.0, 5e-4)

    def test_trace_invariants(self):
        with self.assertRaises(DomainError):
            RingdownTrace(sample_rate=0.0, samples=np.ones(32))
        with self.assertRaises(DomainError):
            RingdownTrace(sample_rate=1.0, samples=np.ones(8))


class EnvelopeTests(SimpleTestCase):

    def test_pure_tone_settles_to_amplitude(self):
        bandwidth = 2.0
        tone = synthesize(1000.0, 1e15, 0.7, 20000.0, 2.0)
        env = envelope(tone, 1000.0, bandwidth)
        settled = env.times >= 5.0 / (2.0 * math.pi * bandwidth)
        np.testing.assert_allclose(env.samples[settled], 0.7, rtol=0.01)

    def test_decimation_keeps_eight_samples_per_time_constant(self):
        bandwidth = 2.0
        env = envelope(synthesize(1000.0, 1e15, 1.0, 20000.0, 2.0), 1000.0, bandwidth)
        self.assertGreaterEqual(env.sample_rate / (2.0 * math.pi * bandwidth), 8.0)

    def test_off_tone_is_rejected(self):
        bandwidth = 0.2
        tone = synthesize(1000.0 + 10 * bandwidth, 1e15, 1.0, 20000.0, 10.0)
        env = envelope(tone, 1000.0, bandwidth)
        self.assertLessEqual(env.samples[env.times > 8.0].max(), 0.1)

    def test_noise_free_ringdown_envelope(self):
        q, a0 = 1e7, 1.5
        trace = synthesize(1000.0, q, a0, 20000.0, 6.0)
        env = envelope(trace, 1000.0, 0.5)
        settled = env.times >= 4.0
        expected = a0 * np.exp(-env.times[settled] / amplitude_decay_time(1000.0, q))
        np.testing.assert_allclose(env.samples[settled], expected, rtol=1e-3)

    def test_preconditions(self):
        trace = synthesize(1000.0, 1e4, 1.0, 20000.0, 1.0)
        with self.assertRaises(ConfigurationError):
            envelope(trace, 1000.0, 250.0)
        with self.assertRaises(ConfigurationError):
            envelope(trace, 12000.0, 10.0)
        with self.assertRaises(ConfigurationError):
            envelope(trace, 1000.0, 0.0)


class FitTests(SimpleTestCase):

    def test_measured_mode_round_trip(self):
        result = fit_decay(measured_decay(), F_MODE)
        self.assertAlmostEqual(result.q / Q_MEASURED, 1.0, delta=1e-3)
        self.assertAlmostEqual(result.amplitude0, 1.0, delta=1e-6)
        self.assertAlmostEqual(result.q, math.pi * F_MODE * result.tau_amp, delta=1e-3)

    def test_carrier_round_trip(self):
        q, a0 = 1e5, 2.0
        bandwidth = 1.0
        trace = synthesize(1000.0, q, a0, 20000.0, 30.0)
        env = envelope(trace, 1000.0, bandwidth)
        result = fit_decay(env, 1000.0, t_min=20.0 / (2.0 * math.pi * bandwidth))
        self.assertAlmostEqual(result.q / q, 1.0, delta=1e-3)
        self.assertAlmostEqual(result.amplitude0 / a0, 1.0, delta=0.01)

    def test_monte_carlo_at_snr_100(self):
        fits = [fit_decay(measured_decay(noise_rms=0.01, seed=seed), F_MODE) for seed in range(100)]
        qs = np.array([f.q for f in fits])
        self.assertAlmostEqual(qs.mean() / Q_MEASURED, 1.0, delta=0.005)

        empirical = np.std([f.tau_amp for f in fits], ddof=1)
        reported = np.mean([f.sigma_tau for f in fits])
        self.assertGreater(empirical / reported, 0.5)
        self.assertLess(empirical / reported, 2.0)

    def test_two_point_fit_is_exact(self):
        slope, intercept, sigma = fit_log_linear(np.array([0.0, 2.0]), np.array([3.0, 3.0 * math.exp(-0.4)]))
        self.assertAlmostEqual(slope, -0.2, delta=1e-12)
        self.assertAlmostEqual(intercept, math.log(3.0), delta=1e-12)
        self.assertTrue(math.isnan(sigma))

    def test_scale_invariance(self):
        trace = measured_decay(noise_rms=0.01, seed=3)
        scaled = RingdownTrace(trace.sample_rate, 4.0 * trace.samples, trace.start_time)
        a, b = fit_decay(trace, F_MODE), fit_decay(scaled, F_MODE)
        self.assertAlmostEqual(b.tau_amp / a.tau_amp, 1.0, delta=1e-9)
        self.assertAlmostEqual(b.amplitude0 / a.amplitude0, 4.0, delta=1e-9)

    def test_time_shift_moves_only_intercept(self):
        trace = measured_decay()
        shifted = RingdownTrace(trace.sample_rate, trace.samples, trace.start_time + 100.0)
        a, b = fit_decay(trace, F_MODE), fit_decay(shifted, F_MODE)
        self.assertAlmostEqual(b.tau_amp / a.tau_amp, 1.0, delta=1e-9)
        self.assertAlmostEqual(b.amplitude0 / a.amplitude0, math.exp(100.0 / a.tau_amp), delta=1e-9)

    def test_fit_window(self):
        trace = measured_decay()
        result = fit_decay(trace, F_MODE, t_min=1000.0, t_max=2000.0)
        self.assertEqual(result.n_points, 501)
        self.assertAlmostEqual(result.q / Q_MEASURED, 1.0, delta=1e-3)

    def test_truncates_at_first_non_positive_sample(self):
        samples = np.exp(-np.arange(64) / 20.0)
        samples[40] = -0.01
        with self.assertLogs('helium_resonator.ringdown.fit', level='WARNING'):
            result = fit_decay(RingdownTrace(1.0, samples), 1000.0)
        self.assertEqual(result.n_points, 40)
        self.assertAlmostEqual(result.tau_amp, 20.0, delta=1e-9)

    def test_non_positive_start(self):
        samples = np.exp(-np.arange(64) / 20.0)
        samples[0] = 0.0
        with self.assertRaises(DataError):
            fit_decay(RingdownTrace(1.0, samples), 1000.0)

    def test_too_few_points(self):
        samples = np.exp(-np.arange(64) / 20.0)
        samples[10] = -1.0
        with self.assertRaises(FitError):
            fit_decay(RingdownTrace(1.0, samples), 1000.0)

    def test_growing_signal(self):
        with self.assertRaises(FitError):
            fit_decay(RingdownTrace(1.0, np.exp(np.arange(32) / 20.0)), 1000.0)


class TraceFileTests(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.path = Path(self.tmp.name) / "trace.csv"

    def test_written_trace_is_readable(self):
        trace = measured_decay(noise_rms=0.01, seed=1)
        write_trace(trace, self.path)
        self.assertTrue(self.path.read_text().startswith(CSV_HEADER + "\n"))
        loaded = read_trace(self.path)
        self.assertAlmostEqual(loaded.sample_rate, 0.5, delta=1e-9)
        np.testing.assert_allclose(loaded.samples, trace.samples, rtol=1e-8)

    def test_bad_header(self):
        self.path.write_text("t,a\n0,1\n")
        with self.assertRaises(DataError):
            read_trace(self.path)

    def test_non_uniform_sampling(self):
        rows = [f"{t},1.0" for t in list(range(20)) + [25]]
        self.path.write_text(CSV_HEADER + "\n" + "\n".join(rows) + "\n")
        with self.assertRaises(DataError):
            read_trace(self.path)

    def test_unparsable_row(self):
        rows = [f"{t},1.0" for t in range(20)] + ["20,oops"]
        self.path.write_text(CSV_HEADER + "\n" + "\n".join(rows) + "\n")
        with self.assertRaises(DataError):
            read_trace(self.path)

    def test_three_columns(self):
        rows = [f"{t},1.0,2.0" for t in range(20)]
        self.path.write_text(CSV_HEADER + "\n" + "\n".join(rows) + "\n")
        with self.assertRaises(DataError):
            read_trace(self.path)

    def test_rows_use_configured_precision(self):
        trace = RingdownTrace(0.5, np.linspace(1.0, 0.5, 16), start_time=1000.0)
        lines = trace_to_csv(trace).splitlines()
        self.assertEqual(lines[0], CSV_HEADER)
        self.assertEqual(len(lines), 17)
        self.assertEqual(lines[1], "1.00000000e+03,1.00000000e+00")
        self.assertEqual(lines[-1], "1.03000000e+03,5.00000000e-01")
