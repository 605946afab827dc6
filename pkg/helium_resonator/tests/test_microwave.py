import math

from django.test import SimpleTestCase

from helium_resonator.exceptions import DomainError
from helium_resonator.microwave import (
    MicrowaveCavity,
    NoiseBudgetCalibration,
    frequency_plan,
    intracavity_photons,
    phase_noise_requirement,
)

CAVITY = MicrowaveCavity()
DETUNING = -2.0 * math.pi * 8112.0


class FrequencyPlanTests(SimpleTestCase):

    def test_red_detuned_pump(self):
        plan = frequency_plan(CAVITY, 8112.0)
        self.assertEqual(plan.sideband, CAVITY.omega_c)
        self.assertAlmostEqual(plan.sideband - plan.pump, 2.0 * math.pi * 8112.0, delta=1e-4)
        self.assertAlmostEqual(plan.detuning, DETUNING, delta=1e-4)
        self.assertFalse(plan.degenerate)

    def test_degenerate_plan_is_flagged(self):
        with self.assertLogs('helium_resonator.microwave.chain', level='WARNING'):
            plan = frequency_plan(CAVITY, 0.0)
        self.assertTrue(plan.degenerate)
        self.assertEqual(plan.pump, plan.sideband)

    def test_negative_frequency(self):
        with self.assertRaises(DomainError):
            frequency_plan(CAVITY, -1.0)

    def test_total_loss_rate(self):
        self.assertAlmostEqual(CAVITY.kappa_tot, 2.0 * math.pi * 491.0, delta=1e-9)


class PhotonNumberTests(SimpleTestCase):

    def test_weak_drive(self):
        n = intracavity_photons(0.4e-12, DETUNING, CAVITY)
        self.assertAlmostEqual(n / 3.165e4, 1.0, delta=2e-3)
        self.assertAlmostEqual(n / 3e4, 1.0, delta=0.25)

    def test_strong_drive(self):
        n = intracavity_photons(4e-9, DETUNING, CAVITY)
        self.assertAlmostEqual(n / 3e8, 1.0, delta=0.25)

    def test_linear_in_power(self):
        self.assertAlmostEqual(
            intracavity_photons(2e-12, DETUNING) / intracavity_photons(1e-12, DETUNING), 2.0, delta=1e-12
        )

    def test_maximal_on_resonance(self):
        on_resonance = intracavity_photons(1e-12, 0.0)
        for detuning in (100.0, 1e4, 1e6):
            self.assertLess(intracavity_photons(1e-12, detuning), on_resonance)

    def test_even_in_detuning(self):
        # the pump frequency ω_C + Δ breaks the symmetry only at the 1e-6 level
        ratio = intracavity_photons(1e-12, 1e4) / intracavity_photons(1e-12, -1e4)
        self.assertAlmostEqual(ratio, 1.0, delta=1e-6)

    def test_negative_power(self):
        with self.assertRaises(DomainError):
            intracavity_photons(-1e-12, DETUNING)

    def test_pump_frequency_must_stay_positive(self):
        for detuning in (-CAVITY.omega_c, -2.0 * CAVITY.omega_c):
            with self.assertRaises(DomainError):
                intracavity_photons(1e-12, detuning, CAVITY)


class PhaseNoiseTests(SimpleTestCase):

    def test_calibration_point(self):
        self.assertEqual(phase_noise_requirement(0.014, 1e10), -143.0)

    def test_second_quoted_point(self):
        level = phase_noise_requirement(0.008, 1e11)
        self.assertAlmostEqual(level, -135.43, delta=0.01)
        self.assertLess(abs(level - (-136.0)), 1.5)

    def test_ten_db_per_decade(self):
        step = phase_noise_requirement(0.02, 1e10) - phase_noise_requirement(0.002, 1e10)
        self.assertAlmostEqual(step, 10.0, delta=1e-9)
        step = phase_noise_requirement(0.02, 1e11) - phase_noise_requirement(0.02, 1e10)
        self.assertAlmostEqual(step, 10.0, delta=1e-9)

    def test_identity_at_any_calibration(self):
        cal = NoiseBudgetCalibration(t_ref=0.05, q_ref=3e8, l_ref=-120.0)
        self.assertEqual(phase_noise_requirement(0.05, 3e8, cal), -120.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            phase_noise_requirement(0.0, 1e10)
        with self.assertRaises(DomainError):
            phase_noise_requirement(0.01, -1.0)
