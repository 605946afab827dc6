from django.test import SimpleTestCase

from helium_resonator.cavity import CylinderGeometry
from helium_resonator.exceptions import ConfigurationError, DomainError
from helium_resonator.materials import lookup_material
from helium_resonator.thermal import (
    ThermalNetwork,
    WireGeometry,
    helium_heat_capacity,
    kapitza_resistance,
    required_heat_leak,
    steady_state_temperature,
    thermal_report,
    thermal_time_constant,
    wire_thermal_resistance,
)

NIOBIUM = lookup_material("niobium")
HELIUM = lookup_material("helium4")
CELL = CylinderGeometry()
NETWORK = ThermalNetwork()


class KapitzaTests(SimpleTestCase):

    def test_value_at_40_mk(self):
        r_k = kapitza_resistance(0.040, CELL.wetted_area, NIOBIUM, HELIUM)
        self.assertAlmostEqual(r_k / 6.1146e5, 1.0, delta=2e-3)

    def test_t3_law(self):
        ratio = kapitza_resistance(0.02, 1e-3, NIOBIUM, HELIUM) / kapitza_resistance(0.04, 1e-3, NIOBIUM, HELIUM)
        self.assertAlmostEqual(ratio, 8.0, delta=1e-12)

    def test_area_law(self):
        ratio = kapitza_resistance(0.05, 1e-3, NIOBIUM, HELIUM) / kapitza_resistance(0.05, 2e-3, NIOBIUM, HELIUM)
        self.assertAlmostEqual(ratio, 2.0, delta=1e-12)

    def test_domain(self):
        with self.assertRaises(DomainError):
            kapitza_resistance(0.0, 1e-3, NIOBIUM, HELIUM)
        with self.assertRaises(DomainError):
            kapitza_resistance(0.04, -1e-3, NIOBIUM, HELIUM)


class HeatCapacityTests(SimpleTestCase):

    def test_value_at_40_mk(self):
        self.assertAlmostEqual(helium_heat_capacity(0.040, CELL.volume, HELIUM) / 7.8807e-6, 1.0, delta=2e-3)

    def test_t3_law_and_extensivity(self):
        c = helium_heat_capacity(0.03, 1e-5, HELIUM)
        self.assertAlmostEqual(helium_heat_capacity(0.06, 1e-5, HELIUM) / c, 8.0, delta=1e-12)
        self.assertAlmostEqual(helium_heat_capacity(0.03, 2e-5, HELIUM) / c, 2.0, delta=1e-12)

    def test_time_constant(self):
        tau = thermal_time_constant(0.040, CELL, NIOBIUM, HELIUM)
        self.assertAlmostEqual(tau, 4.819, delta=0.02)
        self.assertGreater(tau, 1.0)
        self.assertLess(tau, 30.0)

    def test_time_constant_temperature_independent(self):
        ratio = thermal_time_constant(0.05, CELL, NIOBIUM, HELIUM) / thermal_time_constant(0.15, CELL, NIOBIUM, HELIUM)
        self.assertAlmostEqual(ratio, 1.0, delta=1e-6)


class WireTests(SimpleTestCase):

    def test_copper_wire_at_40_mk(self):
        r_wire = wire_thermal_resistance(0.040, WireGeometry())
        self.assertAlmostEqual(r_wire / 9654.0, 1.0, delta=2e-3)
        self.assertAlmostEqual(r_wire / 1e4, 1.0, delta=0.3)

    def test_inverse_temperature_law(self):
        wire = WireGeometry()
        self.assertAlmostEqual(wire_thermal_resistance(0.02, wire) / wire_thermal_resistance(0.04, wire), 2.0, delta=1e-12)

    def test_kapitza_dominates_at_40_mk(self):
        ratio = kapitza_resistance(0.040, CELL.wetted_area, NIOBIUM, HELIUM) / wire_thermal_resistance(0.040, WireGeometry())
        self.assertGreater(ratio, 60.0)
        self.assertLess(ratio, 100.0)

    def test_crossover_below_200_mk(self):
        for t in (0.01, 0.05, 0.1, 0.19):
            self.assertGreater(
                kapitza_resistance(t, CELL.wetted_area, NIOBIUM, HELIUM),
                wire_thermal_resistance(t, WireGeometry()),
            )

    def test_silver_wire_is_better(self):
        copper = wire_thermal_resistance(0.040, WireGeometry())
        silver = wire_thermal_resistance(0.040, WireGeometry(material=lookup_material("silver")))
        self.assertLess(silver, copper / 10.0)

    def test_wire_needs_rrr(self):
        with self.assertRaises(ConfigurationError):
            wire_thermal_resistance(0.040, WireGeometry(material=NIOBIUM))


class HeatLeakTests(SimpleTestCase):

    def test_budget_at_40_mk(self):
        q = required_heat_leak(0.040, 0.020, NETWORK)
        self.assertGreater(q, 12.5e-9)
        self.assertLess(q, 50e-9)

    def test_budget_at_10_mk(self):
        q = required_heat_leak(0.010, 0.006, NETWORK)
        self.assertGreater(q, 0.1e-9 / 3)
        self.assertLess(q, 0.1e-9 * 3)

    def test_round_trip(self):
        for target, base in ((0.040, 0.020), (0.010, 0.006), (0.1, 0.01)):
            q = required_heat_leak(target, base, NETWORK)
            self.assertAlmostEqual(steady_state_temperature(base, q, NETWORK) / target, 1.0, delta=1e-4)

    def test_monotone(self):
        temperatures = [steady_state_temperature(0.02, q, NETWORK) for q in (1e-9, 5e-9, 2e-8, 1e-7)]
        self.assertEqual(temperatures, sorted(temperatures))
        leaks = [required_heat_leak(t, 0.02, NETWORK) for t in (0.03, 0.04, 0.06)]
        self.assertEqual(leaks, sorted(leaks))

    def test_zero_heat_keeps_base(self):
        self.assertEqual(steady_state_temperature(0.02, 0.0, NETWORK), 0.02)

    def test_target_must_exceed_base(self):
        with self.assertRaises(DomainError):
            required_heat_leak(0.02, 0.02, NETWORK)
        with self.assertRaises(DomainError):
            steady_state_temperature(0.02, -1e-9, NETWORK)


class ReportTests(SimpleTestCase):

    def test_report_at_40_mk(self):
        report = thermal_report(0.040, 0.020, NETWORK)
        self.assertTrue(report.kapitza_dominated)
        self.assertAlmostEqual(report.resistance_ratio, 63.3, delta=0.5)
        self.assertAlmostEqual(report.time_constant, report.r_kapitza * report.heat_capacity, delta=1e-12)
        self.assertEqual(report.q_dot, required_heat_leak(0.040, 0.020, NETWORK))
