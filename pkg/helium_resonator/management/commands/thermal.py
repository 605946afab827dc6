from helium_resonator.management.base import BaseModelCommand, Table, add_geometry_arguments, geometry_from_options
from helium_resonator.thermal import required_heat_leak, steady_state_temperature, thermal_report

COLUMNS = [
    "T_K",
    "T_base_K",
    "R_kapitza_K_per_W",
    "R_wire_K_per_W",
    "resistance_ratio",
    "kapitza_dominated",
    "C_J_per_K",
    "tau_s",
    "q_dot_hold_W",
    "q_dot_40mK_W",
    "q_dot_10mK_W",
]


class Command(BaseModelCommand):
    help = "Thermal budget: Kapitza and wire resistances, heat capacity, time constant and heat leaks."

    def add_model_arguments(self, parser):
        parser.add_argument('--temperature', type=float, default=0.040, help='Helium temperature in K')
        parser.add_argument('--base', type=float, default=None, help='Base plate temperature in K')
        parser.add_argument('--q-dot', dest='q_dot', type=float, default=None,
                            help='Also report the steady helium temperature for this heat leak, W')
        parser.add_argument('--wire-material', dest='wire_material', type=str, default=None,
                            help='Registry name of the suspension wire (e.g. silver)')
        add_geometry_arguments(parser)

    def run_model(self, config, options):
        updates = {"geometry": geometry_from_options(config, options)}
        if options.get('wire_material'):
            updates["wire"] = config.wire.model_copy(update={"material": options['wire_material']})
        # unknown wire materials surface from the registry lookup
        network = config.model_copy(update=updates).thermal_network()

        temperature = options['temperature']
        bases = config.bases
        # The 40 mK budget base only applies to targets above it
        default_base = bases.heatleak_base_40mk if temperature > bases.heatleak_base_40mk else bases.heatleak_base_10mk
        base = self.option(options, 'base', default_base)

        report = thermal_report(temperature, base, network)
        row = {
            "T_K": report.temperature,
            "T_base_K": report.t_base,
            "R_kapitza_K_per_W": report.r_kapitza,
            "R_wire_K_per_W": report.r_wire,
            "resistance_ratio": report.resistance_ratio,
            "kapitza_dominated": report.kapitza_dominated,
            "C_J_per_K": report.heat_capacity,
            "tau_s": report.time_constant,
            "q_dot_hold_W": report.q_dot,
            "q_dot_40mK_W": required_heat_leak(0.040, bases.heatleak_base_40mk, network),
            "q_dot_10mK_W": required_heat_leak(0.010, bases.heatleak_base_10mk, network),
        }
        columns = list(COLUMNS)
        if options.get('q_dot') is not None:
            row["q_dot_W"] = options['q_dot']
            row["T_steady_K"] = steady_state_temperature(base, options['q_dot'], network)
            columns += ["q_dot_W", "T_steady_K"]

        if not report.kapitza_dominated:
            self.stderr.write(self.style.WARNING(
                f"The wire, not the Kapitza boundary, limits thermalization at {temperature:g} K"
            ))
        return Table(columns, [row])
