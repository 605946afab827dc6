from helium_resonator.cavity import acoustic_mode_table
from helium_resonator.formatting import format_float
from helium_resonator.management.base import BaseModelCommand, Table, add_geometry_arguments, geometry_from_options

COLUMNS = ["m", "n", "l", "f_Hz", "node_radii_m"]


class Command(BaseModelCommand):
    help = "Acoustic eigenmodes of the helium-filled cylinder up to a maximum frequency."

    def add_model_arguments(self, parser):
        parser.add_argument('--fmax', type=float, default=20000.0, help='Highest frequency in Hz')
        parser.add_argument('--c', type=float, default=None, help='Sound speed, m/s (default: helium4 c4)')
        add_geometry_arguments(parser)

    def run_model(self, config, options):
        geom = geometry_from_options(config, options)
        c = self.option(options, 'c', config.helium().c4)
        modes = acoustic_mode_table(geom, c, options['fmax'])
        rows = [
            {
                "m": mode.m,
                "n": mode.n,
                "l": mode.l,
                "f_Hz": mode.frequency_hz,
                "node_radii_m": ";".join(format_float(r) for r in mode.radial_node_radii),
            }
            for mode in modes
        ]
        return Table(COLUMNS, rows)
