from helium_resonator.cavity import te011_frequency
from helium_resonator.management.base import BaseModelCommand, Table, add_geometry_arguments, geometry_from_options


class Command(BaseModelCommand):
    help = "TE011 microwave resonance of the cell, empty and helium-filled."

    def add_model_arguments(self, parser):
        parser.add_argument('--eps-r', dest='eps_r', type=float, default=None,
                            help='Relative permittivity of the filling (default: helium4 eps_r)')
        add_geometry_arguments(parser)

    def run_model(self, config, options):
        geom = geometry_from_options(config, options)
        eps_r = self.option(options, 'eps_r', config.helium().eps_r)
        return Table.single(
            eps_r=eps_r,
            f_vacuum_Hz=te011_frequency(geom, 1.0),
            f_Hz=te011_frequency(geom, eps_r),
        )
