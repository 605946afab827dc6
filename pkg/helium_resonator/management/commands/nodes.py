from helium_resonator.cavity import radial_pressure_nodes
from helium_resonator.management.base import BaseModelCommand, Table, add_geometry_arguments, geometry_from_options


class Command(BaseModelCommand):
    help = "Radial pressure nodes of a radial mode family, where a suspension causes least damping."

    def add_model_arguments(self, parser):
        parser.add_argument('--m', type=int, required=True, help='Azimuthal index')
        parser.add_argument('--n', type=int, required=True, help='Radial index')
        add_geometry_arguments(parser)

    def run_model(self, config, options):
        geom = geometry_from_options(config, options)
        m, n = options['m'], options['n']
        nodes = radial_pressure_nodes(geom, m, n)
        rows = [
            {"m": m, "n": n, "node": k, "r_m": r, "r_over_R": r / geom.radius}
            for k, r in enumerate(nodes, 1)
        ]
        return Table(["m", "n", "node", "r_m", "r_over_R"], rows)
