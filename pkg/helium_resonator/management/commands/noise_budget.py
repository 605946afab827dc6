from helium_resonator.management.base import BaseModelCommand, Table
from helium_resonator.microwave import phase_noise_requirement


class Command(BaseModelCommand):
    help = "Source phase noise allowed for resolving thermal motion at a given temperature and Q."

    def add_model_arguments(self, parser):
        parser.add_argument('--temperature', type=float, required=True, help='Helium temperature in K')
        parser.add_argument('--q', type=float, required=True, help='Mechanical quality factor')

    def run_model(self, config, options):
        cal = config.noise_calibration
        return Table.single(
            T_K=options['temperature'],
            Q_m=options['q'],
            offset_Hz=cal.offset_hz,
            L_dBc_per_Hz=phase_noise_requirement(options['temperature'], options['q'], cal),
        )
