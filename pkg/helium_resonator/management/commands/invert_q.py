from helium_resonator.attenuation import ModePoint, required_he3_concentration, temperature_from_q
from helium_resonator.management.base import BaseModelCommand, Table


class Command(BaseModelCommand):
    help = "Helium temperature at which a three-phonon-limited mode has the given Q."

    def add_model_arguments(self, parser):
        parser.add_argument('--q', type=float, required=True, help='Measured or target quality factor')
        parser.add_argument('--freq', type=float, default=8111.0, help='Mode frequency in Hz')
        parser.add_argument('--size', type=float, default=None, help='Container size, m (default: cell diameter)')

    def run_model(self, config, options):
        helium = config.helium()
        temperature = temperature_from_q(options['q'], options['freq'], helium)
        x3_max = required_he3_concentration(
            options['q'],
            ModePoint(options['freq'], temperature),
            self.option(options, 'size', config.geometry.diameter),
            config.effective_he3(),
            helium,
        )
        return Table.single(Q=options['q'], f_Hz=options['freq'], T_K=temperature, x3_max=x3_max)
