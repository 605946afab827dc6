import math

from helium_resonator.management.base import BaseModelCommand, Table
from helium_resonator.microwave import frequency_plan, intracavity_photons


class Command(BaseModelCommand):
    help = "Intracavity pump photons for a red-detuned drive of the TE011 cavity."

    def add_model_arguments(self, parser):
        parser.add_argument('--power', type=float, required=True, help='Input power in W')
        parser.add_argument('--freq', type=float, default=8112.0, help='Acoustic mode frequency in Hz')
        parser.add_argument('--detuning', type=float, default=None,
                            help='Pump detuning in rad/s (default: from the frequency plan)')

    def run_model(self, config, options):
        plan = frequency_plan(config.cavity, options['freq'])
        detuning = self.option(options, 'detuning', plan.detuning)
        return Table.single(
            P_W=options['power'],
            pump_Hz=plan.pump / (2.0 * math.pi),
            detuning_rad_s=detuning,
            photons=intracavity_photons(options['power'], detuning, config.cavity),
        )
