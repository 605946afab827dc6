from helium_resonator.attenuation import QCURVE_COLUMNS, qcurve
from helium_resonator.management.base import BaseModelCommand, table_from_records


class Command(BaseModelCommand):
    help = "Sweep the loss model over a log-spaced temperature grid (Q versus T curves)."

    def add_model_arguments(self, parser):
        parser.add_argument('--freq', type=float, default=8112.0, help='Mode frequency in Hz')
        parser.add_argument('--tmin', type=float, default=0.04, help='Lowest temperature in K')
        parser.add_argument('--tmax', type=float, default=0.7, help='Highest temperature in K')
        parser.add_argument('--points', type=int, default=200, help='Number of temperatures')
        parser.add_argument('--x3', type=float, default=None, help='³He concentration (default: from config)')
        parser.add_argument('--no-he3', action='store_true', help='Three-phonon loss only')
        parser.add_argument('--size', type=float, default=None, help='Container size for the ³He mean free path, m (default: cell diameter)')
        parser.add_argument('--workers', type=int, default=1, help='Worker processes for the sweep')

    def run_model(self, config, options):
        he3 = None
        if not options['no_he3']:
            he3 = config.effective_he3()
            if options['x3'] is not None:
                he3 = type(he3).model_validate({**he3.model_dump(), "concentration_x": options['x3']})

        rows = qcurve(
            options['freq'],
            options['tmin'],
            options['tmax'],
            options['points'],
            he3,
            self.option(options, 'size', config.geometry.diameter),
            helium=config.helium(),
            workers=max(1, options['workers']),
        )
        return table_from_records(QCURVE_COLUMNS, rows)
