from helium_resonator.management.base import BaseModelCommand, Table
from helium_resonator.ringdown import envelope, fit_decay, read_trace, synthesize, trace_to_csv


class Command(BaseModelCommand):
    help = "Simulate free-decay traces or fit a decay to a recorded trace."

    def add_model_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True)

        simulate = subparsers.add_parser('simulate', help='Write a synthetic ringdown trace (time_s,amplitude CSV)')
        simulate.add_argument('--freq', type=float, default=8112.0, help='Mode frequency in Hz')
        simulate.add_argument('--q', type=float, default=1.35e8, help='Quality factor')
        simulate.add_argument('--a0', type=float, default=1.0, help='Initial amplitude')
        simulate.add_argument('--fs', type=float, required=True, help='Sample rate in Hz')
        simulate.add_argument('--duration', type=float, required=True, help='Trace length in s')
        simulate.add_argument('--noise', type=float, default=0.0, help='Gaussian noise rms')
        simulate.add_argument('--seed', type=int, default=0, help='Noise seed')
        simulate.add_argument('--envelope-mode', dest='envelope_mode', action='store_true',
                              help='Emit the decaying envelope instead of the carrier')
        simulate.add_argument('--start-time', dest='start_time', type=float, default=0.0, help='Time of the first sample')

        fit = subparsers.add_parser('fit', help='Fit an exponential decay and report Q')
        fit.add_argument('--trace', type=str, required=True, help='Trace CSV (time_s,amplitude)')
        fit.add_argument('--freq', type=float, required=True, help='Mode frequency in Hz, used for Q')
        fit.add_argument('--demodulate', type=float, default=None, metavar='BANDWIDTH',
                         help='Treat the trace as a carrier and demodulate at --freq with this bandwidth, Hz')
        fit.add_argument('--tmin', type=float, default=None, help='Start of the fit window, s')
        fit.add_argument('--tmax', type=float, default=None, help='End of the fit window, s')

    def run_model(self, config, options):
        if options['action'] == 'simulate':
            return self._simulate(options)
        return self._fit(options)

    def _simulate(self, options) -> str:
        trace = synthesize(
            options['freq'],
            options['q'],
            options['a0'],
            options['fs'],
            options['duration'],
            noise_rms=options['noise'],
            seed=options['seed'],
            envelope_mode=options['envelope_mode'],
            start_time=options['start_time'],
        )
        return trace_to_csv(trace)

    def _fit(self, options) -> Table:
        trace = read_trace(options['trace'])
        if options['demodulate'] is not None:
            trace = envelope(trace, options['freq'], options['demodulate'])

        result = fit_decay(trace, options['freq'], t_min=options['tmin'], t_max=options['tmax'])
        return Table.single(
            f_Hz=result.frequency_hz,
            tau_amp_s=result.tau_amp,
            sigma_tau_s=result.sigma_tau,
            Q=result.q,
            sigma_Q=result.sigma_q,
            amplitude0=result.amplitude0,
            rms_residual=result.rms_residual,
            n_points=result.n_points,
        )
