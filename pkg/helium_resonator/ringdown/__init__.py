from .fit import DecayFit, fit_decay, fit_log_linear
from .signals import amplitude_decay_time, envelope, single_pole_lowpass, synthesize
from .trace import CSV_HEADER, RingdownTrace, read_trace, trace_to_csv, write_trace
