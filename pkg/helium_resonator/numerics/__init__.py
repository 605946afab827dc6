from .solvers import bisect_root, fixed_point
