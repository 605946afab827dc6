"""Derivative-free solvers shared by the model packages."""

import logging
from typing import Callable

from helium_resonator.exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)


def bisect_root(
        func: Callable[[float], float],
        x_a: float,
        x_b: float,
        rtol: float = 1e-4,
        max_iter: int = 200
) -> float:
    """
    Find ``x`` in ``[x_a, x_b]`` with ``func(x) = 0`` by bisection.

    Args:
        func: Function changing sign across the interval
        x_a, x_b: Interval ends, in any order
        rtol: Stop once the interval width is below ``rtol`` times the midpoint
        max_iter: Iteration cap

    Returns:
        Midpoint of the final interval

    Raises:
        DomainError: If ``func`` does not change sign across the interval
        ConvergenceError: If the iteration cap is reached
    """
    lo, hi = min(x_a, x_b), max(x_a, x_b)
    f_lo, f_hi = func(lo), func(hi)

    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise DomainError(f"No sign change on [{lo:g}, {hi:g}]: f={f_lo:g}, {f_hi:g}")

    for iteration in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        f_mid = func(mid)
        if f_mid == 0 or (hi - lo) <= rtol * abs(mid):
            logger.debug(f"bisect_root: converged to {mid:.9g} after {iteration} iterations")
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid

    raise ConvergenceError(f"Bisection did not converge in {max_iter} iterations", iterations=max_iter)


def fixed_point(
        update: Callable[[float], float],
        x0: float,
        rtol: float = 1e-6,
        max_iter: int = 100,
        relaxation: float = 1.0
) -> float:
    """
    Iterate ``x <- (1 - r) x + r update(x)`` until the relative change is below ``rtol``.

    Raises:
        ConvergenceError: If the iteration cap is reached
    """
    x = x0
    for iteration in range(1, max_iter + 1):
        x_next = (1.0 - relaxation) * x + relaxation * update(x)
        if abs(x_next - x) <= rtol * abs(x_next):
            logger.debug(f"fixed_point: converged to {x_next:.9g} after {iteration} iterations")
            return x_next
        x = x_next

    raise ConvergenceError(f"Fixed-point iteration did not converge in {max_iter} iterations", iterations=max_iter)
