"""Zeros of Bessel functions and their derivatives for the supported index table.

Seeds are refined by Newton's method on ``scipy.special`` evaluations.
The derivative-zero convention excludes the trivial root x = 0 of J₀′, so
j'₀,₁ = 3.8317.
"""

import logging
from typing import List

from scipy import special

from helium_resonator.exceptions import ConvergenceError, RangeError

logger = logging.getLogger(__name__)

MAX_ORDER = 4
MAX_ROOT = 5

# j'_{m,n} to four decimals, rows m = 0..4, columns n = 1..5
_PRIME_ZERO_SEEDS = (
    (3.8317, 7.0156, 10.1735, 13.3237, 16.4706),
    (1.8412, 5.3314, 8.5363, 11.7060, 14.8636),
    (3.0542, 6.7061, 9.9695, 13.1704, 16.3475),
    (4.2012, 8.0152, 11.3459, 14.5858, 17.7887),
    (5.3176, 9.2824, 12.6819, 15.9641, 19.1960),
)

_NEWTON_MAX_ITER = 50
_NEWTON_XTOL = 1e-14


def check_indices(m: int, n: int) -> None:
    if not 0 <= m <= MAX_ORDER or not 1 <= n <= MAX_ROOT:
        raise RangeError(f"Bessel indices (m={m}, n={n}) outside supported 0<=m<={MAX_ORDER}, 1<=n<={MAX_ROOT}")


def bessel_j(m: int, x: float) -> float:
    return float(special.jv(m, x))


def bessel_j_prime(m: int, x: float) -> float:
    return float(special.jvp(m, x, 1))


def bessel_prime_zero(m: int, n: int) -> float:
    """
    The n-th positive zero of J'_m.

    Args:
        m: Bessel order, 0..4
        n: Root number, 1..5

    Returns:
        j'_{m,n}

    Raises:
        RangeError: If the indices are outside the table
    """
    check_indices(m, n)
    x = _PRIME_ZERO_SEEDS[m][n - 1]

    for _ in range(_NEWTON_MAX_ITER):
        step = special.jvp(m, x, 1) / special.jvp(m, x, 2)
        x -= step
        if abs(step) < _NEWTON_XTOL * x:
            logger.debug(f"j'({m},{n}) = {x:.12f}")
            return float(x)

    raise ConvergenceError(f"Newton refinement of j'({m},{n}) did not converge", iterations=_NEWTON_MAX_ITER)


def bessel_zeros_below(m: int, x_max: float) -> List[float]:
    """Positive zeros of J_m strictly below ``x_max``."""
    count = 1
    while True:
        zeros = special.jn_zeros(m, count)
        if zeros[-1] >= x_max:
            return [float(z) for z in zeros if z < x_max]
        count += 1

