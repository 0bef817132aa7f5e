"""Error-function primitives built from a series and a continued fraction.

Kept dependency-free on purpose: the asymptotic partition function needs
log-domain complementary values far beyond where a naive 1 - erf(x)
underflows, so the Laplace continued fraction is exposed directly.
"""

from __future__ import annotations

import math

__all__ = ["erf", "erfc", "log_erfc"]

_SQRT_PI = math.sqrt(math.pi)
# Below this the Maclaurin series converges fast; above it the continued
# fraction for the complement is already accurate.
_SERIES_CUT = 3.0
# erf saturates to +-1 in double precision beyond this point.
_SATURATE_CUT = 6.0
_CF_DEPTH = 129


def _series(x: float) -> float:
    # erf(x) = 2/sqrt(pi) * sum_k (-1)^k x^(2k+1) / (k! (2k+1)),  |x| < 3
    term = x
    total = x
    xx = x * x
    k = 1
    while True:
        term *= -xx * (2 * k - 1) / (k * (2 * k + 1))
        total += term
        if abs(term) <= 1e-17 * abs(total):
            return 2.0 / _SQRT_PI * total
        k += 1


def _cf_tail(x: float) -> float:
    # Evaluates t(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))) by
    # backward recurrence, so that erfc(x) = exp(-x^2)/sqrt(pi) * t(x).
    val = x
    for k in range(_CF_DEPTH, 0, -1):
        val = x + (k / 2.0) / val
    return 1.0 / val


def erf(x: float) -> float:
    """Gauss error function, accurate to well below 1e-7 absolute."""
    if math.isnan(x):
        return x
    if x < 0.0:
        return -erf(-x)
    if x >= _SATURATE_CUT:
        return 1.0
    if x >= _SERIES_CUT:
        return 1.0 - math.exp(-x * x) / _SQRT_PI * _cf_tail(x)
    return _series(x)


def erfc(x: float) -> float:
    """Complementary error function 1 - erf(x) without cancellation."""
    if math.isnan(x):
        return x
    if x < _SERIES_CUT:
        # erfc stays of order one here, so the difference is safe.
        return 1.0 - erf(x)
    return math.exp(-x * x) / _SQRT_PI * _cf_tail(x)


def log_erfc(x: float) -> float:
    """log(erfc(x)), finite far past the underflow point of erfc itself."""
    if math.isnan(x):
        return x
    if x < _SERIES_CUT:
        return math.log(erfc(x))
    return -x * x - math.log(_SQRT_PI) + math.log(_cf_tail(x))
