"""Large-N partition function from a Gaussian magnetization integral.

Replacing the sum over magnetization by an integral over its density
turns log Z into a Gaussian integral with an error-function bracket.
The bracket is evaluated in log space once its arguments grow, so the
result stays finite at any beta.  Closed-form regime limits and the
two-spin special case live here as well.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import ModelSpec
from .special import erf, log_erfc

__all__ = [
    "AsymptoticParams",
    "Regime",
    "asymptotic_state",
    "high_t_efficiency",
    "integral_state",
    "log_partition_asymptotic",
    "n2_closed_forms",
]

# Hand the erf bracket to the log-domain path once arguments reach this.
_LOG_PATH_CUT = 3.0
# Relative step for the two-sided beta derivative of log Z.
_BETA_STEP = 1e-6


@dataclass(frozen=True)
class AsymptoticParams:
    """Centre and width of the Gaussian magnetization integrand.

    a is the (scaled) centre -(1 + lam)/2 and k the width
    1/sqrt(2 n beta); a <= -1/2 and k > 0 always hold.
    """

    a: float
    k: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.k) and self.k > 0.0):
            raise ValueError(f"k must be finite and > 0, got {self.k!r}")
        if not (math.isfinite(self.a) and self.a <= -0.5):
            raise ValueError(f"a must be finite and <= -1/2, got {self.a!r}")

    @classmethod
    def from_model(cls, spec: ModelSpec, beta: float) -> "AsymptoticParams":
        _check_positive_beta(beta)
        return cls(a=-(1.0 + spec.lam) / 2.0, k=1.0 / math.sqrt(2.0 * spec.n * beta))


class Regime(enum.Enum):
    """Closed-form limits of the asymptotic partition function."""

    HIGH_T = "high_t"
    LOW_T_SUB_CRITICAL = "low_t_sub_critical"
    LOW_T_POLARIZED = "low_t_polarized"


def _check_positive_beta(beta: float) -> None:
    if not (math.isfinite(beta) and beta > 0.0):
        raise ValueError(f"beta must be finite and > 0, got {beta!r}")


def log_partition_asymptotic(spec: ModelSpec, beta: float) -> float:
    """Saddle-point log Z of the model at inverse temperature beta.

    The error-function bracket is strictly positive for every field
    strength; when both arguments are small it is summed directly, and
    otherwise it is formed from two log-domain complements, which keeps
    the result finite at arbitrarily low temperature.
    """
    _check_positive_beta(beta)
    params = AsymptoticParams.from_model(spec, beta)
    lead = beta * spec.n * (1.0 + spec.lam**2) / 2.0 - 0.5 * math.log(2.0 * spec.n * beta)
    upper = (params.a + 1.0) / params.k
    lower = -params.a / params.k
    # upper + lower = 1/k > 0, so lower > -upper and the bracket cannot
    # vanish; lower also dominates upper for lam >= 0.
    if lower < _LOG_PATH_CUT:
        return lead + math.log(erf(upper) + erf(lower))
    big = log_erfc(-upper)
    small = log_erfc(lower)
    return lead + big + math.log1p(-math.exp(small - big))


def integral_state(spec: ModelSpec, temperature: float) -> tuple[float, float, float]:
    """(log_z, internal_energy, entropy) from the saddle-point log Z.

    The energy is the two-sided beta derivative of log Z with a
    relative step, and the entropy follows from the thermodynamic
    identity s = beta u + log z.
    """
    if not (math.isfinite(temperature) and temperature > 0.0):
        raise ValueError(f"temperature must be finite and > 0, got {temperature!r}")
    beta = 1.0 / temperature
    step = beta * _BETA_STEP
    log_z = log_partition_asymptotic(spec, beta)
    forward = log_partition_asymptotic(spec, beta + step)
    backward = log_partition_asymptotic(spec, beta - step)
    internal_energy = -(forward - backward) / (2.0 * step)
    entropy = beta * internal_energy + log_z
    return log_z, internal_energy, entropy


def asymptotic_state(spec: ModelSpec, beta: float, regime: Regime) -> tuple[float, float]:
    """Closed-form (log_z, internal_energy) in the requested regime.

    Raises
    ------
    ValueError
        For non-positive beta, an unknown regime, or the polarized
        regime with lam <= 1 (it only exists beyond the critical field).
    """
    _check_positive_beta(beta)
    n, lam = spec.n, spec.lam
    if regime is Regime.HIGH_T:
        log_z = 0.5 * math.log(math.pi) + n * beta * (1.0 + beta * lam**2) / 2.0
        return log_z, -(n / 2.0 + n * beta * lam**2)
    if regime is Regime.LOW_T_SUB_CRITICAL:
        log_z = math.log(2.0) - 0.5 * math.log(2.0 * n * beta) + n * beta * (1.0 + lam**2) / 2.0
        return log_z, -n * (1.0 + lam**2) / 2.0
    if regime is Regime.LOW_T_POLARIZED:
        if spec.lam <= 1.0:
            raise ValueError(f"polarized regime needs lam > 1, got lam={spec.lam}")
        return beta * n * lam, -n * lam
    raise ValueError(f"unknown regime {regime!r}")


def high_t_efficiency(kappa: float, eta_carnot: float) -> float:
    """High-temperature cycle efficiency for field ratio kappa.

    Parameters
    ----------
    kappa : float
        Ratio lambda1/lambda2 of the two fields, in [0, 1].
    eta_carnot : float
        Carnot efficiency of the bath pair, in (0, 1).
    """
    if not (0.0 <= kappa <= 1.0):
        raise ValueError(f"kappa must lie in [0, 1], got {kappa!r}")
    if not (0.0 < eta_carnot < 1.0):
        raise ValueError(f"eta_carnot must lie in (0, 1), got {eta_carnot!r}")
    spread = 1.0 - kappa**2
    return spread * eta_carnot / (spread + eta_carnot * (1.0 + kappa**2))


def _sigmoid(t: float) -> float:
    if t >= 0.0:
        return 1.0 / (1.0 + math.exp(-t))
    w = math.exp(t)
    return w / (1.0 + w)


def n2_closed_forms(beta_h: float, beta_c: float, lambda1: float) -> tuple[float, float, int]:
    """Two-spin cycle in closed form: (work, dwork_dlambda1, dqh_sign).

    Valid for a cycle whose large second field freezes the two corners
    there to the polarized ground level.  dqh_sign is the sign of the
    derivative of the heat intake with respect to lambda1, which flips
    exactly at the half-critical field lambda1 = 1/2.

    Raises
    ------
    ValueError
        Unless beta_c > beta_h > 0 (the cold bath must be colder) with
        lambda1 finite and >= 0.
    """
    if not (math.isfinite(beta_h) and math.isfinite(beta_c) and 0.0 < beta_h < beta_c):
        raise ValueError(f"need beta_c > beta_h > 0, got beta_h={beta_h!r}, beta_c={beta_c!r}")
    if not (math.isfinite(lambda1) and lambda1 >= 0.0):
        raise ValueError(f"lambda1 must be finite and >= 0, got {lambda1!r}")
    x = 1.0 - 2.0 * lambda1
    work = float(np.logaddexp(0.0, beta_h * x)) / beta_h - float(np.logaddexp(0.0, beta_c * x)) / beta_c
    dwork = 2.0 * (_sigmoid(beta_c * x) - _sigmoid(beta_h * x))
    dqh_sign = (x > 0.0) - (x < 0.0)
    return work, dwork, dqh_sign
