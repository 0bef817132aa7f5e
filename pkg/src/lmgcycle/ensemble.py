"""Canonical-ensemble thermodynamics restricted to the maximal-spin sector.

Populations and entropy are always computed from the bare level
energies; a caller-supplied additive energy offset shifts log Z and the
internal energy but can never leak into occupation numbers.  Internal
energy is carried as a floor (lowest level plus offset) and a separate
non-negative excess above it, so that downstream differences between
states sharing a field strength cancel the floor exactly instead of
losing it to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ModelSpec, allowed_twice_m, energy_levels, ground_set

__all__ = ["POPULATION_FLUSH", "ThermalState", "log_partition_exact", "thermal_state"]

# Occupations below this are flushed to exact zero before use.
POPULATION_FLUSH = 1e-300


@dataclass(frozen=True)
class ThermalState:
    """Equilibrium snapshot of one model at one temperature.

    Attributes
    ----------
    spec : ModelSpec
        System the state belongs to.
    temperature : float
        Temperature, >= 0 (math.inf is allowed).
    log_z : float
        Log partition function, including any energy offset.  Reported
        as math.inf for the symbolic zero-temperature state.
    populations : numpy.ndarray or None
        Occupation per level, ordered by ascending 2M.  None for states
        produced by the thermodynamic-limit backend, which never forms
        level-resolved occupations.
    internal_energy : float
        Ensemble average energy, equal to energy_floor plus excess.
    entropy : float
        Gibbs entropy, dimensionless.
    energy_floor : float
        Lowest level energy plus the applied offset.
    excess_energy : float
        Non-negative average energy above the floor.
    """

    spec: ModelSpec
    temperature: float
    log_z: float
    populations: np.ndarray | None
    internal_energy: float
    entropy: float
    energy_floor: float
    excess_energy: float


def _check_beta(beta: float) -> None:
    if not (math.isfinite(beta) and beta >= 0.0):
        raise ValueError(f"beta must be finite and >= 0, got {beta!r}")


def _check_offset(energy_offset: float) -> None:
    if not math.isfinite(energy_offset):
        raise ValueError(f"energy_offset must be finite, got {energy_offset!r}")


def log_partition_exact(spec: ModelSpec, beta: float, energy_offset: float = 0.0) -> float:
    """Log of the sector partition sum at inverse temperature beta.

    Uses the usual max-shifted exponential sum, so the result stays
    finite for arbitrarily large beta and system size.
    """
    _check_beta(beta)
    _check_offset(energy_offset)
    logits = -beta * energy_levels(spec)
    top = float(logits.max())
    return top + float(np.log(np.exp(logits - top).sum())) - beta * energy_offset


def thermal_state(spec: ModelSpec, temperature: float, energy_offset: float = 0.0) -> ThermalState:
    """Gibbs state of the sector at the given temperature.

    Temperature zero is handled symbolically: the population is uniform
    on the set of degenerate ground levels, the entropy is the log of
    its size, and log_z is reported as math.inf.  Infinite temperature
    gives the uniform state over all levels.

    Raises
    ------
    ValueError
        If the temperature is negative or NaN, or the offset is not
        finite.
    """
    if math.isnan(temperature) or temperature < 0.0:
        raise ValueError(f"temperature must be >= 0, got {temperature!r}")
    _check_offset(energy_offset)

    energies = energy_levels(spec)
    floor = float(energies.min())

    shifted_floor = floor + energy_offset

    if temperature == 0.0:
        members = ground_set(spec)
        labels = allowed_twice_m(spec.n)
        populations = np.zeros(labels.shape[0])
        populations[np.isin(labels, sorted(members))] = 1.0 / len(members)
        populations.setflags(write=False)
        return ThermalState(
            spec=spec,
            temperature=0.0,
            log_z=math.inf,
            populations=populations,
            internal_energy=shifted_floor,
            entropy=math.log(len(members)),
            energy_floor=shifted_floor,
            excess_energy=0.0,
        )

    beta = 0.0 if math.isinf(temperature) else 1.0 / temperature
    logits = -beta * energies
    top = float(logits.max())
    weights = np.exp(logits - top)
    norm = float(weights.sum())
    populations = weights / norm
    populations[populations < POPULATION_FLUSH] = 0.0
    populations.setflags(write=False)

    occupied = populations > 0.0
    entropy = float(-(populations[occupied] * np.log(populations[occupied])).sum())
    excess = float(populations @ (energies - floor))
    log_z = top + math.log(norm) - beta * energy_offset

    return ThermalState(
        spec=spec,
        temperature=temperature,
        log_z=log_z,
        populations=populations,
        internal_energy=shifted_floor + excess,
        entropy=entropy,
        energy_floor=shifted_floor,
        excess_energy=excess,
    )
