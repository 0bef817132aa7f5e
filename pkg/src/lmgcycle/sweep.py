"""Cycle sweeps over the small field, peak census, and derivatives."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .cycle import BACKENDS, CycleSpec, run_cycle

__all__ = [
    "PROMINENCE_FLOOR",
    "SweepRecord",
    "SweepSpec",
    "detect_peaks",
    "derivative_records",
    "efficiency_derivative",
    "sweep_lambda1",
]

# Efficiency bumps shallower than this are treated as grid noise.
PROMINENCE_FLOOR = 1e-4

# Default half-width of the finite-difference stencil in lambda1.
DERIVATIVE_STEP = 1e-3


@dataclass(frozen=True)
class SweepSpec:
    """A family of cycles sharing baths and lambda2, swept over lambda1.

    The grid must be non-empty, strictly ascending, and contained in
    [0, lambda2].
    """

    n: int
    t_hot: float
    t_cold: float
    lambda2: float
    lambda1_grid: tuple[float, ...]
    backend: str = "exact"

    def __post_init__(self) -> None:
        grid = tuple(float(v) for v in self.lambda1_grid)
        object.__setattr__(self, "lambda1_grid", grid)
        if not grid:
            raise ValueError("lambda1_grid must not be empty")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("lambda1_grid must be strictly ascending")
        if self.backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        # Delegates the remaining checks, including grid containment.
        CycleSpec(self.n, self.t_hot, self.t_cold, grid[0], self.lambda2, self.backend)
        CycleSpec(self.n, self.t_hot, self.t_cold, grid[-1], self.lambda2, self.backend)


@dataclass(frozen=True)
class SweepRecord:
    """One sweep row: the cycle energetics at a single lambda1."""

    lambda1: float
    efficiency: float
    eta_carnot: float
    work: float
    q_h: float
    q_ab: float
    q_bc: float
    q_cd: float
    q_da: float
    s_a: float
    s_b: float
    s_c: float
    s_d: float
    is_engine: bool


def sweep_lambda1(spec: SweepSpec) -> list[SweepRecord]:
    """Run one cycle per grid point, in grid order.

    A failure at any point is re-raised with the grid index and field
    value prepended, so a bad grid names its own culprit.
    """
    records = []
    for index, lambda1 in enumerate(spec.lambda1_grid):
        try:
            result = run_cycle(
                CycleSpec(spec.n, spec.t_hot, spec.t_cold, lambda1, spec.lambda2, spec.backend)
            )
        except ValueError as err:
            raise ValueError(f"grid index {index} (lambda1={lambda1!r}): {err}") from err
        a, b, c, d = result.corners
        records.append(
            SweepRecord(
                lambda1=lambda1,
                efficiency=result.efficiency,
                eta_carnot=result.eta_carnot,
                work=result.work,
                q_h=result.q_h,
                q_ab=result.q_ab,
                q_bc=result.q_bc,
                q_cd=result.q_cd,
                q_da=result.q_da,
                s_a=a.entropy,
                s_b=b.entropy,
                s_c=c.entropy,
                s_d=d.entropy,
                is_engine=result.is_engine,
            )
        )
    return records


def efficiency_derivative(spec: CycleSpec, lambda1: float, h: float = DERIVATIVE_STEP) -> float:
    """Central-difference d(efficiency)/d(lambda1) at the given point.

    Raises
    ------
    ValueError
        If h is not positive or the stencil [lambda1 - h, lambda1 + h]
        leaves [0, lambda2].
    """
    if not (math.isfinite(h) and h > 0.0):
        raise ValueError(f"h must be finite and > 0, got {h!r}")
    if lambda1 - h < 0.0 or lambda1 + h > spec.lambda2:
        raise ValueError(
            f"stencil [{lambda1 - h}, {lambda1 + h}] leaves [0, {spec.lambda2}]"
        )
    upper = run_cycle(replace(spec, lambda1=lambda1 + h)).efficiency
    lower = run_cycle(replace(spec, lambda1=lambda1 - h)).efficiency
    return (upper - lower) / (2.0 * h)


def derivative_records(spec: SweepSpec, h: float = DERIVATIVE_STEP) -> list[tuple[float, float]]:
    """(lambda1, d(efficiency)/d(lambda1)) on the sweep grid.

    Interior points use the central stencil; a point whose stencil
    would leave [0, lambda2] falls back to the matching one-sided
    difference, so grids that touch the domain edges stay legal.
    """
    if not (math.isfinite(h) and h > 0.0):
        raise ValueError(f"h must be finite and > 0, got {h!r}")

    def eta(lambda1: float) -> float:
        return run_cycle(
            CycleSpec(spec.n, spec.t_hot, spec.t_cold, lambda1, spec.lambda2, spec.backend)
        ).efficiency

    out = []
    for lambda1 in spec.lambda1_grid:
        if lambda1 - h >= 0.0 and lambda1 + h <= spec.lambda2:
            slope = (eta(lambda1 + h) - eta(lambda1 - h)) / (2.0 * h)
        elif lambda1 - h < 0.0:
            slope = (eta(lambda1 + h) - eta(lambda1)) / h
        else:
            slope = (eta(lambda1) - eta(lambda1 - h)) / h
        out.append((lambda1, slope))
    return out


def detect_peaks(
    records: list[SweepRecord], prominence: float = PROMINENCE_FLOOR
) -> list[tuple[float, float]]:
    """Prominent strict local maxima of efficiency along the sweep.

    A candidate must beat both neighbours strictly.  Its prominence is
    measured against the higher of the two flanking local minima,
    found by walking downhill (ties included) on each side, and must
    reach the requested floor.

    Raises
    ------
    ValueError
        If fewer than three records are given or their lambda1 values
        are not strictly ascending.
    """
    if len(records) < 3:
        raise ValueError(f"need at least 3 records, got {len(records)}")
    grid = [r.lambda1 for r in records]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("records must be strictly ascending in lambda1")

    eff = [r.efficiency for r in records]
    peaks = []
    for i in range(1, len(eff) - 1):
        if not (eff[i] > eff[i - 1] and eff[i] > eff[i + 1]):
            continue
        j = i
        while j > 0 and eff[j - 1] <= eff[j]:
            j -= 1
        left_min = eff[j]
        j = i
        while j < len(eff) - 1 and eff[j + 1] <= eff[j]:
            j += 1
        right_min = eff[j]
        if eff[i] - max(left_min, right_min) >= prominence:
            peaks.append((grid[i], eff[i]))
    return peaks
