"""Thermodynamics of the LMG collective-spin model and its heat-engine cycle.

The exact backend works in the maximal-spin sector of the model, whose
levels are known in closed form, and builds canonical states from them.
The asymptotic backend replaces the level sum by a saddle-point
integral, valid for large systems.  On top of either backend the
package evaluates a four-stroke cycle between two baths and two field
strengths, sweeps it over the smaller field, and regenerates a
catalogue of named datasets.
"""

from .asymptotics import (
    AsymptoticParams,
    Regime,
    asymptotic_state,
    high_t_efficiency,
    integral_state,
    log_partition_asymptotic,
    n2_closed_forms,
)
from .core import (
    BRUTEFORCE_MAX_N,
    DEGENERACY_ATOL,
    Level,
    ModelSpec,
    allowed_twice_m,
    bruteforce_spectrum,
    eigenenergy,
    energy_levels,
    ground_set,
    level_crossings,
    spectrum,
)
from .cycle import BACKENDS, CycleResult, CycleSpec, carnot_bound, run_cycle
from .ensemble import POPULATION_FLUSH, ThermalState, log_partition_exact, thermal_state
from .figures import FigurePreset, figure_ids, figure_preset, figure_sweep, run_figure
from .special import erf, erfc, log_erfc
from .sweep import (
    PROMINENCE_FLOOR,
    SweepRecord,
    SweepSpec,
    derivative_records,
    detect_peaks,
    efficiency_derivative,
    sweep_lambda1,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticParams",
    "BACKENDS",
    "BRUTEFORCE_MAX_N",
    "CycleResult",
    "CycleSpec",
    "DEGENERACY_ATOL",
    "FigurePreset",
    "Level",
    "ModelSpec",
    "POPULATION_FLUSH",
    "PROMINENCE_FLOOR",
    "Regime",
    "SweepRecord",
    "SweepSpec",
    "ThermalState",
    "allowed_twice_m",
    "asymptotic_state",
    "bruteforce_spectrum",
    "carnot_bound",
    "derivative_records",
    "detect_peaks",
    "efficiency_derivative",
    "eigenenergy",
    "energy_levels",
    "erf",
    "erfc",
    "figure_ids",
    "figure_preset",
    "figure_sweep",
    "ground_set",
    "high_t_efficiency",
    "integral_state",
    "level_crossings",
    "log_erfc",
    "log_partition_asymptotic",
    "log_partition_exact",
    "n2_closed_forms",
    "run_cycle",
    "run_figure",
    "spectrum",
    "sweep_lambda1",
    "thermal_state",
]
