"""Acceptance suite: one test and one printed verdict line per criterion.

Run with `pytest tests/test_acceptance.py -v -rA` to see every verdict.
Tolerances are pinned; tests that the implementation cannot honestly
meet are left failing rather than loosened.
"""

import math

import numpy as np

from lmgcycle import (
    CycleSpec,
    ModelSpec,
    bruteforce_spectrum,
    carnot_bound,
    detect_peaks,
    derivative_records,
    energy_levels,
    figure_sweep,
    high_t_efficiency,
    level_crossings,
    log_partition_asymptotic,
    log_partition_exact,
    run_cycle,
    run_figure,
    sweep_lambda1,
)

RNG_SEED = 20260825


def verdict(number: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {number} ({name}): {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" | {detail}"
    print(line)
    assert ok, line


def test_acceptance_1_carnot_peak_at_two_spin_crossing():
    """Unique sweep peak at lambda1 = 0.5 +- 0.01 with height 0.5 +- 1e-2."""
    records = run_figure("3a")
    peaks = detect_peaks(records)
    unique = len(peaks) == 1
    if peaks:
        location, height = max(peaks, key=lambda p: p[1])
        placed = abs(location - 0.5) <= 0.01
        tall = abs(height - 0.5) <= 1e-2
        detail = (
            f"peaks={len(peaks)}, top at lambda1={location:.6f} (need 0.5+-0.01), "
            f"eta={height:.6f} (need 0.5+-0.01)"
        )
    else:
        placed = tall = False
        detail = "no peaks detected"
    verdict(1, "carnot peak at two-spin crossing", unique and placed and tall, detail)


def test_acceptance_2_peak_census():
    """N/2 peaks, each at a crossing within one grid step, height near Carnot."""
    problems = []
    summary = []
    for figure_id, n in (("4a", 4), ("4b", 6), ("4c", 8), ("4d", 10)):
        spec = figure_sweep(figure_id)
        step = spec.lambda1_grid[1] - spec.lambda1_grid[0]
        records = sweep_lambda1(spec)
        peaks = detect_peaks(records)
        eta_c = carnot_bound(spec.t_hot, spec.t_cold)
        crossings = level_crossings(n)
        if len(peaks) != n // 2:
            problems.append(f"{figure_id}: {len(peaks)} peaks, expected {n // 2}")
        worst_steps = 0.0
        worst_height = 0.0
        for location, height in peaks:
            distance = min(abs(location - c) for c in crossings)
            worst_steps = max(worst_steps, distance / step)
            worst_height = max(worst_height, abs(height - eta_c))
            if distance > step * (1 + 1e-9):
                problems.append(
                    f"{figure_id}: peak at {location:.4f} is {distance / step:.1f} "
                    f"steps from nearest crossing"
                )
            if abs(height - eta_c) > 2e-2:
                problems.append(
                    f"{figure_id}: peak height {height:.4f} vs eta_C={eta_c:.4f} "
                    f"(off by {abs(height - eta_c):.4f} > 0.02)"
                )
        summary.append(
            f"{figure_id}: {len(peaks)} peaks, worst offset {worst_steps:.1f} steps, "
            f"worst height gap {worst_height:.4f}"
        )
    verdict(2, "peak census", not problems, "; ".join(problems or summary))


def test_acceptance_3_high_temperature_formula():
    """Exact efficiency within 1% of the closed high-T curve everywhere."""
    records = run_figure("6")
    eta_c = carnot_bound(800.0, 500.0)
    violations = 0
    worst = 0.0
    for r in records:
        closed = high_t_efficiency(r.lambda1 / 30.0, eta_c)
        if closed == 0.0:
            if r.efficiency != 0.0:
                violations += 1
            continue
        rel = abs(r.efficiency - closed) / abs(closed)
        worst = max(worst, rel)
        if rel > 0.01:
            violations += 1
    at_03 = next(r.efficiency for r in records if r.lambda1 == 0.3)
    spot_ok = abs(at_03 - 0.27273) <= 1e-3
    detail = (
        f"{violations}/{len(records)} points off by >1% (worst {worst:.1%}); "
        f"eta(0.3)={at_03:.6f} vs 0.27273+-1e-3"
    )
    verdict(3, "high-temperature closed curve", violations == 0 and spot_ok, detail)


def test_acceptance_4_low_temperature_step():
    """Near-Carnot plateau below the transition, dead zone beyond 1.5."""
    records = run_figure("8")
    eta_c = carnot_bound(0.3, 0.2)
    plateau = [r.efficiency for r in records if 0.1 <= r.lambda1 <= 0.9]
    dead = [r.efficiency for r in records if 1.5 <= r.lambda1 <= 4.0]
    plateau_ok = min(plateau) >= 0.95 * eta_c
    dead_ok = max(dead) <= 0.05
    detail = (
        f"min eta on [0.1,0.9] = {min(plateau):.6f} (need >= {0.95 * eta_c:.6f}); "
        f"max eta on [1.5,4] = {max(dead):.6f} (need <= 0.05)"
    )
    verdict(4, "low-temperature efficiency step", plateau_ok and dead_ok, detail)


def test_acceptance_5_sub_critical_null_engine():
    """Sub-critical sweeps stay within |eta| <= 0.05."""
    peak_a = max(abs(r.efficiency) for r in run_figure("7a"))
    peak_b = max(abs(r.efficiency) for r in run_figure("7b"))
    ok = peak_a <= 0.05 and peak_b <= 0.05
    detail = f"max|eta|: 7a={peak_a:.6f}, 7b={peak_b:.2e} (need <= 0.05)"
    verdict(5, "sub-critical null engine", ok, detail)


def test_acceptance_6_dense_spectrum_oracle():
    """Sector energies all appear in the 2^N spectrum within 1e-9."""
    worst = 0.0
    for n in range(1, 9):
        for lam in np.linspace(0.0, 4.0, 25):
            model = ModelSpec(n, float(lam))
            dense = np.array(bruteforce_spectrum(model))
            for e in energy_levels(model):
                worst = max(worst, float(np.abs(dense - e).min()))
    verdict(6, "dense-spectrum oracle", worst <= 1e-9, f"worst deviation {worst:.3e}")


def test_acceptance_7_second_law_property_suite():
    """Random cycles: Carnot bound, normalization, entropy range, offsets."""
    rng = np.random.default_rng(RNG_SEED)
    failures = []
    engines = 0

    def check_cycle(spec, offset):
        nonlocal engines
        result = run_cycle(spec)
        if result.is_engine:
            engines += 1
            if result.efficiency > result.eta_carnot + 1e-6:
                failures.append(f"{spec}: eta {result.efficiency} > Carnot")
        if spec.backend == "exact":
            for corner in result.corners:
                if abs(corner.populations.sum() - 1.0) > 1e-12:
                    failures.append(f"{spec}: populations off by "
                                    f"{abs(corner.populations.sum() - 1.0):.2e}")
                if not 0.0 <= corner.entropy <= math.log(spec.n + 1) + 1e-12:
                    failures.append(f"{spec}: entropy {corner.entropy} out of range")
        shifted = run_cycle(spec, energy_offset=offset)
        if shifted.work != result.work or shifted.efficiency != result.efficiency:
            failures.append(f"{spec}: offset {offset} changed work or efficiency")

    for _ in range(1000):
        n = int(rng.integers(1, 81))
        t_hot = float(10.0 ** rng.uniform(-1.3, 2.0))
        t_cold = t_hot * float(rng.uniform(0.05, 0.95))
        lambda2 = float(rng.uniform(0.0, 4.0))
        lambda1 = lambda2 * float(rng.uniform(0.0, 1.0))
        offset = float(rng.uniform(-20.0, 20.0))
        check_cycle(CycleSpec(n, t_hot, t_cold, lambda1, lambda2), offset)

    for _ in range(100):
        n = int(rng.integers(500, 3001))
        t_hot = float(rng.uniform(0.1, 1.0))
        t_cold = t_hot * float(rng.uniform(0.2, 0.9))
        lambda2 = float(rng.uniform(0.5, 4.0))
        lambda1 = lambda2 * float(rng.uniform(0.0, 1.0))
        offset = float(rng.uniform(-20.0, 20.0))
        check_cycle(
            CycleSpec(n, t_hot, t_cold, lambda1, lambda2, backend="asymptotic"), offset
        )

    detail = f"1100 cycles ({engines} engines), failures: {failures[:3] or 'none'}"
    verdict(7, "second-law property suite", not failures, detail)


def test_acceptance_8_derivative_valley():
    """Steepest efficiency descent near the transition; crossing wiggles."""
    pairs = derivative_records(figure_sweep("5d"))
    argmin_lambda, steepest = min(pairs, key=lambda p: p[1])
    valley_ok = 0.9 <= argmin_lambda <= 1.1

    wiggle_pairs = derivative_records(figure_sweep("5a"))
    signs = [d for x, d in wiggle_pairs if 0.0 < x < 1.0 and d != 0.0]
    flips = sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))
    flips_ok = flips >= 3

    detail = (
        f"argmin eta' at lambda1={argmin_lambda:.4f} (need [0.9,1.1], "
        f"slope {steepest:.4f}); sign changes on (0,1): {flips} (need >= 3)"
    )
    verdict(8, "derivative valley", valley_ok and flips_ok, detail)


def test_acceptance_9_backend_consistency():
    """Exact and saddle-point efficiencies agree; log Z stays finite."""
    gaps = []
    for lambda1 in (0.2, 0.5, 0.8):
        exact = run_cycle(CycleSpec(2000, 0.3, 0.2, lambda1, 4.0)).efficiency
        asym = run_cycle(
            CycleSpec(2000, 0.3, 0.2, lambda1, 4.0, backend="asymptotic")
        ).efficiency
        gaps.append(abs(exact - asym))
    agree = max(gaps) <= 1e-2

    with np.errstate(over="raise"):
        cold_sub = log_partition_exact(ModelSpec(10_000, 0.3), 1e6)
        cold_pol = log_partition_exact(ModelSpec(10_000, 4.0), 1e6)
        cold_asym = log_partition_asymptotic(ModelSpec(10_000, 4.0), 1e6)
    finite = all(map(math.isfinite, (cold_sub, cold_pol, cold_asym)))

    detail = (
        f"max|eta_exact - eta_asym| = {max(gaps):.2e} (need <= 1e-2); "
        f"log Z at beta=1e6, n=1e4: {cold_sub:.3e}, {cold_pol:.3e}, {cold_asym:.3e}"
    )
    verdict(9, "backend consistency", agree and finite, detail)
