"""Sweep orchestration: evaluate the requested computations over the
scenario's (lambda, T) grids and gather curves.

Grid points are computed concurrently up to QCAL_THREADS workers (default:
processor count); results are gathered in grid order, so output is
deterministic regardless of the degree of parallelism. A failing grid point
aborts the whole run -- partial curves are never emitted.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from .caloric import (
    LatticeHeatSpec,
    adiabatic_temperature_change,
    classical_adiabatic_temperature_change,
    generalized_force,
    isothermal_entropy_change,
)
from .curves import Curve, CurveSet
from .discord import pair_correlation
from .errors import ComputationError, QCaloricError
from .scenario import Scenario, build_model
from .thermal import process_decompose


def thread_count() -> int:
    """Worker count from QCAL_THREADS; falls back to the processor count."""
    raw = os.environ.get("QCAL_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        n = os.cpu_count() or 1
    return n


def _parallel_map(fn, items: Sequence):
    workers = min(thread_count(), max(len(items), 1))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _wrap(fn, comp, lam_desc, axis="T"):
    def evaluated(x):
        try:
            return fn(x)
        except QCaloricError as exc:
            raise ComputationError(
                f"{comp} failed at {axis} = {x:g} K, {lam_desc}: {exc}") from exc
    return evaluated


def run_sweep(scenario: Scenario, *,
              sweep_values: Optional[Sequence[float]] = None,
              sweep_labels: Optional[Sequence[str]] = None) -> CurveSet:
    """Run all computations a scenario requests and collect the curves.

    ``sweep_values`` overrides the scenario's linear lambda grid (used by
    exchange-table ingestion); ``sweep_labels`` names the per-lambda curves.

    Curve layout per computation:

    * ``entropy`` / ``adiabatic`` / ``classical_adiabatic``: one curve over
      the temperature grid for the sweep endpoints lambda_from -> lambda_to.
    * ``discord``: one curve D(T) per lambda grid value (dimer J).
    * ``force``: one curve Y(lambda) over the sweep grid per temperature.
    * ``decompose``: work / heat / energy-change curves over temperature for
      the isothermal stroke lambda_from -> lambda_to.
    """
    model = build_model(scenario)
    temps = list(scenario.temperatures.values())
    lams = list(sweep_values) if sweep_values is not None else list(scenario.sweep.values())
    lam_i, lam_f = lams[0], lams[-1]
    lam_desc = f"sweep {lam_i:g} -> {lam_f:g}"
    if sweep_labels is None:
        sweep_labels = [f"J={lam:g}" for lam in lams]

    curves = []
    for comp in scenario.computations:
        if comp == "entropy":
            results = _parallel_map(_wrap(
                lambda t: isothermal_entropy_change(model, lam_i, lam_f, t),
                comp, lam_desc), temps)
            curves.append(Curve(
                name="entropy_change", abscissa_unit="K", value_unit="kB",
                points=tuple((t, r.value, r.error_estimate)
                             for t, r in zip(temps, results))))
        elif comp == "adiabatic":
            results = _parallel_map(_wrap(
                lambda t: adiabatic_temperature_change(model, lam_i, lam_f, t),
                comp, lam_desc), temps)
            curves.append(Curve(
                name="adiabatic_temperature_change", abscissa_unit="K",
                value_unit="K",
                points=tuple((t, r.value, r.error_estimate)
                             for t, r in zip(temps, results))))
        elif comp == "classical_adiabatic":
            lattice = scenario.lattice or LatticeHeatSpec()
            results = _parallel_map(_wrap(
                lambda t: classical_adiabatic_temperature_change(
                    model, lattice, lam_i, lam_f, t),
                comp, lam_desc), temps)
            curves.append(Curve(
                name="classical_adiabatic_temperature_change",
                abscissa_unit="K", value_unit="K",
                points=tuple((t, r.value, r.error_estimate)
                             for t, r in zip(temps, results))))
        elif comp == "discord":
            for lam, label in zip(lams, sweep_labels):
                records = _parallel_map(_wrap(
                    lambda t, j=lam: pair_correlation(j, t),
                    comp, f"J = {lam:g}"), temps)
                curves.append(Curve(
                    name=f"discord_{label}", abscissa_unit="K",
                    value_unit="dimensionless",
                    points=tuple((t, rec.discord, 0.0)
                                 for t, rec in zip(temps, records))))
        elif comp == "force":
            for t in temps:
                values = _parallel_map(_wrap(
                    lambda lam, tt=t: generalized_force(model, lam, tt),
                    comp, f"T = {t:g} K", axis="lambda"), lams)
                curves.append(Curve(
                    name=f"force_T={t:g}", abscissa_unit="K",
                    value_unit="K_per_lambda",
                    points=tuple((lam, y, 0.0)
                                 for lam, y in zip(lams, values))))
        elif comp == "decompose":
            results = _parallel_map(_wrap(
                lambda t: process_decompose(model, [(lam_i, t), (lam_f, t)]),
                comp, lam_desc), temps)
            for name, pick in (("work", lambda d: d.work),
                               ("heat", lambda d: d.heat),
                               ("energy_change", lambda d: d.energy_change)):
                curves.append(Curve(
                    name=name, abscissa_unit="K", value_unit="K",
                    points=tuple((t, pick(d), 0.0)
                                 for t, d in zip(temps, results))))
    return CurveSet(curves=tuple(curves))
