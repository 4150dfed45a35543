"""Equilibrium statistical mechanics on a diagonalized H(lambda).

Populations and the log-partition function use max-shifted exponentials so
that T -> 0+ and large level spacings neither overflow nor lose the ground
state. All quantities are per system (dimer or single spin): energies in
kelvin, entropy and specific heat in k_B units.

Temperature derivatives are available analytically through diagonal
covariances, d<A>/dT = Cov(A, H) / T^2, which holds for any observable
evaluated through its energy-basis diagonal in a canonical state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyPathError,
    NonPositiveTemperatureError,
    NoZeemanTermError,
)
from .linalg import EigenDecomposition, HermitianOperator, eigenbasis_diagonal, hermitian_eigen
from .models import ParamHamiltonian

# populations below this are clamped to exact zero before entropy sums
_POPULATION_FLOOR = 1e-300


@dataclass(frozen=True)
class ThermalState:
    """Canonical state of H(lambda) at temperature T.

    ``populations`` are the Boltzmann weights ordered like ``spectrum``
    (ascending energies, hence non-increasing populations);
    ``log_partition`` is ln Z.
    """

    temperature: float
    lam: float
    populations: np.ndarray
    log_partition: float
    spectrum: EigenDecomposition
    model: ParamHamiltonian

    def __post_init__(self):
        self.populations.setflags(write=False)


@dataclass(frozen=True)
class ThermodynamicPoint:
    """Equilibrium scalars at one (lambda, T).

    ``internal_energy`` U and ``free_energy`` F in kelvin, ``entropy`` S and
    ``specific_heat`` C in k_B units, ``energy_variance`` var[H] in kelvin^2,
    ``generalized_force`` Y = -<dH/dlambda> in kelvin per unit lambda.
    """

    temperature: float
    lam: float
    internal_energy: float
    entropy: float
    free_energy: float
    specific_heat: float
    energy_variance: float
    generalized_force: float


@dataclass(frozen=True)
class ProcessDecomposition:
    """First-law split of a discretized process.

    ``work`` accumulates the population-weighted level shifts and ``heat``
    the level-weighted population shifts; ``energy_change`` is the exact
    endpoint difference of U. ``work_steps`` / ``heat_steps`` record the
    per-segment contributions at the final refinement.
    """

    work: float
    heat: float
    energy_change: float
    work_steps: np.ndarray
    heat_steps: np.ndarray

    def __post_init__(self):
        self.work_steps.setflags(write=False)
        self.heat_steps.setflags(write=False)


def populations_from_levels(levels: np.ndarray, temperature: float):
    """Boltzmann weights and ln Z from a level list, max-shifted.

    Returns
    -------
    (populations, log_partition)
    """
    if not temperature > 0:
        raise NonPositiveTemperatureError(f"T = {temperature:g} K must be > 0")
    e_min = float(np.min(levels))
    weights = np.exp(-(levels - e_min) / temperature)
    z0 = float(np.sum(weights))
    populations = weights / z0
    populations[populations < _POPULATION_FLOOR] = 0.0
    return populations, float(np.log(z0) - e_min / temperature)


def thermal_state(model: ParamHamiltonian, lam: float, temperature: float) -> ThermalState:
    """Diagonalize H(lambda) and populate it canonically at T.

    Raises
    ------
    NonPositiveTemperatureError
        If T <= 0.
    """
    spectrum = hermitian_eigen(model.evaluate(lam))
    populations, log_z = populations_from_levels(spectrum.values, temperature)
    return ThermalState(
        temperature=float(temperature),
        lam=float(lam),
        populations=populations,
        log_partition=log_z,
        spectrum=spectrum,
        model=model,
    )


def entropy_from_populations(populations: np.ndarray) -> float:
    """Shannon entropy -sum p ln p in k_B units, with 0 ln 0 := 0."""
    p = populations[populations > 0.0]
    return max(float(-np.sum(p * np.log(p))), 0.0)


def thermo_point(state: ThermalState) -> ThermodynamicPoint:
    """All equilibrium scalars of a state.

    U = sum p_n E_n, S = -sum p_n ln p_n, F = -T ln Z,
    C = var[H] / T^2, Y = -sum p_n dE_n/dlambda through the analytic
    derivative operator.
    """
    energies = state.spectrum.values
    p = state.populations
    t = state.temperature
    u = float(np.dot(p, energies))
    variance = max(float(np.dot(p, energies ** 2)) - u * u, 0.0)
    d_diag = eigenbasis_diagonal(
        state.model.derivative(state.lam), state.spectrum.vectors)
    return ThermodynamicPoint(
        temperature=t,
        lam=state.lam,
        internal_energy=u,
        entropy=entropy_from_populations(p),
        free_energy=-t * state.log_partition,
        specific_heat=variance / (t * t),
        energy_variance=variance,
        generalized_force=-float(np.dot(p, d_diag)),
    )


def thermal_average(state: ThermalState, operator) -> float:
    """Thermal average sum_n p_n <n|A|n> of an observable.

    ``operator`` can be a HermitianOperator or a plain square ndarray of the
    state's dimension.

    Raises
    ------
    DimensionMismatchError
        If the operator dimension differs from the spectrum's.
    """
    matrix = operator.matrix if isinstance(operator, HermitianOperator) else np.asarray(operator, dtype=complex)
    if matrix.shape[0] != state.spectrum.dim:
        raise DimensionMismatchError(
            f"operator dim {matrix.shape[0]} vs state dim {state.spectrum.dim}")
    diag = eigenbasis_diagonal(matrix, state.spectrum.vectors)
    return float(np.dot(state.populations, diag))


def magnetization(state: ThermalState, model: ParamHamiltonian) -> float:
    """Total magnetization <S1z + ... > in units of g mu_B.

    Equals -<dH/db> for models whose working parameter is the field.

    Raises
    ------
    NoZeemanTermError
        If the model carries no magnetization operator.
    """
    if model.magnetization_operator is None:
        raise NoZeemanTermError(
            f"model with parameter {model.parameter_name!r} has no Zeeman term")
    return thermal_average(state, model.magnetization_operator)


def zero_field_susceptibility(model: ParamHamiltonian, temperature: float) -> float:
    """Zero-field susceptibility chi = (<M^2> - <M>^2) / T, fluctuation form.

    The model's working parameter must be the field ("b"); the state is
    evaluated at b = 0. Units: (g mu_B)^2 / k_B per system, i.e. 1/kelvin
    in reduced form.
    """
    if not temperature > 0:
        raise NonPositiveTemperatureError(f"T = {temperature:g} K must be > 0")
    if model.parameter_name != "b" or model.magnetization_operator is None:
        raise NoZeemanTermError(
            "zero-field susceptibility needs a field-parameterized model")
    state = thermal_state(model, 0.0, temperature)
    m_op = model.magnetization_operator.matrix
    m1 = thermal_average(state, m_op)
    m2 = thermal_average(state, m_op @ m_op)
    return (m2 - m1 * m1) / temperature


def covariance_with_energy(state: ThermalState, diag_values: np.ndarray) -> float:
    """Cov(A, H) = <AH> - <A><H> for an observable given by its
    energy-basis diagonal. ``d<A>/dT = Cov(A, H) / T^2``."""
    e = state.spectrum.values
    p = state.populations
    mean_a = float(np.dot(p, diag_values))
    return float(np.dot(p, diag_values * e)) - mean_a * float(np.dot(p, e))


def _segment_sums(model, points, level_cache):
    """Midpoint work/heat sums over consecutive (lambda, T) points.

    ``level_cache`` memoizes eigenvalues per lambda; refinement revisits
    the coarser grids' points.
    """
    levels = []
    for lam, _ in points:
        e = level_cache.get(lam)
        if e is None:
            e = hermitian_eigen(model.evaluate(lam)).values
            level_cache[lam] = e
        levels.append(e)
    pops = [populations_from_levels(e, t)[0]
            for e, (_, t) in zip(levels, points)]
    work = np.empty(len(points) - 1)
    heat = np.empty(len(points) - 1)
    for k in range(len(points) - 1):
        e_a, e_b = levels[k], levels[k + 1]
        p_a, p_b = pops[k], pops[k + 1]
        work[k] = float(np.dot((p_a + p_b) / 2.0, e_b - e_a))
        heat[k] = float(np.dot((e_a + e_b) / 2.0, p_b - p_a))
    return work, heat


def process_decompose(model: ParamHamiltonian,
                      path: Sequence[Tuple[float, float]]) -> ProcessDecomposition:
    """Split a discretized (lambda, T) process into quantum work and heat.

    Each input segment is subdivided (linearly in lambda and T), doubling
    the substep count until the work and heat totals stabilize; the
    midpoint rule makes W + Q equal the endpoint energy difference
    identically at every refinement.

    Raises
    ------
    EmptyPathError
        Fewer than two path points.
    NonPositiveTemperatureError
        Any path temperature <= 0.
    """
    pts = [(float(lam), float(t)) for lam, t in path]
    if len(pts) < 2:
        raise EmptyPathError("process path needs at least 2 points")
    for _, t in pts:
        if not t > 0:
            raise NonPositiveTemperatureError(f"path temperature {t:g} K must be > 0")

    def refine(n_sub):
        out = []
        for (la, ta), (lb, tb) in zip(pts[:-1], pts[1:]):
            seg = [(la + (lb - la) * j / n_sub, ta + (tb - ta) * j / n_sub)
                   for j in range(n_sub)]
            out.extend(seg)
        out.append(pts[-1])
        return out

    prev_w = prev_q = None
    n_sub = 1
    level_cache = {}
    for _ in range(15):
        work_steps, heat_steps = _segment_sums(model, refine(n_sub), level_cache)
        w, q = float(np.sum(work_steps)), float(np.sum(heat_steps))
        if prev_w is not None:
            scale = max(1.0, abs(w), abs(q))
            if max(abs(w - prev_w), abs(q - prev_q)) < 1e-9 * scale:
                break
        prev_w, prev_q = w, q
        n_sub *= 2

    u_start = float(np.dot(*_state_pe(model, *pts[0])))
    u_end = float(np.dot(*_state_pe(model, *pts[-1])))
    return ProcessDecomposition(
        work=w,
        heat=q,
        energy_change=u_end - u_start,
        work_steps=work_steps,
        heat_steps=heat_steps,
    )


def _state_pe(model, lam, temperature):
    spectrum = hermitian_eigen(model.evaluate(lam))
    populations, _ = populations_from_levels(spectrum.values, temperature)
    return populations, spectrum.values
