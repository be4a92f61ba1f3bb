"""Scenario execution, parameter sweeps, oracle verification, and file output.

A run samples the closed-form evolution on an equally spaced time grid and
records concurrence, two-qubit populations, the r4 coherence, and the bare
excitation populations per sample.  Output is written atomically (temp file
plus rename) as CSV or JSON with a metadata block; identical configurations
produce byte-identical files.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from .dynamics import (
    assert_valid_state,
    decay_rates,
    oracle_trajectory,
    propagate_closed_form,
)
from .network import NetworkParams, assemble_hamiltonian, diagonalize
from .observables import concurrence, mode_populations, two_qubit_state
from .scenarios import ScenarioConfig, initial_state_density

COLUMNS = (
    "t",
    "concurrence",
    "r1",
    "r2",
    "r3",
    "re_r4",
    "im_r4",
    "p_q1",
    "p_q2",
    "p_c1",
    "p_c2",
    "p_f",
    "p_g",
)

ORACLE_THRESHOLD = 1e-8

SWEEPABLE = (
    "delta",
    "lambda1",
    "lambda2",
    "lambda3",
    "gamma1",
    "gamma2",
    "gamma3",
    "upsilon",
)

GAUGE_NOTE = "eigenvalues ascending; eigenvector sign: largest-magnitude component positive"


class OracleDeviationError(RuntimeError):
    """Closed form and numerical integrator disagree beyond the threshold."""


@dataclass(frozen=True)
class RunConfig:
    scenario: ScenarioConfig
    sweep: tuple[tuple[str, tuple[float, ...]], ...] | None = None
    output_path: str | None = None
    output_format: str = "csv"
    oracle_check: bool = False
    oracle_dt: float = 1e-3

    def __post_init__(self) -> None:
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.output_format!r}")
        if self.sweep is not None:
            if len(self.sweep) == 0:
                raise ValueError("sweep grid must not be empty")
            for name, values in self.sweep:
                if name not in SWEEPABLE:
                    raise ValueError(f"cannot sweep {name!r}; allowed: {SWEEPABLE}")
                if len(values) == 0:
                    raise ValueError(f"sweep grid for {name!r} is empty")


@dataclass(frozen=True)
class TimeSeries:
    """Sampled evolution records plus the resolved configuration."""

    rows: np.ndarray  # shape (n_samples, len(COLUMNS))
    metadata: dict = field(repr=False)

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, COLUMNS.index(name)]


@dataclass(frozen=True)
class VerifyReport:
    max_deviation: float
    threshold: float
    reduction_ok: bool
    max_trace_error: float
    max_hermiticity_error: float
    min_eigenvalue: float

    @property
    def oracle_ok(self) -> bool:
        return self.max_deviation <= self.threshold

    @property
    def passed(self) -> bool:
        return (
            self.oracle_ok
            and self.reduction_ok
            and self.max_trace_error <= 1e-12
            and self.max_hermiticity_error <= 1e-12
            and self.min_eigenvalue >= -1e-10
        )


def _params_metadata(params: NetworkParams) -> dict:
    return {
        "omega0": params.omega0,
        "omega_c": params.omega_c,
        "delta": params.delta,
        "eta": params.eta,
        "upsilon": params.upsilon,
        "lambda1": params.lambda1,
        "lambda2": params.lambda2,
        "lambda3": params.lambda3,
        "gamma1": params.gamma1,
        "gamma2": params.gamma2,
        "gamma3": params.gamma3,
    }


def simulate(scenario: ScenarioConfig) -> TimeSeries:
    """Closed-form evolution sampled on [0, t_max]; no file output."""
    params = scenario.params
    h_block, ground = assemble_hamiltonian(params)
    basis = diagonalize(h_block, ground)
    rates = decay_rates(basis, params)
    amps = None if scenario.amplitudes is None else np.asarray(scenario.amplitudes)
    rho0 = initial_state_density(scenario.state, basis, amps)
    times = np.linspace(0.0, scenario.t_max, scenario.n_samples)
    rows = np.empty((scenario.n_samples, len(COLUMNS)))
    for i, t in enumerate(times):
        rho = propagate_closed_form(rho0, basis, rates, t)
        assert_valid_state(rho)
        state = two_qubit_state(rho, basis)
        pops = mode_populations(rho, basis)
        conc = concurrence(state)
        if abs(state.r1 + state.r2 + state.r3 - 1.0) > 1e-12:
            raise RuntimeError("two-qubit populations do not sum to 1")
        if not 0.0 <= conc <= 1.0:
            raise RuntimeError(f"concurrence {conc} outside [0, 1]")
        rows[i] = (
            t,
            conc,
            state.r1,
            state.r2,
            state.r3,
            state.r4.real,
            state.r4.imag,
            pops.p_qubit1,
            pops.p_qubit2,
            pops.p_cavity1,
            pops.p_cavity2,
            pops.p_fiber,
            pops.p_ground,
        )
    metadata = {
        **_params_metadata(params),
        "state": scenario.state,
        "t_max": scenario.t_max,
        "n_samples": scenario.n_samples,
        "version": __version__,
        "gauge": GAUGE_NOTE,
    }
    if scenario.amplitudes is not None:
        metadata["amplitudes"] = [[a.real, a.imag] for a in scenario.amplitudes]
    return TimeSeries(rows=rows, metadata=metadata)


def _oracle_deviation(scenario: ScenarioConfig, dt: float) -> float:
    """Max elementwise |closed form - integrator| over the sample grid."""
    params = scenario.params
    h_block, ground = assemble_hamiltonian(params)
    basis = diagonalize(h_block, ground)
    rates = decay_rates(basis, params)
    amps = None if scenario.amplitudes is None else np.asarray(scenario.amplitudes)
    rho0 = initial_state_density(scenario.state, basis, amps)
    times = np.linspace(0.0, scenario.t_max, scenario.n_samples)
    numeric = oracle_trajectory(rho0, basis, params, times, dt=dt)
    dev = 0.0
    for t, rho_num in zip(times, numeric):
        rho_cf = propagate_closed_form(rho0, basis, rates, t)
        dev = max(dev, float(np.abs(rho_cf - rho_num).max()))
    return dev


def run(config: RunConfig) -> TimeSeries:
    """Execute a single scenario and optionally write its output file."""
    series = simulate(config.scenario)
    if config.oracle_check:
        dev = _oracle_deviation(config.scenario, config.oracle_dt)
        series.metadata["oracle_max_deviation"] = dev
        series.metadata["oracle_threshold"] = ORACLE_THRESHOLD
        if dev > ORACLE_THRESHOLD:
            raise OracleDeviationError(
                f"closed form deviates from integrator by {dev:.3e} (> {ORACLE_THRESHOLD:.0e})"
            )
    if config.output_path is not None:
        write_series(series, config.output_path, config.output_format)
    return series


def _sweep_points(config: RunConfig) -> list[tuple[dict, ScenarioConfig]]:
    """Cartesian product of the sweep grid; validates every point upfront."""
    assert config.sweep is not None
    coords_list: list[dict] = [{}]
    for name, values in config.sweep:
        coords_list = [{**c, name: v} for c in coords_list for v in values]
    points = []
    for coords in coords_list:
        params = config.scenario.params
        for name, value in coords.items():
            if name == "delta":
                params = replace(params, omega_c=params.omega0 + value)
            else:
                params = replace(params, **{name: value})
        points.append((coords, replace(config.scenario, params=params)))
    return points


def coord_tag(coords: dict) -> str:
    return "_".join(f"{k}={v:g}" for k, v in coords.items())


def sweep(config: RunConfig) -> list[TimeSeries]:
    """Run every grid point; one output file per point when a path is set.

    All grid points are validated before any simulation starts, so an
    invalid point aborts the whole sweep upfront.
    """
    if config.sweep is None:
        raise ValueError("sweep grid missing")
    points = _sweep_points(config)  # constructing configs validates them
    out = []
    for coords, scenario in points:
        series = simulate(scenario)
        series.metadata["sweep_coords"] = dict(coords)
        if config.oracle_check:
            dev = _oracle_deviation(scenario, config.oracle_dt)
            series.metadata["oracle_max_deviation"] = dev
            series.metadata["oracle_threshold"] = ORACLE_THRESHOLD
            if dev > ORACLE_THRESHOLD:
                raise OracleDeviationError(
                    f"oracle deviation {dev:.3e} at sweep point {coords}"
                )
        if config.output_path is not None:
            name = f"run_{coord_tag(coords)}.{config.output_format}"
            write_series(series, os.path.join(config.output_path, name), config.output_format)
        out.append(series)
    return out


def verify(config: RunConfig) -> VerifyReport:
    """Cross-check the closed form against the numerical integrator.

    Also re-derives the undeformed Hamiltonian and checks the structural
    state invariants along the closed-form trajectory.
    """
    scenario = config.scenario
    params = scenario.params
    dev = _oracle_deviation(scenario, config.oracle_dt)

    plain = replace(params, lambda1=0.0, lambda2=0.0, lambda3=0.0)
    h_plain, _ = assemble_hamiltonian(plain)
    z = 1.5 * plain.omega_c
    expected = np.zeros((5, 5))
    expected[0, 0] = expected[4, 4] = z
    expected[1, 1] = expected[2, 2] = expected[3, 3] = z + plain.delta
    expected[0, 1] = expected[1, 0] = plain.eta
    expected[4, 3] = expected[3, 4] = plain.eta
    expected[1, 2] = expected[2, 1] = plain.upsilon
    expected[3, 2] = expected[2, 3] = plain.upsilon
    reduction_ok = bool(np.abs(h_plain - expected).max() <= 1e-12)

    h_block, ground = assemble_hamiltonian(params)
    basis = diagonalize(h_block, ground)
    rates = decay_rates(basis, params)
    amps = None if scenario.amplitudes is None else np.asarray(scenario.amplitudes)
    rho0 = initial_state_density(scenario.state, basis, amps)
    times = np.linspace(0.0, scenario.t_max, scenario.n_samples)
    trace_err = 0.0
    herm_err = 0.0
    min_eig = np.inf
    for t in times:
        rho = propagate_closed_form(rho0, basis, rates, t)
        trace_err = max(trace_err, abs(np.trace(rho) - 1.0))
        herm_err = max(herm_err, float(np.abs(rho - rho.conj().T).max()))
        min_eig = min(min_eig, float(np.linalg.eigvalsh(rho).min()))
    return VerifyReport(
        max_deviation=dev,
        threshold=ORACLE_THRESHOLD,
        reduction_ok=reduction_ok,
        max_trace_error=float(trace_err),
        max_hermiticity_error=herm_err,
        min_eigenvalue=min_eig,
    )


def _format_value(value: float) -> str:
    """Shortest round-trip decimal; keeps files byte-stable across runs."""
    return repr(float(value))


def _render_csv(series: TimeSeries) -> str:
    lines = []
    for key in sorted(series.metadata):
        lines.append(f"# {key}: {json.dumps(series.metadata[key])}")
    lines.append(",".join(COLUMNS))
    for row in series.rows:
        lines.append(",".join(_format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def _render_json(series: TimeSeries) -> str:
    payload = {
        "metadata": series.metadata,
        "columns": list(COLUMNS),
        "rows": [[float(v) for v in row] for row in series.rows],
    }
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def write_series(series: TimeSeries, path: str, fmt: str) -> None:
    """Atomic write: render fully, write a sibling temp file, rename."""
    text = _render_csv(series) if fmt == "csv" else _render_json(series)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
