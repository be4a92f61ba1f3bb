"""Request/response models shared by the HTTP service and the CLI.

A request names a preset (fig2/fig3) or a full parameter set, an initial
state, and optional overrides; `resolve_scenario` turns it into the internal
scenario configuration.  Responses carry the sampled series as a column list
plus row-major float data, so a thin client can rewrite identical CSV/JSON
files locally.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

from .network import NetworkParams
from .runner import SWEEPABLE, VerifyReport
from .scenarios import DEFAULT_SAMPLES, PRESET_WINDOWS, ScenarioConfig, figure_preset

PresetName = Literal["fig2", "fig3"]
StateName = Literal["psi+", "psi-", "phi+", "phi-", "custom"]


class RunRequest(BaseModel):
    preset: PresetName | None = None
    state: StateName = "psi+"
    delta: float = 0.0
    omega0: float | None = None
    upsilon: float | None = None
    lambdas: tuple[float, float, float] | None = None
    gammas: tuple[float, float, float] | None = None
    tmax: float | None = Field(default=None, gt=0)
    samples: int | None = Field(default=None, ge=2)
    amplitudes: list[tuple[float, float]] | None = None
    oracle: bool = False

    @model_validator(mode="after")
    def _complete(self) -> "RunRequest":
        if self.preset is None:
            missing = [
                name
                for name in ("omega0", "upsilon", "lambdas", "gammas", "tmax")
                if getattr(self, name) is None
            ]
            if missing:
                raise ValueError(
                    "without a preset, explicit values are required for: " + ", ".join(missing)
                )
        if self.state == "custom" and self.amplitudes is None:
            raise ValueError("state 'custom' requires amplitudes")
        if self.state != "custom" and self.amplitudes is not None:
            raise ValueError("amplitudes are only accepted with state 'custom'")
        return self


class SweepRequest(RunRequest):
    grid: dict[str, list[float]]

    @model_validator(mode="after")
    def _check_grid(self) -> "SweepRequest":
        if not self.grid:
            raise ValueError("sweep grid must not be empty")
        for name, values in self.grid.items():
            if name not in SWEEPABLE:
                raise ValueError(f"cannot sweep {name!r}; allowed: {SWEEPABLE}")
            if not values:
                raise ValueError(f"sweep grid for {name!r} is empty")
        return self


class VerifyRequest(RunRequest):
    oracle_dt: float = Field(default=1e-3, gt=0)


class SeriesPayload(BaseModel):
    metadata: dict
    columns: list[str]
    rows: list[list[float]]


class SweepResponse(BaseModel):
    series: list[SeriesPayload]


class VerifyResponse(BaseModel):
    max_deviation: float
    threshold: float
    oracle_ok: bool
    reduction_ok: bool
    max_trace_error: float
    max_hermiticity_error: float
    min_eigenvalue: float
    passed: bool

    @classmethod
    def from_report(cls, report: VerifyReport) -> "VerifyResponse":
        return cls(
            max_deviation=report.max_deviation,
            threshold=report.threshold,
            oracle_ok=report.oracle_ok,
            reduction_ok=report.reduction_ok,
            max_trace_error=report.max_trace_error,
            max_hermiticity_error=report.max_hermiticity_error,
            min_eigenvalue=report.min_eigenvalue,
            passed=report.passed,
        )


def resolve_params(request: RunRequest) -> NetworkParams:
    """Build network parameters from preset plus overrides."""
    if request.preset is not None:
        params = figure_preset(request.preset, request.delta)
        omega0 = request.omega0 if request.omega0 is not None else params.omega0
        upsilon = request.upsilon if request.upsilon is not None else params.upsilon
        lambdas = request.lambdas if request.lambdas is not None else params.lambdas
        gammas = request.gammas if request.gammas is not None else params.gammas
    else:
        omega0 = request.omega0
        upsilon = request.upsilon
        lambdas = request.lambdas
        gammas = request.gammas
    return NetworkParams(
        omega0=omega0,
        omega_c=omega0 + request.delta,
        upsilon=upsilon,
        lambda1=lambdas[0],
        lambda2=lambdas[1],
        lambda3=lambdas[2],
        gamma1=gammas[0],
        gamma2=gammas[1],
        gamma3=gammas[2],
    )


def resolve_scenario(request: RunRequest) -> ScenarioConfig:
    """Resolve a request into a concrete scenario configuration."""
    params = resolve_params(request)
    if request.tmax is not None:
        t_max = request.tmax
    else:
        t_max = PRESET_WINDOWS[request.preset]
    n_samples = request.samples if request.samples is not None else DEFAULT_SAMPLES
    amplitudes = None
    if request.amplitudes is not None:
        if len(request.amplitudes) != 5:
            raise ValueError("custom state requires exactly 5 complex amplitudes")
        amplitudes = tuple(complex(re, im) for re, im in request.amplitudes)
    return ScenarioConfig(
        state=request.state,
        params=params,
        t_max=t_max,
        n_samples=n_samples,
        amplitudes=amplitudes,
    )
