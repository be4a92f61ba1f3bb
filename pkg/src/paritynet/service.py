"""HTTP front end: stateless request/response wrapper around the library.

The service never touches the filesystem; it returns series data and lets
clients persist it.  Parameter-domain violations surface as 422 responses,
internal consistency failures (oracle deviation) as 500.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .runner import COLUMNS, OracleDeviationError, RunConfig
from .runner import run as run_scenario
from .runner import sweep as run_sweep
from .runner import verify as run_verify
from .schemas import (
    RunRequest,
    SeriesPayload,
    SweepRequest,
    SweepResponse,
    VerifyRequest,
    VerifyResponse,
    resolve_scenario,
)


def _payload(series) -> SeriesPayload:
    return SeriesPayload(
        metadata=series.metadata,
        columns=list(COLUMNS),
        rows=[[float(v) for v in row] for row in series.rows],
    )


def create_app() -> FastAPI:
    app = FastAPI(title="paritynet", version=__version__)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/run", response_model=SeriesPayload)
    def run_endpoint(request: RunRequest) -> SeriesPayload:
        try:
            scenario = resolve_scenario(request)
            series = run_scenario(RunConfig(scenario=scenario, oracle_check=request.oracle))
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except OracleDeviationError as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        return _payload(series)

    @app.post("/sweep", response_model=SweepResponse)
    def sweep_endpoint(request: SweepRequest) -> SweepResponse:
        try:
            scenario = resolve_scenario(request)
            grid = tuple((name, tuple(values)) for name, values in request.grid.items())
            config = RunConfig(scenario=scenario, sweep=grid, oracle_check=request.oracle)
            series_list = run_sweep(config)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except OracleDeviationError as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        return SweepResponse(series=[_payload(s) for s in series_list])

    @app.post("/verify", response_model=VerifyResponse)
    def verify_endpoint(request: VerifyRequest) -> VerifyResponse:
        try:
            scenario = resolve_scenario(request)
            report = run_verify(RunConfig(scenario=scenario, oracle_dt=request.oracle_dt))
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return VerifyResponse.from_report(report)

    return app


app = create_app()
