"""Command-line front end.

Subcommands `run`, `sweep`, and `verify` execute in-process by default; with
--server URL they delegate the computation to a running HTTP service and
write identical files locally.  A flat key=value config file may supply any
flag's value; explicit flags win.

Exit codes: 0 success, 2 validation error, 3 oracle-deviation failure,
4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np
from pydantic import ValidationError

from .runner import (
    COLUMNS,
    OracleDeviationError,
    RunConfig,
    TimeSeries,
    coord_tag,
    run,
    sweep,
    verify,
    write_series,
)
from .schemas import (
    RunRequest,
    SweepRequest,
    VerifyRequest,
    VerifyResponse,
    resolve_scenario,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_ORACLE = 3
EXIT_IO = 4

_CONFIG_KEY_ALIASES = {"lambda": "lambdas", "gamma": "gammas"}
_VALID_KEYS = {
    "preset",
    "state",
    "delta",
    "omega0",
    "upsilon",
    "lambdas",
    "gammas",
    "tmax",
    "samples",
    "format",
    "out",
    "oracle",
    "amplitudes",
    "server",
    "sweep",
}


def _parse_triple(text: str) -> tuple[float, float, float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated values, got {text!r}")
    return tuple(float(p) for p in parts)


def _parse_amplitudes(text: str) -> list[tuple[float, float]]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 10:
        raise ValueError(
            "amplitudes must be 10 comma-separated reals (re1,im1,...,re5,im5)"
        )
    values = [float(p) for p in parts]
    return [(values[2 * i], values[2 * i + 1]) for i in range(5)]


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def _parse_sweep_entry(text: str) -> tuple[str, tuple[float, ...]]:
    name, _, values = text.partition("=")
    name = name.strip()
    if not values:
        raise ValueError(f"sweep entry must look like name=v1,v2,..., got {text!r}")
    return name, tuple(float(v) for v in values.split(","))


def _load_config(path: str) -> dict:
    """Flat key=value file; '#' starts a comment; keys match the flag names."""
    options: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            # sweep entries themselves contain '='; recognize them first
            if key == "sweep":
                entries = [e.strip() for e in value.split(";") if e.strip()]
                options["sweep"] = entries
                continue
            key = _CONFIG_KEY_ALIASES.get(key, key)
            if not sep or key not in _VALID_KEYS:
                raise ValueError(f"{path}:{lineno}: cannot parse config line {raw.rstrip()!r}")
            options[key] = value.strip()
    return options


_STRING_PARSERS = {
    "delta": float,
    "omega0": float,
    "upsilon": float,
    "tmax": float,
    "samples": int,
    "lambdas": _parse_triple,
    "gammas": _parse_triple,
    "amplitudes": _parse_amplitudes,
    "oracle": _parse_bool,
}


def _merge_options(args: argparse.Namespace) -> dict:
    """Config-file values with explicit flags on top; parse config strings."""
    options: dict = {}
    if getattr(args, "config", None):
        for key, value in _load_config(args.config).items():
            if key == "sweep":
                options[key] = [_parse_sweep_entry(e) for e in value]
            elif key in _STRING_PARSERS:
                options[key] = _STRING_PARSERS[key](value)
            else:
                options[key] = value
    for key, value in vars(args).items():
        if key in ("command", "config") or value is None:
            continue
        options[key] = value
    if isinstance(options.get("sweep"), list) and options["sweep"] and isinstance(
        options["sweep"][0], str
    ):
        options["sweep"] = [_parse_sweep_entry(e) for e in options["sweep"]]
    return options


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", choices=("fig2", "fig3"), default=None)
    parser.add_argument(
        "--state", choices=("psi+", "psi-", "phi+", "phi-", "custom"), default=None
    )
    parser.add_argument("--delta", type=float, default=None)
    parser.add_argument("--lambda", dest="lambdas", type=_parse_triple, default=None,
                        metavar="L1,L2,L3")
    parser.add_argument("--gamma", dest="gammas", type=_parse_triple, default=None,
                        metavar="G1,G2,G3")
    parser.add_argument("--upsilon", type=float, default=None)
    parser.add_argument("--omega0", type=float, default=None)
    parser.add_argument("--tmax", type=float, default=None)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--amplitudes", type=_parse_amplitudes, default=None,
                        metavar="RE1,IM1,...,RE5,IM5")
    parser.add_argument("--format", choices=("csv", "json"), default=None)
    parser.add_argument("--out", default=None)
    parser.add_argument("--oracle", action="store_true", default=None)
    parser.add_argument("--config", default=None, help="flat key=value config file")
    parser.add_argument("--server", default=None, help="delegate to a running service URL")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paritynet",
        description="Entanglement transfer in a parity-deformed cavity network",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="simulate one scenario and write a time series")
    _add_common_flags(run_p)
    sweep_p = sub.add_parser("sweep", help="run a parameter grid, one file per point")
    _add_common_flags(sweep_p)
    sweep_p.add_argument(
        "--sweep",
        action="append",
        type=_parse_sweep_entry,
        default=None,
        metavar="NAME=V1,V2,...",
        help="sweep a parameter over listed values; repeatable",
    )
    verify_p = sub.add_parser("verify", help="closed form vs integrator cross-check")
    _add_common_flags(verify_p)
    return parser


def _request_fields(options: dict) -> dict:
    fields = {}
    for key in ("preset", "state", "delta", "omega0", "upsilon", "lambdas",
                "gammas", "tmax", "samples", "amplitudes"):
        if key in options:
            fields[key] = options[key]
    if options.get("oracle"):
        fields["oracle"] = True
    return fields


def _series_from_payload(payload: dict) -> TimeSeries:
    if list(payload["columns"]) != list(COLUMNS):
        raise ValueError("server returned an unexpected column set")
    return TimeSeries(rows=np.asarray(payload["rows"], dtype=float),
                      metadata=payload["metadata"])


def _print_run_summary(series: TimeSeries, path: str | None) -> None:
    peak = float(series.column("concurrence").max())
    print(f"samples: {series.rows.shape[0]}, peak concurrence: {peak:.6f}")
    if "oracle_max_deviation" in series.metadata:
        print(f"oracle max deviation: {series.metadata['oracle_max_deviation']:.3e}")
    if path is not None:
        print(f"wrote {path}")


def _print_verify_report(report: VerifyResponse) -> None:
    def tag(ok: bool) -> str:
        return "PASS" if ok else "FAIL"

    print(f"oracle max deviation: {report.max_deviation:.3e} "
          f"(threshold {report.threshold:.0e}): {tag(report.oracle_ok)}")
    print(f"undeformed-limit Hamiltonian reduction: {tag(report.reduction_ok)}")
    print(f"max trace error: {report.max_trace_error:.3e}")
    print(f"max hermiticity error: {report.max_hermiticity_error:.3e}")
    print(f"min eigenvalue: {report.min_eigenvalue:.3e}")
    print(f"verify: {tag(report.passed)}")


def _cmd_run(options: dict) -> int:
    request = RunRequest(**_request_fields(options))
    out = options.get("out")
    fmt = options.get("format", "csv")
    if options.get("server"):
        payload = _post(options["server"], "/run", request.model_dump(mode="json"))
        series = _series_from_payload(payload)
        if out is not None:
            write_series(series, out, fmt)
    else:
        config = RunConfig(
            scenario=resolve_scenario(request),
            output_path=out,
            output_format=fmt,
            oracle_check=request.oracle,
        )
        series = run(config)
    _print_run_summary(series, out)
    return EXIT_OK


def _cmd_sweep(options: dict) -> int:
    grid_entries = options.get("sweep")
    if not grid_entries:
        raise ValueError("sweep requires at least one --sweep NAME=V1,V2,... entry")
    grid = {name: list(values) for name, values in grid_entries}
    request = SweepRequest(grid=grid, **_request_fields(options))
    out = options.get("out")
    fmt = options.get("format", "csv")
    if options.get("server"):
        payload = _post(options["server"], "/sweep", request.model_dump(mode="json"))
        series_list = [_series_from_payload(p) for p in payload["series"]]
        if out is not None:
            for series in series_list:
                name = f"run_{coord_tag(series.metadata['sweep_coords'])}.{fmt}"
                write_series(series, f"{out.rstrip('/')}/{name}", fmt)
    else:
        config = RunConfig(
            scenario=resolve_scenario(request),
            sweep=tuple((name, tuple(values)) for name, values in grid.items()),
            output_path=out,
            output_format=fmt,
            oracle_check=request.oracle,
        )
        series_list = sweep(config)
    print(f"swept {len(series_list)} points" + (f", wrote {out}" if out else ""))
    return EXIT_OK


def _cmd_verify(options: dict) -> int:
    request = VerifyRequest(**_request_fields(options))
    if options.get("server"):
        payload = _post(options["server"], "/verify", request.model_dump(mode="json"))
        report = VerifyResponse(**payload)
    else:
        config = RunConfig(scenario=resolve_scenario(request), oracle_dt=request.oracle_dt)
        report = VerifyResponse.from_report(verify(config))
    _print_verify_report(report)
    return EXIT_OK if report.passed else EXIT_ORACLE


def _post(server: str, path: str, body: dict) -> dict:
    import httpx

    response = httpx.post(server.rstrip("/") + path, json=body, timeout=600.0)
    if response.status_code == 422:
        raise ValueError(response.json().get("detail", "validation error"))
    if response.status_code == 500:
        raise OracleDeviationError(response.json().get("detail", "oracle deviation"))
    response.raise_for_status()
    return response.json()


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        # argparse exits on bad flags; fold that into the return-code contract
        # (values starting with '-' need the --flag=value form)
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code else EXIT_OK
    try:
        options = _merge_options(args)
        if args.command == "run":
            return _cmd_run(options)
        if args.command == "sweep":
            return _cmd_sweep(options)
        return _cmd_verify(options)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OracleDeviationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
