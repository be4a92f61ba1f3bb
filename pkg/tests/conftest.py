"""Shared test helpers: random parameter sets, a Wootters concurrence oracle,
and the acceptance-criteria summary printed at the end of the run."""

from __future__ import annotations

import numpy as np

from paritynet import NetworkParams

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def record_criterion(number: int, name: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((number, name, bool(ok), detail))
    line = f"criterion {number:02d} {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        line = f"criterion {number:02d} {name}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


def random_params(rng: np.random.Generator) -> NetworkParams:
    """A random valid parameter set covering deformed and undeformed regimes."""
    omega0 = rng.uniform(0.4, 1.2)
    delta = rng.uniform(-0.3, 0.3)
    return NetworkParams(
        omega0=omega0,
        omega_c=omega0 + delta,
        upsilon=rng.uniform(0.0, 1.0),
        lambda1=rng.uniform(-0.49, 0.3),
        lambda2=rng.uniform(-0.49, 0.3),
        lambda3=rng.uniform(-0.49, 0.3),
        gamma1=rng.uniform(0.0, 0.3),
        gamma2=rng.uniform(0.0, 0.3),
        gamma3=rng.uniform(0.0, 0.3),
    )


_SY_SY = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def wootters_concurrence(rho2q: np.ndarray) -> float:
    """Full Wootters formula on a 4x4 two-qubit density matrix."""
    rho_tilde = _SY_SY @ rho2q.conj() @ _SY_SY
    eigs = np.linalg.eigvals(rho2q @ rho_tilde)
    roots = np.sqrt(np.clip(eigs.real, 0.0, None))
    roots.sort()
    return max(0.0, roots[-1] - roots[-3::-1].sum())


def two_qubit_matrix(state) -> np.ndarray:
    """Dense 4x4 matrix, basis |ee>, |eg>, |ge>, |gg>, from the r-parameters."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[1, 1] = state.r1
    rho[2, 2] = state.r2
    rho[3, 3] = state.r3
    rho[1, 2] = state.r4
    rho[2, 1] = np.conj(state.r4)
    return rho
