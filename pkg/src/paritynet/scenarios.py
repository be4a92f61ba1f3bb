"""Initial states and parameter presets.

Two transfer scenarios are studied.  In the cavity-to-atoms scenario the two
cavity modes start in a Bell state (|gg100> +- |gg010>)/sqrt(2) and the
entanglement migrates onto the atoms.  In the local-pair scenario qubit-1
and cavity-1 start in a Bell state (|eg000> +- |gg100>)/sqrt(2) and the
entanglement is distributed to the remote qubit through the fiber.

The presets fig2 (cavity scenario: w_0 = 0.2, ups = 0.5) and fig3 (local-pair
scenario: w_0 = 0.4, ups = 10) fix lambda_i = -0.49 and gamma_i = 0.1 in
units of eta = 1; the uncontrolled comparison curves use the same preset with
lambda_i = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .network import DressedBasis, NetworkParams, bare_to_dressed

#: CLI state names -> scenario constructors (psi: cavity pair, phi: local pair).
STATE_NAMES = ("psi+", "psi-", "phi+", "phi-", "custom")


@dataclass(frozen=True)
class ScenarioConfig:
    """A single simulation: initial state, parameters, and sampling."""

    state: str
    params: NetworkParams
    t_max: float
    n_samples: int
    amplitudes: tuple[complex, ...] | None = None

    def __post_init__(self) -> None:
        if self.state not in STATE_NAMES:
            raise ValueError(f"unknown state {self.state!r}; expected one of {STATE_NAMES}")
        if self.state == "custom":
            if self.amplitudes is None or len(self.amplitudes) != 5:
                raise ValueError("custom state requires 5 amplitudes")
            norm = np.linalg.norm(np.asarray(self.amplitudes, dtype=complex))
            if abs(norm - 1.0) > 1e-12:
                raise ValueError(f"custom amplitudes must have unit norm, got {norm!r}")
        elif self.amplitudes is not None:
            raise ValueError("amplitudes are only accepted with state='custom'")
        if not self.t_max > 0:
            raise ValueError(f"t_max must be > 0, got {self.t_max}")
        if self.n_samples < 2:
            raise ValueError(f"n_samples must be >= 2, got {self.n_samples}")


def custom_pure_initial(amplitudes: np.ndarray, basis: DressedBasis) -> np.ndarray:
    """Pure single-excitation state from bare amplitudes (a_1 ... a_5)."""
    a = np.asarray(amplitudes, dtype=complex)
    if a.shape != (5,):
        raise ValueError(f"expected 5 amplitudes, got shape {a.shape}")
    norm = np.linalg.norm(a)
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"amplitudes must have unit norm, got {norm!r}")
    d = bare_to_dressed(a, basis)
    rho = np.zeros((6, 6), dtype=complex)
    rho[:5, :5] = np.outer(d, d.conj())
    return rho


def cavity_bell_initial(sign: int, basis: DressedBasis) -> np.ndarray:
    """Bell state of the two cavity modes, (|2> + sign |4>)/sqrt(2)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    s = 1 / np.sqrt(2)
    return custom_pure_initial(np.array([0, s, 0, sign * s, 0]), basis)


def atom_cavity_bell_initial(sign: int, basis: DressedBasis) -> np.ndarray:
    """Bell state of qubit-1 and cavity-1, (|1> + sign |2>)/sqrt(2)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    s = 1 / np.sqrt(2)
    return custom_pure_initial(np.array([s, sign * s, 0, 0, 0]), basis)


def initial_state_density(
    state: str, basis: DressedBasis, amplitudes: np.ndarray | None = None
) -> np.ndarray:
    """Initial density matrix for a named state (or 'custom' amplitudes)."""
    if state == "psi+":
        return cavity_bell_initial(+1, basis)
    if state == "psi-":
        return cavity_bell_initial(-1, basis)
    if state == "phi+":
        return atom_cavity_bell_initial(+1, basis)
    if state == "phi-":
        return atom_cavity_bell_initial(-1, basis)
    if state == "custom":
        if amplitudes is None:
            raise ValueError("custom state requires amplitudes")
        return custom_pure_initial(amplitudes, basis)
    raise ValueError(f"unknown state {state!r}; expected one of {STATE_NAMES}")


_PRESETS = {
    "fig2": dict(omega0=0.2, upsilon=0.5),
    "fig3": dict(omega0=0.4, upsilon=10.0),
}

#: Default sampling per preset: window long enough for the slow Rabi cycles,
#: dense enough to resolve the fastest phase differences.
PRESET_WINDOWS = {"fig2": 50.0, "fig3": 30.0}
DEFAULT_SAMPLES = 2001


def figure_preset(which: str, delta: float) -> NetworkParams:
    """Named parameter preset with the requested detuning (w_c = w_0 + delta)."""
    if which not in _PRESETS:
        raise ValueError(f"unknown preset {which!r}; expected one of {tuple(_PRESETS)}")
    base = _PRESETS[which]
    return NetworkParams(
        omega0=base["omega0"],
        omega_c=base["omega0"] + delta,
        upsilon=base["upsilon"],
        lambda1=-0.49,
        lambda2=-0.49,
        lambda3=-0.49,
        gamma1=0.1,
        gamma2=0.1,
        gamma3=0.1,
        eta=1.0,
    )


def uncontrolled(params: NetworkParams) -> NetworkParams:
    """Same network without deformation (lambda_i = 0): the standard
    Jaynes-Cummings comparison case."""
    return replace(params, lambda1=0.0, lambda2=0.0, lambda3=0.0)
