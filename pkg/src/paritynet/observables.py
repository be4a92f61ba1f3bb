"""Reduction of the network state to the two atom qubits and diagnostics.

Within the single-excitation sector the reduced two-qubit matrix in the
basis (|ee>, |eg>, |ge>, |gg>) has zero |ee> population, populations
r1 = <eg|.|eg>, r2 = <ge|.|ge>, r3 = <gg|.|gg> and a single coherence
r4 = <eg|.|ge>.  Entanglement is measured by the concurrence, which for this
family of states collapses to 2 max{0, |r4|} (equal to the general two-qubit
eigenvalue formula, a fact exercised by the tests).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import DressedBasis


@dataclass(frozen=True)
class TwoQubitState:
    """Reduced atomic state: populations of |eg>, |ge>, |gg> plus the
    |eg><ge| coherence."""

    r1: float
    r2: float
    r3: float
    r4: complex


@dataclass(frozen=True)
class PopulationRecord:
    """Probability of the excitation residing in each subsystem."""

    p_qubit1: float
    p_qubit2: float
    p_cavity1: float
    p_cavity2: float
    p_fiber: float
    p_ground: float


def _bare_block(rho: np.ndarray, basis: DressedBasis) -> np.ndarray:
    """Excited 5x5 block of rho transformed from dressed to bare basis."""
    c = basis.C
    return c.T @ rho[:5, :5] @ c


def two_qubit_state(rho: np.ndarray, basis: DressedBasis) -> TwoQubitState:
    """Exact partial trace over the three field modes."""
    block = _bare_block(rho, basis)
    r1 = block[0, 0].real
    r2 = block[4, 4].real
    r3 = rho[5, 5].real + block[1, 1].real + block[2, 2].real + block[3, 3].real
    return TwoQubitState(r1=r1, r2=r2, r3=r3, r4=complex(block[0, 4]))


def concurrence(state: TwoQubitState) -> float:
    """Concurrence of the reduced two-qubit state: 2 max{0, |r4|}."""
    return 2.0 * max(0.0, abs(state.r4))


def mode_populations(rho: np.ndarray, basis: DressedBasis) -> PopulationRecord:
    """Bare-basis diagonal of rho, labeled by subsystem."""
    block = _bare_block(rho, basis)
    diag = block.diagonal().real
    return PopulationRecord(
        p_qubit1=diag[0],
        p_qubit2=diag[4],
        p_cavity1=diag[1],
        p_cavity2=diag[3],
        p_fiber=diag[2],
        p_ground=rho[5, 5].real,
    )
