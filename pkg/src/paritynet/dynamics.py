"""Dissipative evolution in the dressed basis.

At zero temperature each dressed excited state |phi_n> decays to the vacuum
|phi_6> through three photon-loss channels (cavity-1, cavity-2, fiber) with
rank-one jump operators carrying the deformed amplitudes sqrt(2 l_i + 1).
The resulting master equation decouples element by element and integrates in
closed form:

    rho_nn(t) = rho_nn(0) exp(-g_nn t)
    rho_nm(t) = rho_nm(0) exp{[2i(eps_m - eps_n) - (g_nn + g_mm)] t / 2}
    rho_66(t) = rho_66(0) + sum_n rho_nn(0) [1 - exp(-g_nn t)]
    rho_6n(t) = rho_6n(0)

`integrate_oracle` integrates the same master equation numerically from the
jump operators alone (classical fixed-step fourth-order scheme) and exists
purely to cross-check the closed form; the two share no formulas beyond the
Hamiltonian and the jump operators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import DressedBasis, NetworkParams


@dataclass(frozen=True)
class DecayRates:
    """Effective decay rates g_11 ... g_55 of the dressed excited states."""

    gnn: np.ndarray

    def __post_init__(self) -> None:
        if self.gnn.shape != (5,):
            raise ValueError(f"expected 5 rates, got shape {self.gnn.shape}")
        if np.any(self.gnn < 0):
            raise ValueError("decay rates must be nonnegative")


def decay_rates(basis: DressedBasis, params: NetworkParams) -> DecayRates:
    """g_nn = g1(2l1+1)|c_n2|^2 + g2(2l2+1)|c_n4|^2 + g3(2l3+1)|c_n3|^2.

    Bare columns map to loss channels as 2 -> cavity-1, 4 -> cavity-2,
    3 -> fiber.
    """
    c = basis.C
    g1, g2, g3 = params.gammas
    l1, l2, l3 = params.lambdas
    gnn = (
        g1 * (2 * l1 + 1) * c[:, 1] ** 2
        + g2 * (2 * l2 + 1) * c[:, 3] ** 2
        + g3 * (2 * l3 + 1) * c[:, 2] ** 2
    )
    return DecayRates(gnn=gnn)


def jump_operators(basis: DressedBasis, params: NetworkParams) -> list[np.ndarray]:
    """The fifteen rank-one jump operators |phi_6><phi_n| as 6x6 matrices.

    Channel i acting on dressed state n carries amplitude
    c_n(bare) * sqrt(2 l_i + 1); the overall rate gamma_i stays outside the
    operator (as in the master equation) and is folded in by the callers.
    """
    ops = []
    bare_col = {1: 1, 2: 3, 3: 2}  # channel -> bare column (cavity-1, cavity-2, fiber)
    for channel, lam in zip((1, 2, 3), params.lambdas):
        for n in range(5):
            op = np.zeros((6, 6))
            op[5, n] = basis.C[n, bare_col[channel]] * np.sqrt(2 * lam + 1)
            ops.append(op)
    return ops


def propagate_closed_form(
    rho0: np.ndarray, basis: DressedBasis, rates: DecayRates, t: float
) -> np.ndarray:
    """Evolve a 6x6 dressed-basis density matrix for a time t >= 0."""
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    rho0 = np.asarray(rho0, dtype=complex)
    if rho0.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got shape {rho0.shape}")
    eps, gnn = basis.eps, rates.gnn
    rho = rho0.copy()
    decay = np.exp(-gnn * t)
    phases = np.exp(
        (1j * (eps[None, :] - eps[:, None]) - (gnn[:, None] + gnn[None, :]) / 2) * t
    )
    rho[:5, :5] = rho0[:5, :5] * phases
    pops0 = rho0.diagonal()[:5].real
    rho[np.arange(5), np.arange(5)] = pops0 * decay
    rho[5, 5] = rho0[5, 5].real + np.sum(pops0 * (1 - decay))
    # ground-excited coherences are time-constant in this solution
    rho[5, :5] = rho0[5, :5]
    rho[:5, 5] = rho0[:5, 5]
    return rho


def liouvillian(basis: DressedBasis, params: NetworkParams) -> np.ndarray:
    """Generator of the master equation as a 36x36 matrix on vec(rho).

    Row-major vectorization: vec(A rho B) = (A kron B.T) vec(rho).  Assembled
    from the diagonal Hamiltonian and the jump operators only.
    """
    h = np.diag(np.concatenate([basis.eps, [basis.ground_energy]])).astype(complex)
    eye = np.eye(6)
    lv = -1j * (np.kron(h, eye) - np.kron(eye, h.T))
    gamma_of_channel = np.repeat(params.gammas, 5)
    for g, op in zip(gamma_of_channel, jump_operators(basis, params)):
        opdop = op.conj().T @ op
        lv += g * (
            np.kron(op, op.conj())
            - 0.5 * (np.kron(opdop, eye) + np.kron(eye, opdop.T))
        )
    return lv


def oracle_trajectory(
    rho0: np.ndarray,
    basis: DressedBasis,
    params: NetworkParams,
    times: np.ndarray,
    dt: float = 1e-3,
) -> np.ndarray:
    """Numerically integrate the master equation, sampling at `times`.

    Classical fixed-step fourth-order scheme on the linear system
    vec(rho)' = L vec(rho); for a linear generator the four stages reduce
    exactly to the degree-4 truncated exponential applied per step, which is
    what is iterated here.  Each inter-sample segment is covered by full dt
    steps plus one remainder step with the same polynomial, so the scheme
    stays deterministic for any sample grid.  Returns an array of shape
    (len(times), 6, 6).
    """
    if dt <= 0:
        raise ValueError(f"step must be > 0, got {dt}")
    times = np.asarray(times, dtype=float)
    if times.size == 0 or times[0] < 0 or np.any(np.diff(times) < 0):
        raise ValueError("sample times must be nondecreasing and start at t >= 0")
    rho0 = np.asarray(rho0, dtype=complex)
    if rho0.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got shape {rho0.shape}")
    lv = liouvillian(basis, params)

    def one_step(h: float) -> np.ndarray:
        hl = h * lv
        m = np.eye(36, dtype=complex)
        term = np.eye(36, dtype=complex)
        for order in (1, 2, 3, 4):
            term = term @ hl / order
            m = m + term
        return m

    step = one_step(dt)
    out = np.empty((times.size, 6, 6), dtype=complex)
    vec = rho0.reshape(36)
    now = 0.0
    for i, target in enumerate(times):
        span = target - now
        n_full = int(np.floor(span / dt + 1e-12))
        for _ in range(n_full):
            vec = step @ vec
        remainder = span - n_full * dt
        if remainder > 1e-12:
            vec = one_step(remainder) @ vec
        now = target
        out[i] = vec.reshape(6, 6)
    return out


def integrate_oracle(
    rho0: np.ndarray,
    basis: DressedBasis,
    params: NetworkParams,
    t: float,
    dt: float = 1e-3,
) -> np.ndarray:
    """Numerically integrate the master equation to a single time t."""
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    return oracle_trajectory(rho0, basis, params, np.array([t]), dt=dt)[0]


def assert_valid_state(rho: np.ndarray, atol: float = 1e-10) -> None:
    """Raise if rho is not a physical density matrix.

    Hermiticity and unit trace are held to 1e-12; the smallest eigenvalue may
    dip to -atol to allow for roundoff.
    """
    if np.abs(rho - rho.conj().T).max() > 1e-12:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > 1e-12 or abs(np.trace(rho).imag) > 1e-12:
        raise ValueError("density matrix trace differs from 1")
    if np.linalg.eigvalsh(rho).min() < -atol:
        raise ValueError("density matrix has a negative eigenvalue")
