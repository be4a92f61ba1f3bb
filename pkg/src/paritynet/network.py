"""Single-excitation Hamiltonian of the qubit-cavity-fiber network and its
dressed-state eigendecomposition.

Bare basis (subsystem order qubit-1, qubit-2, cavity-1, cavity-2, fiber):

    |1> = |eg000>   qubit-1 excited
    |2> = |gg100>   cavity-1 photon
    |3> = |gg001>   fiber photon
    |4> = |gg010>   cavity-2 photon
    |5> = |ge000>   qubit-2 excited
    |6> = |gg000>   vacuum

With Z = (w_c/2) * sum_i (2 l_i + 1) and g_i = sqrt(2 l_i + 1), the 5x5
excited block has diagonal (Z, Z+D, Z+D, Z+D, Z) for detuning D = w_c - w_0,
couplings H12 = eta g1, H54 = eta g2, H23 = ups g1 g3, H43 = ups g2 g3, and
the vacuum sits at Z - w_0.  The same matrix is recoverable by building the
full Hamiltonian on the 2x2x3x3x3 product space from the deformed operator
matrices and projecting onto the bare vectors; `project_single_excitation`
provides that construction as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DeformedModeSpec, annihilator_matrix, symmetric_product_diag

#: Human-readable labels of the bare basis, index 0..5 for |1>..|6>.
BARE_LABELS = ("eg000", "gg100", "gg001", "gg010", "ge000", "gg000")

# Subsystem dimensions in bare ordering: qubit-1, qubit-2, cavity-1, cavity-2, fiber.
_DIMS = (2, 2, 3, 3, 3)


@dataclass(frozen=True)
class NetworkParams:
    """Physical parameters of the network, in units of the atom-cavity
    coupling eta (kept explicit so nothing silently assumes eta = 1)."""

    omega0: float
    omega_c: float
    upsilon: float
    lambda1: float
    lambda2: float
    lambda3: float
    gamma1: float
    gamma2: float
    gamma3: float
    eta: float = 1.0

    def __post_init__(self) -> None:
        for name in ("lambda1", "lambda2", "lambda3"):
            if not getattr(self, name) > -0.5:
                raise ValueError(f"{name} must exceed -1/2, got {getattr(self, name)}")
        for name in ("gamma1", "gamma2", "gamma3"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        if not self.eta > 0:
            raise ValueError(f"eta must be > 0, got {self.eta}")
        if self.upsilon < 0:
            raise ValueError(f"upsilon must be >= 0, got {self.upsilon}")
        if not self.omega0 > 0:
            raise ValueError(f"omega0 must be > 0, got {self.omega0}")
        if not self.omega_c > 0:
            raise ValueError(f"omega_c must be > 0, got {self.omega_c}")

    @property
    def delta(self) -> float:
        """Atom-field detuning w_c - w_0 (derived, never stored)."""
        return self.omega_c - self.omega0

    @property
    def lambdas(self) -> tuple[float, float, float]:
        return (self.lambda1, self.lambda2, self.lambda3)

    @property
    def gammas(self) -> tuple[float, float, float]:
        return (self.gamma1, self.gamma2, self.gamma3)


@dataclass(frozen=True)
class DressedBasis:
    """Eigendecomposition of the excited block.

    Row n of C holds the bare-basis coefficients (c_n1 ... c_n5) of the
    dressed state |phi_n>; eps holds the matching eigenvalues in ascending
    order.  Ctilde is the matrix inverse of C (equal to C.T for the real
    symmetric block; both facts are verified at construction).  The vacuum
    |phi_6> = |6> with energy ground_energy completes the basis.
    """

    eps: np.ndarray
    C: np.ndarray
    Ctilde: np.ndarray
    ground_energy: float


def assemble_hamiltonian(params: NetworkParams) -> tuple[np.ndarray, float]:
    """Excited-block Hamiltonian and the vacuum energy.

    Matrix elements follow from the deformed ladder actions restricted to the
    single-excitation manifold.
    """
    g1, g2, g3 = (np.sqrt(2 * lam + 1) for lam in params.lambdas)
    z = (params.omega_c / 2) * sum(2 * lam + 1 for lam in params.lambdas)
    delta = params.delta
    h = np.zeros((5, 5))
    h[0, 0] = h[4, 4] = z
    h[1, 1] = h[2, 2] = h[3, 3] = z + delta
    h[0, 1] = h[1, 0] = params.eta * g1
    h[4, 3] = h[3, 4] = params.eta * g2
    h[1, 2] = h[2, 1] = params.upsilon * g1 * g3
    h[3, 2] = h[2, 3] = params.upsilon * g2 * g3
    return h, z - params.omega0


def _embed(op: np.ndarray, slot: int) -> np.ndarray:
    """Lift a single-subsystem operator to the full product space."""
    out = np.ones((1, 1))
    for i, d in enumerate(_DIMS):
        out = np.kron(out, op if i == slot else np.eye(d))
    return out


def _bare_indices() -> list[int]:
    """Product-space indices of |1>..|6> (row-major, qubit |g> = 0, |e> = 1)."""

    def idx(q1: int, q2: int, c1: int, c2: int, f: int) -> int:
        return (((q1 * 2 + q2) * 3 + c1) * 3 + c2) * 3 + f

    return [
        idx(1, 0, 0, 0, 0),
        idx(0, 0, 1, 0, 0),
        idx(0, 0, 0, 0, 1),
        idx(0, 0, 0, 1, 0),
        idx(0, 1, 0, 0, 0),
        idx(0, 0, 0, 0, 0),
    ]


def assemble_tensor_hamiltonian(params: NetworkParams) -> np.ndarray:
    """Full Hamiltonian on the 2x2x3x3x3 product space.

    Built term by term from the deformed operator matrices: atomic sigma_3
    terms, deformed free-field terms (w_c/2){a_i, a_i+}, the two deformed
    Jaynes-Cummings couplings, and the fiber hopping
    ups [a_3 (a_1+ + a_2+) + a_3+ (a_1 + a_2)].
    """
    sigma_m = np.array([[0.0, 1.0], [0.0, 0.0]])  # |g><e| in basis (|g>, |e>)
    sigma_3 = np.diag([-1.0, 1.0])
    specs = [DeformedModeSpec(lam, 3) for lam in params.lambdas]
    mode_ops = [annihilator_matrix(s) for s in specs]

    h = np.zeros((np.prod(_DIMS), np.prod(_DIMS)))
    h += (params.omega0 / 2) * (_embed(sigma_3, 0) + _embed(sigma_3, 1))
    for slot, spec in zip((2, 3, 4), specs):
        h += (params.omega_c / 2) * _embed(symmetric_product_diag(spec), slot)
    a1, a2, a3 = (_embed(op, slot) for op, slot in zip(mode_ops, (2, 3, 4)))
    sm1, sm2 = _embed(sigma_m, 0), _embed(sigma_m, 1)
    h += params.eta * (a1.T @ sm1 + a1 @ sm1.T)
    h += params.eta * (a2.T @ sm2 + a2 @ sm2.T)
    h += params.upsilon * (a3 @ (a1.T + a2.T) + a3.T @ (a1 + a2))
    return h


def project_single_excitation(h_full: np.ndarray) -> tuple[np.ndarray, float]:
    """Project the product-space Hamiltonian onto the bare basis.

    Returns the 5x5 excited block and the vacuum energy.  Raises if the
    Hamiltonian couples the single-excitation manifold to anything outside
    it, which would invalidate the block treatment.
    """
    idx = _bare_indices()
    block = h_full[np.ix_(idx[:5], idx[:5])]
    ground = float(h_full[idx[5], idx[5]])
    coupling_out = h_full[np.ix_(idx, [j for j in range(h_full.shape[0]) if j not in idx])]
    if np.abs(coupling_out).max() > 1e-12:
        raise ValueError("Hamiltonian does not conserve the excitation sector")
    return block, ground


def diagonalize(h_block: np.ndarray, ground_energy: float) -> DressedBasis:
    """Dressed basis of the excited block with a deterministic sign gauge.

    Eigenvalues ascend; each eigenvector is flipped so its largest-magnitude
    component is positive.  Ctilde is computed as a matrix inverse and then
    checked against the transpose, surfacing any loss of orthogonality
    instead of hiding it.
    """
    h_block = np.asarray(h_block, dtype=float)
    if not np.array_equal(h_block, h_block.T):
        raise ValueError("excited block must be exactly symmetric")
    eps, vecs = np.linalg.eigh(h_block)
    for n in range(5):
        pivot = np.argmax(np.abs(vecs[:, n]))
        if vecs[pivot, n] < 0:
            vecs[:, n] = -vecs[:, n]
    C = vecs.T
    residual = np.abs(h_block @ vecs - vecs * eps[None, :]).max()
    if residual > 1e-10:
        raise RuntimeError(f"eigenvector residual {residual:.3e} exceeds 1e-10")
    if np.abs(C @ C.T - np.eye(5)).max() > 1e-12:
        raise RuntimeError("eigenvector matrix lost orthogonality")
    Ctilde = np.linalg.inv(C)
    if np.abs(Ctilde - C.T).max() > 1e-10:
        raise RuntimeError("inverse of C deviates from its transpose")
    return DressedBasis(eps=eps, C=C, Ctilde=Ctilde, ground_energy=float(ground_energy))


def bare_to_dressed(amplitudes: np.ndarray, basis: DressedBasis) -> np.ndarray:
    """Bare amplitude vector (a_1 ... a_5) -> dressed amplitudes d_k = sum_n a_n ctilde_nk."""
    a = np.asarray(amplitudes, dtype=complex)
    if a.shape != (5,):
        raise ValueError(f"expected 5 amplitudes, got shape {a.shape}")
    return basis.Ctilde.T @ a


def dressed_to_bare(amplitudes: np.ndarray, basis: DressedBasis) -> np.ndarray:
    """Inverse transform of `bare_to_dressed`."""
    d = np.asarray(amplitudes, dtype=complex)
    if d.shape != (5,):
        raise ValueError(f"expected 5 amplitudes, got shape {d.shape}")
    return basis.C.T @ d
