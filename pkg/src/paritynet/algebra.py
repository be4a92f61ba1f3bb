"""Truncated Fock-space matrices for the parity-deformed ladder operators.

The deformed annihilator acts on number states as

    a|2k>   = sqrt(2k)          |2k-1>
    a|2k+1> = sqrt(2k + 2l + 1) |2k>

with l > -1/2 the Wigner deformation parameter, and the creator is its
transpose.  Together with the parity operator R|k> = (-1)^k |k> they satisfy
[a, a+] = 1 + 2lR and {R, a} = {R, a+} = 0.  At l = 0 everything reduces to
the standard boson operators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DeformedModeSpec:
    """One deformed mode: Wigner parameter and Fock truncation dimension."""

    lam: float
    dim: int

    def __post_init__(self) -> None:
        if not self.lam > -0.5:
            raise ValueError(f"Wigner parameter must exceed -1/2, got {self.lam}")
        # dim >= 3 keeps the symmetric-product diagonal on |0>, |1> free of
        # truncation error (a a+ |1> needs |2>).
        if self.dim < 3:
            raise ValueError(f"Fock dimension must be >= 3, got {self.dim}")


def annihilator_matrix(spec: DeformedModeSpec) -> np.ndarray:
    """Deformed annihilator on the truncated Fock space."""
    a = np.zeros((spec.dim, spec.dim))
    for k in range(1, spec.dim):
        if k % 2 == 0:
            a[k - 1, k] = np.sqrt(k)
        else:
            a[k - 1, k] = np.sqrt(k - 1 + 2 * spec.lam + 1)
    return a


def creator_matrix(spec: DeformedModeSpec) -> np.ndarray:
    """Deformed creator; exact transpose of the annihilator."""
    return annihilator_matrix(spec).T


def parity_matrix(dim: int) -> np.ndarray:
    """Parity operator R = diag(+1, -1, +1, ...)."""
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    return np.diag([(-1.0) ** k for k in range(dim)])


def symmetric_product_diag(spec: DeformedModeSpec) -> np.ndarray:
    """Diagonal of {a, a+} = a a+ + a+ a, computed analytically.

    Entry 4k + 2l + 1 at even index 2k and 4k + 2l + 3 at odd index 2k + 1.
    The analytic form is used because the matrix product of truncated
    operators corrupts the top index.
    """
    diag = np.empty(spec.dim)
    for n in range(spec.dim):
        k, odd = divmod(n, 2)
        diag[n] = 4 * k + 2 * spec.lam + (3 if odd else 1)
    return np.diag(diag)
