"""Bilinear (complex-conjugate-space) pairing and the identities it induces.

The pairing used for all eigenvector algebra in this package is the plain
bilinear sum

    <u*||v> = sum_i u_i v_i

with *no* conjugation on the bra side: the bra of a ket is its transpose.
Under this pairing the closed-form eigenvectors of unbroken blocks are an
orthonormal family even though the Hamiltonian is not Hermitian, and the
usual spectral identities of Hermitian quantum mechanics hold verbatim:
orthonormality, energy expectation, spectral reconstruction, completeness.
Self-orthogonal vectors such as (1, i) exist in this geometry, which is why
broken-phase blocks (whose coalescing eigenvectors are exactly of that
kind) are refused rather than paired.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_cmatrix, as_cvector
from .spectra import BlockSpectrum, NotUnbrokenError, Phase

__all__ = [
    "CCSBra",
    "ccs_inner",
    "ccs_expectation",
    "outer",
    "reconstruct",
    "completeness",
]


@dataclass(frozen=True)
class CCSBra:
    """Row functional u -> sum_i row_i u_i (the transpose of a ket)."""

    row: np.ndarray

    def __post_init__(self):
        row = as_cvector(self.row)
        row.flags.writeable = False
        object.__setattr__(self, "row", row)

    def pair(self, ket) -> complex:
        return ccs_inner(self.row, ket)


def ccs_inner(u, v) -> complex:
    """Bilinear pairing sum_i u_i v_i (symmetric, no conjugation)."""
    u = as_cvector(u)
    v = as_cvector(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return complex(np.dot(u, v))


def ccs_expectation(u, matrix, v) -> complex:
    """Bilinear matrix element <u*| M |v> = ccs_inner(u, M v)."""
    matrix = as_cmatrix(matrix)
    v = as_cvector(v)
    if matrix.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {matrix.shape} @ {v.shape}")
    return ccs_inner(u, matrix @ v)


def outer(u, v) -> np.ndarray:
    """Rank-1 matrix |u><v*| with entries u_i v_j (no conjugation)."""
    return np.outer(as_cvector(u), as_cvector(v))


def _check_unbroken(spectra: list[BlockSpectrum], what: str) -> int:
    """Validate phases and a consistent embedding dimension; return it."""
    dims = set()
    for bs in spectra:
        if bs.phase is not Phase.UNBROKEN:
            raise NotUnbrokenError(
                f"{what} needs all-unbroken spectra; block {bs.block_id} "
                f"is {bs.phase.value}"
            )
        for pair in bs.pairs:
            dims.add(pair.vector.shape[0])
    if len(dims) != 1:
        raise ValueError(f"eigenvectors have inconsistent dimensions: {sorted(dims)}")
    return dims.pop()


def reconstruct(spectra: list[BlockSpectrum]) -> np.ndarray:
    """Spectral sum  sum_n E_n |psi_n><psi_n*|  (equals the Hamiltonian)."""
    n = _check_unbroken(spectra, "reconstruct")
    out = np.zeros((n, n), dtype=np.complex128)
    for bs in spectra:
        for pair in bs.pairs:
            out += pair.value * outer(pair.vector, pair.vector)
    return out


def completeness(spectra: list[BlockSpectrum]) -> np.ndarray:
    """Resolution of the identity  sum_n |psi_n><psi_n*|."""
    n = _check_unbroken(spectra, "completeness")
    out = np.zeros((n, n), dtype=np.complex128)
    for bs in spectra:
        for pair in bs.pairs:
            out += outer(pair.vector, pair.vector)
    return out
