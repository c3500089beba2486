"""Explicit C, P and T operators and the identities that tie them together.

The C operator is the signed spectral sum  sum_n (-1)^n |psi_n><psi_n*|
over the bilinear outer products; on each 2x2 block it evaluates to

    [[i tan(phi), sec(phi)],
     [sec(phi),  -i tan(phi)]]

and every real level contributes +1 on the diagonal.  Parity is recovered
from C through the *Hermitian* Gram matrix G = sum_n |psi_n><psi_n| of the
eigenvectors as P = G^{-1} C, which collapses to the block-exchange matrix
(an anti-diagonal swap per 2x2 block, +1 per level).  Time reversal is the
antilinear map T = I K with K entrywise conjugation.

On top of the operators this module provides the commutation residuals
([H, C], antilinear [H, P K], the full C-P-T conjugation identity) and the
matrix continued fraction F = C / (beta + C / (beta + ...)), a rational
function of C that inherits every commutation relation C satisfies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ccs import _check_unbroken, ccs_expectation, outer
from .linalg import SingularMatrixError, as_cmatrix, frob_norm, max_abs, mat_inverse
from .model import HamiltonianSpec, block_offsets, dimension
from .spectra import BlockSpectrum

__all__ = [
    "AntilinearOperator",
    "OperatorSet",
    "CFracConfig",
    "build_C",
    "build_P",
    "parity_matrix",
    "build_T",
    "build_operators",
    "commutator_norm",
    "antilinear_commutator_norm",
    "verify_cpt",
    "c_expectations",
    "cfrac_scalar",
    "cfrac_F",
]


@dataclass(frozen=True)
class AntilinearOperator:
    """A map v -> A conj(v): matrix part ``matrix`` composed with conjugation.

    With ``conjugates=False`` the operator degenerates to the plain linear
    map ``matrix``.  Conjugation is an involution, so composing two
    conjugating operators yields a linear one.
    """

    matrix: np.ndarray
    conjugates: bool = True

    def __post_init__(self):
        m = as_cmatrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"operator matrix must be square, got {m.shape}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def apply(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.complex128)
        return self.matrix @ (np.conj(v) if self.conjugates else v)

    def compose(self, other: "AntilinearOperator") -> "AntilinearOperator":
        """self after other; K A K = conj(A) turns two conjugations linear."""
        right = np.conj(other.matrix) if self.conjugates else other.matrix
        return AntilinearOperator(self.matrix @ right, self.conjugates != other.conjugates)


@dataclass(frozen=True)
class OperatorSet:
    """The C, P, T triple of one all-unbroken system."""

    C: np.ndarray
    P: np.ndarray
    T: AntilinearOperator


@dataclass(frozen=True)
class CFracConfig:
    """Nesting parameters of the continued-fraction symmetry."""

    beta: float = 2.0
    depth: int = 11

    def __post_init__(self):
        if not np.isfinite(self.beta):
            raise ValueError(f"beta must be finite, got {self.beta!r}")
        if self.depth < 1:
            raise ValueError(f"depth must be >= 1, got {self.depth!r}")


def build_C(spectra: Sequence[BlockSpectrum]) -> np.ndarray:
    """Signed spectral sum  sum_n sign_n |psi_n><psi_n*|  (involutory)."""
    n = _check_unbroken(list(spectra), "build_C")
    out = np.zeros((n, n), dtype=np.complex128)
    for bs in spectra:
        for pair in bs.pairs:
            out += pair.sign_index * outer(pair.vector, pair.vector)
    return out


def build_P(spectra: Sequence[BlockSpectrum]) -> np.ndarray:
    """Parity from the Gram-inverse route P = G^{-1} C.

    G is the *Hermitian* Gram matrix sum_n |psi_n><psi_n| (conjugating
    bra), the one choice under which the product collapses to the real
    block-exchange matrix.
    """
    spectra = list(spectra)
    n = _check_unbroken(spectra, "build_P")
    gram = np.zeros((n, n), dtype=np.complex128)
    for bs in spectra:
        for pair in bs.pairs:
            gram += np.outer(pair.vector, np.conj(pair.vector))
    return mat_inverse(gram) @ build_C(spectra)


def parity_matrix(spec: HamiltonianSpec) -> np.ndarray:
    """Structural parity: anti-diagonal exchange per 2x2 block, +1 per level.

    Unlike :func:`build_P` this needs no spectral data, so it is available
    in every phase; on all-unbroken systems the two agree.
    """
    n = dimension(spec)
    out = np.zeros((n, n), dtype=np.complex128)
    for start, width in block_offsets(spec):
        if width == 2:
            out[start, start + 1] = 1.0
            out[start + 1, start] = 1.0
        else:
            out[start, start] = 1.0
    return out


def build_T(spec: HamiltonianSpec) -> AntilinearOperator:
    """Time reversal: identity matrix part composed with conjugation."""
    return AntilinearOperator(np.eye(dimension(spec), dtype=np.complex128), True)


def build_operators(
    spec: HamiltonianSpec, spectra: Sequence[BlockSpectrum]
) -> OperatorSet:
    """Bundle C, P, T for an all-unbroken system."""
    return OperatorSet(C=build_C(spectra), P=build_P(spectra), T=build_T(spec))


def commutator_norm(h, m) -> float:
    """Frobenius norm of H M - M H."""
    h = as_cmatrix(h)
    m = as_cmatrix(m)
    if h.shape != m.shape or h.shape[0] != h.shape[1]:
        raise ValueError(f"need equal square shapes, got {h.shape} and {m.shape}")
    return frob_norm(h @ m - m @ h)


def antilinear_commutator_norm(h, op: AntilinearOperator) -> float:
    """Commutation residual of H with A K:  ||H A - A conj(H)||_F.

    For a non-conjugating operator this reduces to the plain commutator.
    """
    h = as_cmatrix(h)
    if h.shape != op.matrix.shape:
        raise ValueError(f"dimension mismatch: {h.shape} vs {op.matrix.shape}")
    if not op.conjugates:
        return commutator_norm(h, op.matrix)
    return frob_norm(h @ op.matrix - op.matrix @ np.conj(h))


def verify_cpt(h, ops: OperatorSet) -> float:
    """Max-norm distance of T^{-1} P^{-1} C^{-1} H C P T from H.

    The antilinear similarity by T = A K acts on a linear map M as
    conj(A^{-1} M A), so with A = I the full conjugation chain is
    conj(P^{-1} C^{-1} H C P).
    """
    h = as_cmatrix(h)
    inner = mat_inverse(ops.C) @ h @ ops.C
    mid = mat_inverse(ops.P) @ inner @ ops.P
    a = ops.T.matrix
    moved = mat_inverse(a) @ mid @ a
    if ops.T.conjugates:
        moved = np.conj(moved)
    return max_abs(moved - h)


def c_expectations(
    spectra: Sequence[BlockSpectrum], c_matrix
) -> list[tuple[str, complex]]:
    """Bilinear diagonal elements <psi_n*| C |psi_n>, labelled per pair.

    Each comes out equal to the pair's sign index (+1 or -1).  Labels are
    ``block<id>+`` / ``block<id>-``.
    """
    c_matrix = as_cmatrix(c_matrix)
    out = []
    for bs in spectra:
        for pair in bs.pairs:
            label = f"block{bs.block_id}{'+' if pair.sign_index > 0 else '-'}"
            out.append((label, ccs_expectation(pair.vector, c_matrix, pair.vector)))
    return out


# Poles of the scalar continued fraction are detected relative to this scale.
_POLE_RTOL = 1e-12


def cfrac_scalar(lam: float, beta: float, depth: int) -> float:
    """Scalar continued fraction f_0 = lam, f_{k+1} = lam / (beta + f_k).

    This is the eigenvalue the matrix continued fraction takes on an
    eigenspace of C with eigenvalue ``lam``.

    Raises
    ------
    SingularMatrixError
        If any denominator beta + f_k lands on a pole.
    """
    guard = _POLE_RTOL * max(1.0, abs(beta))
    f = lam
    for _ in range(depth):
        denom = beta + f
        if abs(denom) <= guard:
            raise SingularMatrixError(
                f"continued fraction pole: beta + f = {denom:.3e} at eigenvalue {lam:+g}"
            )
        f = lam / denom
    return f


def cfrac_F(c_matrix, config: CFracConfig) -> np.ndarray:
    """Matrix continued fraction F_0 = C, F_{k+1} = C (beta I + F_k)^{-1}.

    Expects an involutory C (spectrum {+1, -1}); the scalar recursion is
    run at both eigenvalues first, so a pole raises before any matrix
    inversion is attempted.  The result is a rational function of C and
    therefore commutes with everything C commutes with.
    """
    c_matrix = as_cmatrix(c_matrix)
    if c_matrix.shape[0] != c_matrix.shape[1]:
        raise ValueError(f"C must be square, got {c_matrix.shape}")
    for lam in (1.0, -1.0):
        cfrac_scalar(lam, config.beta, config.depth)
    eye = np.eye(c_matrix.shape[0], dtype=np.complex128)
    f = c_matrix.copy()
    for _ in range(config.depth):
        f = c_matrix @ mat_inverse(config.beta * eye + f)
    return f
