"""Thin wrappers around the dense linear-algebra kernels.

Everything downstream (denominator solves, pencil eigenproblems, residue
systems) goes through these four routines so that error mapping and rank
policy live in one place.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
import scipy.linalg as sla

from .errors import AllZero, ConvergenceFailure, NonFinite, RankDeficient

#: Relative threshold below which a triangular pivot counts as a rank drop.
DEFAULT_RANK_RTOL = 1e-14


class SvdResult(NamedTuple):
    """Full singular value decomposition A = U @ diag(sigma) @ Vh.

    ``sigma`` is descending and has length min(A.shape); ``U`` and ``Vh``
    are square unitary matrices, so rows of ``Vh`` (the conjugate
    transpose of V) are directly addressable.
    """

    U: np.ndarray
    sigma: np.ndarray
    Vh: np.ndarray


def svd(A) -> SvdResult:
    """Full SVD with input checking.

    Raises NonFinite for NaN/inf entries and ConvergenceFailure if the
    backend does not converge.
    """
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.size == 0:
        raise ValueError(f"need a non-empty 2-D matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NonFinite("matrix contains non-finite entries")
    try:
        U, sigma, Vh = np.linalg.svd(A, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"SVD did not converge: {exc}") from exc
    return SvdResult(U, sigma, Vh)


def eigenvalues(A) -> np.ndarray:
    """Eigenvalues of a square matrix, no particular order guaranteed."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.size == 0:
        raise ValueError(f"need a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NonFinite("matrix contains non-finite entries")
    try:
        return np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigenvalue iteration failed: {exc}") from exc


def qr_solve(A, B, rtol: float = DEFAULT_RANK_RTOL) -> np.ndarray:
    """Least-squares solve of A X = B via economy QR and back substitution.

    Parameters
    ----------
    A : array_like, shape (p, q) with p >= q
        Coefficient matrix.
    B : array_like
        Right-hand side, vector or matrix with p rows.
    rtol : float, optional
        Declare RankDeficient when min |R_ii| < rtol * max |R_jj|.
        Pass 0 to skip the check entirely.

    Returns
    -------
    numpy.ndarray
        The minimizer of ||A X - B||_2, same trailing shape as B.
    """
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.ndim != 2 or A.shape[0] < A.shape[1] or A.shape[1] == 0:
        raise ValueError(f"need p >= q >= 1, got shape {A.shape}")
    if B.shape[0] != A.shape[0]:
        raise ValueError(f"rhs has {B.shape[0]} rows, expected {A.shape[0]}")
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(B))):
        raise NonFinite("least-squares system contains non-finite entries")
    Q, R = sla.qr(A, mode="economic")
    diag = np.abs(np.diag(R))
    if rtol > 0 and diag.min() < rtol * diag.max():
        raise RankDeficient(
            f"triangular factor has pivot ratio {diag.min() / max(diag.max(), 1e-300):.3e}"
            f" below rtol={rtol:.1e}"
        )
    try:
        return sla.solve_triangular(R, Q.conj().T @ B)
    except sla.LinAlgError as exc:  # exactly-zero pivot with rtol=0
        raise RankDeficient(f"triangular solve hit a zero pivot: {exc}") from exc


def polynomial_roots(coeffs) -> np.ndarray:
    """Roots of a polynomial given lowest-order-first coefficients.

    Leading (highest-order) exact zeros are stripped before the
    companion-matrix solve.  The identically-zero polynomial raises
    AllZero; degree-0 polynomials have no roots.
    """
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if c.size == 0:
        raise ValueError("empty coefficient array")
    if not np.all(np.isfinite(c)):
        raise NonFinite("polynomial coefficients must be finite")
    c = np.trim_zeros(c, "b")
    if c.size == 0:
        raise AllZero("the zero polynomial has every point as a root")
    if c.size == 1:
        return np.array([], dtype=complex)
    return np.polynomial.polynomial.polyroots(c)
