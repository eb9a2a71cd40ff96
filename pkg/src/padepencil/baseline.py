"""Classical Pade solvers: direct linear system and SVD null vector.

Shared here are the two container types used by every solver:
:class:`Conformation` fixes the degree pair [m+k / m] (and the working
pencil size ``l``), and :class:`RationalApproximant` holds a numerator /
denominator coefficient pair.

A rational function with numerator degree m+k and denominator degree m
is determined by its first n = 2m+k+1 series coefficients.  The direct
method solves the m x m Toeplitz system

    sum_{i=1}^{m} b_i c_{m+k+1+r-i} = -c_{m+k+1+r},   r = 0..m-1

for b_1..b_m with b_0 = 1; the SVD method instead takes the null
direction of the m x (m+1) system that includes b_0 as an unknown, which
stays meaningful when the direct system is singular.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import Collapse, DegenerateError, InsufficientCoefficients, NonFinite
from .numerics import svd
from .series import PowerSeries


@dataclass(frozen=True)
class Conformation:
    """Degree selection [m+k / m] and working pencil size l.

    Parameters
    ----------
    m : int
        Denominator degree, >= 0.
    k : int
        Numerator-degree offset; the numerator has degree m + k, so
        k >= -m.
    l : int, optional
        Effective number of poles carried by the pencil solvers.
        Defaults to m; must satisfy 1 <= l <= m (0 when m = 0).
    """

    m: int
    k: int
    l: int = -1  # sentinel: replaced by m in __post_init__

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"denominator degree must be >= 0, got m={self.m}")
        if self.k < -self.m:
            raise ValueError(f"need k >= -m, got k={self.k} with m={self.m}")
        if self.l == -1:
            object.__setattr__(self, "l", self.m)
        if self.m == 0:
            if self.l != 0:
                raise ValueError(f"m=0 admits only l=0, got l={self.l}")
        elif not 1 <= self.l <= self.m:
            raise ValueError(f"need 1 <= l <= m={self.m}, got l={self.l}")

    @property
    def n(self) -> int:
        """Number of series coefficients consumed: 2m + k + 1."""
        return 2 * self.m + self.k + 1


@dataclass(frozen=True)
class RationalApproximant:
    """Numerator and denominator coefficients, lowest order first."""

    numer: np.ndarray
    denom: np.ndarray

    def __post_init__(self):
        for name in ("numer", "denom"):
            arr = np.atleast_1d(np.asarray(getattr(self, name), dtype=complex)).copy()
            if arr.ndim != 1 or arr.size == 0:
                raise ValueError(f"{name} must be a non-empty 1-D array")
            if not np.all(np.isfinite(arr)):
                raise NonFinite(f"{name} coefficients must be finite")
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)
        if not np.any(self.denom):
            raise ValueError("denominator must not be identically zero")


def _require_length(s: PowerSeries, conf: Conformation) -> None:
    if len(s) < conf.n:
        raise InsufficientCoefficients(
            f"[{conf.m + conf.k}/{conf.m}] needs {conf.n} coefficients, series has {len(s)}"
        )


def _coeff_window(s: PowerSeries, lo: int, hi: int) -> np.ndarray:
    """Coefficients c_lo..c_hi inclusive, with c_j = 0 for j < 0."""
    return np.array([s.coeff(j) if j >= 0 else 0j for j in range(lo, hi + 1)])


def dm_denominator(s: PowerSeries, conf: Conformation) -> np.ndarray:
    """Denominator b_0..b_m by the direct Toeplitz solve, b_0 = 1.

    Raises DegenerateError when the linear system is numerically
    singular (the LU factorization hits a zero pivot), which for exact
    coefficients of a function with fewer than m poles is the expected
    outcome.
    """
    _require_length(s, conf)
    m, k = conf.m, conf.k
    if m == 0:
        return np.array([1.0 + 0j])
    # Row r, column i-1 holds c_{m+k+1+r-i}: Toeplitz with first column
    # c_{m+k}..c_{2m+k-1} and first row c_{m+k}..c_{k+1}.
    col = _coeff_window(s, m + k, 2 * m + k - 1)
    row = _coeff_window(s, k + 1, m + k)[::-1]
    A = sla.toeplitz(col, row)
    rhs = -_coeff_window(s, m + k + 1, 2 * m + k)
    try:
        b_tail = np.linalg.solve(A, rhs)
    except np.linalg.LinAlgError as exc:
        raise DegenerateError(f"direct {m}x{m} denominator system is singular: {exc}") from exc
    if not np.all(np.isfinite(b_tail)):
        raise DegenerateError("direct denominator solve produced non-finite coefficients")
    return np.concatenate(([1.0 + 0j], b_tail))


def svd_denominator(s: PowerSeries, conf: Conformation) -> np.ndarray:
    """Denominator b_0..b_m as the null direction of the m x (m+1) system.

    The returned vector is scaled so its largest-magnitude entry is
    exactly 1.  Unlike the direct method this never fails on singular
    systems; degeneracy shows up as b_0 = 0 instead.
    """
    _require_length(s, conf)
    m, k = conf.m, conf.k
    if m == 0:
        return np.array([1.0 + 0j])
    col = _coeff_window(s, m + k + 1, 2 * m + k)
    row = _coeff_window(s, k + 1, m + k + 1)[::-1]
    C = sla.toeplitz(col, row)
    result = svd(C)
    b = result.Vh[-1].conj()
    pivot = int(np.argmax(np.abs(b)))
    return b / b[pivot]


def numerator_from_denominator(s: PowerSeries, denom, conf: Conformation) -> np.ndarray:
    """Numerator a_0..a_{d+k} for a given degree-d denominator.

    Implements the convolution identity a_j = sum_i c_{j-i} b_i
    truncated at the numerator degree d + k, where d = len(denom) - 1.
    A negative numerator degree (possible when filtering shrank the
    denominator below -k) raises Collapse.
    """
    b = np.atleast_1d(np.asarray(denom, dtype=complex))
    deg = (b.size - 1) + conf.k
    if deg < 0:
        raise Collapse(
            f"degree-{b.size - 1} denominator with k={conf.k} leaves no numerator terms"
        )
    if len(s) < deg + 1:
        raise InsufficientCoefficients(
            f"numerator of degree {deg} needs {deg + 1} coefficients, series has {len(s)}"
        )
    head = s.coeffs[: deg + 1]
    return np.convolve(head, b)[: deg + 1]
