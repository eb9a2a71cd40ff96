"""Matrix-pencil solver: poles as generalized eigenvalues of Hankel blocks.

Two shifted Hankel matrices C1, C2 built from the series coefficients
form the pencil C1 - z^{-1} C2 whose finite generalized eigenvalues are
the pole locations directly.  Residues then come from a separate
(rectangular) Vandermonde least-squares system in the inverse poles.
This factors the classical Pade problem into a pole stage and a residue
stage, which is what makes targeted pole filtering possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg as sla

from .baseline import Conformation, RationalApproximant, numerator_from_denominator
from .errors import Collapse, DuplicatePole, InsufficientCoefficients, NonFinite, RankDeficient, SingularVandermonde
from .numerics import DEFAULT_RANK_RTOL, eigenvalues, qr_solve
from .series import PowerSeries


@dataclass(frozen=True)
class HankelBlocks:
    """Shifted Hankel pair: C1 drops the last column of the combined
    (2m-l) x (l+1) window, C2 drops the first."""

    C1: np.ndarray
    C2: np.ndarray

    @property
    def rows(self) -> int:
        return self.C1.shape[0]

    @property
    def cols(self) -> int:
        return self.C1.shape[1]


@dataclass(frozen=True)
class PoleResidueForm:
    """Head polynomial plus shifted simple-pole expansion.

    Represents  head(z) + z^shift * sum_j e_j / (1 - z/p_j)  where
    ``terms`` holds (p_j, e_j) pairs.  The head carries c_0..c_k when
    k >= 0 (so shift = k+1) and is empty with shift 0 otherwise; the
    invariant shift == len(head) is enforced.  Terms are stored sorted
    by pole magnitude, then phase.
    """

    head: np.ndarray
    shift: int
    terms: tuple

    def __post_init__(self):
        head = np.asarray(self.head, dtype=complex).reshape(-1).copy()
        if not np.all(np.isfinite(head)):
            raise NonFinite("head coefficients must be finite")
        head.flags.writeable = False
        object.__setattr__(self, "head", head)
        if self.shift != head.size:
            raise ValueError(f"shift={self.shift} inconsistent with head length {head.size}")
        terms = tuple((complex(p), complex(e)) for p, e in self.terms)
        for p, e in terms:
            if not (np.isfinite(p) and np.isfinite(e)):
                raise NonFinite("pole-residue terms must be finite")
        for i in range(len(terms)):
            for j in range(i + 1, len(terms)):
                pi, pj = terms[i][0], terms[j][0]
                if abs(pi - pj) <= 1e-12 * max(abs(pi), abs(pj)):
                    raise DuplicatePole(f"poles {pi} and {pj} coincide to relative 1e-12")
        terms = tuple(sorted(terms, key=lambda pe: (abs(pe[0]), np.angle(pe[0]))))
        object.__setattr__(self, "terms", terms)

    @property
    def poles(self) -> np.ndarray:
        return np.array([p for p, _ in self.terms], dtype=complex)

    @property
    def weights(self) -> np.ndarray:
        return np.array([e for _, e in self.terms], dtype=complex)


class Pm1Result(NamedTuple):
    prf: PoleResidueForm
    rational: RationalApproximant


def _head_for(s: PowerSeries, k: int) -> tuple[np.ndarray, int]:
    """Head coefficients and shift for numerator offset k."""
    if k >= 0:
        return s.coeffs[: k + 1].copy(), k + 1
    return np.array([], dtype=complex), 0


def combined_window(s: PowerSeries, conf: Conformation) -> np.ndarray:
    """The (2m-l) x (l+1) Hankel window with entry c_{k+1+i+j} at (i, j).

    Coefficients with negative index are zero.  Slicing off the last or
    first column yields the pencil blocks C1 and C2.
    """
    m, k, l = conf.m, conf.k, conf.l
    if m < 1:
        raise ValueError("the pencil needs a denominator degree m >= 1")
    if len(s) < conf.n:
        raise InsufficientCoefficients(
            f"[{m + k}/{m}] needs {conf.n} coefficients, series has {len(s)}"
        )
    vals = np.array([s.coeff(j) if j >= 0 else 0j for j in range(k + 1, 2 * m + k + 1)])
    rows = 2 * m - l
    return sla.hankel(vals[:rows], vals[rows - 1 :])


def build_blocks(s: PowerSeries, conf: Conformation) -> HankelBlocks:
    """Assemble the shifted Hankel pair for conformation [m+k/m] at size l."""
    H = combined_window(s, conf)
    return HankelBlocks(C1=H[:, :-1], C2=H[:, 1:])


def pm1_poles(blocks: HankelBlocks, rank_rtol: float = DEFAULT_RANK_RTOL) -> np.ndarray:
    """Pole estimates: eigenvalues of the least-squares pencil solve.

    Solves C2 X = C1 in the least-squares sense and returns eig(X),
    sorted by magnitude then phase.  ``rank_rtol`` is passed through to
    the QR rank check; 0 disables it, reproducing an unguarded solve.
    """
    X = qr_solve(blocks.C2, blocks.C1, rtol=rank_rtol)
    lam = eigenvalues(X)
    order = np.lexsort((np.angle(lam), np.abs(lam)))
    return lam[order]


def residue_system(s: PowerSeries, poles, conf: Conformation, use_all_rows: bool):
    """Vandermonde matrix in inverse poles and its right-hand side.

    Row r holds d_j^r with d_j = 1/p_j; the right-hand side starts at
    c_{k+1} for k >= 0 and c_0 otherwise.  Square systems take the first
    len(poles) rows, overdetermined ones every available row.
    """
    poles = np.atleast_1d(np.asarray(poles, dtype=complex))
    l = poles.size
    start = conf.k + 1 if conf.k >= 0 else 0
    rhs_all = s.coeffs[start : conf.n]
    rows = rhs_all.size if use_all_rows else l
    if rows > rhs_all.size:
        raise InsufficientCoefficients(
            f"residue system needs {rows} equations, series provides {rhs_all.size}"
        )
    with np.errstate(divide="ignore", invalid="ignore"):
        d = np.where(poles != 0, 1.0 / poles, np.inf)
        D = d[None, :] ** np.arange(rows)[:, None]
    return D, rhs_all[:rows]


def pm1_residues(
    s: PowerSeries,
    poles,
    conf: Conformation,
    use_all_rows: bool = False,
    rank_rtol: float = DEFAULT_RANK_RTOL,
) -> np.ndarray:
    """Weights e_j solving the Vandermonde system D e = c in the
    inverse poles d_j = 1/p_j.

    Row r of D holds d_j^r; the right-hand side is c_{k+1}, c_{k+2}, ...
    for k >= 0 and c_0, c_1, ... otherwise.  With ``use_all_rows`` the
    full overdetermined system is solved by least squares, otherwise
    exactly the first l rows (a square solve).  A pole at the origin is
    tolerated only while no row actually needs its inverse, i.e. in the
    single-row square case; otherwise the matrix is non-finite and
    SingularVandermonde is raised, as it is for (near-)coincident poles.
    """
    poles = np.atleast_1d(np.asarray(poles, dtype=complex))
    if poles.size == 0:
        raise ValueError("need at least one pole to solve for residues")
    D, rhs = residue_system(s, poles, conf, use_all_rows)
    if not np.all(np.isfinite(D)):
        raise SingularVandermonde("inverse-pole powers are non-finite (pole at the origin)")
    try:
        e = qr_solve(D, rhs, rtol=rank_rtol)
    except RankDeficient as exc:
        raise SingularVandermonde(f"residue system is rank deficient: {exc}") from exc
    return e


def to_rational(prf: PoleResidueForm, s: PowerSeries, conf: Conformation) -> RationalApproximant:
    """Convert a pole-residue form back to numerator/denominator form.

    The denominator is the monic product of (z - p_j), rescaled so
    b_0 = 1 when possible (largest-magnitude entry = 1 otherwise, which
    happens exactly when some pole sits at the origin); the numerator of
    degree l + k then follows from the series convolution identity.
    With no terms at all a non-negative k yields the bare head over 1
    and a negative k raises Collapse.
    """
    l = len(prf.terms)
    if l == 0:
        if conf.k < 0:
            raise Collapse("no poles and k < 0 leaves nothing to represent")
        return RationalApproximant(numer=prf.head, denom=np.array([1.0 + 0j]))
    denom = np.polynomial.polynomial.polyfromroots(prf.poles)
    if denom[0] != 0:
        denom = denom / denom[0]
    else:
        denom = denom / denom[np.argmax(np.abs(denom))]
    numer = numerator_from_denominator(s, denom, conf)
    return RationalApproximant(numer=numer, denom=denom)


def pm1(s: PowerSeries, conf: Conformation) -> Pm1Result:
    """Full pencil solve at l = m: poles, square residue system, both forms.

    Returns the pole-residue form and the equivalent rational
    approximant.  Requires conf.l == m (no filtering here; that is the
    job of the iterated variant).
    """
    if conf.l != conf.m:
        raise ValueError(f"unfiltered pencil requires l = m, got l={conf.l}, m={conf.m}")
    blocks = build_blocks(s, conf)
    poles = pm1_poles(blocks)
    e = pm1_residues(s, poles, conf, use_all_rows=False)
    head, shift = _head_for(s, conf.k)
    prf = PoleResidueForm(head=head, shift=shift, terms=tuple(zip(poles, e)))
    return Pm1Result(prf, to_rational(prf, s, conf))
