"""Evaluation of approximants, root extraction, meshes and error sweeps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .baseline import RationalApproximant
from .errors import PoleHit, ZeroPole
from .numerics import polynomial_roots
from .pencil import PoleResidueForm


def _horner(coeffs: np.ndarray, z: complex) -> complex:
    acc = 0j
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def eval_rational(ra: RationalApproximant, z: complex) -> complex:
    """Evaluate numerator/denominator by Horner's rule.

    Raises PoleHit when the denominator vanishes exactly at z.
    """
    den = _horner(ra.denom, z)
    if den == 0:
        raise PoleHit(f"denominator vanishes at z={z}")
    return _horner(ra.numer, z) / den


def eval_pole_residue(prf: PoleResidueForm, z: complex) -> complex:
    """Evaluate head(z) + z^shift * sum_j e_j/(1 - z/p_j).

    Each tail term is computed as e_j p_j/(p_j - z), which is exact and
    avoids overflow for large |z|.  A term whose pole sits at the origin
    is the limit of a vanishing contribution and is skipped when its
    weight is zero; with nonzero weight it is meaningless and raises
    ZeroPole.  Evaluation exactly on a pole raises PoleHit.
    """
    z = complex(z)
    acc = 0j
    for p, e in prf.terms:
        if p == 0:
            if e != 0:
                raise ZeroPole(f"term with weight {e} has its pole at the origin")
            continue
        if z == p:
            raise PoleHit(f"evaluation point z={z} is a pole")
        acc += e * p / (p - z)
    if prf.shift:
        acc *= z**prf.shift
    return _horner(prf.head, z) + acc


def poles_and_zeros(ra: RationalApproximant) -> tuple[np.ndarray, np.ndarray]:
    """Roots of the denominator and numerator, each sorted by
    magnitude then phase.  An identically-zero numerator raises AllZero."""

    def _sorted(roots: np.ndarray) -> np.ndarray:
        order = np.lexsort((np.angle(roots), np.abs(roots)))
        return roots[order]

    return _sorted(polynomial_roots(ra.denom)), _sorted(polynomial_roots(ra.numer))


def unit_disk_mesh(spacing: float) -> np.ndarray:
    """Square lattice of the given spacing covering the closed unit disk.

    Points are i*spacing + 1j*j*spacing for all integers i, j with
    hypot <= 1, ordered by increasing real then imaginary part.
    Spacing 1 gives the 5 points 0, +-1, +-i; spacing 0.5 gives 13.
    """
    if not 0 < spacing <= 1:
        raise ValueError(f"spacing must be in (0, 1], got {spacing}")
    N = int(np.ceil(1.0 / spacing)) + 1
    pts = []
    for i in range(-N, N + 1):
        for j in range(-N, N + 1):
            x, y = i * spacing, j * spacing
            if np.hypot(x, y) <= 1.0:
                pts.append(x + 1j * y)
    return np.array(pts, dtype=complex)


@dataclass(frozen=True)
class ErrorSweep:
    """Pointwise absolute errors over a set of evaluation points.

    ``flagged`` marks points where either function hit a pole; such
    points carry an infinite error and are excluded from honest maxima
    by downstream consumers.  ``max_error`` is max(errors) including
    flagged points, with ``argmax_point`` the location where it occurs.
    """

    points: np.ndarray
    errors: np.ndarray
    flagged: np.ndarray
    max_error: float
    argmax_point: complex


def error_sweep(approx, reference, points) -> ErrorSweep:
    """Absolute error |approx(z) - reference(z)| over the given points.

    Both arguments are callables of one complex argument.  PoleHit or
    ZeroDivisionError at a point records an infinite, flagged error
    rather than aborting the sweep.
    """
    points = np.atleast_1d(np.asarray(points, dtype=complex))
    if points.size == 0:
        raise ValueError("need at least one evaluation point")
    errors = np.empty(points.size, dtype=float)
    flagged = np.zeros(points.size, dtype=bool)
    for i, z in enumerate(points):
        try:
            errors[i] = abs(approx(z) - reference(z))
        except (PoleHit, ZeroDivisionError):
            errors[i] = np.inf
            flagged[i] = True
    imax = int(np.argmax(errors))
    return ErrorSweep(
        points=points,
        errors=errors,
        flagged=flagged,
        max_error=float(errors[imax]),
        argmax_point=complex(points[imax]),
    )
