"""Iterated pencil solve with spurious-pole detection and removal.

Noise in the series coefficients masks rank deficiency: a function with
fewer than m genuine poles still yields full-rank Hankel blocks, and the
plain pencil fills the gap with spurious poles (near the origin, or
paired with a nearby zero into a doublet).  The iterated solver detects
the surplus three ways and shrinks the working size l until the
remaining poles are trustworthy:

1. singular values of the combined Hankel window below 10^-t of the
   largest mark filterable directions;
2. eigenvalues of the reduced pencil inside a small origin radius are
   deleted outright;
3. a badly conditioned residue Vandermonde (singular-value ratio below
   10^-t) indicates a still-redundant pole set.

Every reduction re-enters the loop from the rebuilt window, so the
report carries the full trajectory.  The defect estimate 2(m - final_l)
counts how many series coefficients carried no usable information.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .baseline import Conformation, RationalApproximant
from .errors import Collapse, InsufficientCoefficients, NonTerminating, RankDeficient
from .numerics import SvdResult, eigenvalues, qr_solve, svd
from .pencil import PoleResidueForm, _head_for, combined_window, residue_system, to_rational
from .series import PowerSeries


@dataclass(frozen=True)
class FilterParams:
    """Tuning knobs for the iterated solver.

    Parameters
    ----------
    t : float, optional
        Decimal filtering accuracy; singular values below 10^-t of the
        largest are considered noise.  Defaults to the accuracy estimate
        carried by the series itself.
    origin_radius : float, optional
        Eigenvalues with magnitude <= this are deleted as spurious
        origin poles.
    max_iterations : int, optional
        Upper bound on filtering passes; defaults to m + 1, which a
        loop that shrinks l each pass can never exceed.
    batch_origin_drop : bool, optional
        Remove all origin poles found in one pass together (default);
        set False to remove one per pass.
    """

    t: float | None = None
    origin_radius: float = 1e-3
    max_iterations: int | None = None
    batch_origin_drop: bool = True

    def __post_init__(self):
        if self.t is not None and not self.t > 0:
            raise ValueError(f"t must be positive, got {self.t}")
        if not 0 < self.origin_radius < 1:
            raise ValueError(f"origin_radius must lie in (0, 1), got {self.origin_radius}")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")


class FilterIteration(NamedTuple):
    """One pass: working size, singular values seen, directions removed."""

    l_before: int
    singular_values: np.ndarray
    n_s_removed: int


@dataclass(frozen=True)
class SpuriousPoleReport:
    """Trajectory and outcome of the filtering loop."""

    iterations: tuple
    origin_poles_removed: tuple
    d_matrix_reductions: int
    final_l: int
    defect_estimate: int
    head_only: bool = False

    def to_dict(self) -> dict:
        return {
            "iterations": [
                {
                    "l_before": it.l_before,
                    "singular_values": [float(v) for v in it.singular_values],
                    "n_s_removed": it.n_s_removed,
                }
                for it in self.iterations
            ],
            "origin_poles_removed": [[float(p.real), float(p.imag)] for p in self.origin_poles_removed],
            "d_matrix_reductions": self.d_matrix_reductions,
            "final_l": self.final_l,
            "defect_estimate": self.defect_estimate,
            "head_only": self.head_only,
        }


class Pm2Result(NamedTuple):
    prf: PoleResidueForm
    rational: RationalApproximant
    report: SpuriousPoleReport


def count_filtered(sigma, t: float) -> int:
    """Number of singular values below 10^-t relative to the largest.

    An all-zero spectrum keeps a single direction and filters the rest.
    """
    sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
    if sigma.size == 0:
        raise ValueError("empty singular-value array")
    if sigma[0] == 0:
        return sigma.size - 1
    return int(np.count_nonzero(sigma < 10.0 ** (-t) * sigma[0]))


def reduced_poles(C: np.ndarray, svd_result: SvdResult) -> np.ndarray:
    """Eigenvalues of the pencil restricted to the retained directions.

    With C = U S Vh the least-squares pencil solve C2^+ C1 equals the
    solution of  min || S_hat V2h X - S_hat V1h ||_F  where V1h/V2h are
    the first/last l columns of Vh and S_hat pads the singular values
    with zeros to the full column count: the unitary factor U drops out,
    but each row must keep its singular-value weight.  Raises
    RankDeficient when the weighted system loses rank, in which case the
    caller shrinks l and retries.
    """
    C = np.asarray(C)
    l = C.shape[1] - 1
    if l < 1:
        raise ValueError(f"window must have at least 2 columns, got shape {C.shape}")
    weights = np.zeros(l + 1)
    weights[: svd_result.sigma.size] = svd_result.sigma
    W = weights[:, None] * svd_result.Vh
    X = qr_solve(W[:, 1:], W[:, :l])
    lam = eigenvalues(X)
    order = np.lexsort((np.angle(lam), np.abs(lam)))
    return lam[order]


def _zero_series_result(s: PowerSeries, conf: Conformation) -> Pm2Result:
    """The zero approximant, reported as fully collapsed."""
    k = conf.k
    head = np.zeros(k + 1, dtype=complex) if k >= 0 else np.array([], dtype=complex)
    prf = PoleResidueForm(head=head, shift=k + 1 if k >= 0 else 0, terms=())
    ra = RationalApproximant(numer=np.zeros(max(k, 0) + 1, dtype=complex), denom=np.array([1.0 + 0j]))
    report = SpuriousPoleReport(
        iterations=(),
        origin_poles_removed=(),
        d_matrix_reductions=0,
        final_l=0,
        defect_estimate=2 * conf.m,
        head_only=True,
    )
    return Pm2Result(prf, ra, report)


def pm2(s: PowerSeries, conf: Conformation, params: FilterParams | None = None) -> Pm2Result:
    """Pencil solve with iterated spurious-pole filtering.

    Runs the detection loop described in the module docstring starting
    from l = conf.l (by default m) and returns the surviving poles with
    overdetermined-least-squares residues, the equivalent rational
    approximant, and the filtering report.

    If every pole is removed, a non-negative k degrades to the bare head
    polynomial (report.head_only is set); a negative k raises Collapse.
    An identically-zero coefficient window short-circuits to the zero
    approximant.
    """
    if params is None:
        params = FilterParams()
    m, k = conf.m, conf.k
    if m < 1:
        raise ValueError("filtering needs a denominator degree m >= 1")
    if len(s) < conf.n:
        raise InsufficientCoefficients(
            f"[{m + k}/{m}] needs {conf.n} coefficients, series has {len(s)}"
        )
    if not np.any(s.coeffs[: conf.n]):
        return _zero_series_result(s, conf)
    t = params.t if params.t is not None else s.t
    max_passes = params.max_iterations if params.max_iterations is not None else m + 1

    iterations: list[FilterIteration] = []
    origin_removed: list[complex] = []
    d_reductions = 0
    l = conf.l
    passes = 0
    poles = weights = None

    while True:
        passes += 1
        if passes > max_passes:
            raise NonTerminating(f"filtering did not settle within {max_passes} passes")
        H = combined_window(s, Conformation(m=m, k=k, l=l))
        sr = svd(H)
        if l > 1:
            # The filter targets the numerical rank: the window keeps
            # rank_hat = (#sigma - n_s) usable directions, and a pencil
            # of size rank_hat is the largest the data supports.  On the
            # first pass (l = m, row-limited spectrum) this equals the
            # plain reduction l - n_s; on later column-limited passes
            # the spectrum carries one extra entry and the plain
            # reduction would overshoot by one, losing a genuine pole.
            rank_hat = sr.sigma.size - count_filtered(sr.sigma, t)
            new_l = max(1, min(l, rank_hat))
            iterations.append(FilterIteration(l, sr.sigma.copy(), l - new_l))
            if new_l < l:
                l = new_l
                continue
        else:
            iterations.append(FilterIteration(l, sr.sigma.copy(), 0))

        try:
            lam = reduced_poles(H, sr)
        except RankDeficient:
            l -= 1
            if l == 0:
                return _headonly_result(s, conf, iterations, origin_removed, d_reductions)
            continue

        inside = np.abs(lam) <= params.origin_radius
        if np.any(inside):
            if params.batch_origin_drop:
                dropped = lam[inside]
            else:
                dropped = lam[[int(np.argmin(np.abs(lam)))]]
            origin_removed.extend(complex(p) for p in dropped)
            l -= dropped.size
            if l == 0:
                return _headonly_result(s, conf, iterations, origin_removed, d_reductions)
            continue

        D, rhs = residue_system(s, lam, conf, use_all_rows=True)
        dsig = np.linalg.svd(D, compute_uv=False)
        if dsig[-1] < 10.0 ** (-t) * dsig[0]:
            d_reductions += 1
            l -= 1
            if l == 0:
                return _headonly_result(s, conf, iterations, origin_removed, d_reductions)
            continue

        poles = lam
        weights = qr_solve(D, rhs, rtol=0.0)
        break

    head, shift = _head_for(s, k)
    prf = PoleResidueForm(head=head, shift=shift, terms=tuple(zip(poles, weights)))
    ra = to_rational(prf, s, conf)
    report = SpuriousPoleReport(
        iterations=tuple(iterations),
        origin_poles_removed=tuple(origin_removed),
        d_matrix_reductions=d_reductions,
        final_l=l,
        defect_estimate=2 * (m - l),
        head_only=False,
    )
    return Pm2Result(prf, ra, report)


def _headonly_result(s, conf, iterations, origin_removed, d_reductions) -> Pm2Result:
    """Everything filtered away: fall back to the head polynomial if any."""
    if conf.k < 0:
        raise Collapse(
            f"filtering removed every pole and k={conf.k} < 0 leaves no polynomial part"
        )
    head, shift = _head_for(s, conf.k)
    prf = PoleResidueForm(head=head, shift=shift, terms=())
    ra = to_rational(prf, s, conf)
    report = SpuriousPoleReport(
        iterations=tuple(iterations),
        origin_poles_removed=tuple(origin_removed),
        d_matrix_reductions=d_reductions,
        final_l=0,
        defect_estimate=2 * conf.m,
        head_only=True,
    )
    return Pm2Result(prf, ra, report)
