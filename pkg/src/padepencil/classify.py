"""Taxonomy of computed poles and zeros.

Noise turns the redundant denominator degrees of an over-parameterized
approximant into artifacts with a recognizable anatomy: pole-zero pairs
separated by a tiny distance (doublets, near-cancelling and therefore
mostly harmless away from their location), and stray roots flung far
from the region of interest.  This module sorts a computed root set
into genuine system poles, doublets, far poles/zeros, and leftovers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RootTaxonomy:
    """Classification of a pole/zero set.

    ``doublets`` holds (pole, zero) pairs; ``unclassified`` holds
    ("pole"|"zero", value) pairs for roots that matched nothing.
    """

    system_poles: tuple
    doublets: tuple
    far_poles: tuple
    far_zeros: tuple
    unclassified: tuple

    def to_dict(self) -> dict:
        pair = lambda z: [float(z.real), float(z.imag)]
        return {
            "system_poles": [pair(p) for p in self.system_poles],
            "doublets": [[pair(p), pair(z)] for p, z in self.doublets],
            "far_poles": [pair(p) for p in self.far_poles],
            "far_zeros": [pair(z) for z in self.far_zeros],
            "unclassified": [[kind, pair(z)] for kind, z in self.unclassified],
        }


def classify_roots(
    poles,
    zeros,
    expected_system,
    eps: float = 0.0,
    system_tol: float | None = None,
    doublet_tol: float = 0.3,
    far_tol: float = 3.0,
) -> RootTaxonomy:
    """Sort computed roots into system poles, doublets and far strays.

    Classification happens in three greedy stages:

    1. each expected system location claims its nearest unclaimed pole
       within ``system_tol`` (default max(1e3*eps, 1e-2), widening with
       the noise level);
    2. remaining poles pair with zeros into doublets, closest pairs
       first, while the pair distance is <= ``doublet_tol``;
    3. remaining roots of magnitude >= ``far_tol`` are far poles/zeros.

    Whatever survives all three stages lands in ``unclassified``.

    Parameters
    ----------
    poles, zeros : array_like
        Computed root sets.
    expected_system : array_like
        Locations where genuine poles are expected.
    eps : float, optional
        Coefficient noise amplitude used to widen the system tolerance.
    system_tol, doublet_tol, far_tol : float, optional
        Stage tolerances; see above.
    """
    poles = list(np.atleast_1d(np.asarray(poles, dtype=complex))) if np.size(poles) else []
    zeros = list(np.atleast_1d(np.asarray(zeros, dtype=complex))) if np.size(zeros) else []
    expected = list(np.atleast_1d(np.asarray(expected_system, dtype=complex))) if np.size(expected_system) else []
    if system_tol is None:
        system_tol = max(1e3 * eps, 1e-2)

    pole_used = [False] * len(poles)
    zero_used = [False] * len(zeros)

    system = []
    for loc in expected:
        best, best_d = None, np.inf
        for i, p in enumerate(poles):
            if pole_used[i]:
                continue
            d = abs(p - loc)
            if d < best_d:
                best, best_d = i, d
        if best is not None and best_d <= system_tol:
            pole_used[best] = True
            system.append(poles[best])

    pairs = sorted(
        (abs(poles[i] - zeros[j]), i, j)
        for i in range(len(poles))
        for j in range(len(zeros))
        if not pole_used[i]
    )
    doublets = []
    for d, i, j in pairs:
        if d > doublet_tol:
            break
        if pole_used[i] or zero_used[j]:
            continue
        pole_used[i] = zero_used[j] = True
        doublets.append((poles[i], zeros[j]))

    far_poles, far_zeros, leftovers = [], [], []
    for i, p in enumerate(poles):
        if pole_used[i]:
            continue
        if abs(p) >= far_tol:
            far_poles.append(p)
        else:
            leftovers.append(("pole", p))
    for j, z in enumerate(zeros):
        if zero_used[j]:
            continue
        if abs(z) >= far_tol:
            far_zeros.append(z)
        else:
            leftovers.append(("zero", z))

    return RootTaxonomy(
        system_poles=tuple(system),
        doublets=tuple(doublets),
        far_poles=tuple(far_poles),
        far_zeros=tuple(far_zeros),
        unclassified=tuple(leftovers),
    )
