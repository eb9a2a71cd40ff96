"""Shared oracle helpers for the test suite.

These deliberately avoid the package's own construction paths: series
coefficients come from polynomial long division or explicit partial
fractions, so round-trip tests compare two independent computations.
"""

import numpy as np


def maclaurin_of_rational(numer, denom, n):
    """First n Maclaurin coefficients of numer(z)/denom(z) by long division."""
    numer = np.atleast_1d(np.asarray(numer, dtype=complex))
    denom = np.atleast_1d(np.asarray(denom, dtype=complex))
    assert denom[0] != 0, "series requires denom(0) != 0"
    c = np.zeros(n, dtype=complex)
    for j in range(n):
        acc = numer[j] if j < numer.size else 0.0 + 0j
        for i in range(1, min(j, denom.size - 1) + 1):
            acc -= denom[i] * c[j - i]
        c[j] = acc / denom[0]
    return c


def sort_roots(values):
    """Deterministic root order: magnitude, then phase."""
    values = np.atleast_1d(np.asarray(values, dtype=complex))
    order = np.lexsort((np.angle(values), np.abs(values)))
    return values[order]


def greedy_match_error(estimated, expected):
    """Worst relative error of a nearest-neighbour matching."""
    est = list(np.atleast_1d(np.asarray(estimated, dtype=complex)))
    worst = 0.0
    for target in np.atleast_1d(np.asarray(expected, dtype=complex)):
        i = int(np.argmin([abs(e - target) for e in est]))
        worst = max(worst, abs(est.pop(i) - target) / abs(target))
    return worst


def random_oracle(rng, m_true, radial_center=None):
    """Random well-separated simple poles and O(1) weights.

    Poles live in a one-octave radial window so no pole is
    exponentially fainter than another in the first 2*m_true
    coefficients.
    """
    rho = radial_center if radial_center is not None else rng.uniform(0.45, 2.1)
    lo, hi = 0.7 * rho, 1.4 * rho
    poles = []
    while len(poles) < m_true:
        cand = rng.uniform(lo, hi) * np.exp(2j * np.pi * rng.uniform())
        if all(abs(cand - p) >= 0.15 for p in poles):
            poles.append(cand)
    weights = rng.uniform(0.2, 5.0, m_true) * np.exp(2j * np.pi * rng.uniform(size=m_true))
    return np.array(poles), weights
