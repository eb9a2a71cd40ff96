"""Reproducible noise and branch-cut studies over the four solvers.

Two stock experiments:

* geometric noise — approximate 1/(1-z) from noise-corrupted
  coefficients across a grid of noise amplitudes, classify the computed
  roots, and sweep the error over three real-axis ranges (inside the
  disk, approaching the pole, and beyond it);
* log branch — approximate ln(1.2 - z), whose branch cut the
  approximants mimic with a string of real poles and zeros, comparing
  the plain high-order solve against the filtered one and against
  naive after-the-fact pole deletion.

All randomness flows from one master seed through per-sample spawn keys
(eps index, sample index), so adding noise levels or samples never
reshuffles existing draws, and identical configs produce byte-identical
output files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .approximant import ErrorSweep, error_sweep, eval_pole_residue, eval_rational, poles_and_zeros, unit_disk_mesh
from .baseline import Conformation, RationalApproximant, dm_denominator, numerator_from_denominator, svd_denominator
from .classify import classify_roots
from .errors import AllZero, ApproximationError
from .filtering import FilterParams, pm2
from .pencil import PoleResidueForm, _head_for, build_blocks, pm1, pm1_poles, pm1_residues
from .series import PowerSeries, gen_geometric_noisy, gen_log_series

METHODS = ("dm", "svd", "pm1", "pm2")

#: Real-axis sweep grids: inside the disk, approaching z=1, beyond it.
INNER_GRID = np.linspace(-0.9, 0.9, 500)
RING_GRID = np.linspace(0.9, 0.99, 500)
OUTER_GRID = np.logspace(np.log10(1.1), 2.0, 500)

#: Disk mesh used by the branch-cut study: spacing 0.01, radius 1/2.
MESH_SPACING = 0.01
MESH_RADIUS = 0.5

#: The branch-cut image: poles/zeros are genuine when they land on the
#: real ray past the branch point, within a thin tolerance band.
RAY_MIN_RE = 1.1
RAY_MAX_IM = 0.05


@dataclass
class ExperimentConfig:
    """Inputs of one experiment run; see the runner docstrings."""

    experiment: str = "geometric_noise"
    n: int = 20
    m: int = 10
    k: int = -1
    eps_list: tuple = (1e-3, 1e-6, 1e-10)
    samples: int = 10
    seed: int = 101
    t: float | None = None
    method: str = "pm2"
    origin_radius: float = 1e-3
    output_path: str | None = None


class MethodResult(NamedTuple):
    """What one solver produced for one series."""

    rational: RationalApproximant
    prf: PoleResidueForm | None
    report: object | None
    poles: np.ndarray
    zeros: np.ndarray
    final_l: int


def approximate_series(
    s: PowerSeries,
    conf: Conformation,
    method: str,
    t: float | None = None,
    origin_radius: float = 1e-3,
) -> MethodResult:
    """Run one solver on one series and extract its roots.

    ``method`` is one of dm, svd, pm1, pm2.  ``t`` and
    ``origin_radius`` only affect pm2.  Solver failures propagate as
    the usual ApproximationError subclasses.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    prf = report = None
    if method == "dm":
        denom = dm_denominator(s, conf)
        ra = RationalApproximant(numerator_from_denominator(s, denom, conf), denom)
        final_l = conf.m
    elif method == "svd":
        denom = svd_denominator(s, conf)
        ra = RationalApproximant(numerator_from_denominator(s, denom, conf), denom)
        final_l = conf.m
    elif method == "pm1":
        prf, ra = pm1(s, conf)
        final_l = conf.m
    else:
        prf, ra, report = pm2(s, conf, FilterParams(t=t, origin_radius=origin_radius))
        final_l = report.final_l
    poles = poles_and_zeros(ra)[0]
    try:
        zeros = poles_and_zeros(ra)[1]
    except AllZero:
        zeros = np.array([], dtype=complex)
    return MethodResult(ra, prf, report, poles, zeros, final_l)


def sample_rng(seed: int, eps_index: int, sample_index: int) -> np.random.Generator:
    """Per-sample stream: spawn key (eps index, sample index) off the
    master seed, stable under appending eps values or samples."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(eps_index, sample_index)))


def _unflagged_max(sweep: ErrorSweep) -> float:
    good = sweep.errors[~sweep.flagged]
    return float(good.max()) if good.size else float("inf")


GEOMETRIC_CSV_COLUMNS = [
    "eps",
    "sample",
    "method",
    "failed",
    "error_type",
    "n_poles",
    "system_pole_error",
    "n_system",
    "n_doublets",
    "n_far_poles",
    "n_far_zeros",
    "n_unclassified",
    "final_l",
    "defect_estimate",
    "max_err_inner",
    "max_err_ring",
    "max_err_outer",
    "n_flagged_inner",
    "n_flagged_ring",
    "n_flagged_outer",
]


def _geometric_row(eps: float, sample: int, cfg: ExperimentConfig, res: MethodResult | None, exc) -> dict:
    row = {c: "" for c in GEOMETRIC_CSV_COLUMNS}
    row.update(eps=eps, sample=sample, method=cfg.method, failed=exc is not None)
    if exc is not None:
        row["error_type"] = type(exc).__name__
        return row
    ref = lambda z: 1.0 / (1.0 - z)
    approx = lambda z: eval_rational(res.rational, z)
    sweeps = {
        "inner": error_sweep(approx, ref, INNER_GRID.astype(complex)),
        "ring": error_sweep(approx, ref, RING_GRID.astype(complex)),
        "outer": error_sweep(approx, ref, OUTER_GRID.astype(complex)),
    }
    tax = classify_roots(res.poles, res.zeros, [1.0 + 0j], eps=eps)
    if res.poles.size:
        row["system_pole_error"] = float(np.min(np.abs(res.poles - 1.0)))
    row.update(
        n_poles=res.poles.size,
        n_system=len(tax.system_poles),
        n_doublets=len(tax.doublets),
        n_far_poles=len(tax.far_poles),
        n_far_zeros=len(tax.far_zeros),
        n_unclassified=len(tax.unclassified),
        final_l=res.final_l,
        defect_estimate=res.report.defect_estimate if res.report is not None else "",
    )
    for name, sweep in sweeps.items():
        row[f"max_err_{name}"] = _unflagged_max(sweep)
        row[f"n_flagged_{name}"] = int(np.count_nonzero(sweep.flagged))
    return row


def _mean(values) -> float | None:
    values = [v for v in values if v != "" and v is not None]
    return float(np.mean(values)) if values else None


def run_geometric_noise(cfg: ExperimentConfig) -> dict:
    """Noise study on 1/(1-z): per-sample rows plus per-eps aggregates.

    For each eps in cfg.eps_list, draws cfg.samples coefficient vectors
    of 1*(1+eps*u) with u uniform on [-1, 1), runs cfg.method at
    [m+k/m], classifies roots against the single expected pole at 1,
    and sweeps errors over the three stock grids.  The filtering
    accuracy defaults to t = -log10(eps) per noise level when cfg.t is
    None.

    With cfg.output_path set, writes {path}.samples.csv and
    {path}.summary.json; the returned dict holds config, rows and
    summary either way.
    """
    conf = Conformation(m=cfg.m, k=cfg.k)
    if conf.n > cfg.n:
        raise ValueError(f"[{cfg.m + cfg.k}/{cfg.m}] needs {conf.n} coefficients but cfg.n={cfg.n}")
    rows = []
    for ei, eps in enumerate(cfg.eps_list):
        t = cfg.t if cfg.t is not None else (float(-np.log10(eps)) if eps > 0 else 15.0)
        for si in range(cfg.samples):
            s = gen_geometric_noisy(cfg.n, eps, sample_rng(cfg.seed, ei, si))
            try:
                res = approximate_series(s.truncate(conf.n), conf, cfg.method, t=t, origin_radius=cfg.origin_radius)
            except ApproximationError as exc:
                rows.append(_geometric_row(eps, si, cfg, None, exc))
            else:
                rows.append(_geometric_row(eps, si, cfg, res, None))
    summary = []
    for eps in cfg.eps_list:
        sub = [r for r in rows if r["eps"] == eps]
        ok = [r for r in sub if not r["failed"]]
        summary.append(
            {
                "eps": eps,
                "samples": len(sub),
                "failures": len(sub) - len(ok),
                "mean_system_pole_error": _mean([r["system_pole_error"] for r in ok]),
                "mean_n_poles": _mean([r["n_poles"] for r in ok]),
                "mean_doublets": _mean([r["n_doublets"] for r in ok]),
                "mean_far_poles": _mean([r["n_far_poles"] for r in ok]),
                "mean_far_zeros": _mean([r["n_far_zeros"] for r in ok]),
                "mean_unclassified": _mean([r["n_unclassified"] for r in ok]),
                "mean_final_l": _mean([r["final_l"] for r in ok]),
                "mean_max_err_inner": _mean([r["max_err_inner"] for r in ok]),
                "worst_max_err_inner": max([r["max_err_inner"] for r in ok], default=None),
                "mean_max_err_ring": _mean([r["max_err_ring"] for r in ok]),
                "worst_max_err_ring": max([r["max_err_ring"] for r in ok], default=None),
                "mean_max_err_outer": _mean([r["max_err_outer"] for r in ok]),
                "worst_max_err_outer": max([r["max_err_outer"] for r in ok], default=None),
            }
        )
    result = {"config": asdict(cfg), "rows": rows, "summary": summary}
    if cfg.output_path:
        _write_geometric(cfg.output_path, result)
    return result


def _write_geometric(path: str, result: dict) -> None:
    with open(f"{path}.samples.csv", "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=GEOMETRIC_CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in result["rows"]:
            writer.writerow({k: _cell(v) for k, v in row.items()})
    with open(f"{path}.summary.json", "w") as fh:
        json.dump({"config": result["config"], "summary": result["summary"]}, fh, indent=2)
        fh.write("\n")


def _cell(v) -> str:
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def on_ray(p: complex, min_re: float = RAY_MIN_RE, max_im: float = RAY_MAX_IM) -> bool:
    """Whether a root sits on the branch-cut image ray."""
    return p.real >= min_re and abs(p.imag) <= max_im


def pruned_square_refit(
    s: PowerSeries,
    conf: Conformation,
    min_re: float = RAY_MIN_RE,
    max_im: float = RAY_MAX_IM,
    origin_radius: float = 1e-3,
) -> PoleResidueForm:
    """Naive cleanup baseline: delete off-ray poles, re-solve residues.

    Runs the unfiltered pencil with its rank check disabled (so it
    yields all m poles even from a numerically rank-deficient block),
    keeps only poles on the ray and outside the origin radius, and
    re-solves the square residue system for the survivors.  No
    information from the deleted poles is reassimilated, which is
    precisely what limits this baseline's accuracy.
    """
    blocks = build_blocks(s, conf)
    all_poles = pm1_poles(blocks, rank_rtol=0.0)
    kept = np.array([p for p in all_poles if on_ray(p, min_re, max_im) and abs(p) > origin_radius])
    e = pm1_residues(s, kept, conf, use_all_rows=False)
    head, shift = _head_for(s, conf.k)
    return PoleResidueForm(head=head, shift=shift, terms=tuple(zip(kept, e)))


def _root_payload(roots) -> list:
    return [[float(p.real), float(p.imag)] for p in roots]


def run_log_branch(cfg: ExperimentConfig) -> dict:
    """Branch-cut study on ln(1.2 - z).

    Builds the order-[m/m] approximant with m = (n-1)//2 from the first
    n coefficients, once with the direct method and once with the
    filtered pencil (t defaults to 14), and evaluates both on the disk
    mesh of spacing 0.01 and radius 1/2.  Also reports the
    pole-deletion baseline against the filtered solver on [0, 1].

    With cfg.output_path set, writes {path}.json.
    """
    n = cfg.n
    t = cfg.t if cfg.t is not None else 14.0
    m = (n - 1) // 2
    conf = Conformation(m=m, k=0)
    s = gen_log_series(n).truncate(conf.n)
    mesh = MESH_RADIUS * unit_disk_mesh(MESH_SPACING / MESH_RADIUS)
    ref = lambda z: np.log(1.2 - complex(z))

    result = {
        "experiment": "log_branch",
        "n": n,
        "t": t,
        "conformation": {"m": m, "k": 0},
        "mesh": {"spacing": MESH_SPACING, "radius": MESH_RADIUS, "points": int(mesh.size)},
    }

    for method in ("dm", "pm2"):
        try:
            res = approximate_series(s, conf, method, t=t, origin_radius=cfg.origin_radius)
        except ApproximationError as exc:
            result[method] = {"failed": True, "error_type": type(exc).__name__, "error": str(exc)}
            continue
        sweep = error_sweep(lambda z: eval_rational(res.rational, z), ref, mesh)
        off_ray = [p for p in res.poles if not on_ray(p)]
        entry = {
            "failed": False,
            "final_l": res.final_l,
            "max_mesh_error": _unflagged_max(sweep),
            "n_flagged": int(np.count_nonzero(sweep.flagged)),
            "poles": _root_payload(res.poles),
            "zeros": _root_payload(res.zeros),
            "n_off_ray_poles": len(off_ray),
            "off_ray_poles": _root_payload(off_ray),
        }
        if res.report is not None:
            entry["report"] = res.report.to_dict()
        result[method] = entry

    # Pole-deletion comparison on the near-diagonal conformation
    # [m-1/m] from an even coefficient count, where discarding the
    # spurious poles of the unfiltered pencil demonstrably loses
    # information that the filtered solver reassimilates.
    grid01 = np.linspace(0.0, 1.0, 500).astype(complex)
    conf_nd = Conformation(m=m, k=-1)
    s_nd = gen_log_series(n).truncate(conf_nd.n)
    try:
        naive = pruned_square_refit(s_nd, conf_nd, origin_radius=cfg.origin_radius)
        naive_sweep = error_sweep(lambda z: eval_pole_residue(naive, z), ref, grid01)
        res2 = approximate_series(s_nd, conf_nd, "pm2", t=t, origin_radius=cfg.origin_radius)
        pm2_sweep = error_sweep(lambda z: eval_rational(res2.rational, z), ref, grid01)
        assim = {
            "failed": False,
            "conformation": {"m": m, "k": -1},
            "n_kept_poles": len(naive.terms),
            "naive_max_error_01": _unflagged_max(naive_sweep),
            "pm2_final_l": res2.final_l,
            "pm2_max_error_01": _unflagged_max(pm2_sweep),
        }
    except ApproximationError as exc:
        assim = {"failed": True, "error_type": type(exc).__name__, "error": str(exc)}
    result["assimilation"] = assim

    if cfg.output_path:
        with open(f"{cfg.output_path}.json", "w") as fh:
            json.dump(result, fh, indent=2)
            fh.write("\n")
    return result
