"""Parameter sweeps, momentum curves, regime boundaries, CSV/JSON output.

A sweep evaluates the cycle pipeline on a rectangular (lambda_h, tau_h)
grid at fixed cold-stroke parameters.  Cells are pure functions of their
coordinates, so evaluation order (and threading) cannot change the result.
Boundaries between operation regimes are the zero-level polylines of W and
Q_c, extracted by marching squares with linear edge interpolation.
"""

from __future__ import annotations

import concurrent.futures
import csv
import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import classical, qelectric, qmagnetic
from .cycle import (
    MACHINE_ELECTRIC,
    MACHINE_MAGNETIC,
    MODEL_CLASSICAL,
    MODEL_QUANTUM,
    CycleReport,
    assemble_cycle,
)
from .units import ConvergenceError, CyclePoint, DomainError

SCALE_LINEAR = "linear"
SCALE_LOG = "log"


@dataclass(frozen=True)
class SweepSpec:
    """Axes and fixed parameters of a (lambda_h, tau_h) sweep."""

    lambda_h_range: tuple[float, float, int]
    tau_h_range: tuple[float, float, int]
    lambda_c: float
    tau_c: float
    machine: str
    model: str
    lambda_scale: str = SCALE_LINEAR
    tau_scale: str = SCALE_LINEAR

    def __post_init__(self) -> None:
        for rng, scale, name in (
            (self.lambda_h_range, self.lambda_scale, "lambda_h"),
            (self.tau_h_range, self.tau_scale, "tau_h"),
        ):
            lo, hi, count = rng
            if count < 2:
                raise DomainError(f"{name} axis needs count >= 2, got {count}")
            if not lo < hi:
                raise DomainError(f"{name} axis needs min < max, got ({lo}, {hi})")
            if scale not in (SCALE_LINEAR, SCALE_LOG):
                raise DomainError(f"unknown scale {scale!r}")
            if scale == SCALE_LOG and lo <= 0.0:
                raise DomainError(f"log-scaled {name} axis needs min > 0, got {lo}")
        if self.machine not in (MACHINE_ELECTRIC, MACHINE_MAGNETIC):
            raise DomainError(f"unknown machine {self.machine!r}")
        if self.model not in (MODEL_CLASSICAL, MODEL_QUANTUM):
            raise DomainError(f"unknown model {self.model!r}")

    def lambda_axis(self) -> np.ndarray:
        return _axis(self.lambda_h_range, self.lambda_scale)

    def tau_axis(self) -> np.ndarray:
        return _axis(self.tau_h_range, self.tau_scale)

    def to_dict(self) -> dict:
        return {
            "lambda_h_range": list(self.lambda_h_range),
            "tau_h_range": list(self.tau_h_range),
            "lambda_c": self.lambda_c,
            "tau_c": self.tau_c,
            "machine": self.machine,
            "model": self.model,
            "lambda_scale": self.lambda_scale,
            "tau_scale": self.tau_scale,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SweepSpec":
        return cls(
            lambda_h_range=tuple(d["lambda_h_range"]),
            tau_h_range=tuple(d["tau_h_range"]),
            lambda_c=d["lambda_c"],
            tau_c=d["tau_c"],
            machine=d["machine"],
            model=d["model"],
            lambda_scale=d["lambda_scale"],
            tau_scale=d["tau_scale"],
        )


def _axis(rng: tuple[float, float, int], scale: str) -> np.ndarray:
    lo, hi, count = rng
    if scale == SCALE_LOG:
        return np.geomspace(lo, hi, int(count))
    return np.linspace(lo, hi, int(count))


@dataclass
class SweepGrid:
    """Evaluated sweep: cells in row-major order (tau rows, lambda columns).

    cells[i_tau * n_lambda + i_lambda] is the report at
    (lambda_axis[i_lambda], tau_axis[i_tau]).
    """

    spec: SweepSpec
    cells: list[CycleReport]
    boundary_engine: list[list[tuple[float, float]]] = field(default_factory=list)
    boundary_fridge: list[list[tuple[float, float]]] = field(default_factory=list)

    def cell(self, i_lambda: int, i_tau: int) -> CycleReport:
        n_lambda = self.spec.lambda_h_range[2]
        return self.cells[i_tau * n_lambda + i_lambda]

    def field_array(self, attr: str) -> np.ndarray:
        """Grid values of a report attribute, shape (n_lambda, n_tau)."""
        n_lambda = self.spec.lambda_h_range[2]
        n_tau = self.spec.tau_h_range[2]
        out = np.empty((n_lambda, n_tau))
        for j in range(n_tau):
            for i in range(n_lambda):
                out[i, j] = getattr(self.cells[j * n_lambda + i], attr)
        return out


def quartet_for(machine: str, model: str, point: CyclePoint, tol: float = 1e-10):
    """Dispatch to the machine/model mean-energy pipeline."""
    if machine == MACHINE_ELECTRIC:
        if model == MODEL_CLASSICAL:
            return classical.classical_cycle_electric(point)
        return qelectric.thermal_quartet_electric(point, tol=tol)
    if model == MODEL_CLASSICAL:
        return classical.classical_cycle_magnetic(point)
    return qmagnetic.quantum_quartet_magnetic(point)


def evaluate_point(
    machine: str, model: str, point: CyclePoint, tol: float = 1e-10
) -> CycleReport:
    """Single-cycle evaluation: quartet plus cycle assembly."""
    quartet = quartet_for(machine, model, point, tol=tol)
    return assemble_cycle(quartet, point, machine, model)


def run_sweep(
    spec: SweepSpec,
    threads: int = 1,
    tol: float = 1e-10,
    progress: Callable[[float], None] | None = None,
) -> SweepGrid:
    """Evaluate every cell of the sweep and extract regime boundaries.

    Cell failures are re-raised with the offending grid coordinates
    attached.  Results are independent of thread count.
    """
    lams = spec.lambda_axis()
    taus = spec.tau_axis()

    def cell_at(idx: int) -> CycleReport:
        i_tau, i_lam = divmod(idx, len(lams))
        lam_h, tau_h = lams[i_lam], taus[i_tau]
        try:
            point = CyclePoint(lam_h, spec.lambda_c, tau_h, spec.tau_c)
            return evaluate_point(spec.machine, spec.model, point, tol=tol)
        except (DomainError, ConvergenceError) as exc:
            raise type(exc)(
                f"cell (lambda_h={lam_h}, tau_h={tau_h}): {exc}"
            ) from exc

    total = len(lams) * len(taus)
    cells: list[CycleReport | None] = [None] * total
    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            for idx, report in zip(range(total), pool.map(cell_at, range(total))):
                cells[idx] = report
                if progress is not None:
                    progress((idx + 1) / total)
    else:
        for idx in range(total):
            cells[idx] = cell_at(idx)
            if progress is not None:
                progress((idx + 1) / total)

    grid = SweepGrid(spec=spec, cells=cells)
    grid.boundary_engine, grid.boundary_fridge = extract_boundaries(grid)
    return grid


def momentum_curve(
    lambda_range: tuple[float, float, int], taus: list[float]
) -> list[tuple[float, float, float, float]]:
    """Rows (lambda, tau, <L_z>/hbar, epsilon) of the thermal momentum curve."""
    lo, hi, count = lambda_range
    if count < 2 or not lo < hi:
        raise DomainError(f"invalid lambda range {lambda_range}")
    rows = []
    for tau in taus:
        for lam in np.linspace(lo, hi, int(count)):
            stats = qmagnetic.momentum_stats(float(lam), float(tau))
            rows.append((float(lam), float(tau), stats.mean_lz, stats.epsilon))
    return rows


def extract_boundaries(
    grid: SweepGrid,
) -> tuple[list[list[tuple[float, float]]], list[list[tuple[float, float]]]]:
    """Zero-level polylines of W (engine boundary) and Q_c (fridge boundary)."""
    lams = grid.spec.lambda_axis()
    taus = grid.spec.tau_axis()
    w = grid.field_array("w")
    q_c = grid.field_array("q_c")
    return (
        _marching_squares(lams, taus, -w),
        _marching_squares(lams, taus, q_c),
    )


def _marching_squares(
    xs: np.ndarray, ys: np.ndarray, f: np.ndarray
) -> list[list[tuple[float, float]]]:
    """Zero-crossing polylines of f sampled on the (xs, ys) node grid."""
    segments: list[tuple[tuple[float, float], tuple[float, float]]] = []
    pos = f > 0.0

    def interp(xa, ya, va, xb, yb, vb):
        t = va / (va - vb)
        return (xa + t * (xb - xa), ya + t * (yb - ya))

    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            corners = (
                (xs[i], ys[j], f[i, j], pos[i, j]),
                (xs[i + 1], ys[j], f[i + 1, j], pos[i + 1, j]),
                (xs[i + 1], ys[j + 1], f[i + 1, j + 1], pos[i + 1, j + 1]),
                (xs[i], ys[j + 1], f[i, j + 1], pos[i, j + 1]),
            )
            crossings = []
            for k in range(4):
                xa, ya, va, sa = corners[k]
                xb, yb, vb, sb = corners[(k + 1) % 4]
                if sa != sb:
                    crossings.append(interp(xa, ya, va, xb, yb, vb))
            if len(crossings) == 2:
                segments.append((crossings[0], crossings[1]))
            elif len(crossings) == 4:
                # saddle cell: pair crossings in edge order (0-1, 2-3)
                segments.append((crossings[0], crossings[1]))
                segments.append((crossings[2], crossings[3]))
    return _chain_segments(segments)


def _chain_segments(segments) -> list[list[tuple[float, float]]]:
    """Merge shared-endpoint segments into polylines (greedy walk)."""

    def key(p):
        return (round(p[0], 12), round(p[1], 12))

    adjacency: dict = {}
    for seg in segments:
        a, b = key(seg[0]), key(seg[1])
        adjacency.setdefault(a, []).append((seg, 1))
        adjacency.setdefault(b, []).append((seg, -1))

    used = set()
    polylines = []
    for start_seg in segments:
        if id(start_seg) in used:
            continue
        used.add(id(start_seg))
        line = [start_seg[0], start_seg[1]]
        # extend forward from the tail, then backward from the head
        for endpoint_idx, append in ((-1, True), (0, False)):
            while True:
                end = key(line[endpoint_idx])
                nxt = None
                for seg, _ in adjacency.get(end, []):
                    if id(seg) not in used:
                        nxt = seg
                        break
                if nxt is None:
                    break
                used.add(id(nxt))
                point = nxt[1] if key(nxt[0]) == end else nxt[0]
                if append:
                    line.append(point)
                else:
                    line.insert(0, point)
        polylines.append([(float(x), float(y)) for x, y in line])
    return polylines


CSV_COLUMNS = [
    "lambda_h",
    "tau_h",
    "lambda_c",
    "tau_c",
    "machine",
    "model",
    "q_c",
    "q_h",
    "w",
    "mode",
    "efficiency",
    "cop",
]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(grid: SweepGrid, path) -> None:
    """CSV with one row per cell; shortest round-trip decimals, '' for absent optionals."""
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for report in grid.cells:
                p = report.point
                writer.writerow(
                    [
                        _fmt(p.lambda_h),
                        _fmt(p.tau_h),
                        _fmt(p.lambda_c),
                        _fmt(p.tau_c),
                        report.machine,
                        report.model,
                        _fmt(report.q_c),
                        _fmt(report.q_h),
                        _fmt(report.w),
                        report.mode,
                        _fmt(report.efficiency),
                        _fmt(report.cop),
                    ]
                )
    except OSError as exc:
        raise OSError(f"failed writing CSV to {path}: {exc}") from exc


def write_json(grid: SweepGrid, path) -> None:
    """JSON mirroring the CycleReport schema plus the spec header."""
    doc = {
        "spec": grid.spec.to_dict(),
        "cells": [report.to_json_dict() for report in grid.cells],
        "boundary_engine": [[list(p) for p in line] for line in grid.boundary_engine],
        "boundary_fridge": [[list(p) for p in line] for line in grid.boundary_fridge],
    }
    try:
        with open(path, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"failed writing JSON to {path}: {exc}") from exc


def read_json(path) -> SweepGrid:
    """Inverse of write_json."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise OSError(f"failed reading JSON from {path}: {exc}") from exc
    return SweepGrid(
        spec=SweepSpec.from_dict(doc["spec"]),
        cells=[CycleReport.from_json_dict(d) for d in doc["cells"]],
        boundary_engine=[[tuple(p) for p in line] for line in doc["boundary_engine"]],
        boundary_fridge=[[tuple(p) for p in line] for line in doc["boundary_fridge"]],
    )
