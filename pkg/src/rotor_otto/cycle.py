"""Cycle assembly: heats, work, mode classification, efficiency.

One assembly path shared by all four machine/model combinations:
    Q_c = <H_c>_c - <H_c>_h,   Q_h = <H_h>_h - <H_h>_c,   W = -(Q_c + Q_h)
Engine:       W < -tol          (net work output), efficiency |W|/Q_h
Refrigerator: Q_c > tol, W >= -tol, COP Q_c/W
Heater:       anything else (the paper treats strict inequalities only, so
              numerical zeros fall here; default band tol = 1e-12 E).

The COP is an extension beyond the three paper-defined modes; it is the
standard figure of merit for refrigerators and is flagged as such in the
package documentation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .units import CyclePoint, DomainError, MeanEnergyQuartet

MODE_ENGINE = "Engine"
MODE_REFRIGERATOR = "Refrigerator"
MODE_HEATER = "Heater"

MACHINE_ELECTRIC = "electric"
MACHINE_MAGNETIC = "magnetic"
MODEL_CLASSICAL = "classical"
MODEL_QUANTUM = "quantum"

DEFAULT_MODE_TOL = 1e-12


@dataclass(frozen=True)
class CycleReport:
    """Per-cycle heats, work (units of E), operation mode and figures of merit."""

    q_c: float
    q_h: float
    w: float
    mode: str
    efficiency: float | None
    cop: float | None
    machine: str
    model: str
    point: CyclePoint

    def to_json_dict(self) -> dict:
        return {
            "q_c": self.q_c,
            "q_h": self.q_h,
            "w": self.w,
            "mode": self.mode,
            "efficiency": self.efficiency,
            "cop": self.cop,
            "machine": self.machine,
            "model": self.model,
            "lambda_h": self.point.lambda_h,
            "lambda_c": self.point.lambda_c,
            "tau_h": self.point.tau_h,
            "tau_c": self.point.tau_c,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "CycleReport":
        return cls(
            q_c=d["q_c"],
            q_h=d["q_h"],
            w=d["w"],
            mode=d["mode"],
            efficiency=d["efficiency"],
            cop=d["cop"],
            machine=d["machine"],
            model=d["model"],
            point=CyclePoint(d["lambda_h"], d["lambda_c"], d["tau_h"], d["tau_c"]),
        )


def carnot_bound(point: CyclePoint) -> float:
    """1 - tau_c/tau_h, the efficiency ceiling used as a sanity check."""
    return 1.0 - point.tau_c / point.tau_h


def assemble_cycle(
    quartet: MeanEnergyQuartet,
    point: CyclePoint,
    machine: str,
    model: str,
    tol: float = DEFAULT_MODE_TOL,
) -> CycleReport:
    """Build a CycleReport from a mean-energy quartet.

    Raises DomainError on NaN input, on a simultaneous engine+refrigerator
    classification (second-law violation under full thermalization), and on
    an engine efficiency beyond the Carnot bound.
    """
    if machine not in (MACHINE_ELECTRIC, MACHINE_MAGNETIC):
        raise DomainError(f"unknown machine {machine!r}")
    if model not in (MODEL_CLASSICAL, MODEL_QUANTUM):
        raise DomainError(f"unknown model {model!r}")
    q_c = quartet.cc - quartet.ch
    q_h = quartet.hh - quartet.hc
    w = -(q_c + q_h)
    if math.isnan(q_c) or math.isnan(q_h):
        raise DomainError("quartet produced NaN heat")
    if w < -tol and q_c > tol:
        raise DomainError(
            f"second-law violation: W={w} < 0 and Q_c={q_c} > 0 at {point}"
        )

    efficiency = None
    cop = None
    if w < -tol:
        mode = MODE_ENGINE
        efficiency = -w / q_h
        if not 0.0 < efficiency <= carnot_bound(point) + 1e-9:
            raise DomainError(
                f"engine efficiency {efficiency} outside (0, Carnot] at {point}"
            )
    elif q_c > tol:
        mode = MODE_REFRIGERATOR
        cop = q_c / w if w != 0.0 else math.inf
    else:
        mode = MODE_HEATER
    return CycleReport(
        q_c=q_c,
        q_h=q_h,
        w=w,
        mode=mode,
        efficiency=efficiency,
        cop=cop,
        machine=machine,
        model=model,
        point=point,
    )
