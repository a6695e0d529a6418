"""Quantum magnetic-dipole machine.

The Hamiltonian H(lambda) = L_z^2/2 - lambda L_z is diagonal in the
angular-momentum basis with eigenvalues m(m - 2 lambda)/2, m integer.
The production path for all moments is the direct truncated Boltzmann sum
over m; the theta-function and Fourier forms below are verification
oracles and a fast path for the deviation epsilon at moderate tau.

epsilon(lambda, tau) = <L_z> - lambda is the genuinely quantum deviation of
the thermal mean momentum from the classical value: bounded by 1/2, zero at
every integer and half-integer lambda, sawtooth-shaped as tau -> 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import jacobi_theta3
from .units import (
    ConvergenceError,
    CyclePoint,
    DomainError,
    MeanEnergyQuartet,
    validate_control,
    validate_temperature,
)

# Edge terms of the m-window must sit this many nats below the peak weight.
_WINDOW_NATS = 40.0
_WINDOW_MAX_HALFWIDTH = 1 << 22


@dataclass(frozen=True)
class MomentumStats:
    """Thermal momentum moments of the magnetic rotor at one (lambda, tau).

    mean_lz and second_moment_lz are in units of hbar and hbar^2;
    epsilon = mean_lz - lambda; log_partition is ln Z of the direct sum.
    """

    mean_lz: float
    second_moment_lz: float
    epsilon: float
    log_partition: float
    terms_used: int

    def __post_init__(self) -> None:
        if abs(self.epsilon) > 0.5 + 1e-12:
            raise DomainError(f"|epsilon| must not exceed 1/2, got {self.epsilon}")
        if self.second_moment_lz < self.mean_lz**2 - 1e-9:
            raise DomainError("negative momentum variance")


def _window(lam: float, tau: float) -> tuple[np.ndarray, np.ndarray]:
    """Integer window around round(lambda) with converged Boltzmann weights.

    Returns (m values, log-weights); the half-width is doubled until both
    edge log-weights are at least _WINDOW_NATS below the maximum.
    """
    center = round(lam)
    half = 4
    while True:
        m = np.arange(center - half, center + half + 1, dtype=float)
        logw = -m * (m - 2.0 * lam) / (2.0 * tau)
        top = logw.max()
        if logw[0] < top - _WINDOW_NATS and logw[-1] < top - _WINDOW_NATS:
            return m, logw
        if half > _WINDOW_MAX_HALFWIDTH:
            raise ConvergenceError(
                f"momentum window did not close at lambda={lam}, tau={tau}"
            )
        half *= 2


def quantum_partition_magnetic_direct(lam: float, tau: float) -> float:
    """ln Z from the direct sum over quantized momentum states."""
    lam = validate_control(lam)
    tau = validate_temperature(tau)
    _, logw = _window(lam, tau)
    top = logw.max()
    return float(top + math.log(np.exp(logw - top).sum()))


def quantum_partition_magnetic_theta(lam: float, tau: float) -> float:
    """ln Z via Poisson summation: sqrt(2 pi tau) e^(lambda^2/2tau) theta_3."""
    lam = validate_control(lam)
    tau = validate_temperature(tau)
    theta = jacobi_theta3(-math.pi * lam, -2.0 * math.pi**2 * tau)
    return 0.5 * math.log(2.0 * math.pi * tau) + lam * lam / (2.0 * tau) + math.log(theta)


def momentum_stats(lam: float, tau: float) -> MomentumStats:
    """Thermal mean and second moment of L_z over the truncated m-window."""
    lam = validate_control(lam)
    tau = validate_temperature(tau)
    m, logw = _window(lam, tau)
    top = logw.max()
    w = np.exp(logw - top)
    norm = w.sum()
    mean = float((w * m).sum() / norm)
    second = float((w * m * m).sum() / norm)
    return MomentumStats(
        mean_lz=mean,
        second_moment_lz=second,
        epsilon=mean - lam,
        log_partition=float(top + math.log(norm)),
        terms_used=len(m),
    )


def epsilon_fourier(lam: float, tau: float, n_max: int | None = None) -> float:
    """Fourier-series evaluation of the momentum deviation epsilon.

    epsilon = sum_{n>=1} (-1)^n [2 pi tau / sinh(2 pi^2 n tau)] sin(2 pi n lambda).

    With n_max=None the series is truncated once the coefficient magnitude
    drops below 1e-15; if that does not happen within 1e5 terms (very small
    tau), the direct Boltzmann sum is used instead.
    """
    lam = validate_control(lam)
    tau = validate_temperature(tau)
    auto = n_max is None
    cap = 100000 if auto else int(n_max)
    if cap < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    total = 0.0
    for n in range(1, cap + 1):
        arg = 2.0 * math.pi**2 * n * tau
        coef = 4.0 * math.pi * tau * math.exp(-arg) if arg > 700.0 else 2.0 * math.pi * tau / math.sinh(arg)
        if auto and coef < 1e-15:
            return total
        total += (-1.0) ** n * coef * math.sin(2.0 * math.pi * n * lam)
    if auto:
        # tau so small the series converges too slowly; the direct sum is exact.
        return momentum_stats(lam, tau).epsilon
    return total


def _quartet_from_stats(
    stats_h: MomentumStats, stats_c: MomentumStats, lam_h: float, lam_c: float
) -> MeanEnergyQuartet:
    # <H_i>_j = <L_z^2>_j/2 - lambda_i <L_z>_j  (reduced units)
    return MeanEnergyQuartet(
        hh=0.5 * stats_h.second_moment_lz - lam_h * stats_h.mean_lz,
        hc=0.5 * stats_c.second_moment_lz - lam_h * stats_c.mean_lz,
        ch=0.5 * stats_h.second_moment_lz - lam_c * stats_h.mean_lz,
        cc=0.5 * stats_c.second_moment_lz - lam_c * stats_c.mean_lz,
    )


def quantum_quartet_magnetic(point: CyclePoint) -> MeanEnergyQuartet:
    """Mean-energy quartet of the quantum magnetic machine."""
    stats_h = momentum_stats(point.lambda_h, point.tau_h)
    stats_c = momentum_stats(point.lambda_c, point.tau_c)
    return _quartet_from_stats(stats_h, stats_c, point.lambda_h, point.lambda_c)


def optimal_work_scan(
    lambda_c: float,
    tau_c: float,
    lambda_h_range: tuple[float, float, int],
    tau_h_range: tuple[float, float, int],
) -> tuple[CyclePoint, float]:
    """Grid-minimize the per-cycle work over hot-stroke parameters.

    Returns the minimizing CyclePoint and W_min (units of E).  For
    lambda_c -> 1/2 from below and tau_c -> 0, W_min approaches -E/16 from
    above with minimizer lambda_h -> lambda_c/2; the mirrored branch
    lambda_c > 1/2 with lambda_h = (1 + lambda_c)/2 gives the same optimum.
    """
    lams = _axis(lambda_h_range)
    taus = _axis(tau_h_range)
    if lams.size == 0 or taus.size == 0:
        raise DomainError("optimal_work_scan needs a non-empty grid")
    stats_c = momentum_stats(lambda_c, tau_c)
    best_point = None
    best_w = math.inf
    for tau_h in taus:
        if tau_h < tau_c:
            continue
        for lam_h in lams:
            stats_h = momentum_stats(lam_h, tau_h)
            # W = (lambda_h - lambda_c)(<L_z>_h - <L_z>_c), identical to the
            # quartet assembly -(Q_c + Q_h).
            w = (lam_h - lambda_c) * (stats_h.mean_lz - stats_c.mean_lz)
            if w < best_w:
                best_w = w
                best_point = CyclePoint(lam_h, lambda_c, tau_h, tau_c)
    if best_point is None:
        raise DomainError("optimal_work_scan grid contains no tau_h >= tau_c")
    return best_point, best_w


def _axis(rng: tuple[float, float, int]) -> np.ndarray:
    lo, hi, count = rng
    if count < 1:
        raise DomainError(f"axis count must be >= 1, got {count}")
    if count == 1:
        return np.array([float(lo)])
    return np.linspace(float(lo), float(hi), int(count))
