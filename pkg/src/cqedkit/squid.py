"""Asymmetric-SQUID flux tuning of capacitively shunted qubits.

A two-junction SQUID with junction asymmetry ``d`` has the effective
Josephson energy

    Ej(phi) = Ej_total * sqrt(cos^2(pi phi) + d^2 sin^2(pi phi))

with the applied flux ``phi`` in units of the flux quantum. The square-root
form is used directly (never the |cos|*sqrt(1 + d^2 tan^2) variant) so there
is no singularity at half flux. Critical current is assumed proportional to
junction width, so d = (r - 1)/(r + 1) for a width ratio r >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .constants import (
    Capacitance,
    Current,
    EnergyOverH,
    Flux,
    charging_energy,
    josephson_energy,
)
from .errors import DomainError
from .transmon import TransmonParams, lowest_levels, transmon_spectrum


@dataclass(frozen=True)
class SquidParams:
    """Total critical current (both junctions, nA), junction width ratio
    W1/W2 >= 1 and the shunt capacitance (fF)."""

    ic_total: Current
    width_ratio: float
    shunt_capacitance: Capacitance

    def __post_init__(self):
        if not (math.isfinite(self.ic_total) and self.ic_total > 0.0):
            raise DomainError(f"total critical current must be > 0 nA, got {self.ic_total!r}")
        if not (math.isfinite(self.width_ratio) and self.width_ratio >= 1.0):
            raise DomainError(f"width ratio must be >= 1, got {self.width_ratio!r}")
        if not (math.isfinite(self.shunt_capacitance) and self.shunt_capacitance > 0.0):
            raise DomainError(
                f"shunt capacitance must be > 0 fF, got {self.shunt_capacitance!r}"
            )


@dataclass(frozen=True)
class TuningCurve:
    """E01 and signed anharmonicity sampled over a flux grid (phi0 units)."""

    flux_points: np.ndarray
    e01: np.ndarray
    anharmonicity: np.ndarray


class FrequencyExtrema(NamedTuple):
    f_max: float  # GHz, at zero flux
    f_min: float  # GHz, at half a flux quantum


def junction_asymmetry(width_ratio: float) -> float:
    """Asymmetry d = (r - 1)/(r + 1) for junction width ratio r >= 1."""
    if not (math.isfinite(width_ratio) and width_ratio >= 1.0):
        raise DomainError(f"width ratio must be >= 1 (orient the ratio), got {width_ratio!r}")
    return (width_ratio - 1.0) / (width_ratio + 1.0)


def effective_josephson_energy(ej_sigma: EnergyOverH, d: float, flux: Flux) -> EnergyOverH:
    """Flux-dependent Ej of an asymmetric SQUID, in [d*Ej_total, Ej_total]."""
    if not (math.isfinite(ej_sigma) and ej_sigma >= 0.0):
        raise DomainError(f"Ej_total must be >= 0, got {ej_sigma!r}")
    if not (math.isfinite(d) and 0.0 <= d < 1.0):
        raise DomainError(f"asymmetry d must be in [0, 1), got {d!r}")
    cos = math.cos(math.pi * flux)
    sin = math.sin(math.pi * flux)
    return ej_sigma * math.sqrt(cos * cos + d * d * sin * sin)


def _transmon_params(sq: SquidParams, ej: float, ncut: int = 20) -> TransmonParams:
    return TransmonParams(ec=charging_energy(sq.shunt_capacitance), ej=ej, ncut=ncut)


def tuning_curve(sq: SquidParams, flux_grid) -> TuningCurve:
    """E01(phi) and anharmonicity(phi) over the given flux grid.

    The charge-basis cutoff is converged once at zero flux (where Ej, and
    with it the charge spread, is largest) and reused for every grid point.
    """
    flux = np.atleast_1d(np.asarray(flux_grid, dtype=float))
    if flux.size == 0:
        raise DomainError("flux grid must be non-empty")
    ej_sigma = josephson_energy(sq.ic_total)
    d = junction_asymmetry(sq.width_ratio)
    ref = transmon_spectrum(_transmon_params(sq, ej_sigma), m=3)
    ncut = ref.ncut_used
    e01 = np.empty_like(flux)
    alpha = np.empty_like(flux)
    for i, phi in enumerate(flux):
        ej = effective_josephson_energy(ej_sigma, d, float(phi))
        lv = lowest_levels(_transmon_params(sq, ej, ncut), m=3, adaptive=False)
        e01[i] = lv[1]
        alpha[i] = (lv[2] - lv[1]) - lv[1]
    return TuningCurve(flux_points=flux, e01=e01, anharmonicity=alpha)


def frequency_extrema(sq: SquidParams) -> FrequencyExtrema:
    """Maximum (zero flux) and minimum (half flux quantum) qubit frequency.

    At half flux the effective Josephson energy is d * Ej_total; the minimum
    frequency comes from a fresh diagonalization there, not from scaling the
    zero-flux frequency.
    """
    ej_sigma = josephson_energy(sq.ic_total)
    d = junction_asymmetry(sq.width_ratio)
    f_max = transmon_spectrum(_transmon_params(sq, ej_sigma), m=3).e01
    f_min = transmon_spectrum(_transmon_params(sq, d * ej_sigma), m=3).e01
    return FrequencyExtrema(f_max=f_max, f_min=f_min)
