"""Readout-resonator frequencies from extracted inductance and capacitance.

Extracted L and C are treated as mode totals. A quarter-wave line then
resonates at 1/(4 sqrt(L C)), a half-wave line at 1/(2 sqrt(L C)) and a
lumped LC circuit at 1/(2 pi sqrt(L C)). The independent analytic estimate
for a coplanar waveguide of length l is c / (4 l sqrt(eps_eff)) with
eps_eff = (eps_substrate + 1)/2 in the thick-substrate approximation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import CONSTANTS, Capacitance, Frequency, Inductance, Length
from .errors import DomainError

DEFAULT_SUBSTRATE_EPSILON = 11.45  # high-resistivity silicon


class ResonatorMode(str, enum.Enum):
    QUARTER_WAVE = "quarter_wave"
    HALF_WAVE = "half_wave"
    LUMPED = "lumped"


@dataclass(frozen=True)
class ResonatorParams:
    """Total inductance (nH) and capacitance (fF); optional physical length
    (um) enables the analytic coplanar-waveguide estimate."""

    l_total: Inductance
    c_total: Capacitance
    mode: ResonatorMode = ResonatorMode.QUARTER_WAVE
    length: Length | None = None
    substrate_epsilon: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.l_total) and self.l_total > 0.0):
            raise DomainError(f"total inductance must be > 0 nH, got {self.l_total!r}")
        if not (math.isfinite(self.c_total) and self.c_total > 0.0):
            raise DomainError(f"total capacitance must be > 0 fF, got {self.c_total!r}")
        if self.length is not None and not (math.isfinite(self.length) and self.length > 0.0):
            raise DomainError(f"length must be > 0 um when given, got {self.length!r}")
        if self.substrate_epsilon is not None and not (
            math.isfinite(self.substrate_epsilon) and self.substrate_epsilon >= 1.0
        ):
            raise DomainError(
                f"substrate permittivity must be >= 1, got {self.substrate_epsilon!r}"
            )


def resonant_frequency(r: ResonatorParams) -> Frequency:
    """Fundamental frequency in GHz from the extracted totals."""
    root_lc = math.sqrt(r.l_total * 1e-9 * r.c_total * 1e-15)  # seconds
    if r.mode is ResonatorMode.QUARTER_WAVE:
        f_hz = 1.0 / (4.0 * root_lc)
    elif r.mode is ResonatorMode.HALF_WAVE:
        f_hz = 1.0 / (2.0 * root_lc)
    else:
        f_hz = 1.0 / (2.0 * math.pi * root_lc)
    return f_hz / 1e9


def cpw_analytic_frequency(length: Length, substrate_epsilon: float) -> Frequency:
    """Quarter-wave estimate c/(4 l sqrt(eps_eff)) in GHz for length in um.

    Uses the thick-substrate effective permittivity (eps_substrate + 1)/2;
    it ignores the detailed resonator geometry, so expect it to sit within
    several percent of the value from extracted L and C.
    """
    if not (math.isfinite(length) and length > 0.0):
        raise DomainError(f"length must be > 0 um, got {length!r}")
    if not (math.isfinite(substrate_epsilon) and substrate_epsilon >= 1.0):
        raise DomainError(f"substrate permittivity must be >= 1, got {substrate_epsilon!r}")
    eps_eff = 0.5 * (substrate_epsilon + 1.0)
    return CONSTANTS.c / (4.0 * length * 1e-6 * math.sqrt(eps_eff)) / 1e9
