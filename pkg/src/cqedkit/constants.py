"""Physical constants and conversions from electrical parameters to energies.

Energies are handled as E/h in GHz throughout the package. Inputs use the
conventional chip-design units: fF for capacitance, nA for current, nH for
inductance, um for length, and applied flux in units of the flux quantum.
Conversions from those units happen once, in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TypeAlias

from .errors import DomainError

# Quantity aliases documenting the unit conventions used in signatures.
Capacitance: TypeAlias = float  # fF
Inductance: TypeAlias = float  # nH
Current: TypeAlias = float  # nA
Frequency: TypeAlias = float  # GHz
EnergyOverH: TypeAlias = float  # GHz
Length: TypeAlias = float  # um
Flux: TypeAlias = float  # units of flux_quantum


@dataclass(frozen=True)
class PhysicalConstants:
    """Exact SI-2019 defining constants. Not configurable: the golden numbers
    produced by this package must be reproducible bit for bit."""

    e: float = 1.602176634e-19  # elementary charge, C
    h: float = 6.62607015e-34  # Planck constant, J s
    c: float = 299792458.0  # speed of light, m/s

    @property
    def flux_quantum(self) -> float:
        """Magnetic flux quantum h/(2e) in Wb, derived rather than stored."""
        return self.h / (2.0 * self.e)


CONSTANTS = PhysicalConstants()
CONSTANTS_VERSION = "SI-2019"


def charging_energy(c_shunt: Capacitance) -> EnergyOverH:
    """Charging energy Ec/h = e^2/(2 C h) in GHz for a shunt capacitance in fF.

    Raises DomainError for a non-finite or non-positive capacitance.
    """
    if not math.isfinite(c_shunt) or c_shunt <= 0.0:
        raise DomainError(f"shunt capacitance must be finite and > 0 fF, got {c_shunt!r}")
    joules = CONSTANTS.e**2 / (2.0 * c_shunt * 1e-15)
    return joules / CONSTANTS.h / 1e9


def josephson_energy(i_c: Current) -> EnergyOverH:
    """Josephson energy Ej/h = Phi0 Ic/(2 pi h) = Ic/(4 pi e), in GHz for Ic in nA.

    Raises DomainError for a non-finite or negative critical current.
    """
    if not math.isfinite(i_c) or i_c < 0.0:
        raise DomainError(f"critical current must be finite and >= 0 nA, got {i_c!r}")
    return i_c * 1e-9 / (4.0 * math.pi * CONSTANTS.e) / 1e9
