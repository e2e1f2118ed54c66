"""Qubit-resonator coupling strength and dispersive shift.

The vacuum coupling rate is g = 2 e beta V_rms <0|n|1> / h with the
participation ratio beta = Cc/(Cc + Cq) and the resonator zero-point voltage
V_rms = sqrt(h f_r / (2 C_r)).

Two routes to the dispersive shift are kept deliberately separate:

* ``dispersive_shift`` is the closed-form transmon expression
  chi = g^2 alpha / (Delta (Delta + alpha)) with signed alpha and
  Delta = f_qubit - f_resonator.
* ``chi_exact_oracle`` diagonalizes the joint qubit-resonator Hamiltonian on
  a truncated product space and reads the shift off the dressed levels. The
  joint model keeps the full charge matrix elements and the counter-rotating
  coupling, so in the deep dispersive regime the two routes agree in sign
  and scale but not exactly; the residual formula error is itself g^2-small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS, Capacitance, Frequency
from .errors import DegeneracyError, DomainError, LabelingError
from .linalg import eigh_dense
from .resonator import ResonatorParams, resonant_frequency
from .transmon import TransmonParams, TransmonSpectrum, charge_matrix_elements

# A dressed state must keep at least this much probability on its bare
# product state to be labeled by it.
_MIN_BARE_OVERLAP = 0.5


@dataclass(frozen=True)
class CouplingParams:
    """Coupling capacitance, qubit shunt capacitance (both fF), the resonator
    parameters and the already-computed qubit spectrum."""

    c_coupling: Capacitance
    c_qubit: Capacitance
    resonator: ResonatorParams
    qubit_spectrum: TransmonSpectrum

    def __post_init__(self):
        if not (math.isfinite(self.c_coupling) and self.c_coupling >= 0.0):
            raise DomainError(f"coupling capacitance must be >= 0 fF, got {self.c_coupling!r}")
        if not (math.isfinite(self.c_qubit) and self.c_qubit > 0.0):
            raise DomainError(f"qubit capacitance must be > 0 fF, got {self.c_qubit!r}")


@dataclass(frozen=True)
class CouplingReport:
    beta: float  # participation ratio, dimensionless
    v_rms: float  # resonator zero-point voltage, V
    g: Frequency  # vacuum coupling rate, GHz
    detuning: Frequency  # f_qubit - f_resonator, GHz
    chi_perturbative: Frequency  # signed, GHz
    chi_exact: Frequency | None = None  # signed, GHz, from the joint oracle


def participation_beta(c_coupling: Capacitance, c_qubit: Capacitance) -> float:
    """Voltage-division fraction Cc/(Cc + Cq), in [0, 1)."""
    if not (math.isfinite(c_qubit) and c_qubit > 0.0):
        raise DomainError(f"qubit capacitance must be > 0 fF, got {c_qubit!r}")
    if not (math.isfinite(c_coupling) and c_coupling >= 0.0):
        raise DomainError(f"coupling capacitance must be >= 0 fF, got {c_coupling!r}")
    return c_coupling / (c_coupling + c_qubit)


def vacuum_rms_voltage(f_r: Frequency, c_r: Capacitance) -> float:
    """Zero-point voltage sqrt(h f_r / (2 C_r)) in volts, for GHz and fF."""
    if not (math.isfinite(f_r) and f_r > 0.0):
        raise DomainError(f"resonator frequency must be > 0 GHz, got {f_r!r}")
    if not (math.isfinite(c_r) and c_r > 0.0):
        raise DomainError(f"resonator capacitance must be > 0 fF, got {c_r!r}")
    return math.sqrt(CONSTANTS.h * f_r * 1e9 / (2.0 * c_r * 1e-15))


def coupling_g(p: CouplingParams) -> Frequency:
    """Vacuum coupling rate g = 2 e beta V_rms |<0|n|1>| / h in GHz."""
    beta = participation_beta(p.c_coupling, p.c_qubit)
    f_r = resonant_frequency(p.resonator)
    v_rms = vacuum_rms_voltage(f_r, p.resonator.c_total)
    g_hz = 2.0 * CONSTANTS.e * beta * v_rms * p.qubit_spectrum.charge_me_01 / CONSTANTS.h
    return g_hz / 1e9


def dispersive_shift(
    g: Frequency, f_q: Frequency, f_r: Frequency, alpha_signed: Frequency
) -> Frequency:
    """Transmon dispersive shift chi = g^2 alpha / (Delta (Delta + alpha)).

    All arguments in GHz; ``alpha_signed`` is E12 - E01 (negative for a
    transmon) and Delta = f_q - f_r. Raises DegeneracyError within 1e-6 GHz
    of either resonance Delta = 0 or Delta + alpha = 0.
    """
    delta = f_q - f_r
    if abs(delta) < 1e-6 or abs(delta + alpha_signed) < 1e-6:
        raise DegeneracyError(
            f"dispersive formula undefined near resonance: Delta={delta:.3g} GHz, "
            f"Delta+alpha={delta + alpha_signed:.3g} GHz"
        )
    return g * g * alpha_signed / (delta * (delta + alpha_signed))


def chi_exact_oracle(
    qubit: TransmonParams,
    f_r: Frequency,
    g: Frequency,
    qubit_levels: int = 6,
    photon_levels: int = 8,
) -> Frequency:
    """Dispersive shift from diagonalizing the joint Hamiltonian.

    Builds H = H_q x 1 + 1 x f_r a'a + (g/n01) n x (a + a') on the product
    of the ``qubit_levels`` lowest transmon eigenstates and ``photon_levels``
    Fock states, diagonalizes it densely, labels each dressed state by the
    bare product state it overlaps most, and returns

        chi = [(E11 - E10) - (E01 - E00)] / 2.

    Raises LabelingError if any of the four dressed states keeps less than
    half its probability on its bare state (avoided-crossing ambiguity) or
    if two bare states select the same dressed state.
    """
    if qubit_levels < 3:
        raise DomainError(f"qubit_levels must be >= 3, got {qubit_levels}")
    if photon_levels < 3:
        raise DomainError(f"photon_levels must be >= 3, got {photon_levels}")
    if not (math.isfinite(f_r) and f_r > 0.0):
        raise DomainError(f"resonator frequency must be > 0 GHz, got {f_r!r}")
    if not (math.isfinite(g) and g >= 0.0):
        raise DomainError(f"coupling rate must be >= 0 GHz, got {g!r}")

    levels, n_mat = charge_matrix_elements(qubit, qubit_levels)
    n01 = abs(n_mat[0, 1])
    lam = g / n01 if g > 0.0 else 0.0

    photons = np.arange(photon_levels, dtype=float)
    ladder = np.diag(np.sqrt(photons[1:]), 1)
    x = ladder + ladder.T
    h = (
        np.kron(np.diag(levels), np.eye(photon_levels))
        + np.kron(np.eye(qubit_levels), f_r * np.diag(photons))
        + np.kron(lam * n_mat, x)
    )
    res = eigh_dense(h, h.shape[0])

    taken: dict[int, tuple[int, int]] = {}

    def dressed_energy(j: int, k: int) -> float:
        bare = j * photon_levels + k
        weights = res.vectors[bare, :] ** 2
        idx = int(np.argmax(weights))
        if weights[idx] < _MIN_BARE_OVERLAP:
            raise LabelingError(
                f"dressed state for qubit={j}, photons={k} keeps only "
                f"{weights[idx]:.3f} of its bare probability"
            )
        if idx in taken:
            raise LabelingError(
                f"states {taken[idx]} and {(j, k)} select the same dressed level"
            )
        taken[idx] = (j, k)
        return float(res.values[idx])

    e00 = dressed_energy(0, 0)
    e01 = dressed_energy(0, 1)
    e10 = dressed_energy(1, 0)
    e11 = dressed_energy(1, 1)
    return 0.5 * ((e11 - e10) - (e01 - e00))
