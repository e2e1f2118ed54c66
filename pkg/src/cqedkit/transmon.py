"""Charge-basis transmon Hamiltonian and its spectrum.

The qubit is modeled in the Cooper-pair number basis ``n in [-ncut, ncut]``:

    H = sum_n 4 Ec (n - ng)^2 |n><n|  -  (Ej/2) sum_n (|n><n+1| + h.c.)

which is real symmetric tridiagonal for any offset charge, so the whole
spectrum comes from one tridiagonal solve. Reported levels are referenced to
the ground state. The anharmonicity is stored signed (E12 - E01, negative in
the transmon regime); human-readable reports print its magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import EnergyOverH
from .errors import CutoffError, DomainError
from .linalg import SymTridiagonal, eigh_tridiagonal, tridiagonal_eigenvalues

# Doubling the cutoff must move reported transition energies by less than
# this (GHz) before a spectrum is accepted.
CUTOFF_CONVERGENCE_GHZ = 1e-9
MAX_NCUT = 80


@dataclass(frozen=True)
class TransmonParams:
    """Charging/Josephson energies (GHz), offset charge (Cooper pairs) and
    charge-basis cutoff."""

    ec: EnergyOverH
    ej: EnergyOverH
    ng: float = 0.0
    ncut: int = 20

    def __post_init__(self):
        if not (math.isfinite(self.ec) and self.ec > 0.0):
            raise DomainError(f"Ec must be finite and > 0 GHz, got {self.ec!r}")
        if not (math.isfinite(self.ej) and self.ej >= 0.0):
            raise DomainError(f"Ej must be finite and >= 0 GHz, got {self.ej!r}")
        if not math.isfinite(self.ng):
            raise DomainError(f"ng must be finite, got {self.ng!r}")
        if self.ncut < 5:
            raise DomainError(f"ncut must be >= 5, got {self.ncut}")


@dataclass(frozen=True)
class TransmonSpectrum:
    """Ground-referenced eigenlevels and the derived figures of merit."""

    levels: tuple[float, ...]  # GHz, levels[0] == 0
    e01: float  # GHz
    e12: float  # GHz
    anharmonicity_signed: float  # GHz, E12 - E01
    charge_me_01: float  # |<0|n|1>|, dimensionless
    ej_over_ec: float
    ncut_used: int


def build_charge_hamiltonian(p: TransmonParams) -> SymTridiagonal:
    """Charge-basis Hamiltonian of dimension 2*ncut + 1 for the given params."""
    n = np.arange(-p.ncut, p.ncut + 1, dtype=float)
    return SymTridiagonal(
        diag=4.0 * p.ec * (n - p.ng) ** 2,
        offdiag=np.full(2 * p.ncut, -p.ej / 2.0),
    )


def _levels_at(p: TransmonParams, ncut: int, m: int) -> np.ndarray:
    h = build_charge_hamiltonian(TransmonParams(p.ec, p.ej, p.ng, ncut))
    vals = tridiagonal_eigenvalues(h, m)
    return vals - vals[0]


def _converged_ncut(p: TransmonParams, m: int) -> int:
    """Smallest cutoff from p.ncut, doubling, whose doubled check leaves the
    lowest m transition energies unchanged to CUTOFF_CONVERGENCE_GHZ."""
    ncut = p.ncut
    while ncut <= MAX_NCUT:
        a = _levels_at(p, ncut, m)
        b = _levels_at(p, 2 * ncut, m)
        if float(np.max(np.abs(a - b))) < CUTOFF_CONVERGENCE_GHZ:
            return ncut
        ncut *= 2
    raise CutoffError(
        f"charge-basis cutoff not converged below ncut={MAX_NCUT} "
        f"(ec={p.ec}, ej={p.ej})"
    )


def lowest_levels(p: TransmonParams, m: int = 3, adaptive: bool = True) -> np.ndarray:
    """Ground-referenced lowest ``m`` eigenenergies (GHz), eigenvalues only.

    With ``adaptive=False`` the cutoff is taken from ``p.ncut`` as given; flux
    sweeps and fit loops use this after establishing a converged cutoff once.
    """
    if m < 2:
        raise DomainError(f"level count m must be >= 2, got {m}")
    ncut = _converged_ncut(p, m) if adaptive else p.ncut
    return _levels_at(p, ncut, m)


def charge_matrix_elements(p: TransmonParams, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Ground-referenced levels and the charge operator in the eigenbasis.

    Returns ``(levels, n_mat)`` where ``levels`` has length ``k`` (GHz) and
    ``n_mat[i, j] = <i|n|j>`` over the ``k`` lowest eigenstates. The cutoff is
    adapted until doubling it no longer moves the levels.
    """
    if k < 2:
        raise DomainError(f"need at least 2 eigenstates, got k={k}")
    ncut = _converged_ncut(p, k)
    h = build_charge_hamiltonian(TransmonParams(p.ec, p.ej, p.ng, ncut))
    res = eigh_tridiagonal(h, k)
    n = np.arange(-ncut, ncut + 1, dtype=float)
    n_mat = res.vectors.T @ (n[:, None] * res.vectors)
    return res.values - res.values[0], n_mat


def transmon_spectrum(p: TransmonParams, m: int = 5) -> TransmonSpectrum:
    """Diagonalize the charge-basis Hamiltonian and report the lowest ``m``
    levels, E01, E12, the signed anharmonicity and |<0|n|1>|.

    The cutoff is adapted internally: the spectrum is accepted only once
    doubling ncut changes the reported transitions by < 1e-9 GHz. Raises
    CutoffError if that never happens below the cap.
    """
    if m < 3:
        raise DomainError(f"level count m must be >= 3, got {m}")
    ncut = _converged_ncut(p, m)
    h = build_charge_hamiltonian(TransmonParams(p.ec, p.ej, p.ng, ncut))
    res = eigh_tridiagonal(h, m)
    levels = res.values - res.values[0]
    n = np.arange(-ncut, ncut + 1, dtype=float)
    n01 = abs(float(res.vectors[:, 0] @ (n * res.vectors[:, 1])))
    e01 = float(levels[1])
    e12 = float(levels[2] - levels[1])
    return TransmonSpectrum(
        levels=tuple(float(x) for x in levels),
        e01=e01,
        e12=e12,
        anharmonicity_signed=e12 - e01,
        charge_me_01=n01,
        ej_over_ec=p.ej / p.ec,
        ncut_used=ncut,
    )


def perturbative_spectrum(ec: EnergyOverH, ej: EnergyOverH) -> tuple[float, float, float]:
    """Leading-order transmon estimates ``(e01, alpha, |<0|n|1>|)``.

    e01 ~ sqrt(8 Ej Ec) - Ec, alpha ~ -Ec, |<0|n|1>| ~ (Ej/8Ec)^(1/4)/sqrt(2).
    Only meaningful deep in the transmon regime; requires Ej/Ec > 20.
    """
    if ec <= 0.0 or ej <= 0.0:
        raise DomainError("perturbative estimates need ec > 0 and ej > 0")
    if ej / ec <= 20.0:
        raise DomainError(
            f"perturbative estimates require Ej/Ec > 20, got {ej / ec:.3g}"
        )
    e01 = math.sqrt(8.0 * ej * ec) - ec
    alpha = -ec
    n01 = (ej / (8.0 * ec)) ** 0.25 / math.sqrt(2.0)
    return e01, alpha, n01
