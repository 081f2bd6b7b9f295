"""Brute-force validations of the closed-form amplitude.

Two independent routes, deliberately free of the closed form itself:

* ``memory_kernel_solve`` integrates the exponential-kernel Volterra
  equation.  With z(t) = integral_0^t exp(-(lam - 1j*delta)(t-u)) E(u) du
  the equation E'(t) = -omega**2 * z(t) closes into the first-order
  complex system {E' = -omega**2 z, z' = E - (lam - 1j*delta) z} with
  E(0) = 1, z(0) = 0, which is advanced with classical fixed-step RK4.

* ``discretized_modes_solve`` replaces the Lorentzian continuum by a
  finite comb of modes and evolves the one-excitation Schroedinger
  equation exactly (eigendecomposition of the arrow-shaped generator),
  so the propagation is unitary by construction and the total norm is
  conserved to working precision.

The main library never imports its own answers from here; this module
exists so the test suite and the ``validate`` command can cross-check
the analytic results against schemes that share no code with them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitudes import CavityParams, spectral_density
from .errors import AliasingError, DomainError, ResolutionError

_STEP_LIMIT = 0.1  # refuse grids with h * max(lam, omega, |delta|) above this


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid on [0, t_max] with n_steps points (endpoints included)."""

    t_max: float
    n_steps: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t_max) and self.t_max > 0):
            raise DomainError(f"t_max must be positive and finite, got {self.t_max}")
        if self.n_steps < 2:
            raise DomainError(f"n_steps must be >= 2, got {self.n_steps}")

    @property
    def h(self) -> float:
        return self.t_max / (self.n_steps - 1)

    @property
    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.n_steps)


@dataclass(frozen=True)
class ModeDiscretization:
    """Uniform comb of reservoir modes symmetric about the cavity center.

    ``n_modes`` must be odd so one mode sits exactly on the center
    frequency, which preserves the detuning-conjugation symmetry of the
    continuum.  The comb spans [-cutoff*lam, +cutoff*lam] around the
    center.  ``n_modes == 1`` is the degenerate single-mode case and
    carries the full window weight.
    """

    n_modes: int
    cutoff: float = 50.0

    def __post_init__(self) -> None:
        if self.n_modes < 1 or self.n_modes % 2 == 0:
            raise DomainError(f"n_modes must be odd and >= 1, got {self.n_modes}")
        if not (math.isfinite(self.cutoff) and self.cutoff >= 5):
            raise DomainError(f"cutoff must be >= 5, got {self.cutoff}")

    def spacing(self, lam: float) -> float:
        window = 2.0 * self.cutoff * lam
        return window if self.n_modes == 1 else window / (self.n_modes - 1)


def memory_kernel_solve(params: CavityParams, grid: TimeGrid) -> np.ndarray:
    """Integrate the memory-kernel equation; returns E on the grid.

    Classical 4th-order fixed-step integration of
    {E' = -omega**2 z, z' = E - (lam - 1j*delta) z}.

    Raises
    ------
    ResolutionError
        If the grid step is too large for the fastest rate in the
        problem (h * max(lam, omega, |delta|) > 0.1).
    """
    h = grid.h
    fastest = max(params.lam, params.omega, abs(params.delta))
    if h * fastest > _STEP_LIMIT:
        raise ResolutionError(
            f"grid step {h:.3g} is too coarse: h * max(lam, omega, |delta|) "
            f"= {h * fastest:.3g} exceeds {_STEP_LIMIT}"
        )

    a = complex(params.lam, -params.delta)
    w2 = params.omega**2
    out = np.empty(grid.n_steps, dtype=complex)

    e = 1.0 + 0.0j
    z = 0.0 + 0.0j
    out[0] = e
    half = 0.5 * h
    sixth = h / 6.0
    for i in range(1, grid.n_steps):
        k1e = -w2 * z
        k1z = e - a * z
        e2 = e + half * k1e
        z2 = z + half * k1z
        k2e = -w2 * z2
        k2z = e2 - a * z2
        e3 = e + half * k2e
        z3 = z + half * k2z
        k3e = -w2 * z3
        k3z = e3 - a * z3
        e4 = e + h * k3e
        z4 = z + h * k3z
        k4e = -w2 * z4
        k4z = e4 - a * z4
        e = e + sixth * (k1e + 2.0 * k2e + 2.0 * k3e + k4e)
        z = z + sixth * (k1z + 2.0 * k2z + 2.0 * k3z + k4z)
        out[i] = e
    return out


def suggest_kernel_steps(params: CavityParams, t_max: float, tol: float = 1e-7) -> int:
    """Grid size for ``memory_kernel_solve`` targeting a sup-norm error.

    Heuristic from the RK4 global error (h*S)**4 * S * t_max with
    S = |lam - 1j*delta| + 2*R a bound on the fastest eigenvalue of the
    system; the result also satisfies the hard step precondition.
    """
    if t_max <= 0:
        raise DomainError("t_max must be positive")
    scale = abs(complex(params.lam, -params.delta)) + 2.0 * params.rabi
    h_acc = (tol / (scale * t_max)) ** 0.25 / scale
    h_pre = 0.5 * _STEP_LIMIT / max(params.lam, params.omega, abs(params.delta))
    h = min(h_acc, h_pre)
    return max(2, int(math.ceil(t_max / h)) + 1)


def discretized_modes_solve(
    params: CavityParams,
    disc: ModeDiscretization,
    grid: TimeGrid,
    return_norms: bool = False,
):
    """Evolve the atom against a finite comb of modes; returns c_e on the grid.

    Mode k carries coupling g_k**2 = J(offset_k) * d_omega.  The
    one-excitation generator in the frame rotating at the atomic
    frequency is the real symmetric arrow matrix

        [[0,        g_0, ..., g_{n-1}],
         [g_0,      u_0 - delta,     ],
         [...                        ],
         [g_{n-1},  ...,  u_{n-1} - delta]]

    which is diagonalized once; the propagation is then exactly unitary.
    Converges to the closed form as the comb refines, on horizons short
    of the recurrence time 2*pi/d_omega.

    Raises
    ------
    AliasingError
        If ``grid.t_max`` exceeds the recurrence time of the comb.
    """
    d_omega = disc.spacing(params.lam)
    recurrence = 2.0 * math.pi / d_omega
    if grid.t_max > recurrence:
        raise AliasingError(
            f"horizon {grid.t_max:.3g} exceeds the mode recurrence time "
            f"{recurrence:.3g}; refine n_modes or shorten the grid"
        )

    n = disc.n_modes
    offsets = (np.arange(n) - (n - 1) / 2.0) * d_omega
    couplings = np.sqrt(spectral_density(params, offsets) * d_omega)

    gen = np.zeros((n + 1, n + 1))
    gen[0, 1:] = couplings
    gen[1:, 0] = couplings
    gen[np.arange(1, n + 1), np.arange(1, n + 1)] = offsets - params.delta

    evals, evecs = np.linalg.eigh(gen)
    atom_row = evecs[0, :]
    phases = np.exp(-1j * np.outer(grid.times, evals))
    c_e = phases @ (atom_row * atom_row)
    if not return_norms:
        return c_e
    # Explicit propagation of the full vector; measures how unitary the
    # scheme actually is instead of asserting it.
    full = (phases * atom_row) @ evecs.T
    norms = np.linalg.norm(full, axis=1)
    return c_e, norms
