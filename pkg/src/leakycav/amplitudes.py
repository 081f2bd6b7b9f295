"""Exact decay amplitude of a two-level emitter in a lossy cavity.

A single excitation shared between a two-level atom and a Lorentzian
continuum of field modes stays inside the one-excitation sector, and the
excited-state amplitude obeys a linear Volterra equation with the
exponential memory kernel

    f(tau) = omega**2 * exp(-lam * |tau|) * exp(1j * delta * tau),

written in the rotating frame of the atom.  This module implements the
closed-form solution of that equation, the photon-branch magnitude that
completes the two-component (atom, reservoir) qubit pair, and the
bad-cavity (Markovian) and ideal-cavity limiting forms.  All rates are
taken in one consistent frequency unit; only dimensionless combinations
enter the results.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedRegimeError

# |w*t/2| below which cosh and sinh(x)/x switch to their power series;
# the closed form is 0/0 at critical damping (w == 0).
_SERIES_CUTOFF = 1e-6

# Re(w*t/2) above which cosh/sinh would overflow double precision
# (cosh overflows near argument 710); switch to the explicit
# two-exponential form of the solution there.
_OVERFLOW_CUTOFF = 350.0


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class CavityParams:
    """Physical parameters of one atom-cavity (reservoir) pair.

    Parameters
    ----------
    omega : float
        Vacuum Rabi coupling, > 0.
    lam : float
        Cavity line width (inverse photon lifetime), >= 0.  ``lam == 0``
        selects the ideal-cavity branch.
    delta : float
        Atom-cavity detuning (atomic frequency minus cavity center
        frequency); any sign.
    """

    omega: float
    lam: float
    delta: float = 0.0

    def __post_init__(self) -> None:
        _require_finite("omega", self.omega)
        _require_finite("lam", self.lam)
        _require_finite("delta", self.delta)
        if self.omega <= 0:
            raise DomainError(f"omega must be > 0, got {self.omega}")
        if self.lam < 0:
            raise DomainError(f"lam must be >= 0, got {self.lam}")

    @property
    def gamma(self) -> float:
        """Bad-cavity decay rate 2*omega**2/lam; defined only for lam > 0."""
        if self.lam == 0:
            raise DomainError("gamma = 2*omega**2/lam is undefined for lam = 0")
        return 2.0 * self.omega**2 / self.lam

    @property
    def rabi(self) -> float:
        """Detuned vacuum Rabi frequency sqrt(omega**2 + delta**2/4)."""
        return math.hypot(self.omega, 0.5 * self.delta)

    @property
    def w(self) -> complex:
        """Principal square root of (lam - 1j*delta)**2 - 4*omega**2.

        Identical to sqrt(lam**2 - 2j*delta*lam - 4*R**2) with
        R = sqrt(omega**2 + delta**2/4).  The amplitude is even in w, so
        the branch choice is a convention only (checked by test).
        """
        a = complex(self.lam, -self.delta)
        return cmath.sqrt(a * a - 4.0 * self.omega**2)


@dataclass(frozen=True)
class AmplitudePair:
    """Excited-state amplitude and photon-branch magnitude at one time.

    ``|e|**2 + f_mag**2 == 1`` up to rounding; ``f_mag`` is fixed real
    and non-negative, absorbing any phase into the photon basis state
    (all bipartite entanglement quantities at fixed time are invariant
    under that local phase).
    """

    e: complex
    f_mag: float


def _e_grid(a: complex, w: complex, ts: np.ndarray) -> np.ndarray:
    """Evaluate the closed-form amplitude on an array of times.

    a = lam - 1j*delta, w = sqrt(a**2 - 4*omega**2).  Three evaluation
    branches: power series for small |w*t/2| (degenerate w), the plain
    cosh/sinh expression, and a two-exponential rewrite when cosh would
    overflow.
    """
    x = 0.5 * w * ts
    out = np.empty(ts.shape, dtype=complex)

    small = np.abs(x) < _SERIES_CUTOFF
    big = (~small) & (x.real > _OVERFLOW_CUTOFF)
    mid = ~(small | big)

    if small.any():
        xs = x[small]
        x2 = xs * xs
        cosh_s = 1.0 + x2 / 2.0 + x2 * x2 / 24.0
        sinhc_s = 1.0 + x2 / 6.0 + x2 * x2 / 120.0
        pref = np.exp(-0.5 * a * ts[small])
        out[small] = pref * (cosh_s + (0.5 * a * ts[small]) * sinhc_s)
    if mid.any():
        xm = x[mid]
        pref = np.exp(-0.5 * a * ts[mid])
        out[mid] = pref * (np.cosh(xm) + (a / w) * np.sinh(xm))
    if big.any():
        c_plus = 0.5 * (1.0 + a / w)
        c_minus = 0.5 * (1.0 - a / w)
        at = 0.5 * a * ts[big]
        xb = x[big]
        out[big] = c_plus * np.exp(xb - at) + c_minus * np.exp(-xb - at)
    return out


def amplitude_grid(params: CavityParams, times) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized amplitude evaluation.

    Parameters
    ----------
    params : CavityParams
    times : array_like
        Non-negative times.

    Returns
    -------
    e, f : ndarray
        Complex excited-state amplitude and real photon-branch magnitude
        sqrt(1 - |e|**2) at each time.
    """
    ts = np.asarray(times, dtype=float)
    if not np.all(np.isfinite(ts)):
        raise DomainError("times must be finite")
    if np.any(ts < 0):
        raise DomainError("times must be >= 0")
    a = complex(params.lam, -params.delta)
    e = _e_grid(a, params.w, np.atleast_1d(ts))
    if ts.ndim == 0:
        e = e.reshape(())
    # |e|**2 can exceed 1 by rounding noise; clamp before the sqrt so f
    # stays real.
    f = np.sqrt(np.clip(1.0 - np.abs(e) ** 2, 0.0, None))
    return e, f


def amplitude(params: CavityParams, t: float) -> AmplitudePair:
    """Exact amplitude pair at a single time.

    Solves E'' + (lam - 1j*delta) E' + omega**2 E = 0 with E(0) = 1,
    E'(0) = 0, equivalently the exponential-kernel Volterra equation;
    the photon branch follows from probability conservation in the
    one-excitation sector.

    Raises
    ------
    DomainError
        If ``t`` is negative or not finite.
    """
    e, f = amplitude_grid(params, float(t))
    return AmplitudePair(e=complex(e), f_mag=float(f))


def markovian_amplitude(params: CavityParams, t) -> float | np.ndarray:
    """Bad-cavity limit exp(-(delta**2/(4*lam) + gamma/2) * t).

    On resonance this is the plain exponential decay exp(-gamma*t/2)
    with gamma = 2*omega**2/lam.  Requires lam > 0.
    """
    gamma = params.gamma  # raises DomainError for lam == 0
    rate = params.delta**2 / (4.0 * params.lam) + 0.5 * gamma
    ts = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(ts)):
        raise DomainError("t must be finite")
    out = np.exp(-rate * ts)
    return float(out) if out.ndim == 0 else out


def jc_amplitude(params: CavityParams, t) -> complex | np.ndarray:
    """Ideal-cavity limit exp(1j*delta*t/2) [cos(R t) - (1j*delta/2R) sin(R t)].

    R = sqrt(omega**2 + delta**2/4).  ``lam`` is ignored.
    """
    ts = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(ts)):
        raise DomainError("t must be finite")
    r = params.rabi
    out = np.exp(0.5j * params.delta * ts) * (
        np.cos(r * ts) - (0.5j * params.delta / r) * np.sin(r * ts)
    )
    return complex(out) if out.ndim == 0 else out


def jc_corrected_amplitude(params: CavityParams, t) -> float | np.ndarray:
    """Resonant ideal-cavity form with the leading line width correction.

    exp(-lam*t/2) * cos((omega - lam**2/(8*omega)) * t); only the
    resonant case is supported.

    Raises
    ------
    UnsupportedRegimeError
        If ``delta != 0``.
    """
    if params.delta != 0:
        raise UnsupportedRegimeError(
            "the line width-corrected ideal-cavity amplitude is only "
            f"available on resonance (delta = 0), got delta = {params.delta}"
        )
    ts = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(ts)):
        raise DomainError("t must be finite")
    shifted = params.omega - params.lam**2 / (8.0 * params.omega)
    out = np.exp(-0.5 * params.lam * ts) * np.cos(shifted * ts)
    return float(out) if out.ndim == 0 else out


def spectral_density(params: CavityParams, omega_offset) -> float | np.ndarray:
    """Lorentzian mode density (omega**2/pi) * lam / (offset**2 + lam**2).

    ``omega_offset`` is the mode frequency measured from the cavity
    center.  Integrates to omega**2 over the real line.  The lam -> 0
    limit is distributional and therefore rejected.
    """
    if params.lam == 0:
        raise DomainError("spectral density is a delta distribution at lam = 0")
    u = np.asarray(omega_offset, dtype=float)
    out = (params.omega**2 / math.pi) * params.lam / (u * u + params.lam**2)
    return float(out) if out.ndim == 0 else out


def correlation_function(params: CavityParams, tau) -> complex | np.ndarray:
    """Reservoir memory kernel omega**2 exp(-lam*|tau|) exp(1j*delta*tau).

    This is the Fourier transform of the Lorentzian density seen from
    the rotating frame of the atom; 1/lam is the correlation time.
    """
    ts = np.asarray(tau, dtype=float)
    if not np.all(np.isfinite(ts)):
        raise DomainError("tau must be finite")
    out = params.omega**2 * np.exp(-params.lam * np.abs(ts)) * np.exp(
        1j * params.delta * ts
    )
    return complex(out) if out.ndim == 0 else out
