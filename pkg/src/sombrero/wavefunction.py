"""Evaluation of the trial wavefunction psi = exp(-S0) and its diagnostics.

All residual work happens in S-space (on the exponent and its analytic
derivatives), never by differentiating psi numerically: psi underflows
to zero far out in the tail while S0 stays perfectly representable.
"""

import math
from dataclasses import dataclass

import numpy as np

from .potential import PotentialParams, eval_potential
from .trial import TrialParams, derive_trial


@dataclass(frozen=True)
class TrialWavefunction:
    """Trial state psi = exp(-S0) with S0 = a r^4 - c r^2 + m log(r^2+1).

    Carries the potential it was built for so Schroedinger residuals can
    be evaluated.  psi is positive everywhere, decays at infinity for
    a > 0, and has psi'(0) = 0.
    """

    trial: TrialParams
    potential: PotentialParams

    @classmethod
    def from_potential(cls, p: PotentialParams) -> "TrialWavefunction":
        return cls(trial=derive_trial(p), potential=p)


@dataclass(frozen=True)
class PeakLocation:
    """Radius of the global maximum of psi; valley_at_origin marks an
    off-center peak with a local minimum at r = 0."""

    radius: float
    valley_at_origin: bool


def eval_s0(w: TrialWavefunction, r):
    """Exponent S0(r) = a r^4 - c r^2 + m log(r^2 + 1)."""
    t = w.trial
    u = np.asarray(r) ** 2
    val = t.a * u * u - t.c * u + t.m * np.log1p(u)
    return val if np.ndim(r) else float(val)


def eval_psi(w: TrialWavefunction, r):
    """Amplitude exp(-S0(r)); underflows quietly to 0 at large radii."""
    s = eval_s0(w, r)
    with np.errstate(under="ignore", over="ignore"):
        val = np.exp(-np.asarray(s))
    return val if np.ndim(r) else float(val)


def derivatives_s0(w: TrialWavefunction, r):
    """Analytic (S0', S0'') at radius r (scalar or ndarray).

    S0'  = 4 a r^3 - 2 c r + 2 m r / (r^2+1)
    S0'' = 12 a r^2 - 2 c + 2 m (1 - r^2) / (r^2+1)^2
    """
    t = w.trial
    rr = np.asarray(r)
    u = rr * rr
    d1 = 4.0 * t.a * u * rr - 2.0 * t.c * rr + 2.0 * t.m * rr / (u + 1.0)
    d2 = 12.0 * t.a * u - 2.0 * t.c + 2.0 * t.m * (1.0 - u) / (u + 1.0) ** 2
    if np.ndim(r):
        return d1, d2
    return float(d1), float(d2)


def maxima_radius(w: TrialWavefunction) -> PeakLocation:
    """Locate the global maximum of psi along the radial profile.

    For m = 0 the stationary condition is closed-form: an off-center
    ring maximum at r = sqrt(c / (2a)) (equal to sqrt(2c/g)) when c > 0,
    with a valley at r = 0; otherwise the single maximum sits at r = 0.
    For m != 0 the stationary radii are found numerically by bracketing
    the zeros of S0'.
    """
    t = w.trial
    if t.m == 0.0:
        if t.c > 0.0:
            return PeakLocation(radius=math.sqrt(t.c / (2.0 * t.a)), valley_at_origin=True)
        return PeakLocation(radius=0.0, valley_at_origin=False)

    from .solvers import find_bracketed_roots

    # all stationary radii satisfy 2a r^2 <= |c| + |m|, so bracket just past that
    r_hi = math.sqrt((abs(t.c) + abs(t.m)) / (2.0 * t.a)) + 1.0

    def s0_prime(r):
        return derivatives_s0(w, r)[0]

    candidates = [0.0]
    candidates += [r for r in find_bracketed_roots(s0_prime, 1e-9 * r_hi, r_hi, subdivisions=256) if r > 1e-8 * r_hi]
    best = min(candidates, key=lambda r: eval_s0(w, r))
    return PeakLocation(radius=best, valley_at_origin=best > 0.0)


def norm_squared(w: TrialWavefunction) -> float:
    """Integral of psi(r)^2 r^(N-1) dr over [0, inf).

    Composite Simpson on [0, R] with R pushed out until 2 S0(R) > 80
    (integrand below ~1e-35), doubling the panel count until the value
    is stable to 1e-10 relative.  Requires a > 0 for normalizability.
    """
    t = w.trial
    if not (t.a > 0):
        raise ValueError(f"norm requires a > 0 for decay, got a={t.a}")
    n_dim = w.potential.n_dim

    # start beyond the last stationary point, then push until the tail is dead
    r_cut = math.sqrt((abs(t.c) + abs(t.m)) / (2.0 * t.a)) + 1.0
    while 2.0 * eval_s0(w, r_cut) <= 80.0:
        r_cut *= 1.25

    def integrand(r):
        s = eval_s0(w, r)
        with np.errstate(under="ignore"):
            val = np.exp(-2.0 * s) * r ** (n_dim - 1)
        return val

    panels = 64
    previous = _simpson(integrand, 0.0, r_cut, panels)
    for _ in range(20):
        panels *= 2
        current = _simpson(integrand, 0.0, r_cut, panels)
        if abs(current - previous) <= 1e-10 * abs(current):
            return current
        previous = current
    raise RuntimeError("norm quadrature did not converge to 1e-10 relative")


def _simpson(f, a, b, panels):
    x = np.linspace(a, b, 2 * panels + 1)
    y = f(x)
    h = (b - a) / (2 * panels)
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1::2].sum() + 2.0 * y[2:-1:2].sum()))


def schrodinger_residual(w: TrialWavefunction, e: float, r):
    """Pointwise residual S0'^2 - ((N-1)/r) S0' - S0'' - 2 (V(r) - e).

    Vanishes identically when psi is an exact eigenstate of V at energy e.
    Singular form: r must be strictly positive (use
    schrodinger_residual_origin for the r -> 0 limit).
    """
    rr = np.asarray(r, dtype=float)
    if np.any(rr <= 0.0):
        raise ValueError("residual requires r > 0; use schrodinger_residual_origin at r = 0")
    n = w.potential.n_dim
    d1, d2 = derivatives_s0(w, rr)
    val = d1 * d1 - (n - 1.0) / rr * d1 - d2 - 2.0 * (eval_potential(w.potential, rr) - e)
    return val if np.ndim(r) else float(val)


def schrodinger_residual_origin(w: TrialWavefunction, e: float) -> float:
    """r -> 0 limit of the residual, using S0'(r)/r -> -2c + 2m."""
    t = w.trial
    n = w.potential.n_dim
    v0 = eval_potential(w.potential, 0.0)
    return n * (2.0 * t.c - 2.0 * t.m) - 2.0 * (v0 - e)
