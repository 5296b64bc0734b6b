"""Airy functions, oscillator wave functions, and edge-scaling constants.

The oscillator wave functions are the weighted Hermite polynomials

    phi_k(x) = h_k^{-1/2} e^{-x^2/2} H_k(x),    h_k = sqrt(pi) 2^k k!,

orthonormal on the real line.  They are evaluated by the normalized
three-term recurrence directly on phi (raw H_k overflows near k ~ 150);
a running log-scale factor keeps the recurrence usable arbitrarily far
into the Gaussian tails and up to degree 10^6.  Values whose magnitude
falls below the double-precision normal range flush to exactly 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import special

__all__ = [
    "airy_ai",
    "airy_ai_prime",
    "oscillator_phi",
    "oscillator_phi_prime",
    "WaveContext",
    "wave_context",
    "CenteringSpec",
    "centering",
]

_BIG = 1e150
_INV_BIG = 1e-150
_LOG_BIG = math.log(_BIG)
_TINY = np.finfo(float).tiny

MAX_DEGREE = 10**6


def _as_float_array(s, name):
    a = np.asarray(s, dtype=float)
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name}: argument must be finite")
    return a


def airy_ai(s):
    """Airy function Ai(s).  Scalar in, scalar out; arrays pass through."""
    a = _as_float_array(s, "airy_ai")
    out = special.airy(a)[0]
    return float(out) if np.ndim(s) == 0 else out


def airy_ai_prime(s):
    """Derivative Ai'(s) of the Airy function."""
    a = _as_float_array(s, "airy_ai_prime")
    out = special.airy(a)[1]
    return float(out) if np.ndim(s) == 0 else out


def _phi_pair_scalar(k, x):
    # pure-float recurrence; only used for scalar arguments of large degree
    logscale = -0.5 * x * x - 0.25 * math.log(math.pi)
    p, q = 1.0, 0.0
    for j in range(1, k + 1):
        p, q = math.sqrt(2.0 / j) * x * p - math.sqrt((j - 1.0) / j) * q, p
        a = max(abs(p), abs(q))
        if a > _BIG:
            p *= _INV_BIG
            q *= _INV_BIG
            logscale += _LOG_BIG
        elif 0.0 < a < _INV_BIG:
            p *= _BIG
            q *= _BIG
            logscale -= _LOG_BIG
    scale = math.exp(logscale) if logscale < 700.0 else math.inf
    hi = p * scale
    lo = q * scale
    tiny = float(_TINY)
    return (hi if abs(hi) >= tiny else 0.0), (lo if abs(lo) >= tiny else 0.0)


def _phi_pair(k, x):
    """(phi_k, phi_{k-1}) at x, by the scale-carrying normalized recurrence."""
    if not 0 <= k <= MAX_DEGREE:
        raise ValueError(f"oscillator degree must be in [0, {MAX_DEGREE}], got {k}")
    scalar = np.ndim(x) == 0
    if scalar and k > 2000:
        return _phi_pair_scalar(int(k), float(x))
    x = np.atleast_1d(_as_float_array(x, "oscillator_phi"))
    logscale = -0.5 * x * x - 0.25 * math.log(math.pi)
    p = np.ones_like(x)   # scaled phi_j, starting at j = 0
    q = np.zeros_like(x)  # scaled phi_{j-1}
    for j in range(1, int(k) + 1):
        p, q = math.sqrt(2.0 / j) * x * p - math.sqrt((j - 1.0) / j) * q, p
        a = np.maximum(np.abs(p), np.abs(q))
        hi = a > _BIG
        if hi.any():
            p[hi] *= _INV_BIG
            q[hi] *= _INV_BIG
            logscale[hi] += _LOG_BIG
        lo = (a < _INV_BIG) & (a > 0.0)
        if lo.any():
            p[lo] *= _BIG
            q[lo] *= _BIG
            logscale[lo] -= _LOG_BIG
    with np.errstate(under="ignore"):
        scale = np.exp(logscale)
        ph = p * scale
        pl = q * scale
    ph[np.abs(ph) < _TINY] = 0.0  # flush deep-tail denormals
    pl[np.abs(pl) < _TINY] = 0.0
    if scalar:
        return float(ph[0]), float(pl[0])
    return ph, pl


def _phi_ladder(kmax, x):
    """All of phi_0..phi_kmax at x by the plain recurrence.

    Intended for moderate |x| (no log-scaling); used by the summation
    form of the finite-N kernels and by orthonormality checks.
    """
    x = np.atleast_1d(_as_float_array(x, "oscillator_phi"))
    out = np.empty((kmax + 1, x.size))
    out[0] = math.pi ** -0.25 * np.exp(-0.5 * x * x)
    if kmax >= 1:
        out[1] = math.sqrt(2.0) * x * out[0]
    for j in range(2, kmax + 1):
        out[j] = math.sqrt(2.0 / j) * x * out[j - 1] - math.sqrt((j - 1.0) / j) * out[j - 2]
    return out


def oscillator_phi(k: int, x):
    """Oscillator wave function phi_k(x)."""
    return _phi_pair(k, x)[0]


def oscillator_phi_prime(k: int, x):
    """phi_k'(x) through the ladder relation phi_k' = -x phi_k + sqrt(2k) phi_{k-1}."""
    ph, pl = _phi_pair(k, x)
    out = -np.asarray(x, dtype=float) * ph
    if k > 0:
        out = out + math.sqrt(2.0 * k) * pl
    return float(out) if np.ndim(x) == 0 else out


@dataclass(frozen=True)
class WaveContext:
    """Degree-N scaling constants for the edge of the spectrum.

    ``beta_Nm1`` is the mass constant (1/2) * (2N)^{1/4} * integral of
    phi_{N-1}; it exists only when N-1 is even and is None otherwise.
    """

    N: int
    u_N: float
    u_Nm1: float
    tau_N: float
    delta_N: float
    beta_Nm1: Optional[float]
    kappa_N: float
    kappa_Nm1: float


def _beta_constant(N):
    # (pi N / 2)^{1/4} sqrt((N-1)!) / (2^{(N-1)/2} ((N-1)/2)!) via log-gamma
    logb = (
        0.25 * math.log(math.pi * N / 2.0)
        + 0.5 * math.lgamma(N)
        - 0.5 * (N - 1) * math.log(2.0)
        - math.lgamma((N + 1) / 2.0)
    )
    return math.exp(logb)


def wave_context(N: int) -> WaveContext:
    """Scaling constants u_N, tau_N, Delta_N, beta_{N-1} for degree N >= 1."""
    if N < 1:
        raise ValueError(f"wave_context: need N >= 1, got {N}")
    u_N = math.sqrt(2.0 * N + 1.0)
    u_Nm1 = math.sqrt(2.0 * N - 1.0)
    tau_N = 2.0 ** -0.5 * N ** (-1.0 / 6.0)
    delta_N = (u_N - u_Nm1) / tau_N
    beta = _beta_constant(N) if (N - 1) % 2 == 0 else None
    return WaveContext(
        N=N,
        u_N=u_N,
        u_Nm1=u_Nm1,
        tau_N=tau_N,
        delta_N=delta_N,
        beta_Nm1=beta,
        kappa_N=2.0 * N + 1.0,
        kappa_Nm1=2.0 * N - 1.0,
    )


_VARIANTS = ("theorem", "averaged", "tuned")


@dataclass(frozen=True)
class CenteringSpec:
    """Choice of centering/scaling constants mapping the largest eigenvalue
    to the edge-fluctuation scale.

    ``averaged`` (midpoint of sqrt(2N-1) and sqrt(2N+1)) is GUE-only;
    ``tuned`` (shifted center, stretched scale) is GOE-only with
    parameters gamma and c.
    """

    ensemble: str
    variant: str = "theorem"
    gamma: float = 0.2
    c: float = 1.0

    def __post_init__(self):
        if self.ensemble not in ("GUE", "GOE"):
            raise ValueError(f"ensemble must be 'GUE' or 'GOE', got {self.ensemble!r}")
        if self.variant not in _VARIANTS:
            raise ValueError(f"variant must be one of {_VARIANTS}, got {self.variant!r}")
        if self.variant == "averaged" and self.ensemble != "GUE":
            raise ValueError("variant 'averaged' is only valid for GUE")
        if self.variant == "tuned" and self.ensemble != "GOE":
            raise ValueError("variant 'tuned' is only valid for GOE")


def centering(spec: CenteringSpec, N: int):
    """(mu, tau) for the given centering choice at degree N."""
    if N < 1:
        raise ValueError(f"centering: need N >= 1, got {N}")
    tau = 2.0 ** -0.5 * N ** (-1.0 / 6.0)
    if spec.ensemble == "GUE":
        if spec.variant == "theorem":
            return math.sqrt(2.0 * N), tau
        # averaged
        return 0.5 * (math.sqrt(2.0 * N - 1.0) + math.sqrt(2.0 * N + 1.0)), tau
    if spec.variant == "theorem":
        return math.sqrt(2.0 * N + 1.0), tau
    # tuned GOE
    n_plus = N + 0.5
    mu = math.sqrt(2.0 * n_plus - spec.gamma * n_plus ** (-1.0 / 3.0))
    tau = 2.0 ** -0.5 * (N + spec.c) ** (-1.0 / 6.0)
    return mu, tau
