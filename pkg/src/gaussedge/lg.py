"""Uniform turning-point (Liouville-Green) approximation of oscillator waves.

The degree-N oscillator equation, rescaled by x = sqrt(2N+1)*xi, has the
turning point xi = 1 and phase function zeta defined by

    (2/3) zeta^{3/2}(xi) = integral_1^xi sqrt(t^2 - 1) dt,

continued to xi < 1 through -(2/3)(-zeta)^{3/2} = (1/2)[arccos(xi) -
xi sqrt(1-xi^2)].  The leading uniform approximant of the normalized wave

    wbar_N(u_N + s tau_N) ~ r(xi) Ai(kappa_N^{2/3} zeta(xi)),
    xi = 1 + s tau_N / u_N,

with r(xi) = [zeta'(xi)/zeta'(1)]^{-1/2}, is what this module evaluates,
together with exact shifted/rescaled waves and empirical rate scans of
the approximation error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple

import numpy as np

from .specfun import _phi_pair, airy_ai, airy_ai_prime, wave_context

__all__ = [
    "ZETA_DOT_AT_ONE",
    "lg_zeta",
    "lg_zeta_dot",
    "lg_r",
    "lg_c_N",
    "lg_phi_approx",
    "ShiftedWaveSpec",
    "shifted_wave",
    "RateRow",
    "rate_scan",
]

ZETA_DOT_AT_ONE = 2.0 ** (1.0 / 3.0)

# Taylor coefficients of zeta(1+w)/2^{1/3} = w (1 + e1 w + e2 w^2 + e3 w^3);
# derived from the expansion of integral_1^xi sqrt(t^2-1) dt about t = 1.
_E1 = 1.0 / 10.0
_E2 = -2.0 / 175.0
_E3 = 1.0 / 576.0 + 1.0 / 2240.0 + 1.0 / 6000.0
_SERIES_RADIUS = 1e-3


def _validated(xi, name):
    a = np.asarray(xi, dtype=float)
    if not np.all(np.isfinite(a)) or np.any(a <= 0.0):
        raise ValueError(f"{name}: argument must be finite and > 0")
    return a


def lg_zeta(xi):
    """Turning-point variable zeta(xi); increasing, zeta(1) = 0."""
    a = _validated(xi, "lg_zeta")
    scalar = np.ndim(xi) == 0
    a = np.atleast_1d(a)
    out = np.empty_like(a)

    w = a - 1.0
    near = np.abs(w) < _SERIES_RADIUS
    if near.any():
        wn = w[near]
        out[near] = ZETA_DOT_AT_ONE * wn * (1.0 + wn * (_E1 + wn * (_E2 + wn * _E3)))

    up = (a >= 1.0) & ~near
    if up.any():
        t = np.sqrt(a[up] ** 2 - 1.0)
        val = 0.5 * (a[up] * t - np.log(a[up] + t))
        out[up] = (1.5 * val) ** (2.0 / 3.0)

    lo = (a < 1.0) & ~near
    if lo.any():
        t = np.sqrt(1.0 - a[lo] ** 2)
        val = 0.5 * (np.arccos(a[lo]) - a[lo] * t)
        out[lo] = -((1.5 * val) ** (2.0 / 3.0))

    return float(out[0]) if scalar else out


def lg_zeta_dot(xi):
    """d zeta / d xi, the removable singularity at xi = 1 filled by series."""
    a = _validated(xi, "lg_zeta_dot")
    scalar = np.ndim(xi) == 0
    a = np.atleast_1d(a)
    out = np.empty_like(a)

    w = a - 1.0
    near = np.abs(w) < _SERIES_RADIUS
    if near.any():
        wn = w[near]
        out[near] = ZETA_DOT_AT_ONE * (1.0 + wn * (2.0 * _E1 + wn * (3.0 * _E2 + wn * 4.0 * _E3)))
    far = ~near
    if far.any():
        # zeta (dzeta/dxi)^2 = xi^2 - 1, so dzeta/dxi = sqrt(f/zeta)
        out[far] = np.sqrt((a[far] ** 2 - 1.0) / lg_zeta(a[far]))

    return float(out[0]) if scalar else out


def lg_r(xi):
    """Amplitude factor r(xi) = [zeta'(xi)/zeta'(1)]^{-1/2}; r(1) = 1."""
    out = (np.asarray(lg_zeta_dot(xi)) / ZETA_DOT_AT_ONE) ** -0.5
    return float(out) if np.ndim(xi) == 0 else out


def lg_c_N(N: int) -> float:
    """Recessive-solution matching constant c_N, evaluated via log-gamma.

    c_N = 2 sqrt(pi) kappa^{1/6} h_N^{-1/2} (2 N_+)^{N/2} e^{-N_+/2} 2^{N-N_+}
    with N_+ = N + 1/2 and h_N = sqrt(pi) 2^N N!.
    """
    if N < 1:
        raise ValueError(f"lg_c_N: need N >= 1, got {N}")
    n_plus = N + 0.5
    kappa = 2.0 * N + 1.0
    log_h = 0.5 * math.log(math.pi) + N * math.log(2.0) + math.lgamma(N + 1.0)
    logc = (
        math.log(2.0)
        + 0.5 * math.log(math.pi)
        + math.log(kappa) / 6.0
        - 0.5 * log_h
        + 0.5 * N * math.log(2.0 * n_plus)
        - 0.5 * n_plus
        + (N - n_plus) * math.log(2.0)
    )
    return math.exp(logc)


def lg_phi_approx(N: int, s):
    """Leading LG approximant of the normalized wave wbar_N(u_N + s tau_N)."""
    ctx = wave_context(N)
    sigma = ctx.tau_N / ctx.u_N
    xi = 1.0 + sigma * np.asarray(s, dtype=float)
    if np.any(np.asarray(xi) <= 0.0):
        raise ValueError("lg_phi_approx: mapped coordinate must stay positive")
    arg = ctx.kappa_N ** (2.0 / 3.0) * lg_zeta(xi)
    out = np.asarray(lg_r(xi)) * np.asarray(airy_ai(arg))
    return float(out) if np.ndim(s) == 0 else out


@dataclass(frozen=True)
class ShiftedWaveSpec:
    """Which normalized wave to evaluate and its shift in units of Delta_N.

    ``which='phi'`` is the degree-N wave centered at u_N; ``which='psi'``
    the degree-(N-1) wave centered at u_{N-1}.  Both carry the common
    normalization (2N)^{1/4} tau_N.
    """

    which: str
    k: float
    N: int

    def __post_init__(self):
        if self.which not in ("phi", "psi"):
            raise ValueError(f"which must be 'phi' or 'psi', got {self.which!r}")
        if self.N < 1 or (self.which == "psi" and self.N < 1):
            raise ValueError("invalid degree for shifted wave")
        if not math.isfinite(self.k):
            raise ValueError("shift k must be finite")


def shifted_wave(spec: ShiftedWaveSpec, s):
    """Exact shifted wave: wbar at (u_center + tau_N (s + k Delta_N))."""
    ctx = wave_context(spec.N)
    center = ctx.u_N if spec.which == "phi" else ctx.u_Nm1
    x = center + ctx.tau_N * (np.asarray(s, dtype=float) + spec.k * ctx.delta_N)
    ph, pl = _phi_pair(spec.N, x)
    wave = ph if spec.which == "phi" else pl
    norm = (2.0 * spec.N) ** 0.25 * ctx.tau_N
    out = norm * wave
    return float(out) if np.ndim(s) == 0 else out


class RateRow(NamedTuple):
    N: int
    wave_err: float
    deriv_err: float


def rate_scan(N_list: Iterable[int], s_grid, exponent: float = 2.0 / 3.0) -> List[RateRow]:
    """Scaled sup-errors of the Airy approximation of wbar_N and its derivative.

    For each N returns max over the s grid of
    N^exponent e^{s/2} |wbar_N(u_N + s tau_N) - Ai(s)| and the analogous
    quantity with the s-derivative tau_N wbar_N' against Ai'.
    """
    s = np.asarray(list(s_grid), dtype=float)
    ai = np.asarray(airy_ai(s))
    aip = np.asarray(airy_ai_prime(s))
    weight = np.exp(0.5 * s)
    rows = []
    for N in N_list:
        ctx = wave_context(int(N))
        x = ctx.u_N + ctx.tau_N * s
        ph, pl = _phi_pair(int(N), x)
        norm = (2.0 * N) ** 0.25 * ctx.tau_N
        wave = norm * ph
        dwave = norm * ctx.tau_N * (-x * ph + math.sqrt(2.0 * N) * pl)
        scale = float(N) ** exponent
        rows.append(
            RateRow(
                N=int(N),
                wave_err=float(np.max(scale * weight * np.abs(wave - ai))),
                deriv_err=float(np.max(scale * weight * np.abs(dwave - aip))),
            )
        )
    return rows
