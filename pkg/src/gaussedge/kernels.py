"""Two-point correlation kernels at the spectral edge.

Scalar kernels: the finite-N GUE kernel in three representations
(Christoffel-Darboux closed form, explicit degree sum, and the tail
integral of wave products), its rescaled version, and the Airy kernel.
Matrix kernels: the 2x2 GOE kernels at finite N and in the limit,
assembled analytically from the wave/Airy ingredients and the
right-tail integration operator (eps-tilde f)(s) = int_s^oo f.

All derivative entries use closed-form ladder relations and all tail
entries use quadrature of closed-form ingredients; assembled entries
are never differenced numerically.  The distributional eps(s-t) term
of the (2,1) entry is carried as a flag and handled at discretization
time by the determinant module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ._errors import AccuracyError
from ._quad import TAIL_CUTOFF, finite_rule, tail_mesh
from .specfun import CenteringSpec, _phi_pair, _phi_ladder, airy_ai, airy_ai_prime, centering, wave_context

__all__ = [
    "ScalarKernel",
    "MatrixKernel2",
    "TailIntegrator",
    "gue_kernel",
    "gue_kernel_op",
    "rescaled_gue_kernel",
    "rescaled_gue_kernel_op",
    "airy_kernel",
    "airy_kernel_op",
    "diamond",
    "eps_psi",
    "goe_scalar_kernel",
    "goe_matrix_kernel_finite",
    "goe_matrix_kernel_limit",
]

_DIAG_TOL = 1e-6
_TAIL_NODES = 96


# ---------------------------------------------------------------------------
# kernel containers

@dataclass(frozen=True)
class ScalarKernel:
    """Callable two-point kernel with a vectorized outer-grid evaluator."""

    eval: Callable
    grid_eval: Callable
    meta: dict = field(default_factory=dict)

    def __call__(self, s, t):
        return self.eval(s, t)


@dataclass(frozen=True)
class MatrixKernel2:
    """2x2 matrix kernel; entries are the smooth parts of the four blocks.

    ``eps_in_21`` marks the distributional -eps(s-t) of entry (2,1),
    which is materialized (or folded into the smooth entries) only at
    discretization time.  ``entry_grids(svec, tvec)`` returns the four
    smooth entry matrices; ``fold_grids(svec, tvec, s0)`` returns the
    equivalent-determinant entries with the eps block folded in.
    """

    k11: Callable
    k12: Callable
    k21: Callable
    k22: Callable
    eps_in_21: bool
    entry_grids: Callable
    fold_grids: Callable
    meta: dict = field(default_factory=dict)


class TailIntegrator:
    """Right-tail integrals int_s^oo f(u) du for integrands decaying
    at least like e^{-u}; Gauss-Legendre on [s, s+L] with the cutoff
    chosen so the neglected remainder is below double rounding."""

    def __init__(self, nodes: int = _TAIL_NODES, cutoff: float = TAIL_CUTOFF):
        self.nodes = int(nodes)
        self.cutoff = float(cutoff)

    def integrate(self, f, s):
        pts, wts = tail_mesh(s, self.nodes, self.cutoff)
        vals = np.asarray(f(pts.ravel()), dtype=float).reshape(pts.shape)
        out = np.sum(wts * vals, axis=1)
        return float(out[0]) if np.ndim(s) == 0 else out

    def integrate_checked(self, f, s, tol: float = 1e-10):
        coarse = self.integrate(f, s)
        fine = TailIntegrator(2 * self.nodes, self.cutoff).integrate(f, s)
        if np.max(np.abs(np.asarray(fine) - np.asarray(coarse))) > tol:
            raise AccuracyError("tail integral did not converge under node doubling")
        return fine


# ---------------------------------------------------------------------------
# Christoffel-Darboux combines (broadcast-ready ingredient arithmetic)

def _near_diag(x, den):
    # indices of near-diagonal points plus gathered row values
    mask = np.abs(den) < _DIAG_TOL * (1.0 + np.abs(x))
    idx = np.nonzero(mask)
    return idx if idx[0].size else None


def _gather(shape, idx, *args):
    return tuple(np.broadcast_to(a, shape)[idx] for a in args)


def _sn2_combine(N, x, f1, g1, fp1, gp1, f2, g2, den):
    """S_{N,2} from wave values; near-diagonal entries by series in den."""
    coef = math.sqrt(0.5 * N)
    with np.errstate(divide="ignore", invalid="ignore"):
        gen = coef * (f1 * g2 - g1 * f2) / den
    idx = _near_diag(x, den)
    if idx is not None:
        kn = 2.0 * N + 1.0
        knm = 2.0 * N - 1.0
        xm, fm, gm, fpm, gpm, dm = _gather(gen.shape, idx, x, f1, g1, fp1, gp1, den)
        p1 = fpm * gm - fm * gpm
        p3 = (xm * xm - knm) * fm * gpm - (xm * xm - kn) * fpm * gm
        gen[idx] = coef * (p1 + dm * fm * gm - dm * dm * p3 / 6.0)
    return gen


def _sn2_d2_combine(N, x, f1, g1, fp1, gp1, f2, g2, fp2, gp2, den):
    """d/dy S_{N,2}(x, y) from wave values and ladder derivatives."""
    coef = math.sqrt(0.5 * N)
    with np.errstate(divide="ignore", invalid="ignore"):
        gen = coef * ((f1 * gp2 - g1 * fp2) * den + (f1 * g2 - g1 * f2)) / (den * den)
    idx = _near_diag(x, den)
    if idx is not None:
        kn = 2.0 * N + 1.0
        knm = 2.0 * N - 1.0
        xm, fm, gm, fpm, gpm, dm = _gather(gen.shape, idx, x, f1, g1, fp1, gp1, den)
        p3 = (xm * xm - knm) * fm * gpm - (xm * xm - kn) * fpm * gm
        gen[idx] = -coef * (fm * gm - dm * p3 / 3.0)
    return gen


def _airy_combine(s, a1, ap1, a2, ap2, den):
    """Airy kernel (Ai(s)Ai'(t) - Ai'(s)Ai(t))/(s-t) with diagonal series."""
    with np.errstate(divide="ignore", invalid="ignore"):
        gen = (a1 * ap2 - ap1 * a2) / den
    idx = _near_diag(s, den)
    if idx is not None:
        sm, am, apm, dm = _gather(gen.shape, idx, s, a1, ap1, den)
        gen[idx] = (
            apm * apm
            - sm * am * am
            + dm * am * am / 2.0
            + dm * dm * (sm * apm * apm - am * apm - sm * sm * am * am) / 6.0
        )
    return gen


def _airy_d2_combine(s, a1, ap1, t, a2, ap2, den):
    """d/dt of the Airy kernel, using Ai''(t) = t Ai(t)."""
    with np.errstate(divide="ignore", invalid="ignore"):
        gen = ((a1 * t * a2 - ap1 * ap2) * den + (a1 * ap2 - ap1 * a2)) / (den * den)
    idx = _near_diag(s, den)
    if idx is not None:
        sm, am, apm, dm = _gather(gen.shape, idx, s, a1, ap1, den)
        gen[idx] = -(am * am / 2.0 + dm * (sm * apm * apm - am * apm - sm * sm * am * am) / 3.0)
    return gen


def _wave_values(N, x):
    """phi_N, phi_{N-1} and their ladder derivatives at x (flat array)."""
    f, g = _phi_pair(N, x)
    rt = math.sqrt(2.0 * N)
    return f, g, -x * f + rt * g, x * g - rt * f


# ---------------------------------------------------------------------------
# finite-N GUE kernel

def _sn2_grid(N, xs, ys):
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    f1, g1, fp1, gp1 = _wave_values(N, xs)
    f2, g2, _, _ = _wave_values(N, ys)
    return _sn2_combine(
        N,
        xs[:, None],
        f1[:, None],
        g1[:, None],
        fp1[:, None],
        gp1[:, None],
        f2[None, :],
        g2[None, :],
        xs[:, None] - ys[None, :],
    )


def _sn2_pointwise(N, x, y):
    X, Y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    xf = X.ravel()
    yf = Y.ravel()
    f1, g1, fp1, gp1 = _wave_values(N, xf)
    f2, g2, _, _ = _wave_values(N, yf)
    out = _sn2_combine(N, xf, f1, g1, fp1, gp1, f2, g2, xf - yf)
    return out.reshape(X.shape)


def _sn2_sum(N, x, y):
    X, Y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    lx = _phi_ladder(N - 1, X.ravel())
    ly = _phi_ladder(N - 1, Y.ravel())
    return np.sum(lx * ly, axis=0).reshape(X.shape)


def _sn2_diamond(N, x, y, nodes=480):
    ctx = wave_context(N)
    X, Y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    xf = X.ravel()
    yf = Y.ravel()
    zmax = max(12.0, ctx.u_N + 12.0 - min(xf.min(), yf.min()))
    rule = finite_rule(0.0, zmax, nodes)
    z = rule.nodes[None, :]
    fx, gx = _phi_pair(N, (xf[:, None] + z).ravel())
    fy, gy = _phi_pair(N, (yf[:, None] + z).ravel())
    shape = (xf.size, nodes)
    fx, gx, fy, gy = (a.reshape(shape) for a in (fx, gx, fy, gy))
    norm = math.sqrt(2.0 * N)  # (2N)^{1/4} per factor
    integrand = 0.5 * norm * (fx * gy + gx * fy)
    out = integrand @ rule.weights
    return out.reshape(X.shape)


def gue_kernel(N: int, x, y, method: str = "cd"):
    """Finite-N GUE kernel S_{N,2}(x, y).

    ``method`` selects the representation: 'cd' (closed Christoffel-
    Darboux form, O(1) per point after the wave recurrence), 'sum'
    (explicit sum over degrees < N) or 'diamond' (tail integral of
    wave products).  The three agree to quadrature accuracy.
    """
    if N < 1:
        raise ValueError(f"gue_kernel: need N >= 1, got {N}")
    if method == "cd":
        out = _sn2_pointwise(N, x, y)
    elif method == "sum":
        out = _sn2_sum(N, x, y)
    elif method == "diamond":
        out = _sn2_diamond(N, x, y)
    else:
        raise ValueError(f"unknown method {method!r}")
    return float(out) if np.ndim(x) == 0 and np.ndim(y) == 0 else out


def gue_kernel_op(N: int) -> ScalarKernel:
    """S_{N,2} as a kernel object (unscaled coordinates)."""
    return ScalarKernel(
        eval=lambda x, y: gue_kernel(N, x, y),
        grid_eval=lambda xs, ys: _sn2_grid(N, xs, ys),
        meta={"ensemble": "GUE", "N": N, "scaled": False},
    )


def rescaled_gue_kernel(N: int, spec: CenteringSpec, s, t):
    """Edge-rescaled kernel S_tau(s, t) = tau_N S_{N,2}(mu + tau s, mu + tau t)."""
    mu, tau = centering(spec, N)
    out = tau * _sn2_pointwise(N, mu + tau * np.asarray(s, dtype=float), mu + tau * np.asarray(t, dtype=float))
    return float(out) if np.ndim(s) == 0 and np.ndim(t) == 0 else out


def rescaled_gue_kernel_op(N: int, spec: CenteringSpec) -> ScalarKernel:
    mu, tau = centering(spec, N)
    return ScalarKernel(
        eval=lambda s, t: rescaled_gue_kernel(N, spec, s, t),
        grid_eval=lambda sv, tv: tau * _sn2_grid(N, mu + tau * np.asarray(sv, float), mu + tau * np.asarray(tv, float)),
        meta={"ensemble": "GUE", "N": N, "variant": spec.variant, "mu": mu, "tau": tau},
    )


# ---------------------------------------------------------------------------
# Airy kernel

def _airy_grid(sv, tv):
    sv = np.atleast_1d(np.asarray(sv, dtype=float))
    tv = np.atleast_1d(np.asarray(tv, dtype=float))
    a1, ap1 = airy_ai(sv), airy_ai_prime(sv)
    a2, ap2 = airy_ai(tv), airy_ai_prime(tv)
    return _airy_combine(
        sv[:, None], a1[:, None], ap1[:, None], a2[None, :], ap2[None, :], sv[:, None] - tv[None, :]
    )


def airy_kernel(s, t):
    """Airy kernel S_A(s, t) in closed Christoffel-Darboux form."""
    S, T = np.broadcast_arrays(np.asarray(s, dtype=float), np.asarray(t, dtype=float))
    sf, tf = S.ravel(), T.ravel()
    a1, ap1 = airy_ai(sf), airy_ai_prime(sf)
    a2, ap2 = airy_ai(tf), airy_ai_prime(tf)
    out = _airy_combine(sf, np.atleast_1d(a1), np.atleast_1d(ap1), np.atleast_1d(a2), np.atleast_1d(ap2), sf - tf)
    out = out.reshape(S.shape)
    return float(out) if np.ndim(s) == 0 and np.ndim(t) == 0 else out


def airy_kernel_op() -> ScalarKernel:
    return ScalarKernel(eval=airy_kernel, grid_eval=_airy_grid, meta={"ensemble": "limit"})


# ---------------------------------------------------------------------------
# diamond operator and the eps calculus

def diamond(a, b, s, t, nodes: int = 160):
    """(a <> b)(s, t) = int_0^oo a(s+z) b(t+z) dz with a doubling check.

    Caller contract: a and b decay at least like e^{-z/2} along the ray.
    """
    S, T = np.broadcast_arrays(np.asarray(s, dtype=float), np.asarray(t, dtype=float))
    sf, tf = S.ravel(), T.ravel()
    zmax = max(24.0, 0.5 * (41.0 - float(np.min(sf + tf))))

    def quad(m):
        rule = finite_rule(0.0, zmax, m)
        z = rule.nodes[None, :]
        av = np.asarray(a((sf[:, None] + z).ravel()), dtype=float).reshape(sf.size, m)
        bv = np.asarray(b((tf[:, None] + z).ravel()), dtype=float).reshape(sf.size, m)
        return (av * bv) @ rule.weights

    coarse = quad(nodes)
    fine = quad(2 * nodes)
    if np.max(np.abs(fine - coarse)) > 1e-8:
        raise AccuracyError("diamond: quadrature did not converge under node doubling")
    out = fine.reshape(S.shape)
    return float(out) if np.ndim(s) == 0 and np.ndim(t) == 0 else out


def eps_psi(N: int, t, nodes: int = _TAIL_NODES):
    """(eps psi)(y) at the rescaled point t, via beta_{N-1} - (eps-tilde psi_tau)(t).

    Uses the degree-(N-1) wave rescaled with the theorem GOE centering
    mu = sqrt(2N+1); requires N - 1 even so the wave has nonzero mass.
    """
    ctx = wave_context(N)
    if ctx.beta_Nm1 is None:
        raise ValueError("eps_psi: requires N - 1 even (GOE setting N + 1 even)")
    norm = (2.0 * N) ** 0.25 * ctx.tau_N

    def psi_tau(u):
        return norm * _phi_pair(N, ctx.u_N + ctx.tau_N * u)[1]

    tail = TailIntegrator(nodes).integrate(psi_tau, t)
    return ctx.beta_Nm1 - tail


def goe_scalar_kernel(N: int, x, y):
    """GOE scalar kernel S_{N+1,1}(x, y) = S_{N,2}(x, y) + (1/2) phi(x) (eps psi)(y)."""
    ctx = wave_context(N)
    if ctx.beta_Nm1 is None:
        raise ValueError("goe_scalar_kernel: requires N - 1 even")
    xv = np.asarray(x, dtype=float)
    yv = np.asarray(y, dtype=float)
    phi = (2.0 * N) ** 0.25 * _phi_pair(N, xv)[0]
    epsv = np.asarray(eps_psi(N, (yv - ctx.u_N) / ctx.tau_N))
    out = _sn2_pointwise(N, xv, yv) + 0.5 * phi * epsv
    return float(out) if np.ndim(x) == 0 and np.ndim(y) == 0 else out


# ---------------------------------------------------------------------------
# GOE 2x2 matrix kernels

def _pointwise_entry(grids_fn, idx):
    def entry(s, t):
        S, T = np.broadcast_arrays(np.asarray(s, dtype=float), np.asarray(t, dtype=float))
        G = grids_fn(S.ravel(), T.ravel())[idx]
        out = np.diagonal(G).copy().reshape(S.shape)
        return float(out) if np.ndim(s) == 0 and np.ndim(t) == 0 else out

    return entry


def goe_matrix_kernel_finite(N: int, spec: CenteringSpec, tail_nodes: int = _TAIL_NODES) -> MatrixKernel2:
    """Finite-N GOE matrix kernel K_tau under the given centering.

    Entries are assembled from the rescaled GUE kernel, the degree-N
    and degree-(N-1) waves, and their right-tail integrals; the bare
    eps(s-t) of entry (2,1) is flagged, not evaluated.
    """
    ctx = wave_context(N)
    if spec.ensemble != "GOE":
        raise ValueError("goe_matrix_kernel_finite: spec must be a GOE centering")
    if ctx.beta_Nm1 is None:
        raise ValueError("goe_matrix_kernel_finite: requires N - 1 even")
    beta = ctx.beta_Nm1
    mu, tau = centering(spec, N)
    norm = (2.0 * N) ** 0.25 * tau  # wave normalization in scaled coordinates
    rt2n = math.sqrt(2.0 * N)

    def waves(pts):
        x = mu + tau * np.asarray(pts, dtype=float)
        f, g = _phi_pair(N, x)
        return x, f, g, -x * f + rt2n * g, x * g - rt2n * f

    def phi_tau(pts):
        return norm * _phi_pair(N, mu + tau * np.asarray(pts, dtype=float))[0]

    def psi_tau(pts):
        return norm * _phi_pair(N, mu + tau * np.asarray(pts, dtype=float))[1]

    tailint = TailIntegrator(tail_nodes)

    def _grids(sv, tv, fold_at=None):
        sv = np.atleast_1d(np.asarray(sv, dtype=float))
        tv = np.atleast_1d(np.asarray(tv, dtype=float))
        fold = fold_at is not None
        # rows for the tail integrals; in fold mode prepend the left
        # endpoint so the (eps_1 .)(s0, t) row comes from the same pass
        rows = np.concatenate(([float(fold_at)], sv)) if fold else sv
        x1, f1, g1, fp1, gp1 = waves(sv)
        y2, f2, g2, fp2, gp2 = waves(tv)
        den = x1[:, None] - y2[None, :]
        stau = tau * _sn2_combine(
            N, x1[:, None], f1[:, None], g1[:, None], fp1[:, None], gp1[:, None],
            f2[None, :], g2[None, :], den,
        )
        dstau = tau * tau * _sn2_d2_combine(
            N, x1[:, None], f1[:, None], g1[:, None], fp1[:, None], gp1[:, None],
            f2[None, :], g2[None, :], fp2[None, :], gp2[None, :], den,
        )
        phis, phit = norm * f1, norm * f2
        psit = norm * g2
        etpsi_t = tailint.integrate(psi_tau, tv)
        etpsi_s = tailint.integrate(psi_tau, sv)
        etphi_t = tailint.integrate(phi_tau, tv)
        etphi_rows = tailint.integrate(phi_tau, rows)

        pts, wts = tail_mesh(rows, tail_nodes)
        xu, fu, gu, fpu, gpu = waves(pts.ravel())
        xu, fu, gu, fpu, gpu = (a.reshape(pts.shape) for a in (xu, fu, gu, fpu, gpu))
        denu = xu[:, :, None] - y2[None, None, :]
        su = tau * _sn2_combine(
            N, xu[:, :, None], fu[:, :, None], gu[:, :, None], fpu[:, :, None], gpu[:, :, None],
            f2[None, None, :], g2[None, None, :], denu,
        )
        et1s = np.einsum("ik,ikj->ij", wts, su)
        if fold:
            du = tau * tau * _sn2_d2_combine(
                N, xu[:, :, None], fu[:, :, None], gu[:, :, None], fpu[:, :, None], gpu[:, :, None],
                f2[None, None, :], g2[None, None, :], fp2[None, None, :], gp2[None, None, :], denu,
            )
            et1d = np.einsum("ik,ikj->ij", wts, du)

        k11 = stau - 0.5 * phis[:, None] * etpsi_t[None, :] + 0.5 * beta * phis[:, None]
        k12 = -dstau - 0.5 * phis[:, None] * psit[None, :]
        k22 = stau - 0.5 * etpsi_s[:, None] * phit[None, :] + 0.5 * beta * phit[None, :]
        if not fold:
            etphi_s = etphi_rows
            k21 = (
                -et1s
                + 0.5 * etphi_s[:, None] * etpsi_t[None, :]
                - 0.5 * beta * etphi_s[:, None]
                + 0.5 * beta * etphi_t[None, :]
            )
            return k11, k12, k21, k22
        # fold of the eps block: B = A + K_eps A, exact because the eps
        # block is nilpotent of order two; the (2,1) entry collapses to a
        # function of t alone and (2,2) picks up tail integrals of d2
        etphi_0, etphi_s = etphi_rows[0], etphi_rows[1:]
        b21_row = (
            0.5 * beta * etphi_t
            - 0.5 * (et1s[0] - 0.5 * etphi_0 * etpsi_t)
            - 0.25 * beta * etphi_0
        )
        b21 = np.broadcast_to(b21_row[None, :], (sv.size, tv.size)).copy()
        et1d2g = et1d[1:] + 0.5 * etphi_s[:, None] * psit[None, :]
        et1d2g_0 = et1d[0] + 0.5 * etphi_0 * psit
        b22 = k22 + 0.5 * et1d2g_0[None, :] - et1d2g
        return k11, k12, b21, b22

    def entry_grids(sv, tv):
        return _grids(sv, tv)

    def fold_grids(sv, tv, s0):
        return _grids(sv, tv, fold_at=float(s0))

    meta = {"ensemble": "GOE", "N": N, "variant": spec.variant, "mu": mu, "tau": tau, "beta": beta}
    return MatrixKernel2(
        k11=_pointwise_entry(entry_grids, 0),
        k12=_pointwise_entry(entry_grids, 1),
        k21=_pointwise_entry(entry_grids, 2),
        k22=_pointwise_entry(entry_grids, 3),
        eps_in_21=True,
        entry_grids=entry_grids,
        fold_grids=fold_grids,
        meta=meta,
    )


def goe_matrix_kernel_limit(tail_nodes: int = _TAIL_NODES) -> MatrixKernel2:
    """Limiting GOE matrix kernel built from the Airy function."""
    tailint = TailIntegrator(tail_nodes)

    def ai_vals(pts):
        return airy_ai(pts), airy_ai_prime(pts)

    def sa_grid(sv, tv):
        a1, ap1 = ai_vals(sv)
        a2, ap2 = ai_vals(tv)
        return _airy_combine(sv[:, None], a1[:, None], ap1[:, None], a2[None, :], ap2[None, :], sv[:, None] - tv[None, :])

    def dsa_grid(sv, tv):
        a1, ap1 = ai_vals(sv)
        a2, ap2 = ai_vals(tv)
        return _airy_d2_combine(
            sv[:, None], a1[:, None], ap1[:, None], tv[None, :], a2[None, :], ap2[None, :], sv[:, None] - tv[None, :]
        )

    def _grids(sv, tv, fold_at=None):
        sv = np.atleast_1d(np.asarray(sv, dtype=float))
        tv = np.atleast_1d(np.asarray(tv, dtype=float))
        fold = fold_at is not None
        rows = np.concatenate(([float(fold_at)], sv)) if fold else sv
        a_s = airy_ai(sv)
        a_t = airy_ai(tv)
        eta_t = tailint.integrate(airy_ai, tv)
        eta_s = tailint.integrate(airy_ai, sv)
        eta_rows = tailint.integrate(airy_ai, rows) if fold else eta_s

        pts, wts = tail_mesh(rows, tail_nodes)
        au, apu = ai_vals(pts.ravel())
        au, apu = au.reshape(pts.shape), apu.reshape(pts.shape)
        a2, ap2 = ai_vals(tv)
        den = pts[:, :, None] - tv[None, None, :]
        su = _airy_combine(
            pts[:, :, None], au[:, :, None], apu[:, :, None], a2[None, None, :], ap2[None, None, :], den
        )
        et1s = np.einsum("ik,ikj->ij", wts, su)
        if fold:
            du = _airy_d2_combine(
                pts[:, :, None], au[:, :, None], apu[:, :, None], tv[None, None, :],
                a2[None, None, :], ap2[None, None, :], den,
            )
            et1d = np.einsum("ik,ikj->ij", wts, du)

        k11 = sa_grid(sv, tv) - 0.5 * a_s[:, None] * eta_t[None, :] + 0.5 * a_s[:, None]
        k12 = -dsa_grid(sv, tv) - 0.5 * a_s[:, None] * a_t[None, :]
        k22 = sa_grid(sv, tv) - 0.5 * eta_s[:, None] * a_t[None, :] + 0.5 * a_t[None, :]
        if not fold:
            k21 = (
                -et1s
                + 0.5 * eta_s[:, None] * eta_t[None, :]
                - 0.5 * eta_s[:, None]
                + 0.5 * eta_t[None, :]
            )
            return k11, k12, k21, k22
        eta_0 = eta_rows[0]
        b21_row = 0.5 * eta_t - 0.5 * (et1s[0] - 0.5 * eta_0 * eta_t) - 0.25 * eta_0
        b21 = np.broadcast_to(b21_row[None, :], (sv.size, tv.size)).copy()
        et1d2c = et1d[1:] + 0.5 * eta_s[:, None] * a_t[None, :]
        et1d2c_0 = et1d[0] + 0.5 * eta_0 * a_t
        b22 = k22 + 0.5 * et1d2c_0[None, :] - et1d2c
        return k11, k12, b21, b22

    def entry_grids(sv, tv):
        return _grids(sv, tv)

    def fold_grids(sv, tv, s0):
        return _grids(sv, tv, fold_at=float(s0))

    return MatrixKernel2(
        k11=_pointwise_entry(entry_grids, 0),
        k12=_pointwise_entry(entry_grids, 1),
        k21=_pointwise_entry(entry_grids, 2),
        k22=_pointwise_entry(entry_grids, 3),
        eps_in_21=True,
        entry_grids=entry_grids,
        fold_grids=fold_grids,
        meta={"ensemble": "GOE", "N": None, "variant": "limit"},
    )
