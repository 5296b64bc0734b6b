"""Quadrature primitives shared by the kernel and determinant modules.

Gauss-Legendre rules come from scipy; the semi-infinite rule maps them to
(s0, oo) through the rational transform s = s0 + L*(1+u)/(1-u), which is
root-exponentially convergent for integrands decaying like e^{-s}.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_legendre

#: scale of the rational map used for semi-infinite rules
SEMI_INFINITE_SCALE = 4.0

#: right endpoint such that an e^{-s} envelope is below double rounding
TAIL_CUTOFF = 42.0


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights on a finite interval or a transformed half line.

    ``domain`` is ``("finite", a, b)`` or ``("semi_infinite", s0, scale)``.
    """

    nodes: np.ndarray
    weights: np.ndarray
    domain: tuple


@functools.lru_cache(maxsize=128)
def _leg(m: int):
    x, w = roots_legendre(m)
    return x, w


def gauss_legendre(m: int) -> QuadratureRule:
    """m-node Gauss-Legendre rule on [-1, 1] (exact through degree 2m-1)."""
    if not 1 <= m <= 2000:
        raise ValueError(f"gauss_legendre: m must be in [1, 2000], got {m}")
    x, w = _leg(int(m))
    return QuadratureRule(x.copy(), w.copy(), ("finite", -1.0, 1.0))


def finite_rule(a: float, b: float, m: int) -> QuadratureRule:
    """Gauss-Legendre rule mapped to [a, b]."""
    if not b > a:
        raise ValueError("finite_rule: need b > a")
    x, w = _leg(int(m))
    half = 0.5 * (b - a)
    return QuadratureRule(a + half * (x + 1.0), half * w, ("finite", float(a), float(b)))


def semi_infinite_rule(s0: float, m: int, scale: float = SEMI_INFINITE_SCALE) -> QuadratureRule:
    """Rule for integrals over (s0, oo) of exponentially decaying integrands."""
    if m < 8:
        raise ValueError(f"semi_infinite_rule: need m >= 8, got {m}")
    u, w = _leg(int(m))
    nodes = s0 + scale * (1.0 + u) / (1.0 - u)
    weights = w * 2.0 * scale / (1.0 - u) ** 2
    return QuadratureRule(nodes, weights, ("semi_infinite", float(s0), float(scale)))


def tail_mesh(s, m: int, cutoff: float = TAIL_CUTOFF, min_len: float = 8.0):
    """Per-row Gauss-Legendre meshes for right-tail integrals from each s_i.

    Returns node and weight arrays of shape (len(s), m) covering
    [s_i, max(cutoff, s_i + min_len)]; beyond the cutoff an e^{-s}
    envelope is below 1e-16 of the value, so no closure term is added.
    """
    s = np.atleast_1d(np.asarray(s, dtype=float))
    x, w = _leg(int(m))
    upper = np.maximum(cutoff, s + min_len)
    half = 0.5 * (upper - s)
    pts = s[:, None] + half[:, None] * (x[None, :] + 1.0)
    wts = half[:, None] * w[None, :]
    return pts, wts
