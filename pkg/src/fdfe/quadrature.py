"""Gauss-Legendre quadrature and composite trapezoid sums on mesh nodes.

The composite trapezoid rule here comes in two flavours: ``ctr`` acts on
nodal values of a function that vanishes at both endpoints (so only interior
values enter, with weights (h_i + h_{i+1})/2), while ``ctr_interval`` is the
standard trapezoid sum over an arbitrary partition, endpoint values included.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .mesh import Mesh1D

__all__ = [
    "GaussRule",
    "gauss_rule",
    "gauss_integrate",
    "ctr",
    "ctr_interval",
    "ctr_error_bound",
    "nodal_weights",
    "sample_function",
]

_NEWTON_TOL = 1e-15


def sample_function(f: Callable, x: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` on an array, falling back to per-point calls.

    Vectorized callables (numpy ufunc style) are evaluated in one shot;
    scalar-only callables are looped over.
    """
    x = np.asarray(x, dtype=float)
    try:
        out = np.asarray(f(x), dtype=float)
        if out.shape == x.shape:
            return out
    except (TypeError, ValueError):
        pass
    flat = np.array([float(f(v)) for v in x.ravel()])
    return flat.reshape(x.shape)


@dataclass(frozen=True, eq=False)
class GaussRule:
    """Gauss-Legendre points and weights on the reference interval [-1, 1]."""

    order: int
    points: np.ndarray
    weights: np.ndarray


def _legendre(order: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Three-term recurrence; returns (P_n(x), P_n'(x)) for interior x.
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, order + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    dp = order * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


@lru_cache(maxsize=None)
def gauss_rule(order: int) -> GaussRule:
    """Gauss-Legendre rule of the given order, generated at first use.

    Roots of the Legendre polynomial are found by Newton iteration from the
    Chebyshev-like initial guess, to absolute tolerance 1e-15.
    """
    if order < 1:
        raise ValueError("Gauss rule order must be at least 1")
    if order == 1:
        points = np.zeros(1)
        weights = np.full(1, 2.0)
    else:
        k = np.arange(1, order + 1)
        x = np.cos(np.pi * (k - 0.25) / (order + 0.5))
        for _ in range(100):
            p, dp = _legendre(order, x)
            dx = p / dp
            x -= dx
            if np.max(np.abs(dx)) < _NEWTON_TOL:
                break
        _, dp = _legendre(order, x)
        w = 2.0 / ((1.0 - x * x) * dp * dp)
        # the exact rule is symmetric; enforce it to the last bit
        x = 0.5 * (x - x[::-1])
        w = 0.5 * (w + w[::-1])
        idx = np.argsort(x)
        points, weights = x[idx], w[idx]
    points.setflags(write=False)
    weights.setflags(write=False)
    return GaussRule(order, points, weights)


def gauss_integrate(g: Callable, a: float, b: float, order: int) -> float:
    """Integrate ``g`` over [a, b] with the affinely mapped Gauss rule.

    Exact for polynomials of degree <= 2*order - 1.
    """
    if not a < b:
        raise ValueError("gauss_integrate requires a < b")
    rule = gauss_rule(order)
    x = 0.5 * (a + b) + 0.5 * (b - a) * rule.points
    return float(0.5 * (b - a) * np.dot(rule.weights, sample_function(g, x)))


def nodal_weights(mesh: Mesh1D) -> np.ndarray:
    """Trapezoid weights (h_i + h_{i+1})/2 attached to the interior nodes."""
    return 0.5 * (mesh.widths[:-1] + mesh.widths[1:])


def ctr(theta_values, mesh: Mesh1D) -> float:
    """Composite trapezoid sum over the mesh for boundary-vanishing data.

    ``theta_values`` are the values at the interior nodes of a function that
    conceptually vanishes at x = 0 and x = 1.  Equals the exact integral of
    the piecewise-linear interpolant of those values.
    """
    values = np.asarray(theta_values, dtype=float)
    if values.shape != (mesh.n - 1,):
        raise ValueError(
            f"expected {mesh.n - 1} interior values, got shape {values.shape}"
        )
    return float(np.dot(values, nodal_weights(mesh)))


def ctr_interval(theta: Callable, partition) -> float:
    """Standard composite trapezoid sum of ``theta`` over a partition of [a, b]."""
    t = np.asarray(partition, dtype=float)
    if t.ndim != 1 or t.size < 2:
        raise ValueError("partition needs at least two points")
    if not np.all(np.diff(t) > 0.0):
        raise ValueError("partition must be strictly increasing")
    y = sample_function(theta, t)
    return float(np.dot(np.diff(t), 0.5 * (y[:-1] + y[1:])))


def ctr_error_bound(h: float, length: float, theta_second_sup: float) -> float:
    """Trapezoid error bound (length/12) * h**2 * sup|theta''|."""
    if h < 0.0 or length < 0.0 or theta_second_sup < 0.0:
        raise ValueError("ctr_error_bound arguments must be nonnegative")
    return (length / 12.0) * h * h * theta_second_sup
