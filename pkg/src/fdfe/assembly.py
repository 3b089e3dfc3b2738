"""Stiffness matrix, trapezoid weight matrix, load vectors, and band solver.

The same tridiagonal matrix S serves both discretizations: row j is the
difference stencil scaled by (h_j + h_{j+1})/2, and entrywise it equals the
piecewise-linear element integrals a(phi_i, phi_j).  The two right-hand
sides differ: the difference method uses the weighted point values W*f,
the element method the integrals (f, phi_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .mesh import Mesh1D
from .quadrature import gauss_rule, nodal_weights, sample_function

__all__ = [
    "DataError",
    "SolveBreakdownError",
    "TriDiagonalMatrix",
    "DiagonalWeights",
    "fd_stencil",
    "stiffness",
    "weight_matrix",
    "fd_load",
    "fe_load",
    "solve_tridiagonal",
    "tridiagonal_residual",
]

_PIVOT_FLOOR = 1e-300


class DataError(RuntimeError):
    """A sampled data value was not finite."""


class SolveBreakdownError(RuntimeError):
    """Elimination hit a vanishing pivot; the system is not SPD."""


@dataclass(frozen=True, eq=False)
class TriDiagonalMatrix:
    """Three-band storage of an m x m tridiagonal matrix."""

    lower: np.ndarray
    diag: np.ndarray
    upper: np.ndarray

    def __post_init__(self) -> None:
        lower = np.asarray(self.lower, dtype=float)
        diag = np.asarray(self.diag, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        m = diag.size
        if lower.shape != (m - 1,) or upper.shape != (m - 1,):
            raise ValueError("band lengths must be m-1, m, m-1")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "upper", upper)

    @property
    def m(self) -> int:
        return self.diag.size

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """Product with a vector (m,) or with the rows of a matrix (m, k)."""
        v = np.asarray(v, dtype=float)
        if v.shape[0] != self.m:
            raise ValueError("dimension mismatch")
        if v.ndim == 1:
            out = self.diag * v
            out[1:] += self.lower * v[:-1]
            out[:-1] += self.upper * v[1:]
        else:
            out = self.diag[:, None] * v
            out[1:] += self.lower[:, None] * v[:-1]
            out[:-1] += self.upper[:, None] * v[1:]
        return out

    def to_dense(self) -> np.ndarray:
        return (
            np.diag(self.diag)
            + np.diag(self.lower, -1)
            + np.diag(self.upper, 1)
        )


@dataclass(frozen=True, eq=False)
class DiagonalWeights:
    """Diagonal matrix of trapezoid weights (h_j + h_{j+1})/2, all positive."""

    weights: np.ndarray


def fd_stencil(h_left: float, h_right: float) -> tuple[float, float, float]:
    """Three-point coefficients approximating -u'' at the middle node.

    Derived from the quadratic interpolant through the three nodes; the
    coefficients sum to zero, and scaling the row by (h_left + h_right)/2
    gives (-1/h_left, 1/h_left + 1/h_right, -1/h_right).
    """
    if h_left <= 0.0 or h_right <= 0.0:
        raise ValueError("element widths must be positive")
    span = h_left + h_right
    return (
        -2.0 / (h_left * span),
        2.0 / (h_left * h_right),
        -2.0 / (h_right * span),
    )


def stiffness(mesh: Mesh1D) -> TriDiagonalMatrix:
    """Tridiagonal matrix with rows (-1/h_j, 1/h_j + 1/h_{j+1}, -1/h_{j+1})."""
    inv = 1.0 / mesh.widths
    diag = inv[:-1] + inv[1:]
    off = -inv[1:-1]
    return TriDiagonalMatrix(off, diag, off)


def weight_matrix(mesh: Mesh1D) -> DiagonalWeights:
    """Trapezoid weights attached to the interior nodes."""
    return DiagonalWeights(nodal_weights(mesh))


def fd_load(f: Callable, mesh: Mesh1D) -> np.ndarray:
    """Right-hand side of the difference system: component j is w_j * f(x_j)."""
    values = sample_function(f, mesh.interior)
    bad = ~np.isfinite(values)
    if np.any(bad):
        j = int(np.argmax(bad))
        raise DataError(
            f"f is not finite at node j={j + 1}, x={mesh.interior[j]!r}"
        )
    return nodal_weights(mesh) * values


def fe_load(f: Callable, mesh: Mesh1D, quad_order: int = 10) -> np.ndarray:
    """Right-hand side of the element system: component j is (f, phi_j).

    Each element integral uses the mapped Gauss rule of the given order, so
    the result is exact whenever f is a polynomial of degree at most
    2*quad_order - 2 (the hat factor adds one degree).
    """
    if quad_order < 1:
        raise ValueError("quad_order must be at least 1")
    rule = gauss_rule(quad_order)
    t = 0.5 * (rule.points + 1.0)  # element-local coordinate in [0, 1]
    w = 0.5 * rule.weights
    h = mesh.widths
    x = mesh.nodes[:-1, None] + np.outer(h, t)
    values = sample_function(f, x)
    bad = ~np.isfinite(values)
    if np.any(bad):
        where = np.argwhere(bad)[0]
        raise DataError(f"f is not finite at quadrature point x={x[tuple(where)]!r}")
    rising = h * ((values * t) @ w)  # integral of f * (x - x_{i-1})/h_i per element
    falling = h * ((values * (1.0 - t)) @ w)
    return rising[:-1] + falling[1:]


def solve_tridiagonal(S: TriDiagonalMatrix, b: np.ndarray) -> np.ndarray:
    """Direct elimination without pivoting for an SPD tridiagonal system.

    Raises SolveBreakdownError if a pivot falls below 1e-300, which signals
    a non-SPD input.  O(m) time.
    """
    b = np.asarray(b, dtype=float)
    m = S.m
    if b.shape != (m,):
        raise ValueError("right-hand side length does not match the matrix")
    d = S.diag.copy()
    y = b.copy()
    for i in range(1, m):
        if abs(d[i - 1]) < _PIVOT_FLOOR:
            raise SolveBreakdownError(f"pivot underflow at row {i - 1}")
        factor = S.lower[i - 1] / d[i - 1]
        d[i] -= factor * S.upper[i - 1]
        y[i] -= factor * y[i - 1]
    if abs(d[-1]) < _PIVOT_FLOOR:
        raise SolveBreakdownError(f"pivot underflow at row {m - 1}")
    y[-1] /= d[-1]
    for i in range(m - 2, -1, -1):
        y[i] = (y[i] - S.upper[i] * y[i + 1]) / d[i]
    return y


def tridiagonal_residual(S: TriDiagonalMatrix, y: np.ndarray, b: np.ndarray) -> float:
    """Max-norm residual ||S y - b||_inf."""
    return float(np.max(np.abs(S.matvec(np.asarray(y, dtype=float)) - b)))
