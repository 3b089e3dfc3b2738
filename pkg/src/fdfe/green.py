"""Green function of -u'' = f on (0, 1) with zero boundary values.

G(x, s) = s(1-x) for s <= x and x(1-s) for s > x, equivalently
min(x, s) * (1 - max(x, s)).  Scaling the tent function that peaks at s by
s(1-s) recovers G, which is what ties the nodal solve to the Green matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mesh import Mesh1D

__all__ = ["green_eval", "phi_s_eval", "GreenMatrix", "green_matrix"]


def green_eval(x, s):
    """Evaluate G(x, s); accepts scalars or equal-shaped arrays.

    At s = x both branches agree; the s <= x branch is taken so the
    function is total and deterministic.
    """
    x_arr = np.asarray(x, dtype=float)
    s_arr = np.asarray(s, dtype=float)
    if np.any(x_arr < 0.0) or np.any(x_arr > 1.0) or np.any(s_arr < 0.0) or np.any(s_arr > 1.0):
        raise ValueError("green_eval arguments must lie in [0, 1]")
    out = np.where(s_arr <= x_arr, s_arr * (1.0 - x_arr), x_arr * (1.0 - s_arr))
    return float(out) if out.ndim == 0 else out


def phi_s_eval(s: float, x):
    """Tent function peaking at s: x/s on [0, s], (1-x)/(1-s) on (s, 1].

    Requires 0 < s < 1; the peak value at x = s is exactly 1.
    """
    if not 0.0 < s < 1.0:
        raise ValueError("phi_s_eval requires 0 < s < 1")
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr < 0.0) or np.any(x_arr > 1.0):
        raise ValueError("phi_s_eval evaluation points must lie in [0, 1]")
    out = np.where(x_arr <= s, x_arr / s, (1.0 - x_arr) / (1.0 - s))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True, eq=False)
class GreenMatrix:
    """Dense matrix of G sampled at interior node pairs of a mesh.

    Exactly symmetric by construction; every entry lies in (0, 1/4] and the
    diagonal entry at node x is x(1-x).
    """

    entries: np.ndarray
    mesh: Mesh1D


def green_matrix(mesh: Mesh1D) -> GreenMatrix:
    """Assemble the (n-1) x (n-1) matrix G(x_i, x_j) over interior nodes."""
    xi = mesh.interior
    lo = np.minimum.outer(xi, xi)
    hi = np.maximum.outer(xi, xi)
    entries = lo * (1.0 - hi)
    entries.setflags(write=False)
    return GreenMatrix(entries, mesh)
