"""End-to-end solves and the structural identities connecting them.

Both discretizations share the stiffness matrix; they differ only in the
right-hand side.  The checks in this module verify, numerically and on
arbitrary meshes, that the Green matrix inverts the stiffness matrix, that
the difference solution is the trapezoid approximation of the Green-formula
solution, and that the dual vector of f matches the difference stencil
applied to the exact solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .assembly import (
    fd_load,
    fe_load,
    solve_tridiagonal,
    stiffness,
    tridiagonal_residual,
)
from .green import green_matrix
from .mesh import Mesh1D
from .problems import Problem
from .quadrature import gauss_integrate, sample_function

__all__ = [
    "NodalSolution",
    "solve_fd",
    "solve_fe",
    "green_nodal_fd",
    "green_point_value",
    "dual_identity_check",
    "inverse_identity_check",
]

_RESIDUAL_REL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class NodalSolution:
    """Interior nodal values with their mesh, method tag, and solve residual.

    ``residual`` is the max-norm of S*values - rhs; the solves guarantee it
    stays below 1e-12 times the max-norm of the right-hand side.
    """

    values: np.ndarray
    mesh: Mesh1D
    method: str
    residual: float

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.mesh.n - 1,):
            raise ValueError("solution length must be n - 1")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)


def _solve(rhs: np.ndarray, mesh: Mesh1D, method: str) -> NodalSolution:
    S = stiffness(mesh)
    y = solve_tridiagonal(S, rhs)
    residual = tridiagonal_residual(S, y, rhs)
    scale = float(np.max(np.abs(rhs)))
    if residual > _RESIDUAL_REL_TOL * scale:
        raise RuntimeError(
            f"{method} solve residual {residual:.3e} exceeds "
            f"{_RESIDUAL_REL_TOL:g} * ||rhs||"
        )
    return NodalSolution(y, mesh, method, residual)


def solve_fd(problem: Problem, mesh: Mesh1D) -> NodalSolution:
    """Solve the finite difference system S u = W f."""
    return _solve(fd_load(problem.f, mesh), mesh, "fd")


def solve_fe(problem: Problem, mesh: Mesh1D, quad_order: int = 10) -> NodalSolution:
    """Solve the finite element system S u = [(f, phi_j)]_j."""
    return _solve(fe_load(problem.f, mesh, quad_order), mesh, "fe")


def green_nodal_fd(problem: Problem, mesh: Mesh1D) -> np.ndarray:
    """Trapezoid approximation of the Green formula at the interior nodes.

    Computed as the dense product of the Green matrix with the weighted
    point values W f; coincides with the finite difference solution up to
    roundoff, which is exactly what ``verify wt`` checks.
    """
    return green_matrix(mesh).entries @ fd_load(problem.f, mesh)


def green_point_value(f: Callable, s: float, order: int = 16) -> float:
    """Exact-solution value u(s) = s(1-s) * integral of phi_s * f.

    The integrand has a kink at s, so the two sides [0, s] and [s, 1] are
    integrated separately, each with a mapped Gauss rule.
    """
    if not 0.0 < s < 1.0:
        raise ValueError("green_point_value requires 0 < s < 1")
    left = gauss_integrate(
        lambda x: sample_function(f, x) * (x / s), 0.0, s, order
    )
    right = gauss_integrate(
        lambda x: sample_function(f, x) * ((1.0 - x) / (1.0 - s)), s, 1.0, order
    )
    return s * (1.0 - s) * (left + right)


def dual_identity_check(problem: Problem, mesh: Mesh1D, quad_order: int = 10) -> float:
    """Max residual of (f, phi_j) against the stencil applied to u_exact.

    Returns max_j |(f, phi_j) - (-u(x_{j-1})/h_j + (1/h_j + 1/h_{j+1}) u(x_j)
    - u(x_{j+1})/h_{j+1})|.
    """
    if problem.u_exact is None:
        raise ValueError("dual_identity_check needs a problem with u_exact")
    lhs = fe_load(problem.f, mesh, quad_order)
    u = sample_function(problem.u_exact, mesh.nodes)
    inv = 1.0 / mesh.widths
    rhs = (
        -u[:-2] * inv[:-1]
        + (inv[:-1] + inv[1:]) * u[1:-1]
        - u[2:] * inv[1:]
    )
    return float(np.max(np.abs(lhs - rhs)))


def inverse_identity_check(mesh: Mesh1D) -> float:
    """Max-norm residual ||S G - I|| for the exact-formula S and Green matrix."""
    S = stiffness(mesh)
    G = green_matrix(mesh).entries
    product = S.matvec(G)
    return float(np.max(np.abs(product - np.eye(S.m))))
