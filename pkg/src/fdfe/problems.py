"""Manufactured instances of -u'' = f, u(0) = u(1) = 0, with known norms.

Each catalog entry registers f together with closed-form derivatives, the
exact solution, and the sup norms of f' and f'' that the error bounds need.
Registration cross-checks -u'' = f by central differences, so a mistyped
pair cannot enter the catalog silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

__all__ = ["Problem", "CATALOG", "get_problem", "problem_names"]

_PDE_CHECK_POINTS = 64
_PDE_CHECK_STEP = 1e-5
_PDE_CHECK_TOL = 1e-4


@dataclass(frozen=True)
class Problem:
    """A manufactured two-point boundary value problem.

    ``u_exact``, the derivatives of f, and the sup norms are optional; when
    ``u_exact`` is present, -u'' = f is verified at 64 interior sample
    points by central differences (tolerance 1e-4) at construction time.
    """

    name: str
    f: Callable
    f_prime: Optional[Callable] = None
    f_second: Optional[Callable] = None
    u_exact: Optional[Callable] = None
    u_prime: Optional[Callable] = None
    sup_f_prime: Optional[float] = None
    sup_f_second: Optional[float] = None

    def __post_init__(self) -> None:
        if self.u_exact is None:
            return
        x = (np.arange(_PDE_CHECK_POINTS) + 0.5) / _PDE_CHECK_POINTS
        d = _PDE_CHECK_STEP
        u = self.u_exact
        lap = -(_eval(u, x + d) - 2.0 * _eval(u, x) + _eval(u, x - d)) / (d * d)
        err = np.max(np.abs(lap - _eval(self.f, x)))
        if not err < _PDE_CHECK_TOL:
            raise ValueError(
                f"problem {self.name!r}: -u_exact'' does not match f "
                f"(max deviation {err:.3e})"
            )


def _eval(fn: Callable, x: np.ndarray) -> np.ndarray:
    out = np.asarray(fn(x), dtype=float)
    if out.shape != x.shape:
        out = np.array([float(fn(v)) for v in x])
    return out


_E = math.e
_PI = math.pi

CATALOG: dict[str, Problem] = {
    "constant": Problem(
        name="constant",
        f=lambda x: np.ones_like(np.asarray(x, dtype=float)),
        f_prime=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        f_second=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        u_exact=lambda x: x * (1.0 - x) / 2.0,
        u_prime=lambda x: 0.5 - x,
        sup_f_prime=0.0,
        sup_f_second=0.0,
    ),
    "sine": Problem(
        name="sine",
        f=lambda x: _PI**2 * np.sin(_PI * x),
        f_prime=lambda x: _PI**3 * np.cos(_PI * x),
        f_second=lambda x: -(_PI**4) * np.sin(_PI * x),
        u_exact=lambda x: np.sin(_PI * x),
        u_prime=lambda x: _PI * np.cos(_PI * x),
        sup_f_prime=_PI**3,
        sup_f_second=_PI**4,
    ),
    # u = x(1-x)(1+x)/2 = (x - x^3)/2, so f = -u'' = 3x
    "cubic": Problem(
        name="cubic",
        f=lambda x: 3.0 * np.asarray(x, dtype=float),
        f_prime=lambda x: np.full_like(np.asarray(x, dtype=float), 3.0),
        f_second=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        u_exact=lambda x: x * (1.0 - x) * (1.0 + x) / 2.0,
        u_prime=lambda x: (1.0 - 3.0 * x * x) / 2.0,
        sup_f_prime=3.0,
        sup_f_second=0.0,
    ),
    # u = x(1-x)e^x, so f = -u'' = x(x+3)e^x
    "bump": Problem(
        name="bump",
        f=lambda x: x * (x + 3.0) * np.exp(x),
        f_prime=lambda x: (x * x + 5.0 * x + 3.0) * np.exp(x),
        f_second=lambda x: (x * x + 7.0 * x + 8.0) * np.exp(x),
        u_exact=lambda x: x * (1.0 - x) * np.exp(x),
        u_prime=lambda x: (1.0 - x - x * x) * np.exp(x),
        sup_f_prime=9.0 * _E,
        sup_f_second=16.0 * _E,
    ),
}


def problem_names() -> list[str]:
    return sorted(CATALOG)


def get_problem(name: str) -> Problem:
    try:
        return CATALOG[name]
    except KeyError:
        known = ", ".join(problem_names())
        raise ValueError(f"unknown problem {name!r}; known problems: {known}") from None
