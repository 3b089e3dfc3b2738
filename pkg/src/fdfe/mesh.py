"""Meshes of the unit interval: uniform, graded, randomly perturbed, file-loaded.

A mesh is an ordered node set 0 = x_0 < x_1 < ... < x_n = 1 together with the
cached element widths h_j = x_j - x_{j-1}.  Meshes are immutable after
construction and safe to share read-only between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = [
    "Mesh1D",
    "make_uniform",
    "make_graded",
    "make_perturbed",
    "max_h",
    "load_mesh",
    "save_mesh",
    "format_mesh",
    "parse_mesh_descriptor",
    "parse_family_descriptor",
]


@dataclass(frozen=True, eq=False)
class Mesh1D:
    """Ordered partition of [0, 1] with cached element widths.

    Invariants enforced at construction: the first node is exactly 0.0, the
    last exactly 1.0, the nodes are strictly increasing, and the widths sum
    to 1 within 4n machine epsilons.
    """

    nodes: np.ndarray
    widths: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        nodes = np.array(self.nodes, dtype=float)
        if nodes.ndim != 1 or nodes.size < 3:
            raise ValueError("a mesh needs at least two elements (three nodes)")
        if nodes[0] != 0.0 or nodes[-1] != 1.0:
            raise ValueError("mesh must start at exactly 0.0 and end at exactly 1.0")
        widths = np.diff(nodes)
        if not np.all(widths > 0.0):
            raise ValueError("mesh nodes must be strictly increasing")
        if abs(float(widths.sum()) - 1.0) > 4.0 * (nodes.size - 1) * np.finfo(float).eps:
            raise ValueError("element widths do not sum to 1 within tolerance")
        nodes.setflags(write=False)
        widths.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "widths", widths)

    @property
    def n(self) -> int:
        """Number of elements."""
        return self.nodes.size - 1

    @property
    def interior(self) -> np.ndarray:
        """The n - 1 interior nodes x_1 .. x_{n-1}."""
        return self.nodes[1:-1]

    def __repr__(self) -> str:
        return f"Mesh1D(n={self.n}, max_h={self.widths.max():.6g})"


def make_uniform(n: int) -> Mesh1D:
    """Mesh with nodes x_j = j/n, every width equal to 1/n."""
    if n < 2:
        raise ValueError("n must be >= 2 so the mesh has an interior node")
    nodes = np.arange(n + 1, dtype=float) / n
    # endpoints pinned to exact constants, never accumulated widths
    nodes[0] = 0.0
    nodes[-1] = 1.0
    return Mesh1D(nodes)


def make_graded(n: int, beta: float, toward_one: bool = False) -> Mesh1D:
    """Mesh with nodes x_j = (j/n)**beta, clustering toward 0.

    beta = 1 reproduces ``make_uniform``.  ``toward_one`` mirrors the node
    set so the cluster sits at the right endpoint instead.
    """
    if n < 2:
        raise ValueError("n must be >= 2 so the mesh has an interior node")
    if beta < 1.0:
        raise ValueError("beta must be >= 1; use toward_one=True to grade toward 1")
    nodes = (np.arange(n + 1, dtype=float) / n) ** beta
    if toward_one:
        nodes = 1.0 - nodes[::-1]
    nodes[0] = 0.0
    nodes[-1] = 1.0
    return Mesh1D(nodes)


def make_perturbed(n: int, rho: float, seed: int) -> Mesh1D:
    """Uniform mesh with interior nodes jittered by rho/n times a seeded draw.

    Interior nodes are x_j = j/n + rho*(1/n)*xi_j with xi_j drawn uniformly
    from (-1/2, 1/2); rho < 1 keeps the nodes strictly increasing.  The same
    seed always reproduces the same mesh.
    """
    if n < 2:
        raise ValueError("n must be >= 2 so the mesh has an interior node")
    if not 0.0 <= rho < 1.0:
        raise ValueError("rho must lie in [0, 1) to keep the nodes monotone")
    xi = np.random.default_rng(seed).uniform(-0.5, 0.5, n - 1)
    nodes = np.arange(n + 1, dtype=float) / n
    nodes[1:-1] += (rho / n) * xi
    nodes[0] = 0.0
    nodes[-1] = 1.0
    return Mesh1D(nodes)


def max_h(mesh: Mesh1D) -> float:
    """Largest element width of the mesh."""
    return float(mesh.widths.max())


def load_mesh(path) -> Mesh1D:
    """Read a mesh from a file with one ASCII decimal node per line."""
    try:
        with open(path, "r", encoding="ascii") as handle:
            lines = [line.strip() for line in handle]
    except OSError as exc:
        raise ValueError(f"cannot read mesh file {path!r}: {exc}") from exc
    values = []
    for lineno, text in enumerate(lines, start=1):
        if not text:
            continue
        try:
            values.append(float(text))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: not a decimal node: {text!r}") from exc
    if not values or values[0] != 0.0 or values[-1] != 1.0:
        raise ValueError(f"{path}: mesh file must start with 0 and end with 1")
    return Mesh1D(np.asarray(values))


def format_mesh(mesh: Mesh1D) -> str:
    """Mesh file content: one node per line, shortest exact decimal form."""
    return "\n".join(repr(float(x)) for x in mesh.nodes) + "\n"


def save_mesh(mesh: Mesh1D, path) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(format_mesh(mesh))


def parse_mesh_descriptor(text: str) -> Mesh1D:
    """Build a mesh from a descriptor string.

    Grammar: ``uniform:<n>``, ``graded:<beta>:<n>``,
    ``perturbed:<rho>:<n>:<seed>``, ``file:<path>``.
    """
    kind, _, rest = text.partition(":")
    try:
        if kind == "uniform":
            return make_uniform(int(rest))
        if kind == "graded":
            beta, n = rest.split(":")
            return make_graded(int(n), float(beta))
        if kind == "perturbed":
            rho, n, seed = rest.split(":")
            return make_perturbed(int(n), float(rho), int(seed))
        if kind == "file":
            return load_mesh(rest)
    except ValueError as exc:
        raise ValueError(f"bad mesh descriptor {text!r}: {exc}") from exc
    raise ValueError(f"unknown mesh descriptor kind {kind!r} in {text!r}")


def parse_family_descriptor(text: str) -> tuple[str, Callable[[int], Mesh1D]]:
    """Parse a mesh-family descriptor into (label, n -> Mesh1D).

    Grammar: ``uniform``, ``graded:<beta>``, ``perturbed:<rho>[:<seed>]``
    (seed defaults to 0).  The element count is supplied per level.
    """
    kind, _, rest = text.partition(":")
    try:
        if kind == "uniform" and not rest:
            return text, make_uniform
        if kind == "graded":
            beta = float(rest)
            return text, lambda n: make_graded(n, beta)
        if kind == "perturbed":
            parts = rest.split(":")
            rho = float(parts[0])
            seed = int(parts[1]) if len(parts) > 1 else 0
            if len(parts) > 2:
                raise ValueError("too many fields")
            return text, lambda n: make_perturbed(n, rho, seed)
    except ValueError as exc:
        raise ValueError(f"bad mesh family {text!r}: {exc}") from exc
    raise ValueError(f"unknown mesh family {text!r}")
