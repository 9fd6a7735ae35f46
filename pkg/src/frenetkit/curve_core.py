"""Curve containers, the midpoint refinement operator and the D/M calculus.

A discrete curve is an ordered point sequence.  Refining a curve doubles the
index set: original vertices keep their order and the midpoint of every edge
is inserted between them.  All half-edges of a refined curve have the same
length ``ell``, which is the discrete analogue of parametrization
proportional to arc length.

Index parity: for closed curves the refined sequence starts at a midpoint,
so original vertices sit at odd indices.  An open curve has to start at its
first vertex, which shifts the parity; the ``vertex_parity`` field records
where the original vertices live so downstream code never guesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import InputError, NonUniformLength, TooShort


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] not in (2, 3):
        raise InputError(f"points must be an (n, 2) or (n, 3) array, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise InputError("points contain non-finite values")
    return pts


@dataclass(frozen=True)
class DiscreteCurve:
    """Ordered point sequence in 2D or 3D."""

    points: np.ndarray
    closed: bool = False

    def __post_init__(self):
        pts = _as_points(self.points)
        object.__setattr__(self, "points", pts)
        n = len(pts)
        if self.closed and n < 3:
            raise InputError("closed curve needs at least 3 points")
        if not self.closed and n < 2:
            raise InputError("open curve needs at least 2 points")
        if np.min(self.edge_lengths()) <= 0.0:
            raise InputError("consecutive points must be distinct")

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return len(self.points)

    def edges(self) -> np.ndarray:
        """Edge vectors, wrapping for closed curves."""
        pts = self.points
        if self.closed:
            return np.roll(pts, -1, axis=0) - pts
        return pts[1:] - pts[:-1]

    def edge_lengths(self) -> np.ndarray:
        return np.linalg.norm(self.edges(), axis=1)

    def length(self) -> float:
        return float(np.sum(self.edge_lengths()))


@dataclass(frozen=True)
class RefinedCurve:
    """Alternating vertex/midpoint curve with uniform half-edge length.

    ``vertex_parity`` is the index parity carrying the original vertices
    (1 for curves produced by :func:`refine` on closed input, 0 for open).
    """

    points: np.ndarray
    ell: float
    closed: bool = False
    vertex_parity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "points", _as_points(self.points))
        if self.ell <= 0.0:
            raise InputError("half-edge length must be positive")
        if self.vertex_parity not in (0, 1):
            raise InputError("vertex_parity must be 0 or 1")

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return len(self.points)

    def n_edges(self) -> int:
        return len(self.points) if self.closed else len(self.points) - 1

    def edges(self) -> np.ndarray:
        pts = self.points
        if self.closed:
            return np.roll(pts, -1, axis=0) - pts
        return pts[1:] - pts[:-1]

    def length(self) -> float:
        return float(np.sum(np.linalg.norm(self.edges(), axis=1)))

    def is_vertex(self, i: int) -> bool:
        return i % 2 == self.vertex_parity

    def vertex_indices(self) -> np.ndarray:
        n = len(self.points)
        return np.arange(self.vertex_parity, n, 2)


def validate_refined(rc: RefinedCurve, tol: Tolerances = DEFAULT) -> None:
    """Check the two defining invariants of a refined curve.

    Raises NonUniformLength when half-edge lengths spread beyond tolerance,
    InputError when a midpoint is not the average of its vertex neighbors.
    """
    lengths = np.linalg.norm(rc.edges(), axis=1)
    mean = float(np.mean(lengths))
    if (np.max(lengths) - np.min(lengths)) > tol.uniform_length_rel * mean:
        raise NonUniformLength(
            f"half-edge lengths spread {np.max(lengths) - np.min(lengths):.3e} "
            f"exceeds {tol.uniform_length_rel:.1e} relative"
        )
    if abs(mean - rc.ell) > tol.uniform_length_rel * mean + 1e-300:
        raise NonUniformLength(f"stored ell={rc.ell} disagrees with edges (mean {mean})")
    pts = rc.points
    n = len(pts)
    mid_parity = 1 - rc.vertex_parity
    for i in range(n):
        if i % 2 != mid_parity:
            continue
        lo, hi = i - 1, i + 1
        if rc.closed:
            lo, hi = lo % n, hi % n
        elif lo < 0 or hi >= n:
            continue
        defect = np.linalg.norm(pts[i] - 0.5 * (pts[lo] + pts[hi]))
        if defect > tol.midpoint_rel * max(rc.ell, 1.0):
            raise InputError(f"midpoint invariant violated at index {i} (defect {defect:.3e})")


def refine(curve: DiscreteCurve, tol: Tolerances = DEFAULT) -> RefinedCurve:
    """Insert edge midpoints, producing the half-edge-uniform refined curve.

    The input must have uniform edge length 2*ell (relative tolerance
    ``tol.uniform_length_rel``); NonUniformLength otherwise.
    """
    lengths = curve.edge_lengths()
    mean = float(np.mean(lengths))
    if (np.max(lengths) - np.min(lengths)) > tol.uniform_length_rel * mean:
        raise NonUniformLength(
            f"edge length spread {np.max(lengths) - np.min(lengths):.3e} exceeds "
            f"{tol.uniform_length_rel:.1e} relative; refine requires uniform edges"
        )
    pts = curve.points
    n = len(pts)
    ell = mean / 2.0
    if curve.closed:
        out = np.empty((2 * n, curve.dim))
        # start at the midpoint of the wrap-around edge so vertices land on odd indices
        out[0] = 0.5 * (pts[-1] + pts[0])
        out[1::2] = pts
        out[2::2] = 0.5 * (pts[:-1] + pts[1:])
        return RefinedCurve(out, ell, closed=True, vertex_parity=1)
    out = np.empty((2 * n - 1, curve.dim))
    out[0::2] = pts
    out[1::2] = 0.5 * (pts[:-1] + pts[1:])
    return RefinedCurve(out, ell, closed=False, vertex_parity=0)


def unrefine(rc: RefinedCurve) -> DiscreteCurve:
    """Project a refined curve back onto its original vertices (exact round trip)."""
    return DiscreteCurve(rc.points[rc.vertex_indices()], closed=rc.closed)


def diff(values, closed: bool = False) -> np.ndarray:
    """Discrete derivative (D x)_i = x_{i+1} - x_i, wrapping when closed."""
    arr = np.asarray(values, dtype=float)
    if len(arr) < 2:
        raise TooShort("diff needs at least 2 values")
    if closed:
        return np.roll(arr, -1, axis=0) - arr
    return arr[1:] - arr[:-1]


def msum(values, closed: bool = False) -> np.ndarray:
    """Discrete sum (M x)_i = x_{i+1} + x_i, wrapping when closed."""
    arr = np.asarray(values, dtype=float)
    if len(arr) < 2:
        raise TooShort("msum needs at least 2 values")
    if closed:
        return np.roll(arr, -1, axis=0) + arr
    return arr[1:] + arr[:-1]
