"""Circles and N-gons: the kernel relating turning angles to curvature.

Three conventions relate a regular N-gon with side length ell and exterior
angle theta = 2*pi/N to a circle:

* Inscribed      -- polygon vertices lie on the circle:   kappa = (2/ell) sin(theta/2)
* Circumscribed  -- polygon edges are tangent:            kappa = (2/ell) tan(theta/2)
* Centered       -- perimeter equals circumference:       kappa = theta/ell

Every other module measures curvature and torsion through these formulas,
so this module doubles as the analytic oracle of the library.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .curve_core import DiscreteCurve
from .errors import AngleOutOfRange, InputError, NonpositiveLength, OutOfImage


class Convention(enum.Enum):
    INSCRIBED = "inscribed"
    CIRCUMSCRIBED = "circumscribed"
    CENTERED = "centered"


def _check_angle(angle: float) -> None:
    # the kernel accepts any exterior angle of an N-gon with N > 2; the
    # stricter [-pi/2, pi/2] bound of intrinsic data lives in frames
    if not 0.0 <= angle < math.pi:
        raise AngleOutOfRange(f"angle {angle} outside [0, pi)")


def _check_length(ell: float) -> None:
    if not ell > 0.0:
        raise NonpositiveLength(f"length must be positive, got {ell}")


def kappa_from_angle(theta: float, ell: float, convention: Convention) -> float:
    """Curvature of the convention's circle for turning angle theta and side ell."""
    _check_length(ell)
    _check_angle(theta)
    if convention is Convention.INSCRIBED:
        return 2.0 / ell * math.sin(theta / 2.0)
    if convention is Convention.CIRCUMSCRIBED:
        return 2.0 / ell * math.tan(theta / 2.0)
    return theta / ell


def tau_from_angle(phi: float, ell: float, convention: Convention) -> float:
    """Torsion for twisting angle phi; same formulas with phi in place of theta."""
    return kappa_from_angle(phi, ell, convention)


def angle_from_kappa(kappa: float, ell: float, convention: Convention) -> float:
    """Inverse of kappa_from_angle on theta in [0, pi/2]."""
    _check_length(ell)
    if kappa < 0.0:
        raise OutOfImage(f"curvature must be nonnegative, got {kappa}")
    x = kappa * ell / 2.0
    if convention is Convention.INSCRIBED:
        if x > math.sin(math.pi / 4.0) + 1e-15:
            raise OutOfImage(f"kappa*ell/2 = {x} exceeds sin(pi/4)")
        return 2.0 * math.asin(min(x, 1.0))
    if convention is Convention.CIRCUMSCRIBED:
        if x > math.tan(math.pi / 4.0) + 1e-15:
            raise OutOfImage(f"kappa*ell/2 = {x} exceeds tan(pi/4)")
        return 2.0 * math.atan(x)
    theta = kappa * ell
    if theta > math.pi / 2.0 + 1e-15:
        raise OutOfImage(f"kappa*ell = {theta} exceeds pi/2")
    return theta


@dataclass(frozen=True)
class NGonSpec:
    """Regular N-gon: real side count N > 2, side length ell, placement."""

    n: float
    ell: float
    center: tuple = (0.0, 0.0)
    phase: float = 0.0

    def __post_init__(self):
        if not self.n > 2.0:
            raise InputError(f"side count must exceed 2, got {self.n}")
        if not self.ell > 0.0:
            raise NonpositiveLength(f"side length must be positive, got {self.ell}")


def circle_of_ngon(spec: NGonSpec, convention: Convention):
    """(center, radius) of the circle splining the N-gon under the convention."""
    theta = 2.0 * math.pi / spec.n
    radius = 1.0 / kappa_from_angle(theta, spec.ell, convention)
    return np.asarray(spec.center, dtype=float), radius


def ngon_of_circle(
    radius: float,
    n: int,
    convention: Convention,
    center=(0.0, 0.0),
    phase: float = 0.0,
) -> DiscreteCurve:
    """Regular N-gon discretizing a circle of the given radius.

    The side length solves kappa_from_angle(2*pi/N, ell, convention) = 1/radius.
    Vertices are placed counterclockwise starting at angle ``phase``.
    """
    if radius <= 0.0:
        raise NonpositiveLength(f"radius must be positive, got {radius}")
    if n < 3 or int(n) != n:
        raise InputError(f"polygon needs an integer N >= 3, got {n}")
    n = int(n)
    theta = 2.0 * math.pi / n
    if convention is Convention.INSCRIBED:
        ell = 2.0 * radius * math.sin(theta / 2.0)
        r_vertex = radius
    elif convention is Convention.CIRCUMSCRIBED:
        ell = 2.0 * radius * math.tan(theta / 2.0)
        r_vertex = radius / math.cos(theta / 2.0)
    else:
        ell = radius * theta
        r_vertex = ell / (2.0 * math.sin(theta / 2.0))
    angles = phase + theta * np.arange(n)
    cx, cy = center
    pts = np.column_stack([cx + r_vertex * np.cos(angles), cy + r_vertex * np.sin(angles)])
    return DiscreteCurve(pts, closed=True)


def centered_offset(k: float, density: float) -> float:
    """Sample offset for the centered 2D discretization, literal published form.

    Positive values move the sample along the outward normal (away from the
    center of curvature).  See also :func:`centered_offset_exact` for the
    variant derived from the equal-half-edge construction; the two disagree
    and only the exact one reproduces a circle's centered polygon.
    """
    if k <= 0.0:
        raise InputError(f"curvature must be positive, got {k}")
    x = k / density
    if x >= math.pi:
        raise InputError(f"k/M = {x} too large")
    return (x - math.sin(x)) / (k * math.sin(x))


def centered_offset_exact(k: float, density: float) -> float:
    """Offset moving the sample to the apothem of the centered polygon.

    Returned as a distance toward the center of curvature:
    (1/k) * (1 - (x/2) * cot(x/2)) with x = k/M.  On a circle this places the
    even vertices exactly at the midpoints of the centered N-gon's sides.
    """
    if k <= 0.0:
        raise InputError(f"curvature must be positive, got {k}")
    x = k / density
    if x >= math.pi:
        raise InputError(f"k/M = {x} too large")
    half = x / 2.0
    if half < 1e-8:
        # series: 1 - t*cot(t) = t^2/3 + t^4/45 + ...
        return (half * half / 3.0 + half**4 / 45.0) / k
    return (1.0 - half / math.tan(half)) / k


def centered_vertex_offset(theta: float, ell: float) -> float:
    """Inward offset of a polyline vertex onto its centered circle.

    A vertex with turning angle theta and half-edge ell sits at circumradius
    ell/sin(theta/2) of the local N-gon; the centered circle has radius
    2*ell/theta.  The difference is the distance to move toward the center
    of curvature when building the centered spline.
    """
    _check_length(ell)
    _check_angle(abs(theta))
    t = abs(theta)
    if t < 1e-12:
        return 0.0
    return ell * (1.0 / math.sin(t / 2.0) - 2.0 / t)
