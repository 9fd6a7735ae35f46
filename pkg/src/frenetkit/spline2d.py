"""Geometric splinings of planar discrete curves.

Three G1 constructions, one per convention:

* inscribed     -- circular arcs tangent to the edges at their midpoints
* circumscribed -- first-order clothoids interpolating the vertices
* centered      -- elastica segments through offset points, preserving length

plus the discrete elastica turning-angle generator built on Jacobi sn.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT, Tolerances
from .curve_core import DiscreteCurve, RefinedCurve, validate_refined
from .errors import (
    Infeasible,
    InputError,
    MultipleSolutionsWarning,
    NoConvergence,
    NonPlanarData,
)
from .ngon_circle import centered_vertex_offset
from .specfun import elliptic_K, fresnel, jacobi_sn

_TWO_PI = 2.0 * math.pi


def _wrap_angle(a: float) -> float:
    return (a + math.pi) % _TWO_PI - math.pi


def _rot90(v: np.ndarray) -> np.ndarray:
    return np.array([-v[1], v[0]])


# ---------------------------------------------------------------------------
# clothoid evaluation


def _gl_phase_integral(theta0, kappa0, a, s):
    """(int cos theta, int sin theta) over [0, s] for theta = theta0 + k0 t + a t^2/2."""
    phase_span = abs(kappa0 * s) + abs(a) * s * s / 2.0
    panels = max(1, int(math.ceil(phase_span / 1.5)), int(math.ceil(abs(s))))
    nodes, weights = np.polynomial.legendre.leggauss(24)
    edges = np.linspace(0.0, s, panels + 1)
    x = y = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        t = mid + half * nodes
        th = theta0 + kappa0 * t + 0.5 * a * t * t
        x += half * float(np.dot(weights, np.cos(th)))
        y += half * float(np.dot(weights, np.sin(th)))
    return x, y


def clothoid_xy(kappa0: float, a: float, theta0: float, s: float):
    """Displacement along a clothoid with curvature kappa0 + a*t, start angle theta0.

    Uses Fresnel integrals when the quadratic phase is significant and a
    short Gauss quadrature otherwise (tiny sharpness makes the Fresnel scale
    factor blow up).
    """
    if s == 0.0:
        return 0.0, 0.0
    if abs(a) * s * s < 1e-6:
        if abs(kappa0 * s) < 1e-12 and abs(a) * s * s < 1e-14:
            return s * math.cos(theta0), s * math.sin(theta0)
        return _gl_phase_integral(theta0, kappa0, a, s)
    sigma = math.sqrt(math.pi / abs(a))
    u0 = kappa0 / a
    u1 = s + u0
    c0 = theta0 - kappa0 * kappa0 / (2.0 * a)
    c_hi, s_hi = fresnel(u1 / sigma)
    c_lo, s_lo = fresnel(u0 / sigma)
    dc, ds = c_hi - c_lo, s_hi - s_lo
    cos0, sin0 = math.cos(c0), math.sin(c0)
    if a > 0.0:
        x = sigma * (cos0 * dc - sin0 * ds)
        y = sigma * (sin0 * dc + cos0 * ds)
    else:
        x = sigma * (cos0 * dc + sin0 * ds)
        y = sigma * (sin0 * dc - cos0 * ds)
    return x, y


# ---------------------------------------------------------------------------
# segments


@dataclass(frozen=True)
class LineSegment:
    start: np.ndarray
    direction: np.ndarray  # unit
    length: float

    def point_at(self, s: float) -> np.ndarray:
        return self.start + s * self.direction

    def angle_at(self, s: float) -> float:
        return math.atan2(self.direction[1], self.direction[0])

    def energy(self) -> float:
        return 0.0

    def polyline(self, tol: float) -> np.ndarray:
        return np.array([self.start, self.start + self.length * self.direction])


@dataclass(frozen=True)
class ArcSegment:
    center: np.ndarray
    radius: float
    start_angle: float  # position angle of the start point about the center
    sweep: float  # signed, radians
    length: float = 0.0

    def __post_init__(self):
        if self.radius <= 0.0:
            raise InputError("arc radius must be positive")
        if self.length == 0.0:
            object.__setattr__(self, "length", abs(self.sweep) * self.radius)

    def point_at(self, s: float) -> np.ndarray:
        a = self.start_angle + self.sweep * s / self.length
        return self.center + self.radius * np.array([math.cos(a), math.sin(a)])

    def angle_at(self, s: float) -> float:
        a = self.start_angle + self.sweep * s / self.length
        return a + math.copysign(math.pi / 2.0, self.sweep)

    def energy(self) -> float:
        return self.length / self.radius**2

    def polyline(self, tol: float) -> np.ndarray:
        n = max(2, int(math.ceil(abs(self.sweep) / max(2.0 * math.sqrt(2.0 * tol / self.radius), 1e-6))) + 1)
        s = np.linspace(0.0, self.length, n)
        return np.array([self.point_at(v) for v in s])


@dataclass(frozen=True)
class ClothoidSegment:
    start: np.ndarray
    start_angle: float
    kappa0: float
    sharpness: float  # d kappa / d s
    length: float

    def point_at(self, s: float) -> np.ndarray:
        x, y = clothoid_xy(self.kappa0, self.sharpness, self.start_angle, s)
        return self.start + np.array([x, y])

    def angle_at(self, s: float) -> float:
        return self.start_angle + self.kappa0 * s + 0.5 * self.sharpness * s * s

    def energy(self) -> float:
        # int (kappa0 + a s)^2 ds
        k0, a, L = self.kappa0, self.sharpness, self.length
        return k0 * k0 * L + k0 * a * L * L + a * a * L**3 / 3.0

    def polyline(self, tol: float) -> np.ndarray:
        kmax = max(abs(self.kappa0), abs(self.kappa0 + self.sharpness * self.length), 1e-9)
        step = math.sqrt(8.0 * tol / kmax)
        n = max(2, int(math.ceil(self.length / step)) + 1)
        s = np.linspace(0.0, self.length, n)
        return np.array([self.point_at(v) for v in s])


def _sinc(x: float) -> float:
    if abs(x) < 1e-5:
        return 1.0 - x * x / 6.0 + x**4 / 120.0
    return math.sin(x) / x


def _cell_cos_sin(a: float, b: float):
    """Exact (int cos theta, int sin theta)/h over a cell with linear theta a->b."""
    m = 0.5 * (a + b)
    s = _sinc(0.5 * (b - a))
    return math.cos(m) * s, math.sin(m) * s


@dataclass(frozen=True)
class ElasticaSegment:
    """Elastica in turning-angle form: theta sampled on a uniform grid."""

    start: np.ndarray
    thetas: np.ndarray  # (n+1,) turning angle at grid nodes
    length: float
    c_const: float = 0.0  # first-integral constant of theta''' + theta'^3/2 + C theta' = 0

    def __post_init__(self):
        object.__setattr__(self, "thetas", np.asarray(self.thetas, dtype=float))
        object.__setattr__(self, "start", np.asarray(self.start, dtype=float))
        if len(self.thetas) < 17:
            raise InputError("elastica segment needs at least 16 grid cells")

    @property
    def ds(self) -> float:
        return self.length / (len(self.thetas) - 1)

    def node_points(self) -> np.ndarray:
        th = self.thetas
        a, b = th[:-1], th[1:]
        m = 0.5 * (a + b)
        s = np.sinc(0.5 * (b - a) / math.pi)
        pts = np.empty((len(th), 2))
        pts[0] = self.start
        pts[1:, 0] = self.start[0] + self.ds * np.cumsum(np.cos(m) * s)
        pts[1:, 1] = self.start[1] + self.ds * np.cumsum(np.sin(m) * s)
        return pts

    def point_at(self, s: float) -> np.ndarray:
        ds = self.ds
        j = int(np.clip(math.floor(s / ds), 0, len(self.thetas) - 2))
        pts = self.node_points()
        frac = s - j * ds
        if frac <= 0.0:
            return pts[j]
        a = self.thetas[j]
        b = a + (self.thetas[j + 1] - a) * frac / ds
        cx, sy = _cell_cos_sin(a, b)
        return pts[j] + frac * np.array([cx, sy])

    def angle_at(self, s: float) -> float:
        grid = np.linspace(0.0, self.length, len(self.thetas))
        return float(np.interp(s, grid, self.thetas))

    def energy(self) -> float:
        d = np.diff(self.thetas)
        return float(np.sum(d * d) / self.ds)

    def polyline(self, tol: float) -> np.ndarray:
        return self.node_points()


Segment = LineSegment | ArcSegment | ClothoidSegment | ElasticaSegment


@dataclass(frozen=True)
class Spline:
    """Ordered G1 segment list."""

    segments: tuple
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))

    def total_length(self) -> float:
        return float(sum(seg.length for seg in self.segments))

    def energy(self) -> float:
        return float(sum(seg.energy() for seg in self.segments))


def g1_defects(spline: Spline):
    """(max position gap, max tangent-angle gap in radians) at the joints."""
    segs = spline.segments
    pairs = list(zip(segs[:-1], segs[1:]))
    if spline.closed and len(segs) > 1:
        pairs.append((segs[-1], segs[0]))
    pos = ang = 0.0
    for a, b in pairs:
        pa = a.point_at(a.length)
        pb = b.point_at(0.0)
        pos = max(pos, float(np.linalg.norm(pa - pb)))
        ang = max(ang, abs(_wrap_angle(a.angle_at(a.length) - b.angle_at(0.0))))
    return pos, ang


# ---------------------------------------------------------------------------
# inscribed splining


def _require_planar(points: np.ndarray):
    if points.shape[1] != 2:
        raise NonPlanarData("splining requires planar (2D) input")


def _turn_at(pts, v, n):
    e0 = pts[v] - pts[v - 1]  # negative index wraps, which is what closed curves need
    e1 = pts[(v + 1) % n] - pts[v]
    return math.atan2(e0[0] * e1[1] - e0[1] * e1[0], float(np.dot(e0, e1)))


def _arc_from_pose(p: np.ndarray, direction: np.ndarray, kappa: float, length: float) -> ArcSegment:
    center = p + _rot90(direction) / kappa
    radius = 1.0 / abs(kappa)
    alpha0 = math.atan2(p[1] - center[1], p[0] - center[0])
    return ArcSegment(center, radius, alpha0, kappa * length, length)


def spline_inscribed(rc: RefinedCurve, tol: Tolerances = DEFAULT) -> Spline:
    """One arc per vertex, tangent to both adjacent edges at their midpoints."""
    _require_planar(rc.points)
    validate_refined(rc, tol)
    pts = rc.points
    n = len(pts)
    ell = rc.ell
    segments = []
    if not rc.closed and rc.is_vertex(0):
        d = (pts[1] - pts[0]) / np.linalg.norm(pts[1] - pts[0])
        segments.append(LineSegment(pts[0].copy(), d, ell))
    lo = 0 if rc.closed else 1
    hi = n if rc.closed else n - 1
    for v in range(lo, hi):
        if not rc.is_vertex(v):
            continue
        m0 = pts[(v - 1) % n]
        m1 = pts[(v + 1) % n]
        theta = _turn_at(pts, v, n)
        if abs(theta) < 1e-12:
            d = (m1 - m0) / np.linalg.norm(m1 - m0)
            segments.append(LineSegment(m0.copy(), d, float(np.linalg.norm(m1 - m0))))
            continue
        kappa = math.tan(theta / 2.0) / ell
        e0 = (pts[v] - m0) / ell
        length = abs(theta) / abs(kappa)
        segments.append(_arc_from_pose(m0, e0, kappa, length))
    if not rc.closed and rc.is_vertex(n - 1):
        d = (pts[n - 1] - pts[n - 2]) / np.linalg.norm(pts[n - 1] - pts[n - 2])
        segments.append(LineSegment(pts[n - 2].copy(), d, ell))
    return Spline(tuple(segments), closed=rc.closed)


# ---------------------------------------------------------------------------
# clothoid G1 fitting (circumscribed splining)

_GLN, _GLW = np.polynomial.legendre.leggauss(24)


def _phase_integrals(phi0: float, delta: float, a_param: float):
    """X = int_0^1 cos theta(u) du, Y = int sin, G' = int (u^2-u) cos theta du,
    for theta(u) = phi0 + (delta - A) u + A u^2."""
    span = abs(delta - a_param) + abs(a_param)
    panels = max(1, int(math.ceil(span / 3.0)))
    x = y = gp = 0.0
    for p in range(panels):
        lo = p / panels
        hi = (p + 1) / panels
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        u = mid + half * _GLN
        th = phi0 + (delta - a_param) * u + a_param * u * u
        cu = np.cos(th)
        su = np.sin(th)
        x += half * float(np.dot(_GLW, cu))
        y += half * float(np.dot(_GLW, su))
        gp += half * float(np.dot(_GLW, (u * u - u) * cu))
    return x, y, gp


def _solve_clothoid_param(phi0: float, delta: float, max_iter: int = 200):
    """Root A of Y(A) = 0 for the normalized fitting problem; None on failure."""
    # linearized solution of the fitting equation
    a_param = 6.0 * phi0 + 3.0 * delta
    best = None
    for _ in range(max_iter):
        x, y, gp = _phase_integrals(phi0, delta, a_param)
        if best is None or abs(y) < best[0]:
            best = (abs(y), a_param)
        if abs(y) < 1e-14:
            return a_param
        if gp == 0.0:
            break
        step = y / gp
        step = max(-10.0, min(10.0, step))
        a_param -= step
    # fall back to a bracketing scan around the best Newton iterate
    from scipy.optimize import brentq

    center = best[1]
    span = np.linspace(center - 40.0, center + 40.0, 161)
    vals = [_phase_integrals(phi0, delta, a)[1] for a in span]
    for lo, hi, vlo, vhi in zip(span[:-1], span[1:], vals[:-1], vals[1:]):
        if vlo == 0.0:
            return float(lo)
        if vlo * vhi < 0.0:
            return float(
                brentq(lambda a: _phase_integrals(phi0, delta, a)[1], lo, hi, xtol=1e-14)
            )
    return None


def clothoid_g1_fit(p0, t0, p1, t1, tol: Tolerances = DEFAULT) -> Segment:
    """Shortest line/arc/clothoid joining pose (p0, t0) to (p1, t1).

    Exactly collinear data yields a Line, symmetric data an Arc, anything
    else a first-order clothoid solved by Newton iteration on the normalized
    fitting equation.  NoConvergence carries the best endpoint residual.
    """
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    t0 = np.asarray(t0, dtype=float)
    t1 = np.asarray(t1, dtype=float)
    t0 = t0 / np.linalg.norm(t0)
    t1 = t1 / np.linalg.norm(t1)
    chord = p1 - p0
    d = float(np.linalg.norm(chord))
    if d == 0.0:
        raise InputError("fit endpoints coincide")
    psi = math.atan2(chord[1], chord[0])
    phi0 = _wrap_angle(math.atan2(t0[1], t0[0]) - psi)
    phi1 = _wrap_angle(math.atan2(t1[1], t1[0]) - psi)
    if abs(phi0) < 1e-12 and abs(phi1) < 1e-12:
        return LineSegment(p0, chord / d, d)
    if abs(phi0 + phi1) < 1e-12:
        # symmetric data: constant curvature
        sweep = phi1 - phi0
        length = d * (sweep / 2.0) / math.sin(sweep / 2.0)
        kappa = sweep / length
        return _arc_from_pose(p0, t0, kappa, length)

    candidates = []
    for k in (0, -1, 1):
        delta = phi1 - phi0 + _TWO_PI * k
        a_param = _solve_clothoid_param(phi0, delta)
        if a_param is None:
            continue
        x, _, _ = _phase_integrals(phi0, delta, a_param)
        if x <= 1e-9:
            continue
        length = d / x
        kappa0 = (delta - a_param) / length
        sharp = 2.0 * a_param / length**2
        candidates.append((length, kappa0, sharp))
    if not candidates:
        raise NoConvergence("clothoid fitting equation has no admissible root")
    length, kappa0, sharp = min(candidates, key=lambda c: c[0])
    seg = ClothoidSegment(p0, psi + phi0, kappa0, sharp, length)
    end = seg.point_at(length)
    residual = float(np.linalg.norm(end - p1)) + abs(
        _wrap_angle(seg.angle_at(length) - math.atan2(t1[1], t1[0]))
    )
    if residual > tol.clothoid_fit * max(1.0, d):
        raise NoConvergence(
            f"fitted clothoid misses the end pose by {residual:.3e}", residual=residual
        )
    return seg


def spline_circumscribed(dc: DiscreteCurve, tol: Tolerances = DEFAULT) -> Spline:
    """Clothoid spline interpolating the vertices of a discrete curve.

    The tangent at each vertex is the normalized sum of the adjacent edge
    directions (edge direction itself at open endpoints).
    """
    _require_planar(dc.points)
    pts = dc.points
    n = len(pts)
    edges = dc.edges()
    dirs = edges / np.linalg.norm(edges, axis=1)[:, None]
    tangents = np.empty((n, 2))
    for v in range(n):
        if dc.closed:
            s = dirs[v - 1] + dirs[v]
        elif v == 0:
            s = dirs[0]
        elif v == n - 1:
            s = dirs[n - 2]
        else:
            s = dirs[v - 1] + dirs[v]
        norm = float(np.linalg.norm(s))
        if norm < 1e-12:
            raise InputError(f"antiparallel edges at vertex {v}")
        tangents[v] = s / norm
    segments = []
    spans = n if dc.closed else n - 1
    for i in range(spans):
        j = (i + 1) % n
        try:
            segments.append(clothoid_g1_fit(pts[i], tangents[i], pts[j], tangents[j], tol))
        except NoConvergence as exc:
            raise NoConvergence(f"segment {i}: {exc}", residual=exc.residual) from exc
    return Spline(tuple(segments), closed=dc.closed)


# ---------------------------------------------------------------------------
# elastica (centered splining)


def _cell_arrays(thetas: np.ndarray):
    """Per-cell midpoints, half-spreads and sinc values (vectorized)."""
    a = thetas[:-1]
    b = thetas[1:]
    m = 0.5 * (a + b)
    h = 0.5 * (b - a)
    small = np.abs(h) < 1e-5
    s = np.where(small, 1.0 - h * h / 6.0 + h**4 / 120.0, np.sin(h) / np.where(small, 1.0, h))
    sp = np.where(small, -h / 3.0 + h**3 / 30.0, (np.cos(h) - s) / np.where(small, 1.0, h))
    return m, h, s, sp, small


def elastica_constraints(thetas: np.ndarray, ds: float):
    """Displacement (X, Y) of the piecewise-linear turning-angle curve."""
    m, _, s, _, _ = _cell_arrays(np.asarray(thetas, dtype=float))
    return float(ds * np.sum(np.cos(m) * s)), float(ds * np.sum(np.sin(m) * s))


def elastica_energy(thetas: np.ndarray, ds: float) -> float:
    d = np.diff(thetas)
    return float(np.sum(d * d) / ds)


def _constraint_grad(thetas: np.ndarray, ds: float):
    """Gradients of (X, Y) with respect to every theta node (analytic)."""
    thetas = np.asarray(thetas, dtype=float)
    n1 = len(thetas)
    m, _, s, sp, _ = _cell_arrays(thetas)
    cm, sm = np.cos(m), np.sin(m)
    gx = np.zeros(n1)
    gy = np.zeros(n1)
    # d/da: dm = 1/2, dh = -1/2 ; d/db: dm = 1/2, dh = 1/2
    gx[:-1] += ds * 0.5 * (-sm * s - cm * sp)
    gx[1:] += ds * 0.5 * (-sm * s + cm * sp)
    gy[:-1] += ds * 0.5 * (cm * s - sm * sp)
    gy[1:] += ds * 0.5 * (cm * s + sm * sp)
    return gx, gy


def _constraint_hessians(thetas: np.ndarray, ds: float):
    """Tridiagonal Hessians of (X, Y): (diag, offdiag) node arrays each."""
    thetas = np.asarray(thetas, dtype=float)
    n1 = len(thetas)
    m, h, s, sp, small = _cell_arrays(thetas)
    # sinc'' = -sinc - 2 sinc'/h, series -1/3 + h^2/10 near zero
    spp = np.where(small, -1.0 / 3.0 + h * h / 10.0, -s - 2.0 * sp / np.where(small, 1.0, h))
    cm, sm = np.cos(m), np.sin(m)
    faa = 0.25 * (-cm * s + 2.0 * sm * sp + cm * spp)
    fbb = 0.25 * (-cm * s - 2.0 * sm * sp + cm * spp)
    fab = -0.25 * cm * (s + spp)
    gaa = 0.25 * (-sm * s - 2.0 * cm * sp + sm * spp)
    gbb = 0.25 * (-sm * s + 2.0 * cm * sp + sm * spp)
    gab = -0.25 * sm * (s + spp)
    dx = np.zeros(n1)
    dy = np.zeros(n1)
    dx[:-1] += ds * faa
    dx[1:] += ds * fbb
    dy[:-1] += ds * gaa
    dy[1:] += ds * gbb
    return dx, ds * fab, dy, ds * gab


def _kkt_residual(thetas, lam, ds, target):
    n1 = len(thetas)
    gx, gy = _constraint_grad(thetas, ds)
    r = np.zeros(n1 - 2 + 2)
    grad_e = np.zeros(n1)
    grad_e[1:-1] = 2.0 * (2.0 * thetas[1:-1] - thetas[:-2] - thetas[2:]) / ds
    r[: n1 - 2] = grad_e[1:-1] + lam[0] * gx[1:-1] + lam[1] * gy[1:-1]
    x, y = elastica_constraints(thetas, ds)
    r[-2] = x - target[0]
    r[-1] = y - target[1]
    return r


def _kkt_step(thetas, lam, ds, res):
    """Newton step of the KKT system, solved in O(n).

    The Lagrangian Hessian block is tridiagonal and the two constraint rows
    form a border, so a banded LU plus a 2x2 Schur complement suffices.
    """
    from scipy.linalg import solve_banded

    n_int = len(thetas) - 2
    gx, gy = _constraint_grad(thetas, ds)
    dx, ex, dy, ey = _constraint_hessians(thetas, ds)
    # energy Hessian: tridiagonal (4, -2, -2)/ds on interior nodes
    diag = 4.0 / ds + lam[0] * dx[1:-1] + lam[1] * dy[1:-1]
    off = -2.0 / ds + lam[0] * ex[1:-1] + lam[1] * ey[1:-1]
    ab = np.zeros((3, n_int))
    ab[0, 1:] = off
    ab[1] = diag
    ab[2, :-1] = off
    g = np.vstack([gx[1:-1], gy[1:-1]])  # 2 x n_int
    rhs = np.column_stack([res[:n_int], g[0], g[1]])
    sol = solve_banded((1, 1), ab, rhs)
    hr, hg = sol[:, 0], sol[:, 1:].T  # H^-1 r1, H^-1 G^T
    schur = g @ hg.T
    dlam = np.linalg.solve(schur, res[n_int:] - g @ hr)
    dth = -hr - hg.T @ dlam
    return np.concatenate([dth, dlam])


def _newton_elastica(theta_init, ds, target, max_iter=100):
    thetas = theta_init.copy()
    lam = np.zeros(2)
    n_int = len(thetas) - 2

    res = _kkt_residual(thetas, lam, ds, target)
    slow = 0
    for _ in range(max_iter):
        nrm = float(np.max(np.abs(res)))
        if nrm < 1e-11:
            return thetas, lam, nrm
        try:
            step = _kkt_step(thetas, lam, ds, res)
        except np.linalg.LinAlgError:
            return thetas, lam, nrm
        scale = 1.0
        improved = False
        for _ls in range(16):
            th_try = thetas.copy()
            th_try[1:-1] += scale * step[:n_int]
            lam_try = lam + scale * step[n_int:]
            res_try = _kkt_residual(th_try, lam_try, ds, target)
            if np.max(np.abs(res_try)) < nrm:
                thetas, lam, res = th_try, lam_try, res_try
                improved = True
                break
            scale *= 0.5
        # crawling basins never reach the tolerance; give up early
        if not improved or np.max(np.abs(res)) > 0.7 * nrm:
            slow += 1
            if slow >= 6:
                break
        else:
            slow = 0
    return thetas, lam, float(np.max(np.abs(res)))


def _fit_c_const(thetas: np.ndarray, ds: float) -> float:
    """Least-squares C in theta''' + theta'^3/2 + C theta' = 0 on the interior grid."""
    th = thetas
    if len(th) < 7:
        return 0.0
    d1 = (th[3:-1] - th[1:-3]) / (2.0 * ds)
    d3 = (th[4:] - 2.0 * th[3:-1] + 2.0 * th[1:-3] - th[:-4]) / (2.0 * ds**3)
    num = -float(np.dot(d3 + 0.5 * d1**3, d1))
    den = float(np.dot(d1, d1))
    return num / den if den > 0.0 else 0.0


def elastica_bvp(
    p0,
    t0,
    p1,
    t1,
    length: float,
    n: int = 64,
    restarts: int = 8,
    seed: int = 0,
    tol: Tolerances = DEFAULT,
) -> ElasticaSegment:
    """Minimum-bending-energy curve of fixed length clamped at both poses.

    Solves the KKT system of the turning-angle discretization by damped
    Newton from several starts (winding branches plus random smooth
    perturbations); distinct local minima trigger MultipleSolutionsWarning
    and the lowest-energy one is returned.
    """
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    t0 = np.asarray(t0, dtype=float) / np.linalg.norm(t0)
    t1 = np.asarray(t1, dtype=float) / np.linalg.norm(t1)
    chord = p1 - p0
    d = float(np.linalg.norm(chord))
    if length < d * (1.0 - 1e-12):
        raise Infeasible(f"length {length} shorter than chord {d}")
    th0 = math.atan2(t0[1], t0[0])
    th1 = th0 + _wrap_angle(math.atan2(t1[1], t1[0]) - th0)
    if length <= d * (1.0 + 1e-12):
        psi = math.atan2(chord[1], chord[0])
        if abs(_wrap_angle(th0 - psi)) > 1e-9 or abs(_wrap_angle(th1 - psi)) > 1e-9:
            raise Infeasible("length equals chord but tangents are not aligned")
        return ElasticaSegment(p0, np.full(n + 1, psi), length, 0.0)

    ds = length / n
    target = (float(chord[0]), float(chord[1]))
    rng = np.random.default_rng(seed)
    grid = np.linspace(0.0, 1.0, n + 1)

    branches = (0.0, _TWO_PI, -_TWO_PI)
    starts = [th0 + (th1 + b - th0) * grid for b in branches]
    while len(starts) < 3 + restarts:
        base = starts[len(starts) % 3].copy()
        for mode in range(1, 4):
            # interior perturbation only; sin windows vanish at both ends
            base += rng.normal(0.0, 0.6 / mode) * np.sin(math.pi * mode * grid)
        starts.append(base)

    solutions = []
    best_res = math.inf
    for init in starts:
        thetas, lam, res = _newton_elastica(init, ds, target)
        best_res = min(best_res, res)
        if res < tol.elastica_kkt:
            solutions.append((elastica_energy(thetas, ds), thetas))
    if not solutions:
        raise NoConvergence(
            f"elastica boundary value problem did not converge (best residual {best_res:.3e})",
            residual=best_res,
        )
    solutions.sort(key=lambda pair: pair[0])
    distinct = [solutions[0]]
    for e, th in solutions[1:]:
        if all(np.max(np.abs(th - other[1])) > 1e-6 for other in distinct):
            distinct.append((e, th))
    if len(distinct) > 1:
        warnings.warn(
            f"{len(distinct)} distinct elastica solutions; returning lowest energy",
            MultipleSolutionsWarning,
        )
    energy, thetas = distinct[0]
    return ElasticaSegment(p0, thetas, length, _fit_c_const(thetas, ds))


def project_to_constraints(thetas: np.ndarray, ds: float, target, max_iter: int = 50):
    """Minimally adjust interior thetas so the displacement hits the target.

    Used to generate feasible perturbations when probing local minimality.
    Endpoint values are preserved.  Returns the adjusted array or None.
    """
    th = np.asarray(thetas, dtype=float).copy()
    for _ in range(max_iter):
        x, y = elastica_constraints(th, ds)
        g = np.array([x - target[0], y - target[1]])
        if np.max(np.abs(g)) < 1e-13:
            return th
        gx, gy = _constraint_grad(th, ds)
        jac = np.vstack([gx[1:-1], gy[1:-1]])  # 2 x interior
        # minimum-norm correction: dth = -J^T (J J^T)^{-1} g
        jjt = jac @ jac.T
        try:
            mu = np.linalg.solve(jjt, g)
        except np.linalg.LinAlgError:
            return None
        th[1:-1] -= jac.T @ mu
    return None


# ---------------------------------------------------------------------------
# centered splining


def spline_centered(
    rc: RefinedCurve,
    n: int = 64,
    restarts: int = 8,
    seed: int = 0,
    tol: Tolerances = DEFAULT,
) -> Spline:
    """Length-preserving elastica spline through centered offset points.

    Each polyline vertex moves onto its centered circle (offset toward the
    center of curvature by the vertex-angle formula); the spline direction
    there is the average of the adjacent edge directions, and each span gets
    an elastica of length exactly 2*ell.
    """
    _require_planar(rc.points)
    validate_refined(rc, tol)
    pts = rc.points
    n_pts = len(pts)
    ell = rc.ell
    nodes = []  # (point, unit direction)
    if not rc.closed and not rc.is_vertex(0):
        raise InputError("open centered splining expects the curve to start at a vertex")
    if not rc.closed:
        d0 = (pts[1] - pts[0]) / np.linalg.norm(pts[1] - pts[0])
        nodes.append((pts[0].copy(), d0))
    lo = 0 if rc.closed else 1
    hi = n_pts if rc.closed else n_pts - 1
    for v in range(lo, hi):
        if not rc.is_vertex(v):
            continue
        e0 = pts[v] - pts[(v - 1) % n_pts]
        e1 = pts[(v + 1) % n_pts] - pts[v]
        e0 = e0 / np.linalg.norm(e0)
        e1 = e1 / np.linalg.norm(e1)
        tv = e0 + e1
        tv = tv / np.linalg.norm(tv)
        theta = math.atan2(e0[0] * e1[1] - e0[1] * e1[0], float(np.dot(e0, e1)))
        if abs(theta) < 1e-12:
            nodes.append((pts[v].copy(), tv))
        else:
            offset = centered_vertex_offset(abs(theta), ell)
            inward = math.copysign(1.0, theta) * _rot90(tv)
            nodes.append((pts[v] + offset * inward, tv))
    if not rc.closed:
        dl = (pts[-1] - pts[-2]) / np.linalg.norm(pts[-1] - pts[-2])
        nodes.append((pts[-1].copy(), dl))
    segments = []
    spans = len(nodes) if rc.closed else len(nodes) - 1
    for i in range(spans):
        a = nodes[i]
        b = nodes[(i + 1) % len(nodes)]
        segments.append(
            elastica_bvp(a[0], a[1], b[0], b[1], 2.0 * ell, n=n, restarts=restarts, seed=seed + i, tol=tol)
        )
    return Spline(tuple(segments), closed=rc.closed)


# ---------------------------------------------------------------------------
# Sogo's discrete elastica turning angles


def sogo_turning_angles(theta0: float, k: float, n_steps: int) -> np.ndarray:
    """Discrete elastica turning-angle sequence via the Jacobi sn function.

    theta_j = 2 asin( sin(theta0/2) * sn(K(k) * (N - j)/N, k) ), j = 0..N.
    Endpoint identities: theta_N = 0 (sn(0) = 0) and theta_0 = theta0
    (sn(K) = 1).
    """
    if n_steps < 2:
        raise InputError("need at least 2 steps")
    big_k = elliptic_K(k)
    amp = math.sin(theta0 / 2.0)
    out = np.empty(n_steps + 1)
    for j in range(n_steps + 1):
        sn = jacobi_sn(big_k * (n_steps - j) / n_steps, k)
        out[j] = 2.0 * math.asin(max(-1.0, min(1.0, amp * sn)))
    return out
