"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the report lines.
"""

import math
import re
import time
import warnings
from pathlib import Path

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.optimize import brentq, fsolve

from frenetkit import (
    Convention,
    DiscreteCurve,
    InitialPose,
    analyze,
    congruent,
    curvature_torsion,
    elliptic_K,
    frenet_residual,
    fresnel,
    jacobi_sn,
    jacobi_sn_cn,
    kappa_from_angle,
    ngon_of_circle,
    reconstruct,
    refine,
    rigid_align,
)
from frenetkit.discretize2d import (
    circle,
    discretize_centered,
    discretize_circumscribed,
    find_inflections,
    sine_arc,
    uniform_samples,
)
from frenetkit.errors import MTooSmall, MultipleSolutionsWarning, ParallelTangents
from frenetkit.spline2d import (
    ArcSegment,
    clothoid_g1_fit,
    elastica_bvp,
    elastica_constraints,
    elastica_energy,
    g1_defects,
    project_to_constraints,
    sogo_turning_angles,
    spline_centered,
    spline_circumscribed,
    spline_inscribed,
)

from conftest import make_random_refined, random_pose

GOLDEN_DIR = Path(__file__).parent / "golden"


def _report(num: int, desc: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"\nacceptance {num:02d} {desc}: {status}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {num} {desc}: {detail}"


def test_criterion_01_circle_ngon_exactness():
    t0 = time.time()
    worst = 0.0
    for r in (0.5, 1.0, 7.0):
        for n in range(3, 101):
            theta = 2.0 * math.pi / n
            for conv in Convention:
                poly = ngon_of_circle(r, n, conv)
                side = float(poly.edge_lengths()[0])
                k = kappa_from_angle(theta, side, conv)
                worst = max(worst, abs(k * r - 1.0))
    elapsed = time.time() - t0
    _report(
        1,
        "circle/N-gon exactness",
        worst <= 1e-12 and elapsed < 1.0,
        f"worst rel err {worst:.2e}, {elapsed:.2f}s",
    )


def test_criterion_02_convention_ordering_and_convergence():
    ok = True
    for theta in np.linspace(1e-4, math.pi / 2.0, 200):
        k_in = kappa_from_angle(float(theta), 1.0, Convention.INSCRIBED)
        k_ce = kappa_from_angle(float(theta), 1.0, Convention.CENTERED)
        k_ci = kappa_from_angle(float(theta), 1.0, Convention.CIRCUMSCRIBED)
        ok = ok and k_in < k_ce < k_ci
    thetas = np.geomspace(1e-3, 1e-1, 30)
    slopes = []
    for a, b in (
        (Convention.INSCRIBED, Convention.CENTERED),
        (Convention.CENTERED, Convention.CIRCUMSCRIBED),
        (Convention.INSCRIBED, Convention.CIRCUMSCRIBED),
    ):
        d = [
            abs(kappa_from_angle(float(t), 1.0, a) - kappa_from_angle(float(t), 1.0, b))
            for t in thetas
        ]
        slopes.append(float(np.polyfit(np.log(thetas), np.log(d), 1)[0]))
    ok = ok and all(abs(s - 3.0) <= 0.1 for s in slopes)
    _report(2, "convention ordering and theta^3 convergence", ok,
            "slopes " + ", ".join(f"{s:.3f}" for s in slopes))


def test_criterion_03_discrete_frenet_theorem():
    rng = np.random.default_rng(303)
    worst = 0.0
    for _ in range(100):
        n_pts = int(rng.integers(50, 501))
        rc, _ = make_random_refined(rng, n_pts)
        for conv in Convention:
            ff, data = analyze(rc, conv)
            worst = max(worst, frenet_residual(ff, data))
    _report(3, "discrete Frenet residual on 100 random 3D curves", worst <= 1e-12,
            f"max residual {worst:.2e}")


def test_criterion_04_fundamental_theorem():
    rng = np.random.default_rng(404)
    worst_rms = 0.0
    worst_ang = 0.0
    for _ in range(100):
        n_pts = int(rng.integers(10, 120))
        rc, data_in = make_random_refined(rng, n_pts)
        ff, data = analyze(rc)
        pose = InitialPose(
            origin=rc.points[0], tangent=ff.Te[0], normal=ff.Ne[0], binormal=ff.Be[0]
        )
        rebuilt = reconstruct(data, pose, n_steps=rc.n_edges())
        _, rms = congruent(rc, rebuilt)
        worst_rms = max(worst_rms, rms)
        worst_ang = max(
            worst_ang,
            float(np.max(np.abs(data.theta - data_in.theta))),
            float(np.max(np.abs(data.phi - data_in.phi))),
        )
    # constant turn/twist: cylinder fit via the double-step screw motion.
    # Midpoints and vertices lie on two coaxial cylinders (compare apothem vs
    # circumradius of a polygon), so radial constancy is checked per parity.
    n_steps = 200
    theta = np.zeros(n_steps - 1)
    phi = np.zeros(n_steps - 1)
    theta[0::2] = 0.3
    phi[1::2] = 0.3
    data = curvature_torsion(theta, phi, 1.0, Convention.INSCRIBED)
    pts = reconstruct(data, InitialPose(), n_steps=n_steps).points
    rot, trans, fit_rms = rigid_align(pts[:-2], pts[2:])
    w, v = np.linalg.eig(rot)
    axis = np.real(v[:, np.argmin(np.abs(w - 1.0))])
    axis /= np.linalg.norm(axis)
    t_par = axis * float(np.dot(axis, trans))
    p0, *_ = np.linalg.lstsq(np.eye(3) - rot, trans - t_par, rcond=None)
    rel = pts - p0
    radial = np.linalg.norm(rel - np.outer(rel @ axis, axis), axis=1)
    dev = max(
        float(np.max(radial[p::2]) - np.min(radial[p::2])) for p in (0, 1)
    )
    ok = worst_rms <= 1e-9 and worst_ang <= 1e-10 and fit_rms <= 1e-9 and dev <= 1e-9
    _report(4, "fundamental theorem round trips and helix cylinder", ok,
            f"rms {worst_rms:.2e}, angle err {worst_ang:.2e}, radial dev {dev:.2e}")


def test_criterion_05_circumscribed_tangency():
    c = sine_arc()
    infl = find_inflections(c)
    samples = np.sort(np.concatenate([uniform_samples(c, 16)[1:-1], infl]))
    dc = discretize_circumscribed(c, samples)
    pts = np.array([c.point(v) for v in samples])
    tans = np.array([c.tangent(v) for v in samples])
    worst = 0.0
    for i in range(len(samples)):
        for vert in (dc.points[i], dc.points[i + 1]):
            d = vert - pts[i]
            worst = max(worst, abs(d[0] * tans[i, 1] - d[1] * tans[i, 0]))
    raised = False
    try:
        discretize_circumscribed(circle(1.0), [0.0, math.pi])
    except ParallelTangents:
        raised = True
    _report(5, "circumscribed tangency and parallel-tangent error",
            worst <= 1e-10 and raised, f"max point-line distance {worst:.2e}")


def test_criterion_06_centered_length_preservation():
    target = 2.0 * math.pi
    outcomes = {}
    worst_exact = 0.0
    for density in (4.0, 10.0, 50.0):
        rc = discretize_centered(circle(1.0), density, variant="exact")
        worst_exact = max(worst_exact, abs(rc.length() - target))
        try:
            discretize_centered(circle(1.0), density, variant="published")
            outcomes[density] = "published variant completed"
        except MTooSmall:
            outcomes[density] = "published variant infeasible (MTooSmall)"
    ok = worst_exact <= 1e-9 and all("infeasible" in v for v in outcomes.values())
    _report(
        6,
        "centered length preservation; exact offset satisfies the test, "
        "published offset does not",
        ok,
        f"exact variant length error {worst_exact:.2e}; " + outcomes[10.0],
    )


def test_criterion_07_special_functions():
    worst = 0.0
    for s in np.linspace(-4.0, 4.0, 33):
        c_ref, _ = quad(lambda t: math.cos(0.5 * math.pi * t * t), 0.0, float(s), limit=400)
        s_ref, _ = quad(lambda t: math.sin(0.5 * math.pi * t * t), 0.0, float(s), limit=400)
        c, sv = fresnel(float(s))
        worst = max(worst, abs(c - c_ref), abs(sv - s_ref))
    for k in np.linspace(0.0, 0.99, 34):
        ref, _ = quad(lambda t: 1.0 / math.sqrt(1.0 - (k * math.sin(t)) ** 2), 0.0, math.pi / 2.0)
        worst = max(worst, abs(elliptic_K(float(k)) - ref))
    # sn inversion oracle
    for k, u in ((0.3, 0.7), (0.8, 1.2)):
        def inc(phi):
            v, _ = quad(lambda t: 1.0 / math.sqrt(1.0 - (k * math.sin(t)) ** 2), 0.0, phi)
            return v - u
        phi = brentq(inc, 0.0, math.pi / 2.0, xtol=1e-14)
        worst = max(worst, abs(jacobi_sn(u, k) - math.sin(phi)))
    worst_sin = max(
        abs(jacobi_sn(float(u), 0.0) - math.sin(float(u))) for u in np.linspace(-10, 10, 81)
    )
    worst_id = 0.0
    for k in (0.2, 0.6, 0.95):
        for u in np.linspace(-5.0, 5.0, 41):
            s, c = jacobi_sn_cn(float(u), k)
            worst_id = max(worst_id, abs(s * s + c * c - 1.0))
    ok = worst <= 1e-10 and worst_sin <= 1e-12 and worst_id <= 1e-10
    _report(7, "special functions vs quadrature/inversion oracles", ok,
            f"oracle err {worst:.2e}, sn(u,0) err {worst_sin:.2e}, identity err {worst_id:.2e}")


def test_criterion_08_clothoid_fitting():
    rng = np.random.default_rng(808)
    t0 = time.time()
    n_total = 1000
    n_ok = 0
    worst = 0.0
    for _ in range(n_total):
        p0 = rng.normal(size=2)
        chord_angle = rng.uniform(-math.pi, math.pi)
        d = rng.uniform(0.3, 3.0)
        p1 = p0 + d * np.array([math.cos(chord_angle), math.sin(chord_angle)])
        # turning <= pi/2: tangents within pi/4 of the chord
        a0 = chord_angle + rng.uniform(-math.pi / 4.0, math.pi / 4.0)
        a1 = chord_angle + rng.uniform(-math.pi / 4.0, math.pi / 4.0)
        t0v = np.array([math.cos(a0), math.sin(a0)])
        t1v = np.array([math.cos(a1), math.sin(a1)])
        try:
            seg = clothoid_g1_fit(p0, t0v, p1, t1v)
        except Exception:
            continue
        end = seg.point_at(seg.length)
        res = float(np.linalg.norm(end - p1)) + abs(
            math.remainder(seg.angle_at(seg.length) - a1, 2.0 * math.pi)
        )
        if res <= 1e-8 * max(1.0, d):
            n_ok += 1
            worst = max(worst, res)
    # symmetric data must come back as arcs with zero sharpness
    arcs_ok = True
    for _ in range(50):
        p0 = rng.normal(size=2)
        chord_angle = rng.uniform(-math.pi, math.pi)
        p1 = p0 + np.array([math.cos(chord_angle), math.sin(chord_angle)])
        half = rng.uniform(-0.7, 0.7)
        t0v = np.array([math.cos(chord_angle + half), math.sin(chord_angle + half)])
        t1v = np.array([math.cos(chord_angle - half), math.sin(chord_angle - half)])
        seg = clothoid_g1_fit(p0, t0v, p1, t1v)
        arcs_ok = arcs_ok and not hasattr(seg, "sharpness")
    elapsed = time.time() - t0
    ok = n_ok >= 0.99 * n_total and arcs_ok and elapsed < 10.0
    _report(8, "clothoid fitting success rate and symmetric arcs", ok,
            f"{n_ok}/{n_total} fits, worst residual {worst:.2e}, {elapsed:.1f}s")


def test_criterion_09_elastica_and_sogo():
    straight = elastica_bvp([0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [1.0, 0.0], 1.0)
    arc = elastica_bvp([1.0, 0.0], [0.0, 1.0], [0.0, 1.0], [-1.0, 0.0], math.pi / 2.0)
    energy_err = max(abs(straight.energy()), abs(arc.energy() - math.pi / 2.0))

    generic = elastica_bvp(
        [0.0, 0.0], [1.0, 0.0], [0.9, 0.35], [0.0, 1.0], 1.3, n=2048, restarts=2
    )
    th, ds = generic.thetas, generic.ds
    d1 = (th[3:-1] - th[1:-3]) / (2.0 * ds)
    d3 = (th[4:] - 2.0 * th[3:-1] + 2.0 * th[1:-3] - th[:-4]) / (2.0 * ds**3)
    el_resid = float(np.max(np.abs(d3 + 0.5 * d1**3 + generic.c_const * d1)))

    probe = elastica_bvp([0.0, 0.0], [1.0, 0.0], [0.9, 0.35], [0.0, 1.0], 1.3)
    ds_p = probe.ds
    target = elastica_constraints(probe.thetas, ds_p)
    e0 = elastica_energy(probe.thetas, ds_p)
    rng = np.random.default_rng(909)
    grid = np.linspace(0.0, 1.0, len(probe.thetas))
    worst_drop = 0.0
    n_checked = 0
    while n_checked < 100:
        pert = probe.thetas + 1e-4 * rng.normal() * np.sin(
            math.pi * rng.integers(1, 6) * grid
        )
        proj = project_to_constraints(pert, ds_p, target)
        if proj is None:
            continue
        worst_drop = max(worst_drop, e0 - elastica_energy(proj, ds_p))
        n_checked += 1

    # Sogo: endpoint identities exact; left-sample quadrature of the sampled
    # turning angle converges to the continuous integral at rate 1/N
    theta0, k = 1.1, 0.6
    ends_ok = (
        sogo_turning_angles(theta0, k, 40)[-1] == 0.0
        and abs(sogo_turning_angles(theta0, k, 40)[0] - theta0) <= 1e-12
    )
    big_k = elliptic_K(k)
    amp = math.sin(theta0 / 2.0)

    def turning(s):  # continuous formula on s in [0, 1]
        return 2.0 * math.asin(amp * jacobi_sn(big_k * (1.0 - s), k))

    ref, _ = quad(lambda s: math.cos(turning(s)), 0.0, 1.0, limit=200)
    errs = []
    ns = (16, 32, 64, 128, 256)
    for n in ns:
        seq = sogo_turning_angles(theta0, k, n)
        approx = float(np.sum(np.cos(seq[:-1])) / n)
        errs.append(abs(approx - ref))
    slope = float(np.polyfit(np.log(1.0 / np.asarray(ns)), np.log(errs), 1)[0])

    ok = (
        energy_err <= 1e-8
        and el_resid <= 1e-4
        and worst_drop <= 1e-10
        and ends_ok
        and abs(slope - 1.0) <= 0.1
    )
    _report(9, "elastica analytic cases, EL residual, minimality, Sogo", ok,
            f"energy err {energy_err:.2e}, EL residual {el_resid:.2e}, "
            f"worst energy drop {worst_drop:.2e}, Sogo slope {slope:.3f}")


def _random_convex_equilateral_pentagon(rng):
    """Unit-side convex pentagon: edge headings must sum to a closed walk."""
    base = 2.0 * math.pi * np.arange(5) / 5.0
    pert = rng.uniform(-0.25, 0.25, 5)
    pert[3:] = 0.0  # solve for the last two headings

    def close(x):
        ang = base + np.concatenate([pert[:3], x])
        return [np.sum(np.cos(ang)), np.sum(np.sin(ang))]

    x = fsolve(close, np.zeros(2), full_output=False)
    ang = base + np.concatenate([pert[:3], x])
    turns = np.diff(np.concatenate([ang, [ang[0] + 2.0 * math.pi]]))
    if np.any(turns <= 0.05) or np.any(turns >= math.pi - 0.05):
        return None
    steps = np.column_stack([np.cos(ang), np.sin(ang)])
    pts = np.cumsum(steps, axis=0)[:-1]
    pts = np.vstack([[0.0, 0.0], pts])
    return DiscreteCurve(pts, closed=True)


def test_criterion_10_splines_g1_and_congruent_arcs():
    rng = np.random.default_rng(1010)
    pentagon = None
    while pentagon is None:
        pentagon = _random_convex_equilateral_pentagon(rng)
    ang = np.arange(6) * math.pi / 3.0
    hexagon = DiscreteCurve(np.column_stack([np.cos(ang), np.sin(ang)]), closed=True)

    worst_pos = worst_ang = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MultipleSolutionsWarning)
        for dc in (hexagon, pentagon):
            rc = refine(dc)
            for sp in (
                spline_inscribed(rc),
                spline_circumscribed(dc),
                spline_centered(rc, n=32, restarts=2),
            ):
                pos, angle = g1_defects(sp)
                worst_pos = max(worst_pos, pos)
                worst_ang = max(worst_ang, angle)

    congruent_ok = True
    for n in (3, 5, 8, 12):
        poly = ngon_of_circle(1.7, n, Convention.INSCRIBED)
        sp = spline_inscribed(refine(poly))
        congruent_ok = congruent_ok and len(sp.segments) == n
        radii = [s.radius for s in sp.segments]
        sweeps = [abs(s.sweep) for s in sp.segments]
        congruent_ok = congruent_ok and np.ptp(radii) <= 1e-12 and np.ptp(sweeps) <= 1e-12
        congruent_ok = congruent_ok and all(isinstance(s, ArcSegment) for s in sp.segments)

    ok = worst_pos <= 1e-9 and worst_ang <= 1e-9 and congruent_ok
    _report(10, "all splines G1 on hexagon/pentagon; N congruent arcs", ok,
            f"position gap {worst_pos:.2e}, tangent gap {worst_ang:.2e}")


_NUM = re.compile(r"-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")


def _svg_matches(a: str, b: str, atol=1e-6) -> bool:
    """Structure must match exactly, numbers within atol."""
    if _NUM.sub("#", a) != _NUM.sub("#", b):
        return False
    na = [float(v) for v in _NUM.findall(a)]
    nb = [float(v) for v in _NUM.findall(b)]
    return len(na) == len(nb) and all(
        abs(x - y) <= atol * max(1.0, abs(x)) for x, y in zip(na, nb)
    )


def test_golden_figures():
    from frenetkit.figures import FIGURES

    failures = []
    for name, builder in FIGURES.items():
        golden = (GOLDEN_DIR / f"{name}.svg").read_text().rstrip("\n")
        if not _svg_matches(builder(), golden):
            failures.append(name)
    _report(11, "golden SVG figures", not failures,
            "all match" if not failures else "mismatch: " + ", ".join(failures))
