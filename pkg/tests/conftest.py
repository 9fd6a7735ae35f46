import math

import numpy as np
import pytest

from frenetkit import (
    Convention,
    InitialPose,
    curvature_torsion,
    reconstruct,
)


def random_rotation(rng):
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    if np.linalg.det(q) < 0.0:
        q[:, 0] = -q[:, 0]
    return q


def random_pose(rng):
    rot = random_rotation(rng)
    return InitialPose(
        origin=rng.normal(scale=3.0, size=3),
        tangent=rot[:, 0],
        normal=rot[:, 1],
        binormal=rot[:, 2],
    )


def make_random_intrinsic(rng, n_points, ell=None, planar=False, min_angle=0.05):
    """Alternating angle record for a refined curve with n_points points.

    Turning at even transition indices, |theta| in [min_angle, pi/2];
    twisting in [-pi/2, pi/2] for 3D curves.  Planar curves get signed theta
    and no twist.
    """
    n_tr = n_points - 2
    theta = np.zeros(n_tr)
    phi = np.zeros(n_tr)
    turn = np.arange(n_tr) % 2 == 0
    vals = rng.uniform(min_angle, math.pi / 2.0, int(turn.sum()))
    if planar:
        vals = vals * rng.choice([-1.0, 1.0], size=len(vals))
    theta[turn] = vals
    if not planar:
        phi[~turn] = rng.uniform(-math.pi / 2.0, math.pi / 2.0, int((~turn).sum()))
        if n_tr % 2 == 0:
            # a twist after the last turn moves no points; keep it observable
            phi[-1] = 0.0
    if ell is None:
        ell = float(rng.uniform(0.2, 2.0))
    return curvature_torsion(theta, phi, ell, Convention.INSCRIBED)


def make_random_refined(rng, n_points, planar=False):
    """Random refined curve (via its own intrinsic record) plus that record."""
    data = make_random_intrinsic(rng, n_points, planar=planar)
    if planar:
        rc = reconstruct(data, InitialPose(), n_steps=n_points - 1)
        return rc.__class__(rc.points[:, :2], rc.ell, closed=False, vertex_parity=1), data
    rc = reconstruct(data, random_pose(rng), n_steps=n_points - 1)
    return rc, data


@pytest.fixture
def rng():
    return np.random.default_rng(2026)
