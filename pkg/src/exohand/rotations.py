"""Small rotation toolbox: unit quaternions (w, x, y, z), rotation vectors, Rodrigues.

Everything is float64 and allocation-light; these helpers sit on the hot path of
the simulator step.
"""

import math

import numpy as np

IDENTITY_QUAT = np.array([1.0, 0.0, 0.0, 0.0])


def quat_normalize(q):
    n = math.sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3])
    return q / n


def quat_mul(a, b):
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return np.array([
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ])


def quat_conj(q):
    return np.array([q[0], -q[1], -q[2], -q[3]])


def quat_rotate(q, v):
    """Rotate vector v by unit quaternion q (active rotation)."""
    w, x, y, z = q
    # t = 2 * (q_vec x v); v' = v + w*t + q_vec x t
    tx = 2.0 * (y * v[2] - z * v[1])
    ty = 2.0 * (z * v[0] - x * v[2])
    tz = 2.0 * (x * v[1] - y * v[0])
    return np.array([
        v[0] + w * tx + (y * tz - z * ty),
        v[1] + w * ty + (z * tx - x * tz),
        v[2] + w * tz + (x * ty - y * tx),
    ])


def quat_from_rotvec(r):
    """Exponential map: rotation vector (axis * angle, rad) to unit quaternion."""
    angle = math.sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2])
    if angle < 1e-12:
        # first-order expansion keeps the map smooth through zero
        return quat_normalize(np.array([1.0, 0.5 * r[0], 0.5 * r[1], 0.5 * r[2]]))
    half = 0.5 * angle
    s = math.sin(half) / angle
    return np.array([math.cos(half), r[0] * s, r[1] * s, r[2] * s])


def rotvec_from_quat(q):
    """Logarithm map: unit quaternion to rotation vector in (-pi, pi]."""
    w, x, y, z = q
    if w < 0.0:  # canonical hemisphere
        w, x, y, z = -w, -x, -y, -z
    vn = math.sqrt(x * x + y * y + z * z)
    if vn < 1e-12:
        return np.array([2.0 * x, 2.0 * y, 2.0 * z])
    angle = 2.0 * math.atan2(vn, w)
    return np.array([x, y, z]) * (angle / vn)


def quat_to_matrix(q):
    w, x, y, z = q
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def quat_slerp(q0, q1, t):
    """Spherical interpolation along the shorter arc; endpoints exact."""
    d = float(np.dot(q0, q1))
    if d < 0.0:
        q1 = -q1
        d = -d
    if d > 1.0 - 1e-12:
        return quat_normalize(q0 + t * (q1 - q0))
    theta = math.acos(min(d, 1.0))
    s = math.sin(theta)
    return quat_normalize((math.sin((1.0 - t) * theta) / s) * q0
                          + (math.sin(t * theta) / s) * q1)


def rotation_angle_between(q1, q2):
    """Geodesic angle in [0, pi] between two orientations (double-cover safe)."""
    d = abs(float(np.dot(q1, q2)))
    return 2.0 * math.acos(min(1.0, d))


def axis_angle_matrix(axis, angle):
    """Rodrigues rotation matrix about a unit axis."""
    x, y, z = axis
    c, s = math.cos(angle), math.sin(angle)
    C = 1.0 - c
    return np.array([
        [c + x * x * C, x * y * C - z * s, x * z * C + y * s],
        [y * x * C + z * s, c + y * y * C, y * z * C - x * s],
        [z * x * C - y * s, z * y * C + x * s, c + z * z * C],
    ])


def rotate_about_axis(v, axis, angle):
    """Rodrigues rotation of vectors about a unit axis. Broadcasts over rows of v."""
    v = np.asarray(v, dtype=float)
    axis = np.asarray(axis, dtype=float)
    c, s = math.cos(angle), math.sin(angle)
    cross = np.cross(axis, v)
    dot = v @ axis if v.ndim == 1 else v @ axis
    if v.ndim == 1:
        return v * c + cross * s + axis * (dot * (1.0 - c))
    return v * c + cross * s + np.outer(dot, axis) * (1.0 - c)


def rotation_between_vectors(a, b):
    """Unit quaternion rotating unit vector a onto unit vector b."""
    d = float(np.dot(a, b))
    if d > 1.0 - 1e-12:
        return IDENTITY_QUAT.copy()
    if d < -1.0 + 1e-12:
        # pick any axis orthogonal to a
        axis = np.cross(a, np.array([1.0, 0.0, 0.0]))
        if np.dot(axis, axis) < 1e-12:
            axis = np.cross(a, np.array([0.0, 1.0, 0.0]))
        axis /= np.linalg.norm(axis)
        return np.array([0.0, axis[0], axis[1], axis[2]])
    axis = np.cross(a, b)
    q = np.array([1.0 + d, axis[0], axis[1], axis[2]])
    return quat_normalize(q)
