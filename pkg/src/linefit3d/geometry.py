"""3D vector helpers and the two straight-line representations.

A line is held either as a point plus unit direction (``r = r0 + a t``) or
as a unit direction plus moment vector (``r x a = b`` with ``b`` orthogonal
to ``a``). Vectors are float64 numpy arrays of shape (3,).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from linefit3d.errors import InvalidLineError

Vec3 = np.ndarray

# |dot(a, b)| below this (relative to max(1, |b|)) is treated as roundoff
MOMENT_REPROJECT_TOL = 1e-8


def vec3(v) -> Vec3:
    """Coerce ``v`` to a finite float64 array of shape (3,)."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"non-finite vector component in {arr.tolist()}")
    return arr


def cross(u, v) -> Vec3:
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    return np.array(
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    )


def dot(u, v) -> float:
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    return float(u[0] * v[0] + u[1] * v[1] + u[2] * v[2])


def norm(u) -> float:
    return float(np.sqrt(dot(u, u)))


def _unit(direction) -> tuple[Vec3, float]:
    a = vec3(direction)
    length = norm(a)
    if length == 0.0:
        raise InvalidLineError("line direction must be non-zero")
    return a / length, length


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class LineParametric:
    """Line ``r = point + direction * t``; the direction is normalized on construction."""

    point: Vec3
    direction: Vec3

    def __post_init__(self):
        a, _ = _unit(self.direction)
        object.__setattr__(self, "point", _frozen(vec3(self.point)))
        object.__setattr__(self, "direction", _frozen(a))


@dataclass(frozen=True, eq=False)
class LineMoment:
    """Line ``r x direction = moment``.

    A non-unit direction is normalized and the moment rescaled with it, so
    the pair still describes the same line. A moment with a small component
    along the direction is projected out; a large one is rejected.
    """

    direction: Vec3
    moment: Vec3

    def __post_init__(self):
        a, length = _unit(self.direction)
        b = vec3(self.moment) / length
        along = dot(a, b)
        if abs(along) > MOMENT_REPROJECT_TOL * max(1.0, norm(b)):
            raise InvalidLineError(
                f"moment is not orthogonal to direction (dot = {along:.3g})"
            )
        b = b - a * along
        object.__setattr__(self, "direction", _frozen(a))
        object.__setattr__(self, "moment", _frozen(b))

    def point(self) -> Vec3:
        """Point of the line closest to the origin, ``a x b``."""
        return cross(self.direction, self.moment)


def evaluate(line: LineParametric, t: float) -> Vec3:
    return line.point + line.direction * t


def to_moment_form(line: LineParametric) -> LineMoment:
    return LineMoment(line.direction, cross(line.point, line.direction))


def point_line_distance(p, line: LineParametric) -> float:
    a = line.direction
    return norm(cross(np.asarray(p, dtype=np.float64) - line.point, a)) / norm(a)


def moment_residual(p, line: LineMoment) -> float:
    return norm(cross(p, line.direction) - line.moment)


def closest_point(p, line: LineParametric) -> Vec3:
    p = np.asarray(p, dtype=np.float64)
    return line.point + line.direction * dot(p - line.point, line.direction)
