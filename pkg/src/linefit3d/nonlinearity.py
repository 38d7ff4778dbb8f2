"""Center of mass and the non-linearity matrix of a point group.

For unit direction ``a`` the non-linearity form ``Q(a, a)`` is the mean
squared distance from the points to the best line with direction ``a``.
Its matrix is assembled from centered coordinates, which makes it equal to
the inertia tensor of unit masses about the center of mass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from linefit3d.errors import EmptyCloudError
from linefit3d.geometry import LineMoment, Vec3, cross


@dataclass(frozen=True, eq=False)
class PointCloud:
    """An ordered group of points, stored as a read-only (n, 3) float64 array."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64)
        if pts.size == 0:
            raise EmptyCloudError()
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise ValueError(f"expected an (n, 3) array of points, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            bad = int(np.argwhere(~np.isfinite(pts))[0, 0])
            raise ValueError(f"point {bad} has a non-finite component")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    def __len__(self) -> int:
        return self.n

    @classmethod
    def coerce(cls, cloud: "PointCloud | Iterable") -> "PointCloud":
        if isinstance(cloud, cls):
            return cloud
        return cls(np.asarray(list(cloud) if not isinstance(cloud, np.ndarray) else cloud))


@dataclass(frozen=True)
class SymMat3:
    """Symmetric 3x3 matrix; only the upper triangle is stored."""

    m11: float
    m12: float
    m13: float
    m22: float
    m23: float
    m33: float

    @classmethod
    def from_array(cls, m) -> "SymMat3":
        m = np.asarray(m, dtype=np.float64)
        if m.shape != (3, 3):
            raise ValueError(f"expected a 3x3 matrix, got shape {m.shape}")
        # symmetrize so a caller's roundoff asymmetry cannot leak in
        s = 0.5 * (m + m.T)
        return cls(s[0, 0], s[0, 1], s[0, 2], s[1, 1], s[1, 2], s[2, 2])

    def to_array(self) -> np.ndarray:
        return np.array(
            [
                [self.m11, self.m12, self.m13],
                [self.m12, self.m22, self.m23],
                [self.m13, self.m23, self.m33],
            ]
        )

    def trace(self) -> float:
        return self.m11 + self.m22 + self.m33


def centroid(cloud) -> Vec3:
    cloud = PointCloud.coerce(cloud)
    return cloud.points.sum(axis=0) / cloud.n


def nonlinearity_matrix(cloud) -> SymMat3:
    """Matrix ``M`` with ``Q(a, a) = a^T M a``.

    ``M = (1/n) sum(|s|^2 I - s s^T)`` over the centered points ``s``.
    """
    cloud = PointCloud.coerce(cloud)
    s = cloud.points - centroid(cloud)
    n = cloud.n
    xx = float(np.dot(s[:, 0], s[:, 0])) / n
    yy = float(np.dot(s[:, 1], s[:, 1])) / n
    zz = float(np.dot(s[:, 2], s[:, 2])) / n
    xy = float(np.dot(s[:, 0], s[:, 1])) / n
    xz = float(np.dot(s[:, 0], s[:, 2])) / n
    yz = float(np.dot(s[:, 1], s[:, 2])) / n
    return SymMat3(yy + zz, -xy, -xz, xx + zz, -yz, xx + yy)


def quadratic_form_value(m: SymMat3, a) -> float:
    a = np.asarray(a, dtype=np.float64)
    return float(a @ m.to_array() @ a)


def optimal_moment(cloud, a) -> Vec3:
    """Moment vector minimizing the mean square distance for direction ``a``."""
    return cross(centroid(cloud), a)


def mean_square_distance(cloud, line: LineMoment) -> float:
    cloud = PointCloud.coerce(cloud)
    residuals = np.cross(cloud.points, line.direction) - line.moment
    return float(np.einsum("ij,ij->", residuals, residuals)) / cloud.n
