"""Optimal root-mean-square line through a group of 3D points.

The best line passes through the center of mass and points along the
eigenvector of the smallest eigenvalue of the non-linearity matrix. When
the two smallest eigenvalues coincide (disc-like points) or all three do
(ball-like points) that direction is not unique; the result still carries
one, and ``classification`` says so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from linefit3d.eigen3 import DEFAULT_REL_TOL, SpectrumClass, classify_spectrum, eigen_sym3
from linefit3d.errors import DegenerateConfigurationError
from linefit3d.geometry import LineMoment, LineParametric, Vec3, cross
from linefit3d.nonlinearity import PointCloud, centroid, nonlinearity_matrix


@dataclass(frozen=True)
class FitConfig:
    degeneracy_rel_tol: float = DEFAULT_REL_TOL
    strict_degenerate: bool = False

    def __post_init__(self):
        if not self.degeneracy_rel_tol > 0:
            raise ValueError(
                f"degeneracy_rel_tol must be positive, got {self.degeneracy_rel_tol}"
            )


@dataclass(frozen=True, eq=False)
class FitResult:
    centroid: Vec3
    direction: Vec3
    moment: Vec3
    eigenvalues: tuple[float, float, float]
    mean_square_distance: float
    rms_distance: float
    classification: SpectrumClass
    n_points: int

    @property
    def line(self) -> LineMoment:
        return LineMoment(self.direction, self.moment)

    @property
    def parametric(self) -> LineParametric:
        return LineParametric(self.centroid, self.direction)

    @property
    def is_unique(self) -> bool:
        return self.classification is SpectrumClass.UNIQUE


def _centered_mean_square(points: np.ndarray, center: Vec3, a: Vec3) -> float:
    # Evaluated from residuals rather than read off as the smallest eigenvalue:
    # the eigenvalue carries an absolute error of order eps*|M|, the residual
    # sum stays accurate for (nearly) collinear points.
    r = np.cross(points - center, a)
    return float(np.einsum("ij,ij->", r, r)) / points.shape[0]


def fit_line(cloud, config: FitConfig | None = None) -> FitResult:
    config = config or FitConfig()
    cloud = PointCloud.coerce(cloud)

    r_cm = centroid(cloud)
    eig = eigen_sym3(nonlinearity_matrix(cloud))
    classification = classify_spectrum(eig, config.degeneracy_rel_tol)
    if config.strict_degenerate and classification is not SpectrumClass.UNIQUE:
        raise DegenerateConfigurationError(classification, eig.values)

    a = eig.vector(0)
    msd = _centered_mean_square(cloud.points, r_cm, a)
    return FitResult(
        centroid=r_cm,
        direction=a,
        moment=cross(r_cm, a),
        eigenvalues=eig.values,
        mean_square_distance=msd,
        rms_distance=math.sqrt(msd),
        classification=classification,
        n_points=cloud.n,
    )


def residual_report(cloud, result: FitResult) -> np.ndarray:
    """Distance from every point to the fitted line, in input order."""
    cloud = PointCloud.coerce(cloud)
    if cloud.n != result.n_points:
        raise ValueError(
            f"result was fitted to {result.n_points} points, cloud has {cloud.n}"
        )
    r = np.cross(cloud.points, result.direction) - result.moment
    return np.sqrt(np.einsum("ij,ij->i", r, r))
