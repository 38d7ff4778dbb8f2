"""Optimal root-mean-square line fitting for points in 3D space."""

from linefit3d.errors import (
    ConvergenceError,
    DegenerateConfigurationError,
    EmptyCloudError,
    InvalidLineError,
    ParseError,
)
from linefit3d.geometry import (
    LineMoment,
    LineParametric,
    closest_point,
    cross,
    dot,
    evaluate,
    moment_residual,
    norm,
    point_line_distance,
    to_moment_form,
    vec3,
)
from linefit3d.nonlinearity import (
    PointCloud,
    SymMat3,
    centroid,
    mean_square_distance,
    nonlinearity_matrix,
    optimal_moment,
    quadratic_form_value,
)
from linefit3d.eigen3 import EigenDecomposition, SpectrumClass, classify_spectrum, eigen_sym3
from linefit3d.fitter import FitConfig, FitResult, fit_line, residual_report

from linefit3d._version import __version__

__all__ = [
    "ConvergenceError",
    "DegenerateConfigurationError",
    "EigenDecomposition",
    "EmptyCloudError",
    "FitConfig",
    "FitResult",
    "InvalidLineError",
    "LineMoment",
    "LineParametric",
    "ParseError",
    "PointCloud",
    "SpectrumClass",
    "SymMat3",
    "centroid",
    "classify_spectrum",
    "closest_point",
    "cross",
    "dot",
    "eigen_sym3",
    "evaluate",
    "fit_line",
    "mean_square_distance",
    "moment_residual",
    "nonlinearity_matrix",
    "norm",
    "optimal_moment",
    "point_line_distance",
    "quadratic_form_value",
    "residual_report",
    "to_moment_form",
    "vec3",
]
