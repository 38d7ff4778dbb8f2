import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from linefit3d import (
    InvalidLineError,
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

vectors = arrays(np.float64, 3, elements=st.floats(-1e3, 1e3))
# norms of vectors below ~1e-154 underflow when squared
small = arrays(np.float64, 3, elements=st.floats(-10, 10)).filter(lambda v: np.all((v == 0) | (np.abs(v) > 1e-100)))
nonzero = vectors.filter(lambda v: np.linalg.norm(v) > 1e-3)


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 2, 3), (1, 2, 3), (0, 0, 0)),
        ((0, 1, 0), (1, 0, 0), (0, 0, -1)),
    ],
)
def test_cross(u, v, expected):
    assert cross(u, v).tolist() == list(expected)


@pytest.mark.parametrize(
    "u, v, expected",
    [((1, 0, 0), (0, 1, 0), 0.0), ((1, 2, 3), (1, 2, 3), 14.0), ((2, 0, 0), (3, 4, 0), 6.0)],
)
def test_dot(u, v, expected):
    assert dot(u, v) == expected


@pytest.mark.parametrize(
    "u, expected", [((0, 0, 0), 0.0), ((3, 4, 0), 5.0), ((1, 1, 1), math.sqrt(3))]
)
def test_norm(u, expected):
    assert norm(u) == pytest.approx(expected, rel=1e-15)


def test_vec3_rejects_non_finite():
    with pytest.raises(ValueError):
        vec3((1.0, float("nan"), 0.0))
    with pytest.raises(ValueError):
        vec3((1.0, 2.0))


def test_evaluate():
    assert evaluate(LineParametric((0, 0, 0), (1, 0, 0)), 2).tolist() == [2, 0, 0]
    line = LineParametric((1, 1, 0), (0, 0, 1))
    assert evaluate(line, -3).tolist() == [1, 1, -3]
    assert evaluate(line, 0).tolist() == line.point.tolist()


def test_direction_normalized_and_zero_rejected():
    line = LineParametric((0, 0, 0), (0, 3, 4))
    assert np.allclose(line.direction, [0, 0.6, 0.8], rtol=0, atol=1e-15)
    with pytest.raises(InvalidLineError):
        LineParametric((0, 0, 0), (0, 0, 0))
    with pytest.raises(InvalidLineError):
        LineMoment((0, 0, 0), (0, 0, 1))


def test_lines_are_immutable():
    line = LineParametric((0, 0, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        line.point[0] = 5.0


def test_to_moment_form():
    assert to_moment_form(LineParametric((0, 1, 0), (1, 0, 0))).moment.tolist() == [0, 0, -1]
    assert to_moment_form(LineParametric((0, 0, 0), (0.6, 0.8, 0))).moment.tolist() == [0, 0, 0]
    assert to_moment_form(LineParametric((5, 0, 0), (1, 0, 0))).moment.tolist() == [0, 0, 0]


def test_moment_reprojection():
    line = LineMoment((1, 0, 0), (1e-10, 0, -1))
    assert line.moment.tolist() == [0, 0, -1]
    with pytest.raises(InvalidLineError):
        LineMoment((1, 0, 0), (1e-3, 0, -1))


def test_moment_line_non_unit_direction_keeps_the_line():
    # r x (2,0,0) = (0,0,-2) is the line through (0,1,0) along x
    line = LineMoment((2, 0, 0), (0, 0, -2))
    assert moment_residual((0, 1, 0), line) == 0.0
    assert np.allclose(line.point(), [0, 1, 0])


def test_point_line_distance():
    x_axis = LineParametric((0, 0, 0), (1, 0, 0))
    assert point_line_distance((0, 1, 0), x_axis) == 1.0
    assert point_line_distance((3, 4, 0), x_axis) == 4.0
    line = LineParametric((1, 2, 3), (1, -1, 2))
    assert point_line_distance(evaluate(line, 0.7), line) == pytest.approx(0.0, abs=1e-15)


def test_moment_residual():
    assert moment_residual((0, 1, 0), LineMoment((1, 0, 0), (0, 0, -1))) == 0.0
    assert moment_residual((0, 0, 0), LineMoment((1, 0, 0), (0, 0, -1))) == 1.0
    assert moment_residual((0, 2, 0), LineMoment((1, 0, 0), (0, 0, 0))) == 2.0


def test_closest_point():
    assert closest_point((3, 4, 0), LineParametric((0, 0, 0), (1, 0, 0))).tolist() == [3, 0, 0]
    assert closest_point((0, 0, 5), LineParametric((1, 0, 0), (0, 0, 1))).tolist() == [1, 0, 5]
    line = LineParametric((1, 0, 0), (0, 0, 1))
    p = evaluate(line, 2.5)
    assert closest_point(p, line).tolist() == p.tolist()


@given(vectors, vectors)
def test_cross_antisymmetric(u, v):
    assert np.array_equal(cross(u, v), -cross(v, u))


@given(small, small)
def test_cross_orthogonal(u, v):
    w = cross(u, v)
    bound = 1e-12 * norm(u) * norm(v)
    assert abs(dot(w, u)) <= bound
    assert abs(dot(w, v)) <= bound


@given(nonzero, nonzero)
def test_lagrange_identity(u, v):
    lhs = norm(cross(u, v)) ** 2
    rhs = dot(u, u) * dot(v, v) - dot(u, v) ** 2
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10 * dot(u, u) * dot(v, v))


@given(vectors, nonzero, st.floats(-1e3, 1e3))
def test_moment_invariant_under_sliding_the_point(r0, a, t):
    line = LineParametric(r0, a)
    slid = LineParametric(evaluate(line, t), a)
    diff = norm(to_moment_form(slid).moment - to_moment_form(line).moment)
    assert diff <= 1e-12 * (1 + norm(r0) + abs(t))


@given(vectors, nonzero, vectors)
def test_representations_agree(r0, a, p):
    line = LineParametric(r0, a)
    d1 = point_line_distance(p, line)
    d2 = moment_residual(p, to_moment_form(line))
    scale = 1 + norm(p) + norm(r0)
    assert d2 == pytest.approx(d1, rel=1e-10, abs=1e-12 * scale)


@given(vectors, nonzero, vectors)
def test_distance_matches_closest_point(r0, a, p):
    line = LineParametric(r0, a)
    d = point_line_distance(p, line)
    assert norm(p - closest_point(p, line)) == pytest.approx(
        d, rel=1e-10, abs=1e-12 * (1 + norm(p) + norm(r0))
    )
