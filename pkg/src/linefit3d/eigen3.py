"""Cyclic Jacobi eigensolver for symmetric 3x3 matrices and spectrum classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from linefit3d.errors import ConvergenceError
from linefit3d.nonlinearity import SymMat3

MAX_SWEEPS = 50
OFF_DIAGONAL_TOL = 1e-14
DEFAULT_REL_TOL = 1e-6
_SCALE_FLOOR = 1e-300
_PAIRS = ((0, 1), (0, 2), (1, 2))


class SpectrumClass(enum.Enum):
    UNIQUE = "unique"
    DISC_DEGENERATE = "disc_degenerate"
    BALL_DEGENERATE = "ball_degenerate"


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Ascending eigenvalues; column ``k`` of ``vectors`` pairs with ``values[k]``."""

    values: tuple[float, float, float]
    vectors: np.ndarray

    def vector(self, k: int) -> np.ndarray:
        return self.vectors[:, k].copy()


def _off_and_full(a) -> tuple[float, float]:
    """Off-diagonal and full Frobenius norms, scaled to avoid under/overflow."""
    scale = max(abs(a[i][j]) for i in range(3) for j in range(i, 3))
    if scale == 0.0:
        return 0.0, 0.0
    off = 2.0 * ((a[0][1] / scale) ** 2 + (a[0][2] / scale) ** 2 + (a[1][2] / scale) ** 2)
    diag = (a[0][0] / scale) ** 2 + (a[1][1] / scale) ** 2 + (a[2][2] / scale) ** 2
    return scale * math.sqrt(off), scale * math.sqrt(off + diag)


def _rotate(a, v, p: int, q: int) -> None:
    apq = a[p][q]
    if apq == 0.0:
        return
    tau = (a[q][q] - a[p][p]) / (2.0 * apq)
    if abs(tau) > 1e150:
        t = 0.5 / tau
    else:
        t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    a[p][p] -= t * apq
    a[q][q] += t * apq
    a[p][q] = a[q][p] = 0.0
    r = 3 - p - q
    arp, arq = a[r][p], a[r][q]
    a[r][p] = a[p][r] = c * arp - s * arq
    a[r][q] = a[q][r] = s * arp + c * arq
    for k in range(3):
        vkp, vkq = v[k][p], v[k][q]
        v[k][p] = c * vkp - s * vkq
        v[k][q] = s * vkp + c * vkq


def _sign_normalized(col: list[float]) -> list[float]:
    # largest |component| made positive; max() keeps the first index on ties
    k = max(range(3), key=lambda i: abs(col[i]))
    if col[k] < 0.0:
        return [-x for x in col]
    return list(col)


def eigen_sym3(m: SymMat3) -> EigenDecomposition:
    entries = (m.m11, m.m12, m.m13, m.m22, m.m23, m.m33)
    if not all(math.isfinite(x) for x in entries):
        raise ValueError("matrix has non-finite entries")

    a = [
        [m.m11, m.m12, m.m13],
        [m.m12, m.m22, m.m23],
        [m.m13, m.m23, m.m33],
    ]
    v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]

    for _ in range(MAX_SWEEPS):
        off, full = _off_and_full(a)
        if off <= OFF_DIAGONAL_TOL * full:
            break
        for p, q in _PAIRS:
            _rotate(a, v, p, q)
    else:
        off, full = _off_and_full(a)
        if off > OFF_DIAGONAL_TOL * full:
            raise ConvergenceError()

    columns = [_sign_normalized([v[0][k], v[1][k], v[2][k]]) for k in range(3)]
    order = sorted(range(3), key=lambda k: a[k][k])
    values = tuple(float(a[k][k]) for k in order)
    vectors = np.array([columns[k] for k in order], dtype=np.float64).T
    return EigenDecomposition(values, vectors)


def classify_spectrum(e: EigenDecomposition, rel_tol: float = DEFAULT_REL_TOL) -> SpectrumClass:
    if not rel_tol > 0:
        raise ValueError(f"rel_tol must be positive, got {rel_tol}")
    l1, l2, l3 = e.values
    scale = max(l3, _SCALE_FLOOR)
    if l3 - l1 <= rel_tol * scale:
        return SpectrumClass.BALL_DEGENERATE
    if l2 - l1 <= rel_tol * scale:
        return SpectrumClass.DISC_DEGENERATE
    return SpectrumClass.UNIQUE
